#pragma once

#include <vector>

#include "partitions.hpp"
#include "ppoly.hpp"

namespace qsrank {

// A square of a shifted diagram; row i occupies columns i .. i + lam_i - 1.
struct ShiftedCell {
  int row = 0;
  int col = 0;

  int diagonal() const { return col - row + 1; }
  friend bool operator==(const ShiftedCell&, const ShiftedCell&) = default;
  friend auto operator<=>(const ShiftedCell&, const ShiftedCell&) = default;
};

enum class StripKind { Strip, DoubleStrip, Neither };

struct StripClass {
  StripKind kind = StripKind::Neither;
  int height = 0;  // rows occupied, for a strip
  int depth = 0;   // alpha + beta, for a double strip

  // (-1)^{h-1} for a strip, 2(-1)^{d-1} for a double strip, 0 otherwise.
  int weight() const;
};

// Cells of S(to) \ S(from), sorted by row then column. Requires from inside to.
std::vector<ShiftedCell> skew_cells(const StrictPartition& from, const StrictPartition& to);

StripClass classify_skew(const StrictPartition& from, const StrictPartition& to);

// Generating function of strip tableaux: sum over odd pi and strip tableaux T
// of type pi of 2^{l(pi)} wt(T) p_pi / z_pi.
PPoly q_skew_strips(const SkewShape& shape);

}  // namespace qsrank
