#pragma once

#include <optional>
#include <vector>

#include "partitions.hpp"

namespace qsrank {

enum class BarType { Type1 = 1, Type2 = 2, Type3 = 3 };

// Row indices (1-based) admitting an r-bar of each type.
struct IndexSets {
  std::vector<int> plus;   // Type 1: rightmost r squares of row i
  std::vector<int> zero;   // Type 2: row i is exactly r long
  std::vector<int> minus;  // Type 3: rows i and j together hold r squares
};

// A single r-bar removed from a strict partition.
struct BarMove {
  int row = 0;
  int size = 0;
  BarType type = BarType::Type2;
  // For Type 1 the row index j with lam_{j+1} < lam_i - r < lam_j; for Type 3
  // the second row j > i with lam_j = r - lam_i. Empty for Type 2.
  std::optional<int> partner;
  StrictPartition result;
};

IndexSets index_sets(const StrictPartition& lam, int r);

// Throws InvalidArgument("no such bar") when row i admits no r-bar.
BarMove remove_bar(const StrictPartition& lam, int row, int r);

// All r-bars of lam, in increasing row order.
std::vector<BarMove> bar_moves(const StrictPartition& lam, int r);

// The signed factor n_i contributed by removing `move` from lam; epsilon and
// the length are those of lam before removal.
int bar_weight(const StrictPartition& lam, const BarMove& move);

}  // namespace qsrank
