#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "bar_moves.hpp"
#include "partitions.hpp"

namespace qsrank {

// A (skew) bar tableau stored as its removal sequence. moves[0] removes the
// bar with the largest label; type[l-1] is the size of the bar labelled l.
struct BarTableau {
  StrictPartition shape;
  StrictPartition inner;
  std::vector<BarMove> moves;
  std::vector<int> type;

  int bars() const { return static_cast<int>(moves.size()); }
};

// Square-level labels, one vector per row of the shifted diagram (row i has
// shape_i entries starting at column i). Inner squares are labelled 0.
using Filling = std::vector<std::vector<int>>;

// All bar tableaux of shape/inner whose bar sizes in label order are `type`.
// Requires every size odd and sum(type) = |shape| - |inner|.
std::vector<BarTableau> enumerate_tableaux(const StrictPartition& shape, const StrictPartition& inner,
                                           const std::vector<int>& type);

mpz_class tableau_weight(const BarTableau& t);

Filling render_filling(const BarTableau& t);

// Rows indented to their shifted position.
std::string format_filling(const Filling& f);

}  // namespace qsrank
