#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bar_tableaux.hpp"
#include "partitions.hpp"

namespace qsrank {

// max(o, e + (l(lam) mod 2)).
int srank_straight(const StrictPartition& lam);

// Leading zero-squares per row of S(outer).
class Configuration {
 public:
  Configuration(StrictPartition outer, std::vector<int> zeros);

  const StrictPartition& outer() const { return outer_; }
  const std::vector<int>& zeros() const { return zeros_; }

  // The partition formed by the nonzero zero-counts, when they are distinct.
  std::optional<StrictPartition> inner() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  StrictPartition outer_;
  std::vector<int> zeros_;
};

// Row classes, written (zeros, blanks): e/o give the parity of the count of
// zeros and of blank squares, a missing side is written as "none".
enum class RowType { EvenEven, EvenOdd, OddEven, OddOdd, NoneEven, NoneOdd, EvenNone, OddNone };

RowType row_type(int length, int zeros);
std::string_view row_type_name(RowType t);

struct KappaCounts {
  int odd_rows = 0;   // o_r: zero-free rows of odd length
  int even_rows = 0;  // e_r: zero-free rows of even length
  int odd_split = 0;  // o_s: rows with zeros and an odd number of blanks
  int even_split = 0; // e_s: rows with zeros and a positive even number of blanks
};

KappaCounts kappa_counts(const Configuration& c);

// o_s + 2 e_s + max(o_r, e_r + ((e_r + o_r) mod 2)).
int kappa(const Configuration& c);

// Greedy placement of the inner parts, largest first: an exactly matching
// free row if any, else the free row of largest index leaving an odd number
// of blanks, else the free longer row of largest index.
Configuration place_zeros(const SkewShape& shape);

int srank_skew(const SkewShape& shape);

// Every configuration placing the parts of the inner shape in distinct rows.
std::vector<Configuration> enumerate_configurations(const SkewShape& shape);

// Moves zeros between two rows (1-based). The total number of zeros in the
// two rows must be preserved and each row must stay within its length.
Configuration apply_exchange(const Configuration& c, std::pair<int, int> rows, std::pair<int, int> new_zero_counts);

inline constexpr int kDefaultBruteForceBound = 12;

// Minimum number of bars over all skew bar tableaux of the shape, found by an
// exhaustive breadth-first search over bar removals. Throws BoundExceeded
// when |outer| > bound.
int min_bars_bruteforce(const SkewShape& shape, int bound = kDefaultBruteForceBound);

// A tableau attaining min_bars_bruteforce.
BarTableau minimal_bar_tableau(const SkewShape& shape, int bound = kDefaultBruteForceBound);

}  // namespace qsrank
