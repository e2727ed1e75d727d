#include "srank.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "error.hpp"

namespace qsrank {

int srank_straight(const StrictPartition& lam) {
  ParityStats s = parity_stats(lam);
  return std::max(s.odd, s.even + static_cast<int>(lam.length() % 2));
}

Configuration::Configuration(StrictPartition outer, std::vector<int> zeros)
    : outer_(std::move(outer)), zeros_(std::move(zeros)) {
  if (zeros_.size() != outer_.length()) throw InvalidArgument("configuration needs one zero-count per row");
  for (std::size_t i = 0; i < zeros_.size(); ++i)
    if (zeros_[i] < 0 || zeros_[i] > outer_.part(i + 1))
      throw InvalidArgument("zero-count out of range in row " + std::to_string(i + 1));
}

std::optional<StrictPartition> Configuration::inner() const {
  std::vector<int> parts;
  for (int z : zeros_)
    if (z > 0) parts.push_back(z);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) return std::nullopt;
  return StrictPartition(std::move(parts));
}

RowType row_type(int length, int zeros) {
  if (zeros < 0 || zeros > length || length <= 0) throw InvalidArgument("row_type: need 0 <= zeros <= length");
  const bool zeros_even = zeros % 2 == 0;
  if (zeros == 0) return length % 2 ? RowType::NoneOdd : RowType::NoneEven;
  if (zeros == length) return zeros_even ? RowType::EvenNone : RowType::OddNone;
  const bool blanks_even = (length - zeros) % 2 == 0;
  if (zeros_even) return blanks_even ? RowType::EvenEven : RowType::EvenOdd;
  return blanks_even ? RowType::OddEven : RowType::OddOdd;
}

std::string_view row_type_name(RowType t) {
  switch (t) {
    case RowType::EvenEven:
      return "(e,e)";
    case RowType::EvenOdd:
      return "(e,o)";
    case RowType::OddEven:
      return "(o,e)";
    case RowType::OddOdd:
      return "(o,o)";
    case RowType::NoneEven:
      return "(none,e)";
    case RowType::NoneOdd:
      return "(none,o)";
    case RowType::EvenNone:
      return "(e,none)";
    case RowType::OddNone:
      return "(o,none)";
  }
  return "?";
}

KappaCounts kappa_counts(const Configuration& c) {
  KappaCounts k;
  for (std::size_t i = 0; i < c.zeros().size(); ++i) {
    const int length = c.outer().part(i + 1);
    const int zeros = c.zeros()[i];
    const int blanks = length - zeros;
    if (zeros == 0) {
      (length % 2 ? k.odd_rows : k.even_rows)++;
    } else if (blanks > 0) {
      (blanks % 2 ? k.odd_split : k.even_split)++;
    }
  }
  return k;
}

int kappa(const Configuration& c) {
  KappaCounts k = kappa_counts(c);
  return k.odd_split + 2 * k.even_split +
         std::max(k.odd_rows, k.even_rows + (k.even_rows + k.odd_rows) % 2);
}

Configuration place_zeros(const SkewShape& shape) {
  const StrictPartition& lam = shape.outer;
  const int rows = static_cast<int>(lam.length());
  std::vector<bool> free(static_cast<std::size_t>(rows) + 1, true);
  std::vector<int> zeros(static_cast<std::size_t>(rows), 0);
  for (int mu_i : shape.inner.parts()) {
    int chosen = 0;
    for (int j = 1; j <= rows && !chosen; ++j)
      if (free[static_cast<std::size_t>(j)] && lam.part(static_cast<std::size_t>(j)) == mu_i) chosen = j;
    if (!chosen) {
      for (int j = rows; j >= 1 && !chosen; --j) {
        const int lj = lam.part(static_cast<std::size_t>(j));
        if (free[static_cast<std::size_t>(j)] && lj > mu_i && (lj - mu_i) % 2) chosen = j;
      }
    }
    if (!chosen) {
      for (int j = rows; j >= 1 && !chosen; --j)
        if (free[static_cast<std::size_t>(j)] && lam.part(static_cast<std::size_t>(j)) > mu_i) chosen = j;
    }
    if (!chosen)
      throw InternalError("no free row can hold an inner part of " + std::to_string(mu_i) + " in " + shape.to_string());
    free[static_cast<std::size_t>(chosen)] = false;
    zeros[static_cast<std::size_t>(chosen - 1)] = mu_i;
  }
  return Configuration(lam, std::move(zeros));
}

int srank_skew(const SkewShape& shape) { return kappa(place_zeros(shape)); }

std::vector<Configuration> enumerate_configurations(const SkewShape& shape) {
  const StrictPartition& lam = shape.outer;
  const auto& mu = shape.inner.vec();
  std::vector<int> zeros(lam.length(), 0);
  std::vector<Configuration> out;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == mu.size()) {
      out.emplace_back(lam, zeros);
      return;
    }
    for (std::size_t row = 0; row < zeros.size(); ++row) {
      if (zeros[row] == 0 && lam.part(row + 1) >= mu[k]) {
        zeros[row] = mu[k];
        place(k + 1);
        zeros[row] = 0;
      }
    }
  };
  place(0);
  return out;
}

Configuration apply_exchange(const Configuration& c, std::pair<int, int> rows, std::pair<int, int> new_zero_counts) {
  auto [a, b] = rows;
  const int n = static_cast<int>(c.zeros().size());
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw InvalidArgument("exchange needs two distinct rows");
  std::vector<int> zeros = c.zeros();
  const int before = zeros[static_cast<std::size_t>(a - 1)] + zeros[static_cast<std::size_t>(b - 1)];
  if (new_zero_counts.first + new_zero_counts.second != before)
    throw InvalidArgument("exchange must conserve the zeros of the two rows");
  zeros[static_cast<std::size_t>(a - 1)] = new_zero_counts.first;
  zeros[static_cast<std::size_t>(b - 1)] = new_zero_counts.second;
  return Configuration(c.outer(), std::move(zeros));
}

namespace {

struct SearchResult {
  int bars = -1;
  std::vector<BarMove> moves;
};

// Breadth-first search from the outer shape down to the inner one; the
// first time the inner shape is reached gives a shortest removal sequence.
SearchResult shortest_removal(const SkewShape& shape, int bound) {
  if (shape.outer.weight() > bound)
    throw BoundExceeded("brute-force srank is limited to |outer| <= " + std::to_string(bound));
  struct Visit {
    std::vector<int> parent;
    BarMove via;
  };
  std::map<std::vector<int>, Visit> seen;
  std::deque<StrictPartition> frontier{shape.outer};
  seen[shape.outer.vec()] = {};
  while (!frontier.empty()) {
    StrictPartition current = frontier.front();
    frontier.pop_front();
    if (current == shape.inner) {
      SearchResult res;
      std::vector<int> key = current.vec();
      while (key != shape.outer.vec()) {
        const Visit& v = seen.at(key);
        res.moves.push_back(v.via);
        key = v.parent;
      }
      std::reverse(res.moves.begin(), res.moves.end());
      res.bars = static_cast<int>(res.moves.size());
      return res;
    }
    for (int r = 1; r <= current.weight() - shape.inner.weight(); r += 2) {
      for (BarMove& move : bar_moves(current, r)) {
        if (!contains(move.result, shape.inner) || seen.count(move.result.vec())) continue;
        seen[move.result.vec()] = {current.vec(), move};
        frontier.push_back(move.result);
      }
    }
  }
  return {};
}

}  // namespace

int min_bars_bruteforce(const SkewShape& shape, int bound) {
  SearchResult res = shortest_removal(shape, bound);
  if (res.bars < 0) throw InternalError("no skew bar tableau of shape " + shape.to_string());
  return res.bars;
}

BarTableau minimal_bar_tableau(const SkewShape& shape, int bound) {
  SearchResult res = shortest_removal(shape, bound);
  if (res.bars < 0) throw InternalError("no skew bar tableau of shape " + shape.to_string());
  BarTableau t{shape.outer, shape.inner, res.moves, {}};
  // moves[0] carries the largest label.
  for (auto it = res.moves.rbegin(); it != res.moves.rend(); ++it) t.type.push_back(it->size);
  return t;
}

}  // namespace qsrank
