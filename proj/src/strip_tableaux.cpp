#include "strip_tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "error.hpp"

namespace qsrank {

int StripClass::weight() const {
  switch (kind) {
    case StripKind::Strip:
      return (height - 1) % 2 ? -1 : 1;
    case StripKind::DoubleStrip:
      return (depth - 1) % 2 ? -2 : 2;
    case StripKind::Neither:
      return 0;
  }
  return 0;
}

std::vector<ShiftedCell> skew_cells(const StrictPartition& from, const StrictPartition& to) {
  if (!contains(to, from)) throw InvalidArgument(from.to_string() + " is not inside " + to.to_string());
  std::vector<ShiftedCell> cells;
  for (int i = 1; i <= static_cast<int>(to.length()); ++i)
    for (int c = i + from.part(static_cast<std::size_t>(i)); c < i + to.part(static_cast<std::size_t>(i)); ++c)
      cells.push_back({i, c});
  return cells;
}

namespace {

bool rook_adjacent(const ShiftedCell& a, const ShiftedCell& b) {
  return (a.row == b.row && std::abs(a.col - b.col) == 1) || (a.col == b.col && std::abs(a.row - b.row) == 1);
}

bool rook_connected(const std::vector<ShiftedCell>& cells) {
  if (cells.empty()) return false;
  std::vector<bool> seen(cells.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    std::size_t a = todo.front();
    todo.pop();
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (!seen[b] && rook_adjacent(cells[a], cells[b])) {
        seen[b] = true;
        ++reached;
        todo.push(b);
      }
    }
  }
  return reached == cells.size();
}

// Splits the cells into two strips that both contain a main-diagonal cell.
// Cells are grouped by diagonal; each strip takes one cell from each of the
// diagonals 1, 2, ..., its length, consecutive cells being rook-adjacent.
bool splits_into_two_diagonal_strips(const std::map<int, std::vector<ShiftedCell>>& by_diagonal) {
  if (by_diagonal.empty() || by_diagonal.begin()->first != 1 || by_diagonal.begin()->second.size() != 2)
    return false;
  const int last = by_diagonal.rbegin()->first;
  std::function<bool(int, std::optional<ShiftedCell>, std::optional<ShiftedCell>)> grow =
      [&](int d, std::optional<ShiftedCell> a, std::optional<ShiftedCell> b) -> bool {
    if (d > last) return true;
    auto it = by_diagonal.find(d);
    if (it == by_diagonal.end()) return false;
    const auto& cells = it->second;
    auto extends = [](const std::optional<ShiftedCell>& tip, const ShiftedCell& c) {
      return tip && rook_adjacent(*tip, c);
    };
    if (cells.size() == 2) {
      for (int flip = 0; flip < 2; ++flip) {
        const ShiftedCell& ca = cells[static_cast<std::size_t>(flip)];
        const ShiftedCell& cb = cells[static_cast<std::size_t>(1 - flip)];
        if (extends(a, ca) && extends(b, cb) && grow(d + 1, ca, cb)) return true;
      }
      return false;
    }
    if (cells.size() != 1) return false;
    const ShiftedCell& c = cells.front();
    // The strip that does not take c ends here.
    if (extends(a, c) && grow(d + 1, c, std::nullopt)) return true;
    if (extends(b, c) && grow(d + 1, std::nullopt, c)) return true;
    return false;
  };
  const auto& first = by_diagonal.begin()->second;
  return grow(2, first[0], first[1]);
}

}  // namespace

StripClass classify_skew(const StrictPartition& from, const StrictPartition& to) {
  std::vector<ShiftedCell> cells = skew_cells(from, to);
  StripClass out;
  if (cells.empty()) return out;
  std::map<int, std::vector<ShiftedCell>> by_diagonal;
  for (const ShiftedCell& c : cells) by_diagonal[c.diagonal()].push_back(c);
  const bool one_per_diagonal =
      std::all_of(by_diagonal.begin(), by_diagonal.end(), [](const auto& kv) { return kv.second.size() == 1; });
  if (one_per_diagonal && rook_connected(cells)) {
    std::set<int> rows;
    for (const ShiftedCell& c : cells) rows.insert(c.row);
    out.kind = StripKind::Strip;
    out.height = static_cast<int>(rows.size());
    return out;
  }
  if (splits_into_two_diagonal_strips(by_diagonal)) {
    int alpha = 0;
    std::set<int> single_rows;
    for (const auto& [d, on_diag] : by_diagonal) {
      if (on_diag.size() == 2) {
        ++alpha;
      } else {
        single_rows.insert(on_diag.front().row);
      }
    }
    out.kind = StripKind::DoubleStrip;
    out.depth = alpha + static_cast<int>(single_rows.size());
  }
  return out;
}

namespace {

// Strict nu with from inside nu inside outer and |nu| = |from| + step.
void grow_shapes(const StrictPartition& from, const StrictPartition& outer, int step, std::vector<StrictPartition>& out) {
  std::vector<int> parts;
  const std::size_t rows = outer.length();
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t row, int bound, int left) {
    if (row > rows || bound <= 0) {
      if (left == 0) out.emplace_back(parts);
      return;
    }
    const int lo = from.part(row);
    const int hi = std::min(bound, outer.part(row));
    for (int v = hi; v >= std::max(lo, 0); --v) {
      const int added = v - lo;
      if (added > left) continue;
      if (v == 0) {
        if (left == 0) out.emplace_back(parts);
        continue;
      }
      parts.push_back(v);
      rec(row + 1, v - 1, left - added);
      parts.pop_back();
    }
  };
  rec(1, outer.empty() ? 0 : outer.part(1), step);
}

// Sum of wt(T) over strip chains from `current` to `outer` using the steps
// type[index..].
class StripSum {
 public:
  StripSum(const StrictPartition& outer, const std::vector<int>& type) : outer_(outer), type_(type) {}

  mpz_class from(const StrictPartition& current, std::size_t index) {
    if (index == type_.size()) return current == outer_ ? 1 : 0;
    auto key = std::make_pair(current.vec(), index);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    mpz_class total = 0;
    std::vector<StrictPartition> next;
    grow_shapes(current, outer_, type_[index], next);
    for (const StrictPartition& nu : next) {
      const int w = classify_skew(current, nu).weight();
      if (w == 0) continue;
      mpz_class rest = from(nu, index + 1);
      if (rest != 0) total += w * rest;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  const StrictPartition& outer_;
  const std::vector<int>& type_;
  std::map<std::pair<std::vector<int>, std::size_t>, mpz_class> memo_;
};

}  // namespace

PPoly q_skew_strips(const SkewShape& shape) {
  PPoly total;
  for (const OddPartition& pi : enumerate_odd(shape.size())) {
    StripSum sum(shape.outer, pi.vec());
    mpz_class signed_count = sum.from(shape.inner, 0);
    if (signed_count == 0) continue;
    mpz_class two_power = 1;
    two_power <<= static_cast<mp_bitcnt_t>(pi.length());
    mpq_class coeff(two_power * signed_count, z_factor(pi));
    coeff.canonicalize();
    total.add_term(pi, coeff);
  }
  return total;
}

}  // namespace qsrank
