#include "bar_moves.hpp"

#include <algorithm>
#include <functional>

#include "error.hpp"

namespace qsrank {

namespace {

void require_odd_size(int r) {
  if (r < 1 || r % 2 == 0) throw InvalidArgument("bar size must be a positive odd integer, got " + std::to_string(r));
}

// The j with lam_{j+1} < v < lam_j (lam_{k+1} = 0), or 0 when v collides with a
// part or is nonpositive.
int insertion_index(const StrictPartition& lam, int v) {
  if (v <= 0) return 0;
  int found = 0;
  const int k = static_cast<int>(lam.length());
  for (int j = 1; j <= k; ++j) {
    if (lam.part(j + 1) < v && v < lam.part(j)) {
      if (found) throw InternalError("insertion index not unique");
      found = j;
    }
  }
  return found;
}

// The j > i with lam_j = v, or 0.
int matching_row(const StrictPartition& lam, int i, int v) {
  const int k = static_cast<int>(lam.length());
  for (int j = i + 1; j <= k; ++j)
    if (lam.part(j) == v) return j;
  return 0;
}

}  // namespace

IndexSets index_sets(const StrictPartition& lam, int r) {
  require_odd_size(r);
  IndexSets sets;
  const int k = static_cast<int>(lam.length());
  for (int i = 1; i <= k; ++i) {
    const int li = lam.part(i);
    if (li > r) {
      if (insertion_index(lam, li - r)) sets.plus.push_back(i);
    } else if (li == r) {
      sets.zero.push_back(i);
    } else if (matching_row(lam, i, r - li)) {
      sets.minus.push_back(i);
    }
  }
  return sets;
}

BarMove remove_bar(const StrictPartition& lam, int row, int r) {
  require_odd_size(r);
  const int k = static_cast<int>(lam.length());
  if (row < 1 || row > k) throw InvalidArgument("no such bar");
  const int li = lam.part(row);
  std::vector<int> parts = lam.vec();
  BarMove move;
  move.row = row;
  move.size = r;
  if (li > r) {
    int j = insertion_index(lam, li - r);
    if (!j) throw InvalidArgument("no such bar");
    move.type = BarType::Type1;
    move.partner = j;
    parts[row - 1] = li - r;
    std::sort(parts.begin(), parts.end(), std::greater<>());
  } else if (li == r) {
    move.type = BarType::Type2;
    parts.erase(parts.begin() + (row - 1));
  } else {
    int j = matching_row(lam, row, r - li);
    if (!j) throw InvalidArgument("no such bar");
    move.type = BarType::Type3;
    move.partner = j;
    parts.erase(parts.begin() + (j - 1));
    parts.erase(parts.begin() + (row - 1));
  }
  move.result = StrictPartition(std::move(parts));
  if (move.result.weight() != lam.weight() - r) throw InternalError("bar removal lost squares");
  return move;
}

std::vector<BarMove> bar_moves(const StrictPartition& lam, int r) {
  IndexSets sets = index_sets(lam, r);
  std::vector<int> rows;
  rows.insert(rows.end(), sets.plus.begin(), sets.plus.end());
  rows.insert(rows.end(), sets.zero.begin(), sets.zero.end());
  rows.insert(rows.end(), sets.minus.begin(), sets.minus.end());
  std::sort(rows.begin(), rows.end());
  std::vector<BarMove> moves;
  moves.reserve(rows.size());
  for (int i : rows) moves.push_back(remove_bar(lam, i, r));
  return moves;
}

int bar_weight(const StrictPartition& lam, const BarMove& move) {
  const int two_power = parity_stats(lam).epsilon ? 1 : 2;
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  switch (move.type) {
    case BarType::Type1:
      return sign(*move.partner - move.row) * two_power;
    case BarType::Type2:
      return sign(static_cast<int>(lam.length()) - move.row);
    case BarType::Type3:
      return sign(*move.partner - move.row + lam.part(move.row)) * two_power;
  }
  throw InternalError("unknown bar type");
}

}  // namespace qsrank
