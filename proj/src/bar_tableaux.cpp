#include "bar_tableaux.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace qsrank {

namespace {

void extend(const StrictPartition& current, const StrictPartition& inner, const std::vector<int>& type,
            std::size_t labels_left, std::vector<BarMove>& prefix, const BarTableau& proto,
            std::vector<BarTableau>& out) {
  if (!contains(current, inner)) return;
  if (labels_left == 0) {
    if (current == inner) {
      BarTableau t = proto;
      t.moves = prefix;
      out.push_back(std::move(t));
    }
    return;
  }
  for (BarMove& move : bar_moves(current, type[labels_left - 1])) {
    StrictPartition next = move.result;
    prefix.push_back(std::move(move));
    extend(next, inner, type, labels_left - 1, prefix, proto, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BarTableau> enumerate_tableaux(const StrictPartition& shape, const StrictPartition& inner,
                                           const std::vector<int>& type) {
  for (int r : type)
    if (r < 1 || r % 2 == 0) throw InvalidArgument("bar sizes must be odd and positive");
  if (std::accumulate(type.begin(), type.end(), 0) != shape.weight() - inner.weight())
    throw InvalidArgument("bar sizes sum to " + std::to_string(std::accumulate(type.begin(), type.end(), 0)) +
                          " but the shape has " + std::to_string(shape.weight() - inner.weight()) + " squares");
  BarTableau proto{shape, inner, {}, type};
  std::vector<BarTableau> out;
  std::vector<BarMove> prefix;
  extend(shape, inner, type, type.size(), prefix, proto, out);
  return out;
}

mpz_class tableau_weight(const BarTableau& t) {
  mpz_class w = 1;
  StrictPartition current = t.shape;
  for (const BarMove& move : t.moves) {
    w *= bar_weight(current, move);
    current = move.result;
  }
  return w;
}

Filling render_filling(const BarTableau& t) {
  const std::size_t rows = t.shape.length();
  Filling grid(rows);
  std::vector<int> remaining(rows);
  for (std::size_t p = 0; p < rows; ++p) {
    grid[p].assign(static_cast<std::size_t>(t.shape.part(p + 1)), -1);
    remaining[p] = t.shape.part(p + 1);
  }
  auto physical_row = [&](int length) {
    auto it = std::find(remaining.begin(), remaining.end(), length);
    if (length <= 0 || it == remaining.end()) throw InternalError("tableau rows out of sync");
    return static_cast<std::size_t>(it - remaining.begin());
  };
  auto fill = [&](std::size_t p, int count, int label) {
    for (int c = remaining[p] - count; c < remaining[p]; ++c) grid[p][static_cast<std::size_t>(c)] = label;
    remaining[p] -= count;
  };

  StrictPartition current = t.shape;
  int label = t.bars();
  for (const BarMove& move : t.moves) {
    std::size_t p = physical_row(current.part(static_cast<std::size_t>(move.row)));
    switch (move.type) {
      case BarType::Type1:
        fill(p, move.size, label);
        break;
      case BarType::Type2:
        fill(p, remaining[p], label);
        break;
      case BarType::Type3: {
        std::size_t q = physical_row(current.part(static_cast<std::size_t>(*move.partner)));
        fill(p, remaining[p], label);
        fill(q, remaining[q], label);
        break;
      }
    }
    current = move.result;
    --label;
  }
  for (std::size_t p = 0; p < rows; ++p)
    for (int c = 0; c < remaining[p]; ++c) grid[p][static_cast<std::size_t>(c)] = 0;
  return grid;
}

std::string format_filling(const Filling& f) {
  int widest = 1;
  for (const auto& row : f)
    for (int v : row) widest = std::max(widest, static_cast<int>(std::to_string(v).size()));
  std::string out;
  for (std::size_t p = 0; p < f.size(); ++p) {
    std::string line(p * static_cast<std::size_t>(widest + 1), ' ');
    for (std::size_t c = 0; c < f[p].size(); ++c) {
      std::string cell = std::to_string(f[p][c]);
      if (c) line += ' ';
      line += std::string(static_cast<std::size_t>(widest) - cell.size(), ' ') + cell;
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace qsrank
