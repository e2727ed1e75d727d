#pragma once

// Independent reference computations used only by the tests. None of these
// call into the code under test except for plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "partitions.hpp"
#include "ppoly.hpp"

namespace oracle {

// Number of partitions of n into distinct parts, by the subset-sum recurrence.
inline std::uint64_t count_distinct_parts(int n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = n; s >= part; --s) ways[s] += ways[s - part];
  return ways[n];
}

inline mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All odd compositions of n (ordered), as vectors.
inline void odd_compositions(int n, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int r = 1; r <= n; r += 2) {
    prefix.push_back(r);
    odd_compositions(n - r, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> odd_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  odd_compositions(n, prefix, out);
  return out;
}

inline bool strictly_decreasing_positive(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0) return false;
    if (i + 1 < v.size() && v[i] <= v[i + 1]) return false;
  }
  return true;
}

// Every strict partition reachable from lam by deleting r squares that form
// the tail of one row, one whole row, or two whole rows. Each removal is
// checked by rebuilding the row multiset, not by the index-set rules.
inline std::set<std::vector<int>> bar_removals(const std::vector<int>& lam, int r) {
  std::set<std::vector<int>> out;
  const std::size_t k = lam.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> rows = lam;
    rows[i] -= r;
    if (rows[i] > 0) {
      std::sort(rows.rbegin(), rows.rend());
      if (strictly_decreasing_positive(rows)) out.insert(rows);
    }
    if (lam[i] == r) {
      std::vector<int> rest;
      for (std::size_t t = 0; t < k; ++t)
        if (t != i) rest.push_back(lam[t]);
      out.insert(rest);
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (lam[i] + lam[j] != r) continue;
      std::vector<int> rest;
      for (std::size_t t = 0; t < k; ++t)
        if (t != i && t != j) rest.push_back(lam[t]);
      out.insert(rest);
    }
  }
  return out;
}

using Grid = std::vector<std::vector<int>>;

// Checks a filling of S(outer) row by row: rows weakly increasing, each label
// 1..k used an odd number of times (and exactly type[l-1] times), each label
// in at most two rows and in two rows only when both rows start with it, every
// truncation to labels <= i has distinct nonzero row lengths, and the rows of
// zeros reorder to inner.
inline bool valid_filling(const Grid& g, const std::vector<int>& outer, const std::vector<int>& inner,
                          const std::vector<int>& type) {
  if (g.size() != outer.size()) return false;
  const int k = static_cast<int>(type.size());
  std::vector<int> count(k + 1, 0);
  std::vector<std::set<std::size_t>> rows_of(k + 1);
  for (std::size_t row = 0; row < g.size(); ++row) {
    if (static_cast<int>(g[row].size()) != outer[row]) return false;
    for (std::size_t c = 0; c < g[row].size(); ++c) {
      int v = g[row][c];
      if (v < 0 || v > k) return false;
      if (c > 0 && g[row][c - 1] > v) return false;
      if (v > 0) {
        ++count[v];
        rows_of[v].insert(row);
      }
    }
  }
  for (int l = 1; l <= k; ++l) {
    if (count[l] != type[l - 1] || count[l] % 2 == 0) return false;
    if (rows_of[l].size() > 2) return false;
    if (rows_of[l].size() == 2)
      for (std::size_t row : rows_of[l])
        if (g[row].front() != l) return false;
  }
  for (int i = 0; i <= k; ++i) {
    std::vector<int> lengths;
    for (const auto& row : g) {
      int n = static_cast<int>(std::count_if(row.begin(), row.end(), [i](int v) { return v <= i; }));
      if (n > 0) lengths.push_back(n);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    if (std::adjacent_find(lengths.begin(), lengths.end()) != lengths.end()) return false;
    if (i == 0 && lengths != inner) return false;
  }
  return true;
}

// All fillings of S(outer) satisfying valid_filling, found by trying every
// weakly increasing row content with the right label counts.
inline std::set<Grid> all_valid_fillings(const std::vector<int>& outer, const std::vector<int>& inner,
                                         const std::vector<int>& type) {
  const int k = static_cast<int>(type.size());
  std::set<Grid> out;
  Grid g(outer.size());
  std::vector<int> remaining(k + 1, 0);
  for (int l = 1; l <= k; ++l) remaining[l] = type[l - 1];
  int zeros_left = 0;
  for (int p : inner) zeros_left += p;

  // Row `row`, filling its cells with labels >= `label`.
  auto fill = [&](auto&& self, std::size_t row, int label) -> void {
    if (row == outer.size()) {
      if (zeros_left == 0 && std::all_of(remaining.begin() + 1, remaining.end(), [](int x) { return x == 0; }) &&
          valid_filling(g, outer, inner, type))
        out.insert(g);
      return;
    }
    int used = static_cast<int>(g[row].size());
    if (used == outer[row]) {
      self(self, row + 1, 0);
      return;
    }
    for (int l = label; l <= k; ++l) {
      int& budget = l == 0 ? zeros_left : remaining[l];
      if (budget == 0) continue;
      --budget;
      g[row].push_back(l);
      self(self, row, l);
      g[row].pop_back();
      ++budget;
    }
  };
  fill(fill, 0, 0);
  return out;
}

// q_k from k q_k = sum_{odd j <= k} 2 p_j q_{k-j}, the derivative of
// log prod (1 + x t)/(1 - x t) = sum_{odd j} 2 p_j t^j / j.
inline std::vector<qsrank::PPoly> q_series(int max_k) {
  std::vector<qsrank::PPoly> q(max_k + 1);
  q[0] = qsrank::PPoly::constant(1);
  for (int k = 1; k <= max_k; ++k) {
    qsrank::PPoly acc;
    for (int j = 1; j <= k; j += 2)
      acc += qsrank::PPoly::monomial(qsrank::Partition({j}), 2) * q[k - j];
    q[k] = acc * mpq_class(1, k);
  }
  return q;
}

// Pfaffian as the crossing-signed sum over perfect matchings.
template <typename T, typename Entry>
T matching_sum(int n, Entry entry) {
  T total = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      int crossings = 0;
      for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          auto [i1, j1] = pairs[a];
          auto [i2, j2] = pairs[b];
          if (i1 < i2 && i2 < j1 && j1 < j2) ++crossings;
        }
      T term = 1;
      for (auto [i, j] : pairs) term *= entry(i, j);
      if (crossings % 2) total -= term;
      else total += term;
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  if (n % 2 == 0) rec(rec);
  return total;
}

}  // namespace oracle
