#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace qsrank {

// Skew-symmetric matrix of even size over a commutative ring T; only the
// strict upper triangle is stored.
template <typename T>
class SkewSymMatrix {
 public:
  explicit SkewSymMatrix(std::size_t size) : size_(size), upper_(size * (size > 0 ? size - 1 : 0) / 2) {
    if (size % 2) throw InvalidArgument("skew-symmetric matrix must have even size");
  }

  std::size_t size() const { return size_; }

  void set(std::size_t i, std::size_t j, T value) {
    if (i == j) throw InvalidArgument("diagonal of a skew-symmetric matrix is zero");
    if (i > j) {
      upper_[index(j, i)] = -value;
    } else {
      upper_[index(i, j)] = std::move(value);
    }
  }

  // Entry (i, j) for i < j.
  const T& upper(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }

  T at(std::size_t i, std::size_t j) const {
    if (i == j) return T{};
    return i < j ? upper_[index(i, j)] : T(-upper_[index(j, i)]);
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * size_ - i * (i + 1) / 2 + (j - i - 1); }

  std::size_t size_;
  std::vector<T> upper_;
};

// Expansion along the first remaining row:
//   Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1, j deleted),
// memoized over the set of remaining indices. Size 0 gives 1.
template <typename T>
T pfaffian(const SkewSymMatrix<T>& m, const T& one = T(1)) {
  const std::size_t n = m.size();
  if (n > 62) throw BoundExceeded("pfaffian: matrix too large");
  std::unordered_map<std::uint64_t, T> memo;
  auto rec = [&](auto&& self, std::uint64_t remaining) -> T {
    if (remaining == 0) return one;
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second;
    std::size_t first = static_cast<std::size_t>(__builtin_ctzll(remaining));
    std::uint64_t rest = remaining & (remaining - 1);
    T total{};
    bool negative = false;
    for (std::uint64_t scan = rest; scan; scan &= scan - 1) {
      std::size_t j = static_cast<std::size_t>(__builtin_ctzll(scan));
      const T& entry = m.upper(first, j);
      const bool subtract = negative;
      negative = !negative;
      if (entry == T{}) continue;
      T term = entry * self(self, rest & ~(std::uint64_t{1} << j));
      if (subtract) {
        total -= term;
      } else {
        total += term;
      }
    }
    memo.emplace(remaining, total);
    return total;
  };
  std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  return rec(rec, all);
}

}  // namespace qsrank
