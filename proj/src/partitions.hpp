#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qsrank {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Sorts the parts into decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  // 1-based part access with the usual convention that missing parts are 0.
  int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 protected:
  std::vector<int> parts_;
};

// Strictly decreasing positive parts; indexes shifted diagrams.
class StrictPartition : public Partition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  static StrictPartition from_unsorted(std::vector<int> parts);
};

// Weakly decreasing odd parts; indexes conjugacy classes in the power-sum expansion.
class OddPartition : public Partition {
 public:
  OddPartition() = default;
  explicit OddPartition(std::vector<int> parts);
  static OddPartition from_unsorted(std::vector<int> parts);
};

struct SkewShape {
  StrictPartition outer;
  StrictPartition inner;

  SkewShape() = default;
  SkewShape(StrictPartition outer_, StrictPartition inner_ = {});

  bool straight() const { return inner.empty(); }
  int size() const { return outer.weight() - inner.weight(); }
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// `mu` fits inside `lam` row by row (zero padding).
bool contains(const Partition& lam, const Partition& mu);

struct ParityStats {
  int odd = 0;
  int even = 0;
  int epsilon = 0;
};

ParityStats parity_stats(const StrictPartition& lam);

// prod_i i^{m_i} m_i!
mpz_class z_factor(const OddPartition& pi);

// Strict partitions of n, lexicographically descending.
std::vector<StrictPartition> enumerate_strict(int n);

// Odd-part partitions of n, lexicographically descending.
std::vector<OddPartition> enumerate_odd(int n);

// Every strict mu with mu inside lam, including the empty partition and lam itself.
std::vector<StrictPartition> enumerate_strict_contained(const StrictPartition& lam);

// Comma-separated integers, e.g. "9,7,6,3,1". The empty string is the empty partition.
std::vector<int> parse_parts(std::string_view text);
StrictPartition parse_strict(std::string_view text);
// "outer" or "outer/inner".
SkewShape parse_shape(std::string_view text);

}  // namespace qsrank
