#include "partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>

#include "error.hpp"

namespace qsrank {

namespace {

std::string join_parts(std::span<const int> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidArgument("partition parts must be positive: (" + join_parts(parts_) + ")");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidArgument("partition parts must be weakly decreasing: (" + join_parts(parts_) + ")");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return "(" + join_parts(parts_) + ")"; }

StrictPartition::StrictPartition(std::vector<int> parts) : Partition(std::move(parts)) {
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] == parts_[i + 1])
      throw InvalidArgument("parts not distinct: " + to_string());
}

StrictPartition StrictPartition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return StrictPartition(std::move(parts));
}

OddPartition::OddPartition(std::vector<int> parts) : Partition(std::move(parts)) {
  for (int p : parts_)
    if (p % 2 == 0) throw InvalidArgument("odd partition has an even part: " + to_string());
}

OddPartition OddPartition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return OddPartition(std::move(parts));
}

SkewShape::SkewShape(StrictPartition outer_, StrictPartition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!contains(outer, inner))
    throw InvalidArgument("inner shape " + inner.to_string() + " is not contained in " + outer.to_string());
}

std::string SkewShape::to_string() const {
  if (straight()) return join_parts(outer.parts());
  return join_parts(outer.parts()) + "/" + join_parts(inner.parts());
}

bool contains(const Partition& lam, const Partition& mu) {
  if (mu.length() > lam.length()) return false;
  for (std::size_t i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > lam.part(i)) return false;
  return true;
}

ParityStats parity_stats(const StrictPartition& lam) {
  ParityStats s;
  for (int p : lam.parts()) (p % 2 ? s.odd : s.even)++;
  s.epsilon = s.even % 2;
  return s;
}

mpz_class z_factor(const OddPartition& pi) {
  std::map<int, int> mult;
  for (int p : pi.parts()) ++mult[p];
  mpz_class z = 1;
  for (auto [value, m] : mult) {
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(m));
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    z *= power * fact;
  }
  return z;
}

namespace {

// Emits partitions of `remaining` into parts <= max_part (with the given step
// between admissible parts) in lexicographically descending order.
void descend(int remaining, int max_part, bool distinct, bool odd_only, std::vector<int>& prefix,
             std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    prefix.push_back(p);
    descend(remaining - p, distinct ? p - 1 : p, distinct, odd_only, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int n) {
  if (n < 0) return {};
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  descend(n, n, true, false, prefix, raw);
  std::vector<StrictPartition> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<OddPartition> enumerate_odd(int n) {
  if (n < 0) return {};
  std::vector<std::vector<int>> raw;
  std::vector<int> prefix;
  descend(n, n, false, true, prefix, raw);
  std::vector<OddPartition> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<StrictPartition> enumerate_strict_contained(const StrictPartition& lam) {
  std::vector<StrictPartition> out;
  std::vector<int> prefix;
  // Row i of mu is bounded by lam_i and by the previous row of mu.
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int bound) {
    out.emplace_back(prefix);
    if (row > lam.length()) return;
    for (int v = std::min(bound, lam.part(row)); v >= 1; --v) {
      prefix.push_back(v);
      rec(row + 1, v - 1);
      prefix.pop_back();
    }
  };
  rec(1, lam.empty() ? 0 : lam.part(1));
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a > b;
  });
  return out;
}

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  text = trim(text);
  if (text.empty()) return parts;
  while (true) {
    auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("not an integer: '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

StrictPartition parse_strict(std::string_view text) {
  auto parts = parse_parts(text);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw ParseError("parts must be positive");
    if (i + 1 < parts.size()) {
      if (parts[i] == parts[i + 1]) throw ParseError("parts not distinct");
      if (parts[i] < parts[i + 1]) throw ParseError("parts must be decreasing");
    }
  }
  return StrictPartition(std::move(parts));
}

SkewShape parse_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_strict(text));
  if (text.find('/', slash + 1) != std::string_view::npos) throw ParseError("more than one '/'");
  StrictPartition outer = parse_strict(text.substr(0, slash));
  StrictPartition inner = parse_strict(text.substr(slash + 1));
  if (!contains(outer, inner))
    throw ParseError("inner shape " + inner.to_string() + " is not contained in " + outer.to_string());
  return SkewShape(std::move(outer), std::move(inner));
}

}  // namespace qsrank
