#pragma once

#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "partitions.hpp"

namespace qsrank {

// Canonical term order: fewer parts first (lowest degree first), then
// lexicographically ascending index partitions.
struct DegreeLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vec() < b.vec();
  }
};

// Sparse polynomial in the power sums p_1, p_2, ... with exact rational
// coefficients. The key nu stands for p_nu = p_{nu_1} p_{nu_2} ...; zero
// coefficients are never stored.
class PPoly {
 public:
  using Terms = std::map<Partition, mpq_class, DegreeLexLess>;

  PPoly() = default;
  static PPoly constant(const mpq_class& c);
  static PPoly monomial(Partition nu, const mpq_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  mpq_class coefficient(const Partition& nu) const;

  // Adds c * p_nu.
  void add_term(const Partition& nu, const mpq_class& c);

  PPoly& operator+=(const PPoly& other);
  PPoly& operator-=(const PPoly& other);
  PPoly& operator*=(const mpq_class& c);
  PPoly operator-() const;

  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(PPoly a, const mpq_class& c) { return a *= c; }
  friend PPoly operator*(const mpq_class& c, PPoly a) { return a *= c; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend bool operator==(const PPoly& a, const PPoly& b) { return a.terms_ == b.terms_; }

  // Common |nu| of all terms, or nullopt when empty or inhomogeneous.
  std::optional<int> homogeneous_weight() const;

  // min l(nu) over the support, deg(p_i) = 1. Throws on the zero polynomial.
  int lowest_degree() const;

  // The lowest-degree part. Throws on the zero polynomial.
  PPoly bottom() const;

  // e.g. "-4/3*p[3] + 4/3*p[1,1,1]"; "0" for the zero polynomial.
  std::string to_text() const;

  // [{"nu": [..], "num": "..", "den": ".."}, ...] in canonical term order.
  std::string to_json() const;
  static PPoly from_json(const std::string& text);

 private:
  Terms terms_;
};

}  // namespace qsrank
