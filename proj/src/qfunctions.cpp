#include "qfunctions.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "characters.hpp"
#include "error.hpp"
#include "strip_tableaux.hpp"

namespace qsrank {

namespace {

template <typename Key>
class Memo {
 public:
  template <typename F>
  PPoly get(const Key& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    PPoly value = compute();
    std::unique_lock lock(mutex_);
    return values_.try_emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    values_.clear();
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, PPoly> values_;
};

Memo<int>& qk_memo() {
  static Memo<int> m;
  return m;
}

Memo<std::pair<int, int>>& two_row_memo() {
  static Memo<std::pair<int, int>> m;
  return m;
}

Memo<std::vector<int>>& recurrence_memo() {
  static Memo<std::vector<int>> m;
  return m;
}

PPoly recurrence(const std::vector<int>& parts) {
  const std::size_t len = parts.size();
  if (len == 0) return PPoly::constant(1);
  if (len == 1) return qk(parts[0]);
  if (len == 2) return q_two_row(parts[0], parts[1]);
  return recurrence_memo().get(parts, [&] {
    PPoly total;
    if (len % 2) {
      for (std::size_t m = 0; m < len; ++m) {
        std::vector<int> rest = parts;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
        PPoly term = qk(parts[m]) * recurrence(rest);
        // (-1)^{m+1} with 1-based m
        if (m % 2) {
          total -= term;
        } else {
          total += term;
        }
      }
    } else {
      for (std::size_t m = 1; m < len; ++m) {
        std::vector<int> rest(parts.begin() + 1, parts.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m - 1));
        PPoly term = q_two_row(parts[0], parts[m]) * recurrence(rest);
        // (-1)^m with 1-based m
        if (m % 2) {
          total += term;
        } else {
          total -= term;
        }
      }
    }
    return total;
  });
}

}  // namespace

PPoly qk(int k) {
  if (k < 0) return {};
  if (k == 0) return PPoly::constant(1);
  return qk_memo().get(k, [k] { return q_morris(StrictPartition({k})); });
}

PPoly q_two_row(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("Q_(a,b) needs a, b >= 0");
  return two_row_memo().get({a, b}, [a, b] {
    PPoly total = qk(a) * qk(b);
    for (int m = 1; m <= b; ++m) {
      PPoly term = qk(a + m) * qk(b - m);
      term *= mpq_class(m % 2 ? -2 : 2);
      total += term;
    }
    return total;
  });
}

PPoly q_morris(const StrictPartition& lam) {
  const int n = lam.weight();
  const int eps = parity_stats(lam).epsilon;
  const int len = static_cast<int>(lam.length());
  PPoly total;
  for (const OddPartition& pi : enumerate_odd(n)) {
    mpz_class chi = character(lam, pi);
    if (chi == 0) continue;
    const int exponent = len + static_cast<int>(pi.length()) + eps;
    if (exponent % 2) throw InternalError("non-integral power of 2 for " + lam.to_string() + " at " + pi.to_string());
    mpz_class two_power = 1;
    two_power <<= static_cast<mp_bitcnt_t>(exponent / 2);
    mpq_class coeff(two_power * chi, z_factor(pi));
    coeff.canonicalize();
    total.add_term(pi, coeff);
  }
  return total;
}

PPoly q_recurrence(const StrictPartition& lam) { return recurrence(lam.vec()); }

PPoly q_pfaffian(const StrictPartition& lam) {
  std::vector<int> parts = lam.vec();
  if (parts.size() % 2) parts.push_back(0);
  SkewSymMatrix<PPoly> m(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) m.set(i, j, q_two_row(parts[i], parts[j]));
  return pfaffian(m, PPoly::constant(1));
}

PPoly q_skew_pfaffian(const SkewShape& shape) {
  const std::vector<int>& lam = shape.outer.vec();
  std::vector<int> mu = shape.inner.vec();
  if ((lam.size() + mu.size()) % 2) mu.push_back(0);
  const std::size_t m = lam.size();
  const std::size_t n = mu.size();
  SkewSymMatrix<PPoly> mat(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) mat.set(i, j, q_two_row(lam[i], lam[j]));
    for (std::size_t j = 0; j < n; ++j) mat.set(i, m + j, qk(lam[i] - mu[n - 1 - j]));
  }
  return pfaffian(mat, PPoly::constant(1));
}

Route parse_route(std::string_view name) {
  if (name == "morris") return Route::Morris;
  if (name == "recur") return Route::Recurrence;
  if (name == "pf") return Route::Pfaffian;
  if (name == "strips") return Route::Strips;
  throw InvalidArgument("unknown route '" + std::string(name) + "' (expected morris, recur, pf or strips)");
}

std::string_view route_name(Route route) {
  switch (route) {
    case Route::Morris:
      return "morris";
    case Route::Recurrence:
      return "recur";
    case Route::Pfaffian:
      return "pf";
    case Route::Strips:
      return "strips";
  }
  return "?";
}

PPoly q_function(const SkewShape& shape, Route route) {
  switch (route) {
    case Route::Morris:
    case Route::Recurrence:
      if (!shape.straight())
        throw InvalidArgument("route " + std::string(route_name(route)) + " handles straight shapes only");
      return route == Route::Morris ? q_morris(shape.outer) : q_recurrence(shape.outer);
    case Route::Pfaffian:
      return shape.straight() ? q_pfaffian(shape.outer) : q_skew_pfaffian(shape);
    case Route::Strips:
      return q_skew_strips(shape);
  }
  throw InternalError("unknown route");
}

void clear_qfunction_caches() {
  qk_memo().clear();
  two_row_memo().clear();
  recurrence_memo().clear();
}

}  // namespace qsrank
