#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "partitions.hpp"
#include "qfunctions.hpp"
#include "srank.hpp"
#include "strip_tableaux.hpp"

namespace qsrank {

SweepResult verify_conjecture(int max_n) {
  if (max_n < 0) throw InvalidArgument("--max-n must be nonnegative");
  SweepResult res;
  std::ostringstream log, table, bad;
  table << "    n  shapes  violations\n";
  for (int n = 1; n <= max_n; ++n) {
    int shapes = 0, violations = 0;
    for (const StrictPartition& lam : enumerate_strict(n)) {
      ++shapes;
      PPoly q = q_morris(lam);
      const int expected = srank_straight(lam);
      const int degree = q.lowest_degree();
      if (degree != expected) {
        ++violations;
        bad << "counterexample: lambda=" << lam.to_string() << " lowest_degree=" << degree << " srank=" << expected
            << " bottom=" << q.bottom().to_text() << "\n";
      }
    }
    log << "n=" << n << ": " << shapes << " shapes, " << violations << " violations\n";
    table.width(5);
    table << n << "  ";
    table.width(6);
    table << shapes << "  ";
    table.width(10);
    table << violations << "\n";
    res.checked += shapes;
    res.violations += violations;
  }
  res.report = log.str() + bad.str() + "summary: lowest degree of Q_lambda vs srank(lambda)\n" + table.str() +
               "total: " + std::to_string(res.checked) + " shapes, " + std::to_string(res.violations) +
               " violations\n";
  return res;
}

SweepResult verify_skew(int max_n) {
  if (max_n < 0) throw InvalidArgument("--max-n must be nonnegative");
  SweepResult res;
  std::ostringstream log, table, bad;
  table << "    n  shapes  routes  srank  bound\n";
  const int bound = std::max(max_n, kDefaultBruteForceBound);
  for (int n = 1; n <= max_n; ++n) {
    int shapes = 0, route_bad = 0, srank_bad = 0, bound_bad = 0;
    for (const StrictPartition& lam : enumerate_strict(n)) {
      for (const StrictPartition& mu : enumerate_strict_contained(lam)) {
        SkewShape shape(lam, mu);
        ++shapes;
        PPoly pf = q_skew_pfaffian(shape);
        PPoly strips = q_skew_strips(shape);
        if (!(pf == strips)) {
          ++route_bad;
          bad << "counterexample: " << shape.to_string() << " pf=" << pf.to_text() << " strips=" << strips.to_text()
              << "\n";
        }
        const int s = srank_skew(shape);
        const int brute = min_bars_bruteforce(shape, bound);
        if (s != brute) {
          ++srank_bad;
          bad << "counterexample: " << shape.to_string() << " srank=" << s << " brute_force=" << brute << "\n";
        }
        if (!pf.is_zero() && pf.lowest_degree() < s) {
          ++bound_bad;
          bad << "counterexample: " << shape.to_string() << " lowest_degree=" << pf.lowest_degree() << " srank=" << s
              << " bottom=" << pf.bottom().to_text() << "\n";
        }
      }
    }
    const int violations = route_bad + srank_bad + bound_bad;
    log << "n=" << n << ": " << shapes << " shapes, " << violations << " violations\n";
    auto col = [&](int w, int v) {
      table.width(w);
      table << v;
    };
    col(5, n);
    table << "  ";
    col(6, shapes);
    table << "  ";
    col(6, route_bad);
    table << "  ";
    col(5, srank_bad);
    table << "  ";
    col(5, bound_bad);
    table << "\n";
    res.checked += shapes;
    res.violations += violations;
  }
  res.report = log.str() + bad.str() +
               "summary: violations of Pf = strips, srank = brute force, lowest degree >= srank\n" + table.str() +
               "total: " + std::to_string(res.checked) + " shapes, " + std::to_string(res.violations) +
               " violations\n";
  return res;
}

}  // namespace qsrank
