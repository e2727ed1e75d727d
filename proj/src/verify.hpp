#pragma once

#include <string>

namespace qsrank {

struct SweepResult {
  int checked = 0;
  int violations = 0;
  std::string report;
};

// lowest_degree(Q_lam) == srank(lam) for every strict lam with 1 <= |lam| <= max_n.
SweepResult verify_conjecture(int max_n);

// For every skew shape lam/mu with |lam| <= max_n: Pfaffian and strip routes
// agree, srank equals the brute-force minimum, and the lowest degree of
// Q_{lam/mu} is at least the srank.
SweepResult verify_skew(int max_n);

}  // namespace qsrank
