#pragma once

#include <string_view>

#include "partitions.hpp"
#include "pfaffian.hpp"
#include "ppoly.hpp"

namespace qsrank {

// q_k in the power-sum basis, computed as Q_(k) from spin characters.
// q_0 = 1 and q_k = 0 for k < 0.
PPoly qk(int k);

// Q_(a,b) = q_a q_b + 2 sum_{m=1}^{b} (-1)^m q_{a+m} q_{b-m}, for a, b >= 0.
PPoly q_two_row(int a, int b);

// Character expansion: sum over odd pi of
// 2^{(l(lam) + l(pi) + eps(lam))/2} <lam>(pi) p_pi / z_pi.
PPoly q_morris(const StrictPartition& lam);

// Row-deletion recurrences: odd length expands along q_{lam_m}, even length
// along Q_(lam_1, lam_m).
PPoly q_recurrence(const StrictPartition& lam);

// Pf(Q_(lam_i, lam_j)), with lam padded by one zero when its length is odd.
PPoly q_pfaffian(const StrictPartition& lam);

// Pf [[A, B], [-B^t, 0]] with A = (Q_(lam_i, lam_j)) and
// B = (q_{lam_i - mu_{n+1-j}}); mu gets a trailing zero when l(lam) + l(mu) is odd.
PPoly q_skew_pfaffian(const SkewShape& shape);

enum class Route { Morris, Recurrence, Pfaffian, Strips };

Route parse_route(std::string_view name);
std::string_view route_name(Route route);

// Morris and Recurrence accept straight shapes only.
PPoly q_function(const SkewShape& shape, Route route);

void clear_qfunction_caches();

}  // namespace qsrank
