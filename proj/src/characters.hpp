#pragma once

#include <gmpxx.h>

#include "partitions.hpp"

namespace qsrank {

// Spin character value <lam>(pi) by the Morris rule: the signed count of bar
// tableaux of shape lam whose bar sizes, in label order, are the parts of pi.
// Memoized; safe to call from several threads.
mpz_class character(const StrictPartition& lam, const OddPartition& pi);

void clear_character_cache();

}  // namespace qsrank
