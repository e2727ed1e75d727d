#include "characters.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "bar_moves.hpp"
#include "error.hpp"

namespace qsrank {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

struct Cache {
  std::shared_mutex mutex;
  std::map<Key, mpz_class> values;
};

Cache& cache() {
  static Cache c;
  return c;
}

// pi_parts is a prefix of the class in label order; the last entry is the bar
// with the largest label, which is removed first.
mpz_class morris_sum(const StrictPartition& lam, const std::vector<int>& pi_parts) {
  if (pi_parts.empty()) return lam.empty() ? 1 : 0;
  Key key{lam.vec(), pi_parts};
  {
    std::shared_lock lock(cache().mutex);
    auto it = cache().values.find(key);
    if (it != cache().values.end()) return it->second;
  }
  std::vector<int> rest(pi_parts.begin(), pi_parts.end() - 1);
  mpz_class total = 0;
  for (const BarMove& move : bar_moves(lam, pi_parts.back()))
    total += bar_weight(lam, move) * morris_sum(move.result, rest);
  std::unique_lock lock(cache().mutex);
  cache().values.emplace(std::move(key), total);
  return total;
}

}  // namespace

mpz_class character(const StrictPartition& lam, const OddPartition& pi) {
  if (lam.weight() != pi.weight())
    throw InvalidArgument("weight mismatch: |" + lam.to_string() + "| != |" + pi.to_string() + "|");
  return morris_sum(lam, pi.vec());
}

void clear_character_cache() {
  std::unique_lock lock(cache().mutex);
  cache().values.clear();
}

}  // namespace qsrank
