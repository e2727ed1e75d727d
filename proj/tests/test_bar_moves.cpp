#include <doctest.h>

#include <cstdlib>
#include <set>

#include "bar_moves.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace qsrank;

TEST_CASE("index_sets") {
  IndexSets a = index_sets(StrictPartition({9, 7, 6, 3, 1}), 7);
  CHECK(a.plus == std::vector<int>{1});
  CHECK(a.zero == std::vector<int>{2});
  CHECK(a.minus == std::vector<int>{3});

  IndexSets b = index_sets(StrictPartition({3}), 3);
  CHECK(b.plus.empty());
  CHECK(b.zero == std::vector<int>{1});
  CHECK(b.minus.empty());

  IndexSets c = index_sets(StrictPartition({8, 6}), 3);
  CHECK(c.plus == std::vector<int>{1, 2});
  CHECK(c.zero.empty());
  CHECK(c.minus.empty());

  CHECK_THROWS_AS(index_sets(StrictPartition({3}), 2), InvalidArgument);
  CHECK_THROWS_AS(index_sets(StrictPartition({3}), 0), InvalidArgument);
  CHECK_THROWS_AS(index_sets(StrictPartition({3}), -1), InvalidArgument);
}

TEST_CASE("index_sets excludes removals that collide with an existing part") {
  // 5 - 3 = 2 is already a part.
  IndexSets s = index_sets(StrictPartition({5, 2}), 3);
  CHECK(s.plus.empty());
  CHECK(s.zero.empty());
  CHECK(s.minus.empty());
}

TEST_CASE("remove_bar") {
  BarMove a = remove_bar(StrictPartition({9, 7, 6, 3, 1}), 1, 7);
  CHECK(a.result.vec() == std::vector<int>{7, 6, 3, 2, 1});
  CHECK(a.type == BarType::Type1);
  CHECK(a.partner == 4);

  BarMove b = remove_bar(StrictPartition({3}), 1, 3);
  CHECK(b.result.empty());
  CHECK(b.type == BarType::Type2);
  CHECK_FALSE(b.partner.has_value());

  BarMove c = remove_bar(StrictPartition({9, 7, 6, 3, 1}), 3, 7);
  CHECK(c.result.vec() == std::vector<int>{9, 7, 3});
  CHECK(c.type == BarType::Type3);
  CHECK(c.partner == 5);

  CHECK_THROWS_WITH_AS(remove_bar(StrictPartition({9, 7, 6, 3, 1}), 4, 7), "no such bar", InvalidArgument);
  CHECK_THROWS_WITH_AS(remove_bar(StrictPartition({5, 2}), 1, 3), "no such bar", InvalidArgument);
  CHECK_THROWS_AS(remove_bar(StrictPartition({5, 2}), 3, 1), InvalidArgument);
}

TEST_CASE("bar_weight") {
  StrictPartition a({5, 3});
  CHECK(bar_weight(a, remove_bar(a, 1, 3)) == -2);
  StrictPartition b({9, 7, 6, 3, 1});
  CHECK(bar_weight(b, remove_bar(b, 2, 7)) == -1);
  StrictPartition c({2, 1});
  CHECK(bar_weight(c, remove_bar(c, 1, 3)) == -1);
}

TEST_CASE("bar removals agree with a row-multiset oracle") {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lam : enumerate_strict(n)) {
      for (int r = 1; r <= n; r += 2) {
        CAPTURE(lam.to_string());
        CAPTURE(r);
        IndexSets sets = index_sets(lam, r);
        std::set<int> p(sets.plus.begin(), sets.plus.end());
        std::set<int> z(sets.zero.begin(), sets.zero.end());
        std::set<int> m(sets.minus.begin(), sets.minus.end());
        for (int i : p) CHECK((z.count(i) == 0 && m.count(i) == 0));
        for (int i : z) CHECK(m.count(i) == 0);

        std::set<std::vector<int>> got;
        for (const BarMove& mv : bar_moves(lam, r)) {
          CHECK(mv.result.weight() == n - r);
          CHECK(mv.size == r);
          int w = bar_weight(lam, mv);
          CHECK((std::abs(w) == 1 || std::abs(w) == 2));
          bool unit = mv.type == BarType::Type2 || parity_stats(lam).epsilon == 1;
          CHECK((std::abs(w) == 1) == unit);
          got.insert(mv.result.vec());
        }
        CHECK(got == oracle::bar_removals(lam.vec(), r));
        CHECK(bar_moves(lam, r).size() == p.size() + z.size() + m.size());
      }
    }
  }
}
