#include <doctest.h>

#include <random>

#include "error.hpp"
#include "ppoly.hpp"

using namespace qsrank;

namespace {

PPoly p(std::vector<int> nu, mpq_class c = 1) { return PPoly::monomial(Partition::from_unsorted(std::move(nu)), c); }

PPoly random_poly(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> terms(0, max_terms), len(0, 3), part(1, 4), coef(-5, 5), den(1, 4);
  PPoly f;
  int n = terms(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<int> nu(static_cast<std::size_t>(len(rng)));
    for (int& x : nu) x = part(rng);
    mpq_class c(coef(rng), den(rng));
    c.canonicalize();
    f += p(nu, c);
  }
  return f;
}

}  // namespace

TEST_CASE("multiplication concatenates index partitions") {
  CHECK(p({3}) * p({1, 1}) == p({3, 1, 1}));
  CHECK(p({1}, 2) * p({1}, 2) == p({1, 1}, 4));
  CHECK((p({1}) + p({3})) * (p({1}) - p({3})) == p({1, 1}) - p({3, 3}));
}

TEST_CASE("zero coefficients are pruned") {
  PPoly f = p({2}) - p({2});
  CHECK(f.is_zero());
  CHECK(f.term_count() == 0);
  CHECK(f == PPoly{});
  CHECK((p({1}) * mpq_class(0)).is_zero());
  CHECK(f.to_text() == "0");
}

TEST_CASE("lowest_degree and bottom") {
  CHECK(p({1, 1, 1, 1}, 2).lowest_degree() == 4);
  CHECK((p({3}) + p({1, 1, 1})).lowest_degree() == 1);
  CHECK(PPoly::constant(1).lowest_degree() == 0);
  CHECK_THROWS_AS(PPoly{}.lowest_degree(), InvalidArgument);
  CHECK_THROWS_AS(PPoly{}.bottom(), InvalidArgument);

  PPoly q21 = p({1, 1, 1}, mpq_class(4, 3)) - p({3}, mpq_class(4, 3));
  CHECK(q21.bottom() == p({3}, mpq_class(-4, 3)));
  CHECK(p({1, 1, 1, 1}, 2).bottom() == p({1, 1, 1, 1}, 2));
  CHECK((p({3, 1}, 5) + p({5})).bottom() == p({5}));
}

TEST_CASE("text form lists lower degrees first") {
  PPoly q21 = p({1, 1, 1}, mpq_class(4, 3)) - p({3}, mpq_class(4, 3));
  CHECK(q21.to_text() == "-4/3*p[3] + 4/3*p[1,1,1]");
  CHECK(p({1, 1, 1, 1}, 2).to_text() == "2*p[1,1,1,1]");
  CHECK((p({5}) - p({3, 1, 1})).to_text() == "p[5] - p[3,1,1]");
  CHECK((PPoly::constant(mpq_class(-1, 2)) + p({1})).to_text() == "-1/2 + p[1]");
  CHECK((p({3, 1}) + p({2, 2})).to_text() == "p[2,2] + p[3,1]");
}

TEST_CASE("JSON round trip and schema") {
  PPoly f = p({1, 1, 1}, mpq_class(4, 3)) - p({3}, mpq_class(4, 3)) + PPoly::constant(7);
  std::string js = f.to_json();
  CHECK(js == R"([{"den":"1","nu":[],"num":"7"},{"den":"3","nu":[3],"num":"-4"},{"den":"3","nu":[1,1,1],"num":"4"}])");
  CHECK(PPoly::from_json(js) == f);
  CHECK(PPoly::from_json("[]").is_zero());
  CHECK(PPoly::from_json(R"([{"nu":[1,3],"num":"2","den":"4"}])") == p({3, 1}, mpq_class(1, 2)));
  CHECK_THROWS_AS(PPoly::from_json("{"), ParseError);
  CHECK_THROWS_AS(PPoly::from_json(R"({"nu":[1]})"), ParseError);
  CHECK_THROWS_AS(PPoly::from_json(R"([{"nu":[1],"num":"1"}])"), ParseError);
  CHECK_THROWS_AS(PPoly::from_json(R"([{"nu":[1],"num":"1","den":"0"}])"), ParseError);
  CHECK_THROWS_AS(PPoly::from_json(R"([{"nu":[0],"num":"1","den":"1"}])"), ParseError);
  CHECK_THROWS_AS(PPoly::from_json(R"([{"nu":[1],"num":"x","den":"1"}])"), ParseError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    PPoly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PPoly{});
    CHECK(a * PPoly::constant(1) == a);
    CHECK(-(-a) == a);
    CHECK(PPoly::from_json(a.to_json()) == a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).lowest_degree() == a.lowest_degree() + b.lowest_degree());
  }
}

TEST_CASE("products of homogeneous polynomials are homogeneous") {
  PPoly a = p({3}) + p({1, 1, 1}, mpq_class(2, 3));
  PPoly b = p({2}) - p({1, 1}, 5);
  CHECK(a.homogeneous_weight() == 3);
  CHECK(b.homogeneous_weight() == 2);
  CHECK((a * b).homogeneous_weight() == 5);
  CHECK_FALSE((a + b).homogeneous_weight().has_value());
  CHECK_FALSE(PPoly{}.homogeneous_weight().has_value());
}
