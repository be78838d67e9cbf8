#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cluster/laurent.hpp"

#include <random>

using namespace cluster;

namespace {

LaurentPoly x1() { return LaurentPoly::variable(2, 0); }
LaurentPoly x2() { return LaurentPoly::variable(2, 1); }
LaurentPoly c2(long v) { return LaurentPoly::constant(2, v); }

LaurentPoly random_poly(std::mt19937& rng, int rank, int terms) {
  std::uniform_int_distribution<int> expo(-2, 2), coeff(-4, 4);
  LaurentPoly p = LaurentPoly::zero(rank);
  for (int t = 0; t < terms; ++t) {
    Exponent e(rank);
    for (int i = 0; i < rank; ++i) e[i] = expo(rng);
    p = p + LaurentPoly::monomial(e, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("ring operations on fixed values") {
  CHECK((x1() + c2(1)) * (x1() - c2(1)) == x1() * x1() - c2(1));
  LaurentPoly p = x1() * x2() + c2(3);
  CHECK(p + LaurentPoly::zero(2) == p);
  LaurentPoly shifted = (x2() + c2(1)) * LaurentPoly::monomial({-1, 0});
  CHECK(shifted == LaurentPoly::monomial({-1, 1}) + LaurentPoly::monomial({-1, 0}));
  CHECK_THROWS_AS(p + LaurentPoly::one(3), RankMismatch);
}

TEST_CASE("exact division") {
  LaurentPoly q = x2() + c2(1);
  CHECK(lp_div_exact(q, x1()) ==
        LaurentPoly::monomial({-1, 1}) + LaurentPoly::monomial({-1, 0}));
  LaurentPoly num = x1() * x2() + x1() + x2() + c2(1);
  CHECK(lp_div_exact(num, x1() + c2(1)) == x2() + c2(1));
  CHECK_THROWS_AS(lp_div_exact(x1() + x2(), x1() + c2(1)), InexactDivision);
  CHECK_THROWS_AS(lp_div_exact(x1(), LaurentPoly::zero(2)), InexactDivision);
}

TEST_CASE("division round trip on random polynomials") {
  std::mt19937 rng(7);
  int done = 0;
  while (done < 50) {
    LaurentPoly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 2);
    if (q.is_zero()) continue;
    CHECK(lp_div_exact(p * q, q) == p);
    ++done;
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly a = random_poly(rng, 2, 3), b = random_poly(rng, 2, 3),
                c = random_poly(rng, 2, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitution") {
  // F(y1, y2) = 1 + y2 at images x^(0,1), x^(-1,0).
  LaurentPoly f = LaurentPoly::one(2) + x2();
  std::vector<LaurentPoly> images{LaurentPoly::monomial({0, 1}),
                                  LaurentPoly::monomial({-1, 0})};
  CHECK(lp_substitute(f, images) ==
        LaurentPoly::one(2) + LaurentPoly::monomial({-1, 0}));
  std::vector<LaurentPoly> identity{x1(), x2()};
  LaurentPoly p = x1() * x2() + LaurentPoly::monomial({-2, 1}, 5);
  CHECK(lp_substitute(p, identity) == p);
  CHECK(lp_substitute(LaurentPoly::one(2), images) == LaurentPoly::one(2));
  CHECK_THROWS_AS(lp_substitute(LaurentPoly::monomial({-1, 0}),
                                std::vector<LaurentPoly>{x1() + c2(1), x2()}),
                  NegativePowerOfNonUnit);
}

TEST_CASE("substitution respects products") {
  std::mt19937 rng(13);
  std::vector<LaurentPoly> images{x2() + c2(2), x1() * x1() + c2(1)};
  for (int t = 0; t < 20; ++t) {
    LaurentPoly p = random_poly(rng, 2, 3), q = random_poly(rng, 2, 3);
    // Clear negative exponents: multiply by a high power of both variables.
    p = p * LaurentPoly::monomial({3, 3});
    q = q * LaurentPoly::monomial({3, 3});
    // Shift makes exponents >= 1, so non-unit images are fine.
    CHECK(lp_substitute(p * q, images) ==
          lp_substitute(p, images) * lp_substitute(q, images));
  }
}

TEST_CASE("denominator vectors") {
  LaurentPoly p = LaurentPoly::monomial({-1, 1}) + LaurentPoly::monomial({-1, 0});
  CHECK(lp_denominator_vector(p) == std::vector<int>{1, 0});
  CHECK(lp_denominator_vector(x2()) == std::vector<int>{0, -1});
  LaurentPoly q = LaurentPoly::monomial({-1, -1}) *
                  (x1() + x2() + c2(1));
  CHECK(lp_denominator_vector(q) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(lp_denominator_vector(LaurentPoly::zero(2)), ZeroPolynomial);
}

TEST_CASE("classification") {
  LaurentPoly p = LaurentPoly::monomial({-1, 1}) + LaurentPoly::monomial({-1, 0});
  auto c = lp_classify(p);
  CHECK(c.is_nonneg);
  CHECK(c.is_proper_sum);
  c = lp_classify(x1() * x2());
  CHECK(c.is_nonneg);
  CHECK(!c.is_proper_sum);
  c = lp_classify(LaurentPoly::monomial({-1, 0}) -
                  LaurentPoly::monomial({0, -1}));
  CHECK(!c.is_nonneg);
  CHECK(c.is_proper_sum);
  c = lp_classify(LaurentPoly::zero(2));
  CHECK(c.is_nonneg);
  CHECK(c.is_proper_sum);
}

TEST_CASE("serialization fixed point") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    LaurentPoly p = random_poly(rng, 3, 4);
    std::string s = p.to_string();
    LaurentPoly back = LaurentPoly::parse(3, s);
    CHECK(back == p);
    CHECK(back.to_string() == s);
  }
  CHECK(LaurentPoly::parse(2, "x1^-1*x2^-1 + x1^-1 + x2^-1").to_string() ==
        "x1^-1*x2^-1 + x1^-1 + x2^-1");
  CHECK_THROWS_AS(LaurentPoly::parse(2, "x1 + + x2"), ParseError);
}

TEST_CASE("powers and units") {
  LaurentPoly m = LaurentPoly::monomial({2, -1});
  CHECK(m.pow(-2) == LaurentPoly::monomial({-4, 2}));
  CHECK(m.inv_unit() == LaurentPoly::monomial({-2, 1}));
  CHECK((x1() + c2(1)).pow(2) ==
        x1() * x1() + c2(2) * x1() + c2(1));
  CHECK_THROWS_AS((x1() + c2(1)).pow(-1), NegativePowerOfNonUnit);
}
