#include <doctest.h>

#include <random>

#include "dtri/error.hpp"
#include "dtri/partitions.hpp"
#include "dtri/polyring.hpp"
#include "oracles.hpp"

using namespace dtri;

TEST_CASE("canonical form and degree") {
  IntPolynomial z{0, 0, 0};
  CHECK(z.is_zero());
  CHECK(z.degree() == IntPolynomial::kZeroDegree);
  CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
  CHECK(IntPolynomial{1, 2, 0} == IntPolynomial{1, 2});
  CHECK(to_string(IntPolynomial{1, 2, 1, 1, -1}) == "1 + 2*q + q^2 + q^3 - q^4");
  CHECK(to_string(IntPolynomial{0, -1}) == "-q");
}

TEST_CASE("ring arithmetic examples") {
  CHECK(IntPolynomial{1, 1} * IntPolynomial{1, -1} == IntPolynomial{1, 0, -1});
  IntPolynomial a{3, -2, 5};
  CHECK(a + IntPolynomial{} == a);
  CHECK(IntPolynomial{1, 1, -1} * IntPolynomial{1} == IntPolynomial{1, 1, -1});
  CHECK((a - a).is_zero());
  CHECK(a.shifted(2) == IntPolynomial{0, 0, 3, -2, 5});
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20250723);
  for (int i = 0; i < 1000; ++i) {
    IntPolynomial a = oracle::random_poly(rng, 6, 9);
    IntPolynomial b = oracle::random_poly(rng, 6, 9);
    IntPolynomial c = oracle::random_poly(rng, 6, 9);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("exact division") {
  CHECK(exact_div(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1}) == IntPolynomial{1, 1});
  // (q;q)_3 / (1+q) = (1-q)^3 (1+q+q^2)
  IntPolynomial expected = IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, 1, 1};
  CHECK(expected == IntPolynomial{1, -2, 1, -1, 2, -1});
  CHECK(exact_div(q_pochhammer(3), IntPolynomial{1, 1}) == expected);
  CHECK_THROWS_AS(exact_div(IntPolynomial{1, 1}, IntPolynomial{1, -1}), NonDivisible);
  CHECK_THROWS_AS(exact_div(IntPolynomial{1, 2}, IntPolynomial{0, 2}), NonDivisible);
  CHECK_THROWS_AS(exact_div(IntPolynomial{1}, IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("q-Pochhammer") {
  CHECK(q_pochhammer(0) == IntPolynomial{1});
  CHECK(q_pochhammer(2) == IntPolynomial{1, -1, -1, 1});
  for (unsigned d = 0; d <= 10; ++d) {
    CHECK(q_pochhammer(d).degree() == static_cast<long>(triangular(d)));
    CHECK(q_pochhammer(d) == IntPolynomial(oracle::pochhammer_by_subsets(d)));
  }
}

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(2, 1) == IntPolynomial{1, 1});
  CHECK(gaussian_binomial(7, 0) == IntPolynomial{1});
  CHECK(gaussian_binomial(4, 2) == IntPolynomial{1, 1, 2, 1, 1});
  CHECK_THROWS_AS(gaussian_binomial(2, 3), std::invalid_argument);
  for (unsigned k = 0; k <= 12; ++k)
    for (unsigned d = 0; d <= k; ++d) {
      IntPolynomial g = gaussian_binomial(k, d);
      CHECK(g == gaussian_binomial(k, k - d));
      CHECK(g.eval(1) == binomial(k, d));
      CHECK(g.degree() == static_cast<long>(d * (k - d)));
    }
}

TEST_CASE("evaluation") {
  CHECK(IntPolynomial{1, 2, 1, 1, -1}.eval(1) == 4);
  CHECK(IntPolynomial{7, 3, -2}.eval(0) == 7);
  CHECK(IntPolynomial{1, 1}.eval(-1) == 0);
  CHECK(IntPolynomial{}.eval(5) == 0);
}

TEST_CASE("polynomial gcd") {
  CHECK(poly_gcd(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1}) == IntPolynomial{1, -1});
  CHECK(poly_gcd(IntPolynomial{1, 1, -1}, q_pochhammer(2)) == IntPolynomial{1});
  CHECK(poly_gcd(IntPolynomial{-2, 4, -6}, IntPolynomial{}) == IntPolynomial{1, -2, 3});
  CHECK(poly_gcd(IntPolynomial{0, 0, -3}, IntPolynomial{0, 6}) == IntPolynomial{0, 1});
  CHECK_THROWS_AS(poly_gcd(IntPolynomial{}, IntPolynomial{}), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    IntPolynomial g = oracle::random_poly(rng, 3, 5);
    IntPolynomial a = oracle::random_poly(rng, 4, 5);
    IntPolynomial b = oracle::random_poly(rng, 4, 5);
    if (g.is_zero() || g.degree() < 1 || a.is_zero() || b.is_zero()) continue;
    IntPolynomial h = poly_gcd(g * a, g * b);
    CHECK_NOTHROW(exact_div(g * a, h));
    CHECK_NOTHROW(exact_div(g * b, h));
    CHECK(h.degree() >= g.degree());
  }
}

TEST_CASE("rational function normalization") {
  RationalFunction f(IntPolynomial{1, 2}, IntPolynomial{-1, 1});
  CHECK(f.num() == IntPolynomial{-1, -2});
  CHECK(f.den() == IntPolynomial{1, -1});
  CHECK_THROWS_AS(RationalFunction(IntPolynomial{1}, IntPolynomial{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RationalFunction(IntPolynomial{1}, IntPolynomial{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(RationalFunction(IntPolynomial{1}, IntPolynomial{}), std::invalid_argument);

  // Not reduced unless asked.
  RationalFunction g(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1});
  CHECK(g.num() == IntPolynomial{1, 0, -1});
  RationalFunction r = g.reduced();
  CHECK(r.num() == IntPolynomial{1, 1});
  CHECK(r.den() == IntPolynomial{1});
}

TEST_CASE("series expansion") {
  CHECK(series_expand({IntPolynomial{0, 1}, IntPolynomial{1, -2, 1}}, 5).coeffs() ==
        std::vector<Integer>{0, 1, 2, 3, 4, 5});
  auto pd = series_expand({IntPolynomial{1}, q_pochhammer(2)}, 6);
  CHECK(pd.coeffs() == std::vector<Integer>{1, 1, 2, 2, 3, 3, 4});
  for (unsigned n = 0; n <= 6; ++n) CHECK(pd[n] == count_pd_bruteforce(2, n));
  CHECK(series_expand({IntPolynomial{4, 0, 5}, IntPolynomial{1}}, 4).coeffs() == std::vector<Integer>{4, 0, 5, 0, 0});
  CHECK(series_expand({IntPolynomial{1, 1}, IntPolynomial{1}}, 0).coeffs() == std::vector<Integer>{1});

  for (unsigned d = 1; d <= 5; ++d) {
    auto s = series_expand({IntPolynomial{1}, q_pochhammer(d)}, 20);
    for (unsigned n = 0; n <= 20; ++n) CHECK(s[n] == count_pd_bruteforce(d, n));
  }
}

TEST_CASE("series arithmetic matches rational-function arithmetic") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial na = oracle::random_poly(rng, 4, 5), nb = oracle::random_poly(rng, 4, 5);
    IntPolynomial da = IntPolynomial{1} + oracle::random_poly(rng, 3, 3).shifted(1);
    IntPolynomial db = IntPolynomial{1} + oracle::random_poly(rng, 3, 3).shifted(1);
    RationalFunction a(na, da), b(nb, db);
    CHECK(series_expand(a + b, 15) == series_expand(a, 15) + series_expand(b, 15));
    CHECK(series_expand(a * b, 15) == series_expand(a, 15) * series_expand(b, 15));
    CHECK(series_expand(a - b, 15) == series_expand(a, 15) - series_expand(b, 15));
  }
}

TEST_CASE("power series truncation rules") {
  PowerSeries a(std::vector<Integer>{1, 2, 3, 4});
  PowerSeries b(std::vector<Integer>{1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b).coeffs() == std::vector<Integer>{1, 3});
  CHECK(a.shifted(2).coeffs() == std::vector<Integer>{0, 0, 1, 2});
  CHECK(a.truncated(1) == PowerSeries(std::vector<Integer>{1, 2}));
  CHECK_THROWS_AS(PowerSeries(std::vector<Integer>{}), std::invalid_argument);
}
