#include <doctest.h>

#include <future>
#include <vector>

#include "dtri/partitions.hpp"
#include "dtri/qseries.hpp"

using namespace dtri;

TEST_CASE("a_d(n) by dynamic programming") {
  CHECK(ad_series_dp(2, 10).coeffs() == std::vector<Integer>{1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6});
  CHECK(ad_series_dp(8, 10)[10] == 1401);
  CHECK(ad_series_dp(1, 25).coeffs() == std::vector<Integer>(26, 1));
  CHECK(ad_series_dp(0, 3).coeffs() == std::vector<Integer>{1, 0, 0, 0});
  CHECK(ad_series_dp(3, 0).coeffs() == std::vector<Integer>{1});

  for (unsigned d = 1; d <= 6; ++d) {
    PowerSeries s = ad_series_dp(d, 15);
    for (unsigned n = 0; n <= 15; ++n) CHECK(s[n] == count_ad_bruteforce(d, n));
  }
}

TEST_CASE("A_d from the two-index recursion") {
  CHECK(ad_ratfn_recursive(1) == RationalFunction(IntPolynomial{1}, IntPolynomial{1, -1}));
  RationalFunction a2 = ad_ratfn_recursive(2);
  CHECK(a2.num() == IntPolynomial{1, 1, -1});
  // (1-q)^2 (1+q) = (q;q)_2
  CHECK(a2.den() == IntPolynomial{1, -1} * IntPolynomial{1, -1} * IntPolynomial{1, 1});
  RationalFunction a3 = ad_ratfn_recursive(3);
  CHECK(a3.num() == IntPolynomial{1, 2, 0, -1, -2, 0, 1});
  CHECK(a3.den() == q_pochhammer(3));
}

TEST_CASE("alpha_d") {
  CHECK(alpha_poly(0) == IntPolynomial{1});
  CHECK(alpha_poly(1) == IntPolynomial{1});
  CHECK(alpha_poly(2) == IntPolynomial{1, 1, -1});
  CHECK(alpha_poly(3) == IntPolynomial{1, 2, 0, -1, -2, 0, 1});
  IntPolynomial factored = IntPolynomial{1, 1, 0, 0, -1} * IntPolynomial{1, 2, 0, 0, -2, -1, 0, 0, 1};
  CHECK(alpha_poly(4) == factored);
}

TEST_CASE("alpha_d structure for d <= 12") {
  for (unsigned d = 1; d <= 12; ++d) {
    CAPTURE(d);
    IntPolynomial a = alpha_poly(d);
    CHECK(a.degree() == static_cast<long>((d - 1) * d));
    CHECK(a.constant_term() == 1);
    CHECK(a.leading() == (d % 2 == 1 ? 1 : -1));
    CHECK(a.eval(1) == 1);
    CHECK(poly_gcd(a, q_pochhammer(d)) == IntPolynomial{1});

    PowerSeries dp = ad_series_dp(d, 40);
    CHECK(series_expand(ad_ratfn(d), 40) == dp);
    RationalFunction rec = ad_ratfn_recursive(d);
    CHECK(series_expand(rec, 40) == dp);
    CHECK(rec.num() == a);
  }
}

TEST_CASE("structure report") {
  AlphaReport r3 = check_alpha_structure(3);
  CHECK(r3.hard_checks_pass());
  CHECK(r3.value_at_1 == 1);
  CHECK(r3.value_at_minus1 == -1);
  CHECK(r3.minus1_conjecture);
  CHECK(r3.leading_coeff_ok);

  AlphaReport r1 = check_alpha_structure(1);
  CHECK(r1.hard_checks_pass());
  CHECK(r1.degree == 0);
  CHECK(r1.gcd_is_one);

  AlphaReport r6 = check_alpha_structure(6);
  CHECK(r6.degree == 30);
  CHECK(alpha_poly(6).leading() == -1);
  CHECK(r6.value_at_1 == 1);
  CHECK(r6.hard_checks_pass());

  CHECK_THROWS_AS(check_alpha_structure(0), std::invalid_argument);
}

TEST_CASE("AdResult consistency") {
  AdResult r = ad_result(5, 30);
  CHECK(r.alpha == alpha_poly(5));
  CHECK(series_expand(r.ratfn, 30) == r.series_prefix);
}

TEST_CASE("alpha cache under concurrent readers") {
  std::vector<std::future<IntPolynomial>> fs;
  for (int i = 0; i < 8; ++i) fs.push_back(std::async(std::launch::async, [] { return alpha_poly(9); }));
  IntPolynomial first = fs.front().get();
  for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i].get() == first);
  CHECK(first == ad_ratfn_recursive(9).num());
}
