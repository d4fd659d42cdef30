#include "dtri/qseries.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dtri/error.hpp"
#include "dtri/partitions.hpp"

namespace dtri {

PowerSeries ad_series_dp(unsigned d, std::size_t order) {
  PowerSeries out(order);
  if (d == 0) {
    out[0] = 1;
    return out;
  }
  const std::size_t n = order;
  // ways[v][s]: tuples of the current length with last part v and sum s.
  std::vector<std::vector<Integer>> ways(n + 1, std::vector<Integer>(n + 1));
  for (std::size_t v = 0; v <= n; ++v) ways[v][v] = 1;

  std::vector<std::vector<Integer>> suffix(n + 2, std::vector<Integer>(n + 1));
  for (unsigned j = 2; j <= d; ++j) {
    // suffix[v][s] = sum_{u >= v} ways[u][s]
    for (std::size_t s = 0; s <= n; ++s) suffix[n + 1][s] = 0;
    for (std::size_t v = n + 1; v-- > 0;)
      for (std::size_t s = 0; s <= n; ++s) suffix[v][s] = suffix[v + 1][s] + ways[v][s];
    // Next part w is allowed after any last part u >= w - 1.
    for (std::size_t w = 0; w <= n; ++w) {
      const std::size_t from = w == 0 ? 0 : w - 1;
      for (std::size_t t = 0; t <= n; ++t) ways[w][t] = t >= w ? suffix[from][t - w] : Integer(0);
    }
  }
  for (std::size_t v = 0; v <= n; ++v)
    for (std::size_t s = 0; s <= n; ++s) out[s] += ways[v][s];
  return out;
}

RationalFunction ad_ratfn_recursive(unsigned d) {
  if (d == 0) return {IntPolynomial{1}, IntPolynomial{1}};
  // level[m-1] holds the numerator of B_{e,m} for m = 1..d-e+1.
  std::vector<IntPolynomial> level(d, IntPolynomial{1});
  for (unsigned e = 2; e <= d; ++e) {
    std::vector<IntPolynomial> next;
    const IntPolynomial widen_second = one_minus_q_pow(e - 1);
    for (unsigned m = 1; m <= d - e + 1; ++m) {
      IntPolynomial beta = level[0] * one_minus_q_pow(e - 1 + m) - (level[m] * widen_second).shifted(2 * m);
      try {
        next.push_back(exact_div(beta, one_minus_q_pow(m)));
      } catch (const NonDivisible&) {
        throw NonDivisible("ad_ratfn_recursive: (1-q^" + std::to_string(m) + ") does not cancel at level " + std::to_string(e));
      }
    }
    level = std::move(next);
  }
  return {level.front(), q_pochhammer(d)};
}

namespace {

IntPolynomial compute_alpha(unsigned d) {
  if (d == 0) return IntPolynomial{1};
  const std::size_t degree = static_cast<std::size_t>(d - 1) * d;
  const std::size_t guard = triangular(d) + 8;
  const std::size_t order = degree + triangular(d) + guard;
  PowerSeries prod = ad_series_dp(d, order) * PowerSeries::from_polynomial(q_pochhammer(d), order);
  for (std::size_t i = degree + 1; i <= order; ++i)
    if (prod[i] != 0)
      throw StructureViolation("alpha_" + std::to_string(d) + ": nonzero coefficient at q^" + std::to_string(i) + " past degree " + std::to_string(degree));
  IntPolynomial alpha(std::vector<Integer>(prod.coeffs().begin(), prod.coeffs().begin() + static_cast<long>(degree) + 1));
  if (alpha.degree() != static_cast<long>(degree)) throw StructureViolation("alpha_" + std::to_string(d) + ": wrong degree");
  if (alpha.constant_term() != 1) throw StructureViolation("alpha_" + std::to_string(d) + ": constant term is not 1");
  if (alpha.leading() != ((d - 1) % 2 == 0 ? 1 : -1)) throw StructureViolation("alpha_" + std::to_string(d) + ": wrong leading coefficient");
  return alpha;
}

}  // namespace

IntPolynomial alpha_poly(unsigned d) {
  static std::shared_mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPolynomial alpha = compute_alpha(d);
  std::unique_lock lock(mutex);
  return cache.try_emplace(d, std::move(alpha)).first->second;
}

RationalFunction ad_ratfn(unsigned d) { return {alpha_poly(d), q_pochhammer(d)}; }

AdResult ad_result(unsigned d, std::size_t order) {
  AdResult r;
  r.d = d;
  r.alpha = alpha_poly(d);
  r.ratfn = RationalFunction(r.alpha, q_pochhammer(d));
  r.series_prefix = ad_series_dp(d, order);
  return r;
}

AlphaReport check_alpha_structure(unsigned d) {
  if (d == 0) throw std::invalid_argument("check_alpha_structure: d must be positive");
  AlphaReport r;
  r.d = d;
  IntPolynomial alpha;
  try {
    alpha = alpha_poly(d);
  } catch (const StructureViolation&) {
    // Report the raw product instead; every *_ok flag below will show what failed.
    const std::size_t order = static_cast<std::size_t>(d - 1) * d + 2 * triangular(d) + 8;
    PowerSeries prod = ad_series_dp(d, order) * PowerSeries::from_polynomial(q_pochhammer(d), order);
    alpha = IntPolynomial(prod.coeffs());
  }
  r.degree = alpha.degree();
  r.degree_ok = r.degree == static_cast<long>(d - 1) * d;
  r.constant_term_ok = alpha.constant_term() == 1;
  r.leading_coeff_ok = alpha.leading() == ((d - 1) % 2 == 0 ? 1 : -1);
  r.value_at_1 = alpha.eval(1);
  r.value_at_minus1 = alpha.eval(-1);
  r.minus1_conjecture = r.value_at_minus1 == ((d / 2) % 2 == 0 ? 1 : -1);
  r.gcd_with_pochhammer = poly_gcd(alpha, q_pochhammer(d));
  r.gcd_is_one = r.gcd_with_pochhammer == IntPolynomial{1};
  return r;
}

}  // namespace dtri
