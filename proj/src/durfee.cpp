#include "dtri/durfee.hpp"

#include <stdexcept>
#include <string>

#include "dtri/error.hpp"
#include "dtri/partitions.hpp"
#include "dtri/qseries.hpp"

namespace dtri {

namespace {

void require_k(unsigned k, const char* fn) {
  if (k == 0) throw std::invalid_argument(std::string(fn) + ": k must be positive");
}

const IntPolynomial& one_plus_q() {
  static const IntPolynomial p{1, 1};
  return p;
}

Integer pow_int(long base, unsigned e) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

IntPolynomial phi_poly(unsigned k) {
  require_k(k, "phi_poly");
  IntPolynomial phi;
  for (unsigned d = 0; d <= k; ++d) phi += (gaussian_binomial(k, d) * alpha_poly(d) * alpha_poly(k - d)).shifted(d);

  const std::string name = "phi_" + std::to_string(k);
  if (phi.constant_term() != 1) throw StructureViolation(name + ": constant term is not 1");
  if (phi.degree() != static_cast<long>(k) * k) throw StructureViolation(name + ": degree is not k^2");
  if (phi.leading() != (k % 2 == 1 ? 1 : -1)) throw StructureViolation(name + ": leading coefficient is not (-1)^(k-1)");
  if (phi.eval(1) != pow_int(2, k)) throw StructureViolation(name + ": phi(1) != 2^k");
  if (k % 2 == 1 && phi.eval(-1) != 0) throw StructureViolation(name + ": odd k but (1+q) does not divide phi");
  return phi;
}

RationalFunction fk_ratfn(unsigned k, bool reduced) {
  require_k(k, "fk_ratfn");
  IntPolynomial num = phi_poly(k);
  IntPolynomial den = q_pochhammer(k);
  if (reduced && k >= 3 && k % 2 == 1) {
    num = exact_div(num, one_plus_q());
    den = exact_div(den, one_plus_q());
  }
  return {std::move(num), std::move(den)};
}

RationalFunction curly_fk_ratfn(unsigned k, bool reduced) { return fk_ratfn(k, reduced).shifted(triangular(k)); }

PowerSeries fk_series_convolution(unsigned k, std::size_t order) {
  require_k(k, "fk_series_convolution");
  std::vector<PowerSeries> a;
  a.reserve(k + 1);
  for (unsigned d = 0; d <= k; ++d) a.push_back(ad_series_dp(d, order));
  PowerSeries total(order);
  for (unsigned d = 0; d <= k; ++d) total = total + (a[d] * a[k - d]).shifted(d);
  return total;
}

RationalFunction dk_ratfn(unsigned k) {
  require_k(k, "dk_ratfn");
  IntPolynomial p = q_pochhammer(k);
  return {IntPolynomial::monomial(1, static_cast<std::size_t>(k) * k), p * p};
}

DurfeeGF durfee_gf(unsigned k) {
  require_k(k, "durfee_gf");
  DurfeeGF g;
  g.k = k;
  g.T_k = triangular(k);
  g.phi = phi_poly(k);
  g.full_num = g.phi.shifted(g.T_k);
  g.denom = q_pochhammer(k);
  g.reduced_denom = fk_ratfn(k, true).den();
  return g;
}

PhiReport check_phi_structure(unsigned k) {
  PhiReport r;
  r.k = k;
  IntPolynomial phi = phi_poly(k);
  r.degree = phi.degree();
  r.leading = phi.leading();
  r.value_at_1 = phi.eval(1);
  r.value_at_minus1 = phi.eval(-1);
  r.odd_factor_ok = k % 2 == 0 || r.value_at_minus1 == 0;
  r.minus1_conjecture = k % 2 == 1 ? r.value_at_minus1 == 0 : r.value_at_minus1 == pow_int(-2, k / 2);
  r.gcd_with_pochhammer = poly_gcd(phi, q_pochhammer(k));
  const IntPolynomial expected = (k >= 3 && k % 2 == 1) ? one_plus_q() : IntPolynomial{1};
  r.minimal_denominator_evidence = r.gcd_with_pochhammer == expected;
  return r;
}

}  // namespace dtri
