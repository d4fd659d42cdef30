#pragma once

// The series A_d(q) = sum over weak compositions (k_1..k_d), each part at most
// one more than its predecessor, of q^(k_1+...+k_d); and its numerator
// alpha_d(q) over (q;q)_d.

#include <cstddef>

#include "dtri/polyring.hpp"

namespace dtri {

/// a_d(0..order) by dynamic programming over (last part, running sum), with
/// suffix sums over the last part. d = 0 gives the series of 1.
PowerSeries ad_series_dp(unsigned d, std::size_t order);

/// A_d(q) from the two-index specialization B_{e,m}(q) = A_e(q,...,q,q^m)
/// of the multivariate recursion:
///   B_{1,m} = 1/(1-q^m),
///   B_{e,m} = (B_{e-1,1} - q^{2m} B_{e-1,m+1}) / (1-q^m).
/// Each B_{e,m} is kept over (q;q)_{e-1}(1-q^{e-1+m}), so the result has
/// denominator exactly (q;q)_d. Throws NonDivisible if a (1-q^m) cancellation
/// fails.
RationalFunction ad_ratfn_recursive(unsigned d);

/// alpha_d(q) = A_d(q) (q;q)_d. Computed by multiplying the DP series by
/// (q;q)_d and checking that a guard window of T_d + 8 coefficients above
/// the expected degree vanishes. Results are cached per d; the cache is
/// safe for concurrent use.
/// Throws StructureViolation if the tail, degree, constant term or leading
/// coefficient is wrong.
IntPolynomial alpha_poly(unsigned d);

/// alpha_d / (q;q)_d
RationalFunction ad_ratfn(unsigned d);

struct AdResult {
  unsigned d = 0;
  IntPolynomial alpha;
  RationalFunction ratfn;
  PowerSeries series_prefix;
};

AdResult ad_result(unsigned d, std::size_t order);

struct AlphaReport {
  unsigned d = 0;
  long degree = 0;
  bool degree_ok = false;         // degree == (d-1)d
  bool constant_term_ok = false;  // alpha(0) == 1
  bool leading_coeff_ok = false;  // leading == (-1)^(d-1)
  Integer value_at_1;             // always 1
  Integer value_at_minus1;
  bool minus1_conjecture = false;  // alpha(-1) == (-1)^floor(d/2); observed, unproven
  IntPolynomial gcd_with_pochhammer;
  bool gcd_is_one = false;  // reported, not enforced

  /// Degree, constant term, leading coefficient and alpha(1) = 1.
  bool hard_checks_pass() const { return degree_ok && constant_term_ok && leading_coeff_ok && value_at_1 == 1; }
};

AlphaReport check_alpha_structure(unsigned d);

}  // namespace dtri
