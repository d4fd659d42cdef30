#pragma once

// Generating functions for partitions by Durfee triangle size (R_k) and by
// Durfee square size (D_k).
//
//   F_k(q) = sum_n f_k(n) q^n = phi_k(q) / (q;q)_k,   R_k(n) = f_k(n - T_k),
//   phi_k(q) = sum_{d=0..k} [k choose d]_q q^d alpha_d(q) alpha_{k-d}(q).

#include <cstddef>

#include "dtri/polyring.hpp"

namespace dtri {

/// phi_k(q), exact. Throws StructureViolation unless phi(0) = 1,
/// deg = k^2, leading coefficient (-1)^(k-1), phi(1) = 2^k, and (1+q) | phi
/// for odd k.
IntPolynomial phi_poly(unsigned k);

/// F_k = phi_k / (q;q)_k. With `reduced` set and k odd >= 3, numerator and
/// denominator are both divided by (1+q).
RationalFunction fk_ratfn(unsigned k, bool reduced = false);

/// q^{T_k} F_k: its coefficients are R_k(n).
RationalFunction curly_fk_ratfn(unsigned k, bool reduced = false);

/// f_k(0..order) directly from the convolution sum_d q^d A_d A_{k-d} of DP
/// series. Independent of phi_poly.
PowerSeries fk_series_convolution(unsigned k, std::size_t order);

/// q^{k^2} / (q;q)_k^2: coefficients are D_k(n).
RationalFunction dk_ratfn(unsigned k);

struct DurfeeGF {
  unsigned k = 0;
  unsigned T_k = 0;
  IntPolynomial phi;
  IntPolynomial full_num;       // q^{T_k} phi
  IntPolynomial denom;          // (q;q)_k
  IntPolynomial reduced_denom;  // (q;q)_k, or (q;q)_k / (1+q) for odd k >= 3
};

DurfeeGF durfee_gf(unsigned k);

struct PhiReport {
  unsigned k = 0;
  long degree = 0;
  Integer leading;
  Integer value_at_1;
  Integer value_at_minus1;
  bool odd_factor_ok = true;  // (1+q) | phi for odd k
  // Observed, unproven: phi(-1) = (-2)^(k/2) for even k.
  bool minus1_conjecture = true;
  // gcd(phi, (q;q)_k); 1 for even k and 1+q for odd k >= 3 is what a
  // minimal denominator looks like.
  IntPolynomial gcd_with_pochhammer;
  bool minimal_denominator_evidence = false;
};

/// Runs phi_poly (so all hard checks have passed if this returns) and adds
/// the conjectural observations.
PhiReport check_phi_structure(unsigned k);

}  // namespace dtri
