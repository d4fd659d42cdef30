#pragma once

// Constant-coefficient recurrences read off rational generating functions,
// quasi-polynomial fitting per residue class, leading asymptotics, and
// eventual periods modulo M.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dtri/polyring.hpp"

namespace dtri {

/// a(n + r) = c_{r-1} a(n + r - 1) + ... + c_0 a(n) for all n >= valid_from.
/// `coeffs` is stored highest-first: (c_{r-1}, ..., c_0).
struct CFiniteRecurrence {
  std::size_t order = 0;
  std::vector<Integer> coeffs;
  std::size_t valid_from = 0;

  bool operator==(const CFiniteRecurrence&) const = default;
};

/// Reads D(q) = 1 - c_{r-1} q - ... - c_0 q^r off the denominator;
/// valid_from = max(0, deg N - deg D + 1).
CFiniteRecurrence recurrence_from_ratfn(const RationalFunction& f);

/// Seed length needed by extend_sequence: max(valid_from + order, order).
std::size_t required_seed_length(const CFiniteRecurrence& rec);

/// a(0..n_max). Indices covered by the seed are copied; the rest come from
/// the recurrence. Throws InsufficientSeed if the seed is shorter than
/// required_seed_length(rec) and n_max reaches past it.
std::vector<Integer> extend_sequence(const CFiniteRecurrence& rec, const PowerSeries& seed, std::size_t n_max);

/// Same, reduced into [0, modulus). Seeds are reduced before extension.
std::vector<std::int64_t> extend_sequence_mod(const CFiniteRecurrence& rec, const PowerSeries& seed, std::size_t n_max,
                                              std::int64_t modulus);

/// R_k(0..n_max) via the (reduced) recurrence seeded by series expansion.
std::vector<Integer> rk_sequence(unsigned k, std::size_t n_max);
std::vector<std::int64_t> rk_sequence_mod(unsigned k, std::size_t n_max, std::int64_t modulus);

/// A run of integers whose first element is the term at index `offset`.
struct IndexedSequence {
  std::size_t offset = 0;
  std::vector<Integer> values;

  std::size_t end_index() const { return offset + values.size(); }
  const Integer& at(std::size_t n) const { return values.at(n - offset); }
};

/// One polynomial per residue class: for n = period*m + nu with
/// n >= valid_from, a(n) = polys[nu](m). polys[nu][i] is the coefficient of
/// m^i.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(std::size_t period, std::size_t valid_from, std::size_t degree_bound,
                  std::vector<std::vector<Rational>> polys);

  std::size_t period() const { return period_; }
  std::size_t valid_from() const { return valid_from_; }
  std::size_t degree_bound() const { return degree_bound_; }
  const std::vector<std::vector<Rational>>& polys() const { return polys_; }

  Rational evaluate(std::size_t n) const;
  /// Residue nu's polynomial rewritten in n, via m = (n - nu)/period.
  std::vector<Rational> coeffs_in_n(std::size_t nu) const;

  bool operator==(const QuasiPolynomial&) const = default;

 private:
  std::size_t period_ = 1;
  std::size_t valid_from_ = 0;
  std::size_t degree_bound_ = 0;
  std::vector<std::vector<Rational>> polys_;
};

/// For each residue class, interpolates (Lagrange form, exact rationals) the
/// first degree_bound+1 samples at indices >= valid_from and checks the next
/// three exactly. Throws FitMismatch on disagreement and
/// std::invalid_argument if fewer than degree_bound+4 samples per class are
/// available.
QuasiPolynomial quasipoly_fit(const IndexedSequence& values, std::size_t period, std::size_t degree_bound,
                              std::size_t valid_from);

std::size_t lcm_up_to(unsigned k);

/// Quasi-period used for R_k: 3 for k = 3, lcm(1..k) otherwise.
std::size_t rk_quasi_period(unsigned k);

/// Fits R_k with period rk_quasi_period(k), degree k-1, valid from k^2+1.
QuasiPolynomial fit_rk_quasipoly(unsigned k);

/// 2^k / (k! (k-1)!), the coefficient of n^(k-1) in R_k(n).
Rational leading_asymptotic_rk(unsigned k);

/// Coefficient of n^(2k-1) in D_k(n): 1 / ((k!)^2 (2k-1)!).
Rational leading_asymptotic_dk_first(unsigned k);

/// (coefficient of n^(2k-1), coefficient of n^(2k-2)) in D_k(n); the second
/// is -1 / (2 k! (k-2)! (2k-2)!). Throws DomainError for k < 2.
std::pair<Rational, Rational> leading_asymptotic_dk(unsigned k);

struct PeriodReport {
  std::size_t period = 0;
  std::size_t window_begin = 0;  // confirmed on [window_begin, window_end)
  std::size_t window_end = 0;
};

/// Smallest p with v[n] == v[n+p] (mod M) throughout [n_min, size). Only
/// periods up to a sixth of the window are accepted; otherwise throws
/// WindowTooSmall. `values[i]` is the term at index i.
PeriodReport eventual_period_mod(std::span<const Integer> values, std::int64_t modulus, std::size_t n_min);
/// Same on residues already reduced modulo some M.
PeriodReport eventual_period_residues(std::span<const std::int64_t> residues, std::size_t n_min);

struct ShiftReport {
  bool holds = true;
  std::size_t checked_from = 0;
  std::size_t checked_to = 0;  // inclusive
  std::size_t counterexample_count = 0;
  std::vector<std::size_t> counterexamples;  // first few n with a(n+shift) != a(n) mod M
};

/// Checks a(n + M*Q) == a(n) (mod M) for n in [n_min, n_max].
ShiftReport congruence_shift_check(std::span<const Integer> values, std::int64_t modulus, std::size_t quasi_period,
                                   std::size_t n_min, std::size_t n_max);
/// Same for R_k, computing the values it needs. Requires n_max >= n_min + M*Q.
ShiftReport congruence_shift_check(unsigned k, std::int64_t modulus, std::size_t quasi_period, std::size_t n_min,
                                   std::size_t n_max);

}  // namespace dtri
