#pragma once

// Exact dense univariate arithmetic over Z in the formal variable q:
// polynomials, rational functions with unit constant-term denominators, and
// truncated power series.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dtri {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with ascending coefficients; canonical form carries no
/// trailing zeros, so the zero polynomial has an empty coefficient list.
class IntPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const Integer& c);
  /// c * q^power
  static IntPolynomial monomial(const Integer& c, std::size_t power);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; zero past the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }
  Integer constant_term() const { return coeff(0); }

  /// Multiplication by q^s.
  IntPolynomial shifted(std::size_t s) const;
  /// Horner evaluation.
  Integer eval(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& b);
  IntPolynomial& operator-=(const IntPolynomial& b);
  IntPolynomial& operator*=(const IntPolynomial& b);
  IntPolynomial& operator*=(const Integer& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Human-readable form, e.g. "1 + 2*q - q^4".
std::string to_string(const IntPolynomial& p);
std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Quotient c with a = b*c. Throws NonDivisible on a nonzero remainder and
/// std::invalid_argument when b is zero.
IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// gcd of the coefficients (nonnegative); zero for the zero polynomial.
Integer content(const IntPolynomial& p);

/// Primitive gcd over Z[q]. Normalized to a positive constant term when that
/// term is nonzero, else to a positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// (q;q)_d = (1-q)(1-q^2)...(1-q^d); (q;q)_0 = 1.
IntPolynomial q_pochhammer(unsigned d);

/// 1 - q^m
IntPolynomial one_minus_q_pow(unsigned m);

/// The q-binomial coefficient [k choose d]_q, built by exact division of
/// q-Pochhammer products.
IntPolynomial gaussian_binomial(unsigned k, unsigned d);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

/// Coefficients 0..order of a formal power series. Binary operations on
/// series of different orders truncate to the smaller one.
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1) {}
  /// All-zero series of the given order.
  explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}
  /// Throws std::invalid_argument on an empty coefficient list.
  explicit PowerSeries(std::vector<Integer> coeffs);
  static PowerSeries from_polynomial(const IntPolynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_.at(i); }
  Integer& operator[](std::size_t i) { return coeffs_.at(i); }

  /// Multiplication by q^s, keeping the order.
  PowerSeries shifted(std::size_t s) const;
  PowerSeries truncated(std::size_t order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// num/den with den(0) = 1. Not reduced automatically; call reduced() to
/// cancel the gcd.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_{1} {}
  /// A denominator with constant term -1 is negated together with the
  /// numerator. Any other constant term (including a zero denominator)
  /// throws std::invalid_argument.
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  RationalFunction reduced() const;
  /// Multiplies the numerator by q^s.
  RationalFunction shifted(std::size_t s) const { return {num_.shifted(s), den_}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Structural equality of the stored (unreduced) pair.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Coefficients through q^order of num/den by long division.
PowerSeries series_expand(const RationalFunction& f, std::size_t order);

}  // namespace dtri
