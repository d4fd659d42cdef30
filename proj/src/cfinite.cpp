#include "dtri/cfinite.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dtri/durfee.hpp"
#include "dtri/error.hpp"

namespace dtri {

CFiniteRecurrence recurrence_from_ratfn(const RationalFunction& f) {
  const auto& den = f.den().coeffs();
  CFiniteRecurrence rec;
  rec.order = den.size() - 1;
  rec.coeffs.reserve(rec.order);
  for (std::size_t i = 1; i <= rec.order; ++i) rec.coeffs.push_back(-den[i]);
  if (!f.num().is_zero()) {
    long gap = f.num().degree() - f.den().degree() + 1;
    rec.valid_from = gap > 0 ? static_cast<std::size_t>(gap) : 0;
  }
  return rec;
}

std::size_t required_seed_length(const CFiniteRecurrence& rec) { return rec.valid_from + rec.order; }

namespace {

std::int64_t reduce_mod(const Integer& v, std::int64_t modulus) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(modulus));
  return static_cast<std::int64_t>(r.get_ui());
}

void check_seed(const CFiniteRecurrence& rec, const PowerSeries& seed, std::size_t n_max) {
  if (n_max > seed.order() && seed.order() + 1 < required_seed_length(rec))
    throw InsufficientSeed("extend_sequence: seed has " + std::to_string(seed.order() + 1) + " terms, recurrence needs " +
                           std::to_string(required_seed_length(rec)));
}

}  // namespace

std::vector<Integer> extend_sequence(const CFiniteRecurrence& rec, const PowerSeries& seed, std::size_t n_max) {
  check_seed(rec, seed, n_max);
  std::vector<Integer> a;
  a.reserve(n_max + 1);
  for (std::size_t n = 0; n <= std::min(n_max, seed.order()); ++n) a.push_back(seed[n]);
  for (std::size_t n = a.size(); n <= n_max; ++n) {
    Integer next = 0;
    for (std::size_t i = 0; i < rec.order; ++i) mpz_addmul(next.get_mpz_t(), rec.coeffs[i].get_mpz_t(), a[n - 1 - i].get_mpz_t());
    a.push_back(std::move(next));
  }
  return a;
}

std::vector<std::int64_t> extend_sequence_mod(const CFiniteRecurrence& rec, const PowerSeries& seed, std::size_t n_max,
                                              std::int64_t modulus) {
  if (modulus < 2 || modulus > (std::int64_t{1} << 31)) throw std::invalid_argument("extend_sequence_mod: modulus out of range");
  check_seed(rec, seed, n_max);
  std::vector<std::int64_t> c;
  for (const auto& x : rec.coeffs) c.push_back(reduce_mod(x, modulus));
  std::vector<std::int64_t> a;
  a.reserve(n_max + 1);
  for (std::size_t n = 0; n <= std::min(n_max, seed.order()); ++n) a.push_back(reduce_mod(seed[n], modulus));
  for (std::size_t n = a.size(); n <= n_max; ++n) {
    std::int64_t next = 0;
    for (std::size_t i = 0; i < rec.order; ++i) next = (next + c[i] * a[n - 1 - i]) % modulus;
    a.push_back(next);
  }
  return a;
}

namespace {

struct SeededRecurrence {
  CFiniteRecurrence rec;
  PowerSeries seed;
};

SeededRecurrence seeded_rk(unsigned k, std::size_t n_max) {
  RationalFunction f = curly_fk_ratfn(k, true);
  CFiniteRecurrence rec = recurrence_from_ratfn(f);
  std::size_t seed_len = std::min(n_max + 1, std::max<std::size_t>(required_seed_length(rec), 1));
  return {rec, series_expand(f, seed_len - 1)};
}

}  // namespace

std::vector<Integer> rk_sequence(unsigned k, std::size_t n_max) {
  auto s = seeded_rk(k, n_max);
  return extend_sequence(s.rec, s.seed, n_max);
}

std::vector<std::int64_t> rk_sequence_mod(unsigned k, std::size_t n_max, std::int64_t modulus) {
  auto s = seeded_rk(k, n_max);
  return extend_sequence_mod(s.rec, s.seed, n_max, modulus);
}

// ---------------------------------------------------------------------------

QuasiPolynomial::QuasiPolynomial(std::size_t period, std::size_t valid_from, std::size_t degree_bound,
                                 std::vector<std::vector<Rational>> polys)
    : period_(period), valid_from_(valid_from), degree_bound_(degree_bound), polys_(std::move(polys)) {
  if (period_ == 0) throw std::invalid_argument("QuasiPolynomial: period must be positive");
  if (polys_.size() != period_) throw std::invalid_argument("QuasiPolynomial: need one polynomial per residue class");
  for (const auto& p : polys_)
    if (p.size() > degree_bound_ + 1) throw std::invalid_argument("QuasiPolynomial: polynomial exceeds degree bound");
}

Rational QuasiPolynomial::evaluate(std::size_t n) const {
  const auto& p = polys_[n % period_];
  Rational m(static_cast<unsigned long>(n / period_));
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * m + *it;
  return acc;
}

std::vector<Rational> QuasiPolynomial::coeffs_in_n(std::size_t nu) const {
  const auto& p = polys_.at(nu);
  // m = (n - nu) / period as a linear polynomial in n.
  const Rational slope(1, static_cast<unsigned long>(period_));
  Rational intercept(-static_cast<long>(nu), static_cast<unsigned long>(period_));
  intercept.canonicalize();
  std::vector<Rational> out(std::max<std::size_t>(p.size(), 1));
  std::vector<Rational> power{Rational(1)};  // m^i in n
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < power.size(); ++j) out[j] += p[i] * power[j];
    std::vector<Rational> next(power.size() + 1);
    for (std::size_t j = 0; j < power.size(); ++j) {
      next[j] += power[j] * intercept;
      next[j + 1] += power[j] * slope;
    }
    power = std::move(next);
  }
  return out;
}

namespace {

// Coefficients (ascending) of the interpolating polynomial through
// (xs[i], ys[i]), built from the Lagrange basis.
std::vector<Rational> lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] -= basis[t] * xs[j];
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Rational scale = ys[i] / denom;
    for (std::size_t t = 0; t < n; ++t) out[t] += basis[t] * scale;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Rational horner(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

QuasiPolynomial quasipoly_fit(const IndexedSequence& values, std::size_t period, std::size_t degree_bound,
                              std::size_t valid_from) {
  if (period == 0) throw std::invalid_argument("quasipoly_fit: period must be positive");
  constexpr std::size_t kVerify = 3;
  const std::size_t fit_count = degree_bound + 1;
  const std::size_t start = std::max(valid_from, values.offset);

  std::vector<std::vector<Rational>> polys(period);
  for (std::size_t nu = 0; nu < period; ++nu) {
    std::size_t first = start + (nu + period - start % period) % period;
    std::size_t last = first + (fit_count + kVerify - 1) * period;
    if (last >= values.end_index())
      throw std::invalid_argument("quasipoly_fit: residue " + std::to_string(nu) + " needs samples through index " +
                                  std::to_string(last));
    std::vector<Rational> ms, ys;
    for (std::size_t j = 0; j < fit_count; ++j) {
      std::size_t n = first + j * period;
      ms.emplace_back(static_cast<unsigned long>((n - nu) / period));
      ys.emplace_back(values.at(n));
    }
    polys[nu] = lagrange_interpolate(ms, ys);
    for (std::size_t j = fit_count; j < fit_count + kVerify; ++j) {
      std::size_t n = first + j * period;
      Rational m(static_cast<unsigned long>((n - nu) / period));
      if (horner(polys[nu], m) != Rational(values.at(n)))
        throw FitMismatch("quasipoly_fit: residue " + std::to_string(nu) + " disagrees at n = " + std::to_string(n));
    }
  }
  return QuasiPolynomial(period, valid_from, degree_bound, std::move(polys));
}

std::size_t lcm_up_to(unsigned k) {
  std::size_t l = 1;
  for (std::size_t i = 2; i <= k; ++i) l = std::lcm(l, i);
  return l;
}

std::size_t rk_quasi_period(unsigned k) { return k == 3 ? 3 : lcm_up_to(k); }

QuasiPolynomial fit_rk_quasipoly(unsigned k) {
  if (k == 0) throw std::invalid_argument("fit_rk_quasipoly: k must be positive");
  const std::size_t period = rk_quasi_period(k);
  const std::size_t valid_from = static_cast<std::size_t>(k) * k + 1;
  const std::size_t degree = k - 1;
  const std::size_t n_max = valid_from + period * (degree + 5);
  IndexedSequence seq{0, rk_sequence(k, n_max)};
  return quasipoly_fit(seq, period, degree, valid_from);
}

Rational leading_asymptotic_rk(unsigned k) {
  if (k == 0) throw std::invalid_argument("leading_asymptotic_rk: k must be positive");
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), 2, k);
  Rational r(num, factorial(k) * factorial(k - 1));
  r.canonicalize();
  return r;
}

Rational leading_asymptotic_dk_first(unsigned k) {
  if (k == 0) throw std::invalid_argument("leading_asymptotic_dk_first: k must be positive");
  Integer kf = factorial(k);
  Rational r(Integer(1), kf * kf * factorial(2 * k - 1));
  r.canonicalize();
  return r;
}

std::pair<Rational, Rational> leading_asymptotic_dk(unsigned k) {
  if (k < 2) throw DomainError("leading_asymptotic_dk: the second term needs k >= 2");
  Rational second(Integer(-1), 2 * factorial(k) * factorial(k - 2) * factorial(2 * k - 2));
  second.canonicalize();
  return {leading_asymptotic_dk_first(k), second};
}

// ---------------------------------------------------------------------------

PeriodReport eventual_period_residues(std::span<const std::int64_t> residues, std::size_t n_min) {
  if (n_min >= residues.size()) throw WindowTooSmall("eventual_period: empty window");
  const std::size_t size = residues.size();
  const std::size_t max_period = (size - n_min) / 6;
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool ok = true;
    for (std::size_t n = n_min; n + p < size && ok; ++n) ok = residues[n] == residues[n + p];
    if (ok) return {p, n_min, size};
  }
  throw WindowTooSmall("eventual_period: no period <= " + std::to_string(max_period) + " on a window of " +
                       std::to_string(size - n_min) + " terms");
}

PeriodReport eventual_period_mod(std::span<const Integer> values, std::int64_t modulus, std::size_t n_min) {
  if (modulus < 2) throw std::invalid_argument("eventual_period_mod: modulus must be >= 2");
  std::vector<std::int64_t> residues;
  residues.reserve(values.size());
  for (const auto& v : values) residues.push_back(reduce_mod(v, modulus));
  return eventual_period_residues(residues, n_min);
}

ShiftReport congruence_shift_check(std::span<const Integer> values, std::int64_t modulus, std::size_t quasi_period,
                                   std::size_t n_min, std::size_t n_max) {
  if (modulus < 2) throw std::invalid_argument("congruence_shift_check: modulus must be >= 2");
  const std::size_t shift = static_cast<std::size_t>(modulus) * quasi_period;
  if (n_max + shift >= values.size()) throw std::invalid_argument("congruence_shift_check: not enough values for the window");
  ShiftReport r;
  r.checked_from = n_min;
  r.checked_to = n_max;
  const Integer m = modulus;
  Integer diff;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    diff = values[n + shift] - values[n];
    if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) {
      r.holds = false;
      ++r.counterexample_count;
      if (r.counterexamples.size() < 10) r.counterexamples.push_back(n);
    }
  }
  return r;
}

ShiftReport congruence_shift_check(unsigned k, std::int64_t modulus, std::size_t quasi_period, std::size_t n_min,
                                   std::size_t n_max) {
  if (modulus < 2) throw std::invalid_argument("congruence_shift_check: modulus must be >= 2");
  const std::size_t shift = static_cast<std::size_t>(modulus) * quasi_period;
  if (n_max < n_min + shift) throw std::invalid_argument("congruence_shift_check: window must cover one full shift");
  std::vector<Integer> values = rk_sequence(k, n_max + shift);
  return congruence_shift_check(values, modulus, quasi_period, n_min, n_max);
}

}  // namespace dtri
