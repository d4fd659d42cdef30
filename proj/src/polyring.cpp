#include "dtri/polyring.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dtri/error.hpp"

namespace dtri {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::shifted(std::size_t s) const {
  if (is_zero() || s == 0) return *this;
  std::vector<Integer> v(s);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  IntPolynomial out;
  out.coeffs_ = std::move(v);
  return out;
}

Integer IntPolynomial::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size());
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& b) { return *this = *this * b; }

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NonDivisible("exact_div: divisor degree exceeds dividend degree");

  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> quot(rem.size() - db);
  Integer t;
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t()))
      throw NonDivisible("exact_div: leading coefficient not divisible");
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    quot[i] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (rem[i] != 0) throw NonDivisible("exact_div: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  std::vector<Integer> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial normalize_sign(IntPolynomial p) {
  if (p.is_zero()) return p;
  const Integer& ref = p.constant_term() != 0 ? p.coeffs().front() : p.coeffs().back();
  return ref < 0 ? -std::move(p) : p;
}

// lc(b)^e * a mod b, up to a nonzero constant factor.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const Integer lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    Integer la = a.leading();
    auto shift = static_cast<std::size_t>(a.degree() - b.degree());
    a *= lb;
    a -= (b * la).shifted(shift);
  }
  return a;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return normalize_sign(std::move(x));
}

IntPolynomial one_minus_q_pow(unsigned m) {
  if (m == 0) return {};
  return IntPolynomial{1} - IntPolynomial::monomial(1, m);
}

IntPolynomial q_pochhammer(unsigned d) {
  IntPolynomial p{1};
  for (unsigned r = 1; r <= d; ++r) p *= one_minus_q_pow(r);
  return p;
}

IntPolynomial gaussian_binomial(unsigned k, unsigned d) {
  if (d > k) throw std::invalid_argument("gaussian_binomial: requires d <= k");
  return exact_div(q_pochhammer(k), q_pochhammer(d) * q_pochhammer(k - d));
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// ---------------------------------------------------------------------------

PowerSeries::PowerSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: needs at least one coefficient");
}

PowerSeries PowerSeries::from_polynomial(const IntPolynomial& p, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t i = 0; i <= order && i < p.coeffs().size(); ++i) s.coeffs_[i] = p.coeffs()[i];
  return s;
}

PowerSeries PowerSeries::shifted(std::size_t s) const {
  PowerSeries out(order());
  for (std::size_t i = s; i <= order(); ++i) out.coeffs_[i] = coeffs_[i - s];
  return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("PowerSeries::truncated: cannot extend a series");
  return PowerSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order) + 1));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return out;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  const Integer c = den_.constant_term();
  if (c == -1) {
    num_ = -std::move(num_);
    den_ = -std::move(den_);
  } else if (c != 1) {
    throw std::invalid_argument("RationalFunction: denominator constant term must be +1 or -1");
  }
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return {};
  IntPolynomial g = poly_gcd(num_, den_);
  // g divides den with den(0) = 1, so g(0) = +-1 after normalization g(0) = 1.
  return {exact_div(num_, g), exact_div(den_, g)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

PowerSeries series_expand(const RationalFunction& f, std::size_t order) {
  const auto& dc = f.den().coeffs();
  PowerSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    Integer c = f.num().coeff(n);
    const std::size_t top = std::min(n, dc.size() - 1);
    for (std::size_t i = 1; i <= top; ++i) mpz_submul(c.get_mpz_t(), dc[i].get_mpz_t(), out[n - i].get_mpz_t());
    out[n] = std::move(c);
  }
  return out;
}

}  // namespace dtri
