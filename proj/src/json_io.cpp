#include "dtri/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace dtri {

namespace {

Integer integer_from_string(const std::string& s) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
  return v;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(integer_from_string(s));
  Integer num = integer_from_string(s.substr(0, slash));
  Integer den = integer_from_string(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void to_json(nlohmann::json& j, const IntPolynomial& p) {
  std::vector<std::string> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  j = nlohmann::json{{"var", "q"}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, IntPolynomial& p) {
  if (j.at("var").get<std::string>() != "q") throw std::invalid_argument("IntPolynomial JSON: variable must be \"q\"");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_string(c.get<std::string>()));
  p = IntPolynomial(std::move(coeffs));
}

void to_json(nlohmann::json& j, const RationalFunction& f) { j = nlohmann::json{{"num", f.num()}, {"den", f.den()}}; }

void from_json(const nlohmann::json& j, RationalFunction& f) {
  f = RationalFunction(j.at("num").get<IntPolynomial>(), j.at("den").get<IntPolynomial>());
}

void to_json(nlohmann::json& j, const QuasiPolynomial& qp) {
  nlohmann::json residues = nlohmann::json::array();
  for (std::size_t nu = 0; nu < qp.period(); ++nu) {
    std::vector<std::string> coeffs;
    for (const auto& c : qp.polys()[nu]) coeffs.push_back(rational_to_string(c));
    residues.push_back({{"nu", nu}, {"coeffs_in_m", coeffs}});
  }
  j = nlohmann::json{{"period", qp.period()},
                     {"valid_from", qp.valid_from()},
                     {"degree_bound", qp.degree_bound()},
                     {"residues", residues}};
}

void from_json(const nlohmann::json& j, QuasiPolynomial& qp) {
  const auto period = j.at("period").get<std::size_t>();
  std::vector<std::vector<Rational>> polys(period);
  std::size_t max_len = 0;
  for (const auto& r : j.at("residues")) {
    const auto nu = r.at("nu").get<std::size_t>();
    if (nu >= period) throw std::invalid_argument("QuasiPolynomial JSON: residue index out of range");
    for (const auto& c : r.at("coeffs_in_m")) polys[nu].push_back(rational_from_string(c.get<std::string>()));
    max_len = std::max(max_len, polys[nu].size());
  }
  const std::size_t degree_bound = j.contains("degree_bound") ? j.at("degree_bound").get<std::size_t>() : (max_len ? max_len - 1 : 0);
  qp = QuasiPolynomial(period, j.at("valid_from").get<std::size_t>(), degree_bound, std::move(polys));
}

}  // namespace dtri
