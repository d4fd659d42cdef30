#pragma once

// Stable JSON encodings. Integers and rationals are decimal strings so that
// arbitrary-precision values survive any JSON reader.
//
//   IntPolynomial     {"var":"q","coeffs":["c0","c1",...]}
//   RationalFunction  {"num":<IntPolynomial>,"den":<IntPolynomial>}
//   QuasiPolynomial   {"period":P,"valid_from":N0,"degree_bound":D,
//                      "residues":[{"nu":0,"coeffs_in_m":["p/q",...]},...]}

#include <string>

#include <json.hpp>

#include "dtri/cfinite.hpp"
#include "dtri/polyring.hpp"

namespace dtri {

/// Always "p/q", including "n/1" for integers.
std::string rational_to_string(const Rational& r);
/// Accepts "p/q" or a bare integer. Throws std::invalid_argument.
Rational rational_from_string(const std::string& s);

void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);
void to_json(nlohmann::json& j, const RationalFunction& f);
void from_json(const nlohmann::json& j, RationalFunction& f);
void to_json(nlohmann::json& j, const QuasiPolynomial& qp);
void from_json(const nlohmann::json& j, QuasiPolynomial& qp);

}  // namespace dtri
