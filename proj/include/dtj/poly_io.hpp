#pragma once

#include "dtj/cyclotomic.hpp"
#include "dtj/laurent.hpp"

#include <string>

namespace dtj {

/// Text form: terms in ascending exponent order, "q^e" with signed integer
/// exponent, coefficients as signed decimals with unit coefficients elided,
/// e.g. "-q^-4 + q^-3 + q^-1". The zero polynomial prints as "0".
std::string to_text(const LaurentPoly& f);

/// Inverse of to_text; also accepts arbitrary whitespace around signs.
/// Throws std::invalid_argument on malformed input.
LaurentPoly laurent_from_text(const std::string& s);

/// JSON form: {"variable":"q","terms":[[e,"c"],...]} with ascending e and
/// decimal-string coefficients.
std::string to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const std::string& s);

/// JSON form: {"level":N,"coeffs":["c0",...,"c_{phi(N)-1}"]}.
std::string to_json(const CyclotomicElt& e);
CyclotomicElt cyclotomic_from_json(const std::string& s);

}  // namespace dtj
