#pragma once

// JSON term-list form of a polynomial:
//
//   {"terms":[{"coeff":"3","monomial":{"x1":1,"x2":1}}, ...]}
//
// Terms and the variables inside each monomial appear in canonical order;
// coefficients are decimal strings.

#include <json.hpp>

#include "lahbell/poly.hpp"

namespace lahbell {

using json = nlohmann::ordered_json;

json to_json(const Polynomial& p);

/// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const json& j);

} // namespace lahbell
