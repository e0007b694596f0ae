#include "lahbell/poly_json.hpp"

#include <stdexcept>

namespace lahbell {

json to_json(const Polynomial& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors())
            mono[name(v)] = e;
        terms.push_back(json{{"coeff", c.str()}, {"monomial", std::move(mono)}});
    }
    return json{{"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"terms\" array");
    Polynomial out;
    for (const auto& t : j["terms"]) {
        if (!t.contains("coeff") || !t["coeff"].is_string() || !t.contains("monomial") ||
            !t["monomial"].is_object())
            throw std::invalid_argument("malformed polynomial term: " + t.dump());
        Integer c;
        try {
            c = Integer(t["coeff"].get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient: " + t["coeff"].dump());
        }
        Monomial m;
        for (const auto& [var, e] : t["monomial"].items()) {
            if (!e.is_number_unsigned())
                throw std::invalid_argument("bad exponent for " + var);
            m = m * Monomial(parse_variable(var), e.get<std::uint32_t>());
        }
        out.add_term(m, c);
    }
    return out;
}

} // namespace lahbell
