#pragma once

// Sparse multivariate polynomials with exact integer coefficients over the
// indexed variable families x_i, a_i, b_i, y_i and the lone scalar x.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lahbell/exact.hpp"

namespace lahbell {

// Declaration order is the variable order used by the canonical term order.
enum class Family : std::uint8_t { X, A, B, Y, ScalarX };

struct Variable {
    Family family = Family::X;
    std::uint32_t index = 1; // fixed at 1 for ScalarX

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable x_var(std::uint32_t i) { return {Family::X, i}; }
inline Variable a_var(std::uint32_t i) { return {Family::A, i}; }
inline Variable b_var(std::uint32_t i) { return {Family::B, i}; }
inline Variable y_var(std::uint32_t i) { return {Family::Y, i}; }
inline Variable scalar_x() { return {Family::ScalarX, 1}; }

/// "x3", "a1", "b2", "y4", or "x" for the scalar.
std::string name(const Variable& v);

/// Inverse of name(); throws std::invalid_argument on anything else.
Variable parse_variable(const std::string& text);

class Monomial {
public:
    using factor = std::pair<Variable, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Variable v, std::uint32_t exponent = 1);

    // sorted by variable, exponents > 0
    const std::vector<factor>& factors() const noexcept { return factors_; }
    std::uint32_t degree() const noexcept;
    std::uint32_t exponent(const Variable& v) const noexcept;
    bool is_unit() const noexcept { return factors_.empty(); }

    Monomial operator*(const Monomial& o) const;
    // the monomial with v removed
    Monomial without(const Variable& v) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<factor> factors_;
};

// Graded lexicographic, higher total degree first, ties broken by the first
// variable (in Family/index order) whose exponent differs, larger first.
struct graded_lex_order {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using term_map = std::map<Monomial, Integer, graded_lex_order>;

    Polynomial() = default;
    Polynomial(Integer c);        // NOLINT: implicit constant embedding
    Polynomial(int c) : Polynomial(Integer(c)) {} // NOLINT
    explicit Polynomial(Variable v);
    Polynomial(Monomial m, Integer c);

    // canonical order, no zero coefficients
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    // coefficient of the unit monomial
    Integer constant_term() const;
    Integer coefficient(const Monomial& m) const;
    std::size_t size() const noexcept { return terms_.size(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Integer& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
    friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(Polynomial a, int c) { return a *= Integer(c); }
    friend Polynomial operator*(int c, Polynomial a) { return a *= Integer(c); }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Adds c * m in place.
    void add_term(const Monomial& m, const Integer& c);

    /// Divides every coefficient by d, throwing integrality_error unless all
    /// divisions are exact.
    Polynomial exact_divide(const Integer& d) const;

private:
    term_map terms_;
};

using Assignment = std::map<Variable, Integer>;

Polynomial pow(const Polynomial& p, std::uint32_t k);

/// Exact value of p under the assignment; throws missing_variable_error
/// naming the first uncovered variable in canonical order.
Integer evaluate(const Polynomial& p, const Assignment& values);

Polynomial substitute(const Polynomial& p, const Variable& var, const Polynomial& value);

/// Canonical text, e.g. "x1^3 + 3*x1*x2 + x3"; the zero polynomial is "0".
std::string to_string(const Polynomial& p);

/// Reads the text form written by to_string (terms in any order, spaces
/// optional around signs). Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(const std::string& text);

} // namespace lahbell
