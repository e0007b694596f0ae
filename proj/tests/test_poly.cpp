#include <gtest/gtest.h>

#include <random>

#include "lahbell/errors.hpp"
#include "lahbell/poly.hpp"
#include "lahbell/poly_json.hpp"
#include "oracles.hpp"

namespace lahbell {
namespace {

const Polynomial x1{x_var(1)};
const Polynomial x2{x_var(2)};
const Polynomial x3{x_var(3)};

TEST(PolyAdd, Examples)
{
    EXPECT_TRUE((x1 + (-x1)).is_zero());
    EXPECT_EQ(to_string(x1 + x2), "x1 + x2");
    EXPECT_EQ(x1 * x2 + 2 * (x1 * x2), 3 * (x1 * x2));
}

TEST(PolyMul, Examples)
{
    EXPECT_EQ(x1 * x1, Polynomial(Monomial(x_var(1), 2), 1));
    const auto p = x1 * x2 + 7 * x3;
    EXPECT_EQ(p * Polynomial(1), p);
    EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
}

TEST(PolyScale, Examples)
{
    const auto p = x1 * x2 + 7 * x3;
    EXPECT_TRUE((p * Integer(0)).is_zero());
    EXPECT_EQ(p * Integer(1), p);
    EXPECT_EQ(to_string(x1 * Integer(3)), "3*x1");
}

TEST(PolyEval, Examples)
{
    EXPECT_EQ(evaluate(x1 * x1 + x2, {{x_var(1), 1}, {x_var(2), 1}}), 2);
    EXPECT_EQ(evaluate(Polynomial(), {}), 0);
    EXPECT_EQ(evaluate(3 * (x1 * x2), {{x_var(1), 2}, {x_var(2), 5}}), 30);
}

TEST(PolyEval, MissingVariableIsReported)
{
    try {
        evaluate(x1 + x3, {{x_var(1), 1}});
        FAIL() << "expected missing_variable_error";
    } catch (const missing_variable_error& e) {
        EXPECT_EQ(e.variable(), "x3");
    }
}

TEST(PolySubstitute, Examples)
{
    EXPECT_EQ(substitute(x1, x_var(1), x2), x2);
    EXPECT_EQ(substitute(x1 * x1, x_var(1), 2 * x1), 4 * (x1 * x1));
    EXPECT_EQ(substitute(x1 + x2, x_var(3), Polynomial()), x1 + x2);
}

TEST(CanonicalOrder, GradedLexWithFamilyOrder)
{
    const Polynomial a1{a_var(1)}, b1{b_var(1)}, y1{y_var(1)}, x{scalar_x()};
    EXPECT_EQ(to_string(x + y1 + b1 + a1 + x1 + 1), "x1 + a1 + b1 + y1 + x + 1");
    EXPECT_EQ(to_string(x3 + x1 * x2 + pow(x1, 3)), "x1^3 + x1*x2 + x3");
    EXPECT_EQ(to_string(4 * (x1 * x3) + 3 * (x2 * x2)), "4*x1*x3 + 3*x2^2");
    EXPECT_EQ(to_string(x1 - 2 * x2 - 5), "x1 - 2*x2 - 5");
    EXPECT_EQ(to_string(-x1), "-x1");
    EXPECT_EQ(to_string(Polynomial()), "0");
}

TEST(Variables, NamesRoundTrip)
{
    for (auto v : {x_var(1), x_var(12), a_var(3), b_var(1), y_var(7), scalar_x()})
        EXPECT_EQ(parse_variable(name(v)), v);
    EXPECT_THROW(parse_variable("z1"), std::invalid_argument);
    EXPECT_THROW(parse_variable("x0"), std::invalid_argument);
    EXPECT_THROW(parse_variable("a"), std::invalid_argument);
}

TEST(PolyExactDivide, ThrowsOnInexact)
{
    EXPECT_EQ((6 * x1 + 4).exact_divide(2), 3 * x1 + 2);
    EXPECT_THROW((6 * x1 + 3).exact_divide(2), integrality_error);
}

TEST(PolyProperties, RingAxioms)
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        const auto q = oracle::random_polynomial(rng);
        const auto s = oracle::random_polynomial(rng);
        ASSERT_EQ(p + q, q + p);
        ASSERT_EQ((p + q) + s, p + (q + s));
        ASSERT_EQ(p * q, q * p);
        ASSERT_EQ((p * q) * s, p * (q * s));
        ASSERT_EQ(p * (q + s), p * q + p * s);
        ASSERT_EQ(p + Polynomial(), p);
        ASSERT_EQ(p * Polynomial(1), p);
        ASSERT_TRUE((p - p).is_zero());
        ASSERT_TRUE((p * Polynomial()).is_zero());
    }
}

TEST(PolyProperties, EvaluationIsARingHomomorphism)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        const auto q = oracle::random_polynomial(rng);
        const auto at = oracle::random_assignment(rng);
        ASSERT_EQ(evaluate(p + q, at), evaluate(p, at) + evaluate(q, at));
        ASSERT_EQ(evaluate(p * q, at), evaluate(p, at) * evaluate(q, at));
    }
}

TEST(PolyProperties, EvaluateAfterSubstitute)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        const auto value = oracle::random_polynomial(rng, 4, 2);
        const auto at = oracle::random_assignment(rng);
        for (auto v : {x_var(1), a_var(2), scalar_x()}) {
            auto shifted = at;
            shifted[v] = evaluate(value, at);
            ASSERT_EQ(evaluate(substitute(p, v, value), at), evaluate(p, shifted));
        }
    }
}

TEST(PolyProperties, NoZeroCoefficientsStored)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = oracle::random_polynomial(rng) * oracle::random_polynomial(rng);
        for (const auto& [m, c] : p.terms())
            ASSERT_NE(c, 0);
    }
}

TEST(PolyText, ParseInvertsRender)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        ASSERT_EQ(parse_polynomial(to_string(p)), p) << to_string(p);
    }
    EXPECT_EQ(parse_polynomial("x1^3 + 3*x1*x2 + x3"), pow(x1, 3) + 3 * (x1 * x2) + x3);
    EXPECT_EQ(parse_polynomial("0"), Polynomial());
    EXPECT_EQ(parse_polynomial("-2*x + 5"), -2 * Polynomial(scalar_x()) + 5);
    EXPECT_THROW(parse_polynomial(""), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("x1 +"), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("x1 ** x2"), std::invalid_argument);
    EXPECT_THROW(parse_polynomial("q7"), std::invalid_argument);
}

TEST(PolyJson, Schema)
{
    const auto p = 3 * (x1 * x2) + x3;
    EXPECT_EQ(to_json(p).dump(),
              R"({"terms":[{"coeff":"3","monomial":{"x1":1,"x2":1}},{"coeff":"1","monomial":{"x3":1}}]})");
    EXPECT_EQ(to_json(Polynomial()).dump(), R"({"terms":[]})");
}

TEST(PolyJson, RoundTrip)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = oracle::random_polynomial(rng);
        const auto text = to_json(p).dump();
        ASSERT_EQ(polynomial_from_json(json::parse(text)), p);
        ASSERT_EQ(to_json(polynomial_from_json(json::parse(text))).dump(), text);
    }
    const auto big = pow(x1 + Integer("123456789012345678901234567890"), 3);
    EXPECT_EQ(polynomial_from_json(to_json(big)), big);
}

TEST(PolyJson, MalformedInputRejected)
{
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"terms":3})")), std::invalid_argument);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({})")), std::invalid_argument);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"terms":[{"coeff":"x","monomial":{}}]})")),
                 std::invalid_argument);
    EXPECT_THROW(polynomial_from_json(json::parse(R"({"terms":[{"coeff":"1","monomial":{"q1":1}}]})")),
                 std::invalid_argument);
}

} // namespace
} // namespace lahbell
