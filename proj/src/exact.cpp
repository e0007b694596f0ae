#include "lahbell/exact.hpp"

#include "lahbell/errors.hpp"

namespace lahbell {

Integer exact_div(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw integrality_error("exact_div: division by zero");
    Integer q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0)
        throw integrality_error("exact_div: " + num.str() + " is not divisible by " + den.str());
    return q;
}

Integer to_integer(const Rational& q)
{
    if (boost::multiprecision::denominator(q) != 1)
        throw integrality_error("expected an integer, got " + q.str());
    return boost::multiprecision::numerator(q);
}

Integer factorial(std::uint32_t n)
{
    Integer result = 1;
    for (std::uint32_t i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Integer binomial(std::uint32_t n, std::int64_t k)
{
    if (k < 0 || k > static_cast<std::int64_t>(n))
        return 0;
    auto kk = static_cast<std::uint32_t>(k);
    if (kk > n - kk)
        kk = n - kk;
    // running product stays integral: it equals C(n-kk+i, i) after step i
    Integer result = 1;
    for (std::uint32_t i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

Integer multinomial(std::span<const std::uint32_t> parts)
{
    // product of binomials C(s_i, p_i) over running sums s_i
    Integer result = 1;
    std::uint32_t total = 0;
    for (auto p : parts) {
        total += p;
        result *= binomial(total, p);
    }
    return result;
}

Integer lah(std::uint32_t n, std::uint32_t k)
{
    return rlah(n, k, 0);
}

Integer rlah(std::uint32_t n, std::uint32_t k, std::uint32_t r)
{
    if (k > n)
        return 0;
    if (n == 0 && r == 0)
        return 1; // L(0,0); the binomial below would read C(-1,-1)
    return exact_div(factorial(n), factorial(k)) *
           binomial(n + 2 * r - 1, static_cast<std::int64_t>(k) + 2 * r - 1);
}

Integer lah_bell_number(std::uint32_t n)
{
    return r_lah_bell_number(n, 0);
}

Integer r_lah_bell_number(std::uint32_t n, std::uint32_t r)
{
    Integer sum = 0;
    for (std::uint32_t k = 0; k <= n; ++k)
        sum += rlah(n, k, r);
    return sum;
}

} // namespace lahbell
