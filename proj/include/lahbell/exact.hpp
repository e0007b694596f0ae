#pragma once

// Exact scalars and the closed-form Lah family numbers.

#include <cstdint>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

namespace lahbell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Returns num / den, throwing integrality_error when the division leaves a
/// remainder or den is zero.
Integer exact_div(const Integer& num, const Integer& den);

/// Returns the value of q, throwing integrality_error unless q has
/// denominator 1.
Integer to_integer(const Rational& q);

Integer factorial(std::uint32_t n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(std::uint32_t n, std::int64_t k);

/// (sum of parts)! / prod(parts_i!)
Integer multinomial(std::span<const std::uint32_t> parts);

/// Unsigned Lah number L(n,k) = n!/k! * C(n-1, k-1): partitions of an n-set
/// into k nonempty linearly ordered blocks. L(0,0) = 1, L(n,0) = 0 for n >= 1.
Integer lah(std::uint32_t n, std::uint32_t k);

/// r-Lah number L_r(n,k) = n!/k! * C(n+2r-1, k+2r-1). Counts partitions of an
/// (n+r)-set into k+r ordered blocks keeping r distinguished elements apart.
Integer rlah(std::uint32_t n, std::uint32_t k, std::uint32_t r);

/// B_n^L = sum_k L(n,k)
Integer lah_bell_number(std::uint32_t n);

/// B_{n,r}^L = sum_k L_r(n,k)
Integer r_lah_bell_number(std::uint32_t n, std::uint32_t r);

} // namespace lahbell
