#pragma once

// Constructors for the Bell-type polynomial families: complete/incomplete
// Bell, r-Bell, Lah-Bell and r-extended Lah-Bell. Every constructor takes its
// argument sequences as SequenceSpec values, so the same code yields literal
// polynomials (symbolic sequences) and exact numbers (numeric sequences, a
// constant polynomial).

#include <cstdint>
#include <span>

#include "lahbell/poly.hpp"
#include "lahbell/sequence.hpp"

namespace lahbell {

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}): the sum over pi(n,k)
/// of n! / (prod j_i! (i!)^{j_i}) * prod x_i^{j_i}. Zero for k > n, one for
/// n = k = 0.
Polynomial incomplete_bell(std::uint32_t n, std::uint32_t k, const SequenceSpec& xs);

/// Complete Bell polynomial B_n(x_1, ..., x_n), with B_0 = 1.
Polynomial complete_bell(std::uint32_t n, const SequenceSpec& xs);

/// Exponential incomplete r-Bell polynomial B^{(rho)}_{n+rho,k+rho}(a : b),
/// the coefficient of t^n/n! in
///     (1/k!) (sum_j a_j t^j/j!)^k (sum_i b_{i+1} t^i/i!)^rho.
/// Terms carry 1/i! factors and are accumulated as rationals; the result is
/// checked to be integral.
Polynomial incomplete_r_bell(std::uint32_t n, std::uint32_t k, std::uint32_t rho,
                             const SequenceSpec& a, const SequenceSpec& b);

/// sum_{k=0}^{n} incomplete_r_bell(n, k, rho, a, b)
Polynomial complete_r_bell(std::uint32_t n, std::uint32_t rho, const SequenceSpec& a,
                           const SequenceSpec& b);

/// B^L_{n,k}(x) = B_{n,k}(1! x_1, 2! x_2, ...); all-ones value is L(n,k).
Polynomial incomplete_lah_bell(std::uint32_t n, std::uint32_t k, const SequenceSpec& xs);

/// B^L_n(x) = B_n(1! x_1, 2! x_2, ...); all-ones value is B^L_n.
Polynomial complete_lah_bell(std::uint32_t n, const SequenceSpec& xs);

/// Incomplete r-extended Lah-Bell polynomial B^L_{n+2r,k+2r}(a : b),
/// the coefficient of t^n/n! in (1/k!) (sum_j a_j t^j)^k (sum_i b_{i+1} t^i)^{2r}.
/// Summed over Lambda(n,k,2r) in integer arithmetic.
Polynomial incomplete_r_lah_bell(std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                 const SequenceSpec& a, const SequenceSpec& b);

/// Complete r-extended Lah-Bell polynomial B^{(L,2r)}_n(x | a : b)
///     = sum_k x^k B^L_{n+2r,k+2r}(a : b).
/// x is either an integer constant or the scalar indeterminate.
Polynomial complete_r_lah_bell(std::uint32_t n, std::uint32_t r, const Polynomial& x,
                               const SequenceSpec& a, const SequenceSpec& b);

/// r-extended Lah-Bell polynomial B^L_{n,r}(x) = sum_k x^k L_r(n,k).
Polynomial lah_bell_polynomial(std::uint32_t n, std::uint32_t r, const Polynomial& x);

/// Direct expansion of B^{(L,2r)}_n(1 | x : y):
///     n! sum_k sum_{m: sum i m_i = k} sum_{l_1+..+l_{2r} = n-k}
///         prod x_i^{m_i} / prod m_i!  *  prod_j y_{l_j + 1}
Polynomial r_lah_bell_direct_expansion(std::uint32_t n, std::uint32_t r, const SequenceSpec& x,
                                const SequenceSpec& y);

/// n-th raw moment from cumulants: B_n(kappa_1, ..., kappa_n).
/// Throws lahbell::length_error when fewer than n cumulants are given.
Integer moments_from_cumulants(std::span<const Integer> kappas, std::uint32_t n);

} // namespace lahbell
