#pragma once

// Identity checks. Each check walks its parameter box exhaustively, compares
// two or three independently computed values with exact equality, and stops
// at the first disagreement.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lahbell::verify {

struct CheckResult {
    std::string identity;
    std::string bounds;
    bool passed = true;
    std::uint64_t cases = 0;
    std::optional<std::string> counterexample;
};

// closed form = complete Bell at factorials = e^{t/(1-t)} coefficient, n <= n_max
CheckResult lah_bell_triple(std::uint32_t n_max);
// closed form = pi-sum = (t/(1-t))^k/k! coefficient = all-ones B^L_{n,k}
CheckResult lah_triple(std::uint32_t n_max);
// closed form = Lambda-sum = series coefficient, n <= n_max, r <= r_max
CheckResult rlah_triple(std::uint32_t n_max, std::uint32_t r_max);
// sum_k L_r(n,k) = e^{t/(1-t)} (1-t)^{-2r} coefficient
CheckResult r_lah_bell_numbers(std::uint32_t n_max, std::uint32_t r_max);
// B^L_{n,k}(x) = B_{n,k}(x) with x_i -> i! x_i, symbolic
CheckResult lah_bell_factorial_substitution(std::uint32_t n_max);
// x_i -> alpha x_i scales B^L_{n,k} by alpha^k
CheckResult lah_bell_homogeneity(std::uint32_t n_max, int alpha_lo, int alpha_hi);
// B^L_n(x) = sum_{k>=1} B^L_{n,k}(x) = exp(sum x_i t^i) coefficient, 1 <= n <= n_max
CheckResult complete_lah_bell_decomposition(std::uint32_t n_max);
// B^L_n(x, x, ...) = sum_k x^k L(n,k)
CheckResult uniform_lah_bell(std::uint32_t n_max);
// B^L_{n+2r,k+2r}(a:b) = B^{(2r)}_{n+2r,k+2r}(1!a_1, 2!a_2, ... : 0!b_1, 1!b_2, ...)
CheckResult r_bell_lah_weighting(std::uint32_t n_max, std::uint32_t r_max);
// complete r-extended Lah-Bell against exp(x sum a_j t^j)(sum b_{i+1} t^i)^{2r},
// against the r-Bell route at x = 1, and at all-ones a, b against sum x^k L_r(n,k)
CheckResult complete_r_lah_bell_routes(std::uint32_t n_max, std::uint32_t r_max);
// all-ones B^L_{n+2r,k+2r} = L_r(n,k) and the complete polynomial at ones
CheckResult all_ones_r_lah_bell(std::uint32_t n_max, std::uint32_t r_max);
// direct expansion = generating-function coefficient = complete r-extended Lah-Bell at x = 1
CheckResult direct_expansion(std::uint32_t n_max, std::uint32_t r_max);
// sum_k B^L_{n+2r,k+2r}(x,x,...:1,1,...) = B^L_{n,r}(x), termwise x^k scaling
CheckResult uniform_r_lah_bell(std::uint32_t n_max, std::uint32_t r_max);
// derivative of exp(t/(1-t)) at 0 = B_m(1!, ..., m!) = B^L_m, 1 <= m <= m_max
CheckResult faa_di_bruno(std::uint32_t m_max);
// generating-function expansions against every bell / exact_core constructor
CheckResult series_oracle(std::uint32_t n_max, std::uint32_t r_max);

inline constexpr std::uint32_t default_n_max = 12;
inline constexpr std::uint32_t default_r_max = 2;

/// Suite names accepted by run_suite, "all" first.
const std::vector<std::string>& suite_names();

/// Runs the named suite; independent checks run concurrently, results come
/// back in a fixed order. Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint32_t n_max,
                                   std::uint32_t r_max);

} // namespace lahbell::verify
