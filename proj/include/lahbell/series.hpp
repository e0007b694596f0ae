#pragma once

// Truncated formal power series in t with polynomial coefficients.
//
// A series is stored on one of two lattices:
//   ordinary  coeff[n] is the coefficient of t^n
//   egf       coeff[n] is n! times the coefficient of t^n
// Mixed arithmetic promotes to the egf lattice, which keeps every quantity
// integral for the generating functions used here (t^j/j! sums, powers
// divided by k!, exponentials of series without constant term).

#include <cstdint>
#include <optional>
#include <vector>

#include "lahbell/poly.hpp"
#include "lahbell/sequence.hpp"

namespace lahbell {

class TruncatedSeries {
public:
    enum class Lattice { Ordinary, Egf };

    /// The zero series of the given order.
    explicit TruncatedSeries(std::uint32_t order, Lattice lattice = Lattice::Ordinary);

    static TruncatedSeries constant(const Polynomial& c, std::uint32_t order);
    /// t^power (zero when power > order)
    static TruncatedSeries monomial(std::uint32_t power, std::uint32_t order);

    std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
    Lattice lattice() const noexcept { return lattice_; }

    /// Raw stored value at position n on this series' lattice.
    const Polynomial& stored(std::uint32_t n) const;
    Polynomial& stored(std::uint32_t n);

    /// n! * (coefficient of t^n). Throws order_error when n > order().
    Polynomial egf_coefficient(std::uint32_t n) const;

    /// Coefficient of t^n; throws integrality_error if it is not integral.
    Polynomial ordinary_coefficient(std::uint32_t n) const;

    TruncatedSeries to_egf() const;
    TruncatedSeries truncated(std::uint32_t order) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
    Lattice lattice_;
    std::vector<Polynomial> coeffs_;
};

enum class SeriesKind { Ordinary, Egf };

/// sum_{j >= start} s_j t^j (Ordinary) or sum_{j >= start} s_{j} t^j / j! (Egf),
/// where s_j is entry j of spec. With start = 0 the entries are read
/// shifted, s_{j+1} at t^j, matching sums of the form sum_i b_{i+1} t^i.
TruncatedSeries ser_from_sequence(const SequenceSpec& spec, SeriesKind kind, std::uint32_t start,
                                  std::uint32_t order);

TruncatedSeries ser_add(const TruncatedSeries& s, const TruncatedSeries& u);
/// Cauchy product truncated at the smaller order.
TruncatedSeries ser_mul(const TruncatedSeries& s, const TruncatedSeries& u);
TruncatedSeries ser_pow(const TruncatedSeries& s, std::uint32_t k);
TruncatedSeries ser_scale(const TruncatedSeries& s, const Polynomial& c);
/// s / d computed on the egf lattice; throws integrality_error if inexact there.
TruncatedSeries ser_divide_exact(const TruncatedSeries& s, const Integer& d);
/// sum_{k=0}^{N} s^k / k!; throws parameter_error unless s has zero constant term.
TruncatedSeries ser_exp(const TruncatedSeries& s);
/// Termwise d/dt; the order drops by one. Throws order_error at order 0.
TruncatedSeries ser_derivative(const TruncatedSeries& s);

Polynomial egf_coefficient(const TruncatedSeries& s, std::uint32_t n);

struct FaaDiBrunoReport {
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    Integer derivative_at_zero;          // m-th derivative of exp(t/(1-t)) at 0
    Integer egf_coefficient;             // m! [t^m] exp(t/(1-t))
    std::vector<Integer> f_derivatives;  // f^{(j)}(0), j = 1..m, f = t/(1-t)
    Integer bell_value;                  // B_m(f'(0), ..., f^{(m)}(0))
    bool passed = false;
};

/// Checks d^m/dt^m exp(f) at t = 0 against B_m(f^{(1)}(0), ..., f^{(m)}(0))
/// for f(t) = t/(1-t), all derivatives taken on series truncated at `order`.
/// Requires 1 <= m <= order (order_error otherwise).
FaaDiBrunoReport faa_di_bruno_check(std::uint32_t m, std::uint32_t order);

enum class GfFamily {
    LahBell,           // exp(t/(1-t))
    RLahBell,          // exp(t/(1-t)) (1-t)^{-2r}
    Lah,               // (t/(1-t))^k / k!
    RLah,              // (t/(1-t))^k / k! * (1-t)^{-2r}
    RLahBellPoly,      // exp(x t/(1-t)) (1-t)^{-2r}
    IncompleteGeneric, // (sum a_j t^j)^k / k! * (sum b_{i+1} t^i)^{2r}
    CompleteGeneric,   // exp(x sum a_j t^j) * (sum b_{i+1} t^i)^{2r}
    IncompleteRBell,   // (sum a_j t^j/j!)^k / k! * (sum b_{i+1} t^i/i!)^r
    CompleteRBell,     // exp(sum a_j t^j/j!) * (sum b_{i+1} t^i/i!)^r
};

struct GfParams {
    std::optional<std::uint32_t> k;
    std::optional<std::uint32_t> r;
    std::optional<Polynomial> x;
    std::optional<SequenceSpec> a;
    std::optional<SequenceSpec> b;
};

/// egf_coefficient(G, n) for n = 0..order, G the family's generating function.
/// Throws parameter_error when a required parameter is missing or an unused
/// one is supplied. For the r-Bell families r is the exponent itself.
std::vector<Polynomial> gf_expand(GfFamily family, const GfParams& params, std::uint32_t order);

} // namespace lahbell
