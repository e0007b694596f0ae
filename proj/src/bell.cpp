#include "lahbell/bell.hpp"

#include <map>
#include <string>

#include "lahbell/detail/constrained_stepper.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/partitions.hpp"

namespace lahbell {

namespace {

// Entries of one sequence raised to powers, memoized per call.
class power_table {
public:
    explicit power_table(const SequenceSpec& seq) : seq_(seq) {}

    const Polynomial& get(std::uint32_t index, std::uint32_t exponent)
    {
        auto& row = cache_[index];
        if (row.empty())
            row.push_back(Polynomial(1));
        while (row.size() <= exponent) {
            if (row.size() == 1)
                base_[index] = seq_.at(index);
            row.push_back(row.back() * base_[index]);
        }
        return row[exponent];
    }

private:
    const SequenceSpec& seq_;
    std::map<std::uint32_t, Polynomial> base_;
    std::map<std::uint32_t, std::vector<Polynomial>> cache_;
};

// Sums rational multiples of integer polynomials; the total must be integral.
class rational_accumulator {
public:
    void add(const Rational& c, const Polynomial& p)
    {
        if (c == 0)
            return;
        for (const auto& [m, v] : p.terms()) {
            auto& slot = terms_[m];
            slot += c * Rational(v);
        }
    }

    Polynomial finish(const char* context) const
    {
        Polynomial out;
        for (const auto& [m, q] : terms_) {
            if (boost::multiprecision::denominator(q) != 1)
                throw integrality_error(std::string(context) + ": non-integral coefficient " +
                                        q.str());
            out.add_term(m, boost::multiprecision::numerator(q));
        }
        return out;
    }

private:
    std::map<Monomial, Rational, graded_lex_order> terms_;
};

Integer factorial_product(const std::vector<std::uint32_t>& v)
{
    Integer p = 1;
    for (auto e : v)
        p *= factorial(e);
    return p;
}

} // namespace

Polynomial incomplete_bell(std::uint32_t n, std::uint32_t k, const SequenceSpec& xs)
{
    const Integer nf = factorial(n);
    power_table powers(xs);
    Polynomial out;
    for (const auto& w : enumerate_pi(n, k)) {
        Integer den = 1;
        Polynomial term(1);
        for (std::uint32_t i = 1; i <= w.j.size(); ++i) {
            const auto e = w.j[i - 1];
            if (e == 0)
                continue;
            den *= factorial(e) * boost::multiprecision::pow(factorial(i), e);
            term *= powers.get(i, e);
        }
        out += term * exact_div(nf, den);
    }
    return out;
}

Polynomial complete_bell(std::uint32_t n, const SequenceSpec& xs)
{
    // Every j with sum i*j_i = n lies in exactly one pi(n,k), k = sum j_i.
    Polynomial out;
    for (std::uint32_t k = 0; k <= n; ++k)
        out += incomplete_bell(n, k, xs);
    return out;
}

Polynomial incomplete_r_bell(std::uint32_t n, std::uint32_t k, std::uint32_t rho,
                             const SequenceSpec& a, const SequenceSpec& b)
{
    const Integer lead = factorial(n) * factorial(rho);
    power_table a_pow(a), b_pow(b);
    rational_accumulator acc;
    for (const auto& w : enumerate_lambda(n, k, rho)) {
        Integer den = factorial_product(w.k_part) * factorial_product(w.r_part);
        Polynomial term(1);
        for (std::uint32_t i = 1; i <= w.k_part.size(); ++i) {
            if (const auto e = w.k_part[i - 1]) {
                den *= boost::multiprecision::pow(factorial(i), e);
                term *= a_pow.get(i, e);
            }
        }
        for (std::uint32_t i = 0; i < w.r_part.size(); ++i) {
            if (const auto e = w.r_part[i]) {
                den *= boost::multiprecision::pow(factorial(i), e);
                term *= b_pow.get(i + 1, e);
            }
        }
        acc.add(Rational(lead, den), term);
    }
    return acc.finish("incomplete_r_bell");
}

Polynomial complete_r_bell(std::uint32_t n, std::uint32_t rho, const SequenceSpec& a,
                           const SequenceSpec& b)
{
    Polynomial out;
    for (std::uint32_t k = 0; k <= n; ++k)
        out += incomplete_r_bell(n, k, rho, a, b);
    return out;
}

Polynomial incomplete_lah_bell(std::uint32_t n, std::uint32_t k, const SequenceSpec& xs)
{
    return incomplete_bell(n, k, xs.factorial_weighted(0));
}

Polynomial complete_lah_bell(std::uint32_t n, const SequenceSpec& xs)
{
    return complete_bell(n, xs.factorial_weighted(0));
}

Polynomial incomplete_r_lah_bell(std::uint32_t n, std::uint32_t k, std::uint32_t r,
                                 const SequenceSpec& a, const SequenceSpec& b)
{
    const Integer nf = factorial(n);
    const Integer rf = factorial(2 * r);
    power_table a_pow(a), b_pow(b);
    Polynomial out;
    for (const auto& w : enumerate_lambda(n, k, 2 * r)) {
        Polynomial term(1);
        for (std::uint32_t i = 1; i <= w.k_part.size(); ++i)
            if (const auto e = w.k_part[i - 1])
                term *= a_pow.get(i, e);
        for (std::uint32_t i = 0; i < w.r_part.size(); ++i)
            if (const auto e = w.r_part[i])
                term *= b_pow.get(i + 1, e);
        out += term * (exact_div(nf, factorial_product(w.k_part)) *
                       exact_div(rf, factorial_product(w.r_part)));
    }
    return out;
}

Polynomial complete_r_lah_bell(std::uint32_t n, std::uint32_t r, const Polynomial& x,
                               const SequenceSpec& a, const SequenceSpec& b)
{
    Polynomial out;
    Polynomial xk(1);
    for (std::uint32_t k = 0; k <= n; ++k) {
        out += xk * incomplete_r_lah_bell(n, k, r, a, b);
        xk *= x;
    }
    return out;
}

Polynomial lah_bell_polynomial(std::uint32_t n, std::uint32_t r, const Polynomial& x)
{
    Polynomial out;
    Polynomial xk(1);
    for (std::uint32_t k = 0; k <= n; ++k) {
        out += xk * rlah(n, k, r);
        xk *= x;
    }
    return out;
}

Polynomial r_lah_bell_direct_expansion(std::uint32_t n, std::uint32_t r, const SequenceSpec& x,
                                const SequenceSpec& y)
{
    const Integer nf = factorial(n);
    power_table x_pow(x), y_pow(y);
    rational_accumulator acc;
    for (std::uint32_t k = 0; k <= n; ++k) {
        // y-part: ordered (l_1, ..., l_{2r}) with sum n - k
        Polynomial y_sum;
        std::vector<detail::constrained_stepper::slot> slots(2 * r, {0, 0});
        detail::constrained_stepper compositions(std::move(slots), {n - k}, 0);
        for (bool more = compositions.first(); more; more = compositions.next()) {
            Polynomial prod(1);
            for (auto l : compositions.values())
                prod *= y_pow.get(l + 1, 1);
            y_sum += prod;
        }
        if (y_sum.is_zero())
            continue;

        // x-part: every m with sum i*m_i = k, grouped by number of parts
        for (std::uint32_t parts = 0; parts <= k; ++parts) {
            for (const auto& w : enumerate_pi(k, parts)) {
                Polynomial prod(1);
                for (std::uint32_t i = 1; i <= w.j.size(); ++i)
                    if (const auto e = w.j[i - 1])
                        prod *= x_pow.get(i, e);
                acc.add(Rational(nf, factorial_product(w.j)), prod * y_sum);
            }
        }
    }
    return acc.finish("r_lah_bell_direct_expansion");
}

Integer moments_from_cumulants(std::span<const Integer> kappas, std::uint32_t n)
{
    if (kappas.size() < n)
        throw length_error("moment of order " + std::to_string(n) + " needs " + std::to_string(n) +
                           " cumulants, got " + std::to_string(kappas.size()));
    const auto seq = SequenceSpec::explicit_values({kappas.begin(), kappas.begin() + n});
    const auto value = complete_bell(n, seq);
    return value.constant_term();
}

} // namespace lahbell
