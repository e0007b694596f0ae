#include "lahbell/series.hpp"

#include <algorithm>
#include <string>

#include "lahbell/bell.hpp"
#include "lahbell/errors.hpp"

namespace lahbell {

TruncatedSeries::TruncatedSeries(std::uint32_t order, Lattice lattice)
    : lattice_(lattice), coeffs_(std::size_t{order} + 1)
{
}

TruncatedSeries TruncatedSeries::constant(const Polynomial& c, std::uint32_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::uint32_t power, std::uint32_t order)
{
    TruncatedSeries s(order);
    if (power <= order)
        s.coeffs_[power] = Polynomial(1);
    return s;
}

const Polynomial& TruncatedSeries::stored(std::uint32_t n) const
{
    if (n > order())
        throw order_error("coefficient " + std::to_string(n) + " beyond truncation order " +
                          std::to_string(order()));
    return coeffs_[n];
}

Polynomial& TruncatedSeries::stored(std::uint32_t n)
{
    if (n > order())
        throw order_error("coefficient " + std::to_string(n) + " beyond truncation order " +
                          std::to_string(order()));
    return coeffs_[n];
}

Polynomial TruncatedSeries::egf_coefficient(std::uint32_t n) const
{
    const auto& c = stored(n);
    return lattice_ == Lattice::Egf ? c : c * factorial(n);
}

Polynomial TruncatedSeries::ordinary_coefficient(std::uint32_t n) const
{
    const auto& c = stored(n);
    return lattice_ == Lattice::Ordinary ? c : c.exact_divide(factorial(n));
}

TruncatedSeries TruncatedSeries::to_egf() const
{
    if (lattice_ == Lattice::Egf)
        return *this;
    TruncatedSeries out(order(), Lattice::Egf);
    Integer f = 1;
    for (std::uint32_t n = 0; n <= order(); ++n) {
        if (n > 0)
            f *= n;
        out.coeffs_[n] = coeffs_[n] * f;
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(std::uint32_t new_order) const
{
    TruncatedSeries out(std::min(new_order, order()), lattice_);
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.order() != b.order())
        return false;
    for (std::uint32_t n = 0; n <= a.order(); ++n)
        if (a.egf_coefficient(n) != b.egf_coefficient(n))
            return false;
    return true;
}

TruncatedSeries ser_from_sequence(const SequenceSpec& spec, SeriesKind kind, std::uint32_t start,
                                  std::uint32_t order)
{
    TruncatedSeries s(order, kind == SeriesKind::Egf ? TruncatedSeries::Lattice::Egf
                                                     : TruncatedSeries::Lattice::Ordinary);
    for (std::uint32_t j = start; j <= order; ++j)
        s.stored(j) = spec.at(start == 0 ? j + 1 : j);
    return s;
}

TruncatedSeries ser_add(const TruncatedSeries& s, const TruncatedSeries& u)
{
    const auto order = std::min(s.order(), u.order());
    if (s.lattice() == u.lattice()) {
        TruncatedSeries out(order, s.lattice());
        for (std::uint32_t n = 0; n <= order; ++n)
            out.stored(n) = s.stored(n) + u.stored(n);
        return out;
    }
    return ser_add(s.to_egf(), u.to_egf());
}

TruncatedSeries ser_mul(const TruncatedSeries& s, const TruncatedSeries& u)
{
    const auto order = std::min(s.order(), u.order());
    using L = TruncatedSeries::Lattice;
    if (s.lattice() == L::Ordinary && u.lattice() == L::Ordinary) {
        TruncatedSeries out(order);
        for (std::uint32_t i = 0; i <= order; ++i) {
            if (s.stored(i).is_zero())
                continue;
            for (std::uint32_t j = 0; i + j <= order; ++j)
                if (!u.stored(j).is_zero())
                    out.stored(i + j) += s.stored(i) * u.stored(j);
        }
        return out;
    }
    // egf lattice: c_n = sum_i C(n,i) a_i b_{n-i}
    const auto a = s.to_egf();
    const auto b = u.to_egf();
    TruncatedSeries out(order, L::Egf);
    for (std::uint32_t n = 0; n <= order; ++n) {
        Integer c = 1; // C(n, i)
        for (std::uint32_t i = 0; i <= n; ++i) {
            if (!a.stored(i).is_zero() && !b.stored(n - i).is_zero())
                out.stored(n) += a.stored(i) * b.stored(n - i) * c;
            c = c * (n - i) / (i + 1);
        }
    }
    return out;
}

TruncatedSeries ser_pow(const TruncatedSeries& s, std::uint32_t k)
{
    auto result = TruncatedSeries::constant(Polynomial(1), s.order());
    for (std::uint32_t i = 0; i < k; ++i)
        result = ser_mul(result, s);
    return result;
}

TruncatedSeries ser_scale(const TruncatedSeries& s, const Polynomial& c)
{
    TruncatedSeries out = s;
    for (std::uint32_t n = 0; n <= s.order(); ++n)
        out.stored(n) *= c;
    return out;
}

TruncatedSeries ser_divide_exact(const TruncatedSeries& s, const Integer& d)
{
    auto out = s.to_egf();
    for (std::uint32_t n = 0; n <= out.order(); ++n)
        out.stored(n) = out.stored(n).exact_divide(d);
    return out;
}

TruncatedSeries ser_exp(const TruncatedSeries& s)
{
    if (!s.stored(0).is_zero())
        throw parameter_error("ser_exp: series has a nonzero constant term");
    const auto e = s.to_egf();
    auto result = TruncatedSeries::constant(Polynomial(1), s.order()).to_egf();
    auto power = result; // s^k / k!
    for (std::uint32_t k = 1; k <= s.order(); ++k) {
        // s^k/k! = (s^{k-1}/(k-1)!) * s / k, exact on the egf lattice
        power = ser_divide_exact(ser_mul(power, e), k);
        result = ser_add(result, power);
    }
    return result;
}

TruncatedSeries ser_derivative(const TruncatedSeries& s)
{
    if (s.order() == 0)
        throw order_error("ser_derivative: series of order 0 has no known derivative terms");
    TruncatedSeries out(s.order() - 1, s.lattice());
    for (std::uint32_t n = 0; n < s.order(); ++n) {
        if (s.lattice() == TruncatedSeries::Lattice::Egf)
            out.stored(n) = s.stored(n + 1);
        else
            out.stored(n) = s.stored(n + 1) * Integer(n + 1);
    }
    return out;
}

Polynomial egf_coefficient(const TruncatedSeries& s, std::uint32_t n)
{
    return s.egf_coefficient(n);
}

FaaDiBrunoReport faa_di_bruno_check(std::uint32_t m, std::uint32_t order)
{
    if (m == 0 || m > order)
        throw order_error("faa_di_bruno_check needs 1 <= m <= order");
    FaaDiBrunoReport rep;
    rep.m = m;
    rep.order = order;

    const auto f = ser_from_sequence(SequenceSpec::ones(), SeriesKind::Ordinary, 1, order);
    const auto e = ser_exp(f);

    auto d = e;
    for (std::uint32_t i = 0; i < m; ++i)
        d = ser_derivative(d);
    rep.derivative_at_zero = d.egf_coefficient(0).constant_term();
    rep.egf_coefficient = e.egf_coefficient(m).constant_term();

    bool derivatives_ok = true;
    auto fd = f;
    for (std::uint32_t j = 1; j <= m; ++j) {
        fd = ser_derivative(fd);
        rep.f_derivatives.push_back(fd.egf_coefficient(0).constant_term());
        // f^{(j)}(t) = j!/(1-t)^{j+1}, so j! at t = 0
        derivatives_ok = derivatives_ok && rep.f_derivatives.back() == factorial(j);
    }
    // e^{f(0)} = 1
    rep.bell_value = complete_bell(m, SequenceSpec::explicit_values(rep.f_derivatives)).constant_term();
    rep.passed = derivatives_ok && rep.derivative_at_zero == rep.bell_value &&
                 rep.egf_coefficient == rep.bell_value;
    return rep;
}

namespace {

void require(bool present, bool needed, const char* what, const char* family)
{
    if (needed && !present)
        throw parameter_error(std::string(family) + " requires parameter " + what);
    if (!needed && present)
        throw parameter_error(std::string(family) + " does not take parameter " + what);
}

const char* family_name(GfFamily f)
{
    switch (f) {
    case GfFamily::LahBell: return "LAH_BELL";
    case GfFamily::RLahBell: return "R_LAH_BELL";
    case GfFamily::Lah: return "LAH";
    case GfFamily::RLah: return "R_LAH";
    case GfFamily::RLahBellPoly: return "R_LAH_BELL_POLY";
    case GfFamily::IncompleteGeneric: return "INCOMPLETE_GENERIC";
    case GfFamily::CompleteGeneric: return "COMPLETE_GENERIC";
    case GfFamily::IncompleteRBell: return "INCOMPLETE_R_BELL";
    case GfFamily::CompleteRBell: return "COMPLETE_R_BELL";
    }
    return "?";
}

} // namespace

std::vector<Polynomial> gf_expand(GfFamily family, const GfParams& p, std::uint32_t order)
{
    struct needs {
        bool k, r, x, a, b;
    };
    needs n{};
    switch (family) {
    case GfFamily::LahBell: n = {false, false, false, false, false}; break;
    case GfFamily::RLahBell: n = {false, true, false, false, false}; break;
    case GfFamily::Lah: n = {true, false, false, false, false}; break;
    case GfFamily::RLah: n = {true, true, false, false, false}; break;
    case GfFamily::RLahBellPoly: n = {false, true, true, false, false}; break;
    case GfFamily::IncompleteGeneric: n = {true, true, false, true, true}; break;
    case GfFamily::CompleteGeneric: n = {false, true, true, true, true}; break;
    case GfFamily::IncompleteRBell: n = {true, true, false, true, true}; break;
    case GfFamily::CompleteRBell: n = {false, true, false, true, true}; break;
    }
    const char* fname = family_name(family);
    require(p.k.has_value(), n.k, "k", fname);
    require(p.r.has_value(), n.r, "r", fname);
    require(p.x.has_value(), n.x, "x", fname);
    require(p.a.has_value(), n.a, "a", fname);
    require(p.b.has_value(), n.b, "b", fname);

    const auto ones = SequenceSpec::ones();
    const auto t_over = ser_from_sequence(ones, SeriesKind::Ordinary, 1, order); // t/(1-t)
    const auto geometric = ser_from_sequence(ones, SeriesKind::Ordinary, 0, order); // 1/(1-t)

    TruncatedSeries g(order);
    switch (family) {
    case GfFamily::LahBell:
        g = ser_exp(t_over);
        break;
    case GfFamily::RLahBell:
        g = ser_mul(ser_exp(t_over), ser_pow(geometric, 2 * *p.r));
        break;
    case GfFamily::Lah:
        g = ser_divide_exact(ser_pow(t_over, *p.k), factorial(*p.k));
        break;
    case GfFamily::RLah:
        g = ser_mul(ser_divide_exact(ser_pow(t_over, *p.k), factorial(*p.k)),
                    ser_pow(geometric, 2 * *p.r));
        break;
    case GfFamily::RLahBellPoly:
        g = ser_mul(ser_exp(ser_scale(t_over, *p.x)), ser_pow(geometric, 2 * *p.r));
        break;
    case GfFamily::IncompleteGeneric: {
        const auto as = ser_from_sequence(*p.a, SeriesKind::Ordinary, 1, order);
        const auto bs = ser_from_sequence(*p.b, SeriesKind::Ordinary, 0, order);
        g = ser_mul(ser_divide_exact(ser_pow(as, *p.k), factorial(*p.k)), ser_pow(bs, 2 * *p.r));
        break;
    }
    case GfFamily::CompleteGeneric: {
        const auto as = ser_from_sequence(*p.a, SeriesKind::Ordinary, 1, order);
        const auto bs = ser_from_sequence(*p.b, SeriesKind::Ordinary, 0, order);
        g = ser_mul(ser_exp(ser_scale(as, *p.x)), ser_pow(bs, 2 * *p.r));
        break;
    }
    case GfFamily::IncompleteRBell: {
        const auto as = ser_from_sequence(*p.a, SeriesKind::Egf, 1, order);
        const auto bs = ser_from_sequence(*p.b, SeriesKind::Egf, 0, order);
        g = ser_mul(ser_divide_exact(ser_pow(as, *p.k), factorial(*p.k)), ser_pow(bs, *p.r));
        break;
    }
    case GfFamily::CompleteRBell: {
        const auto as = ser_from_sequence(*p.a, SeriesKind::Egf, 1, order);
        const auto bs = ser_from_sequence(*p.b, SeriesKind::Egf, 0, order);
        g = ser_mul(ser_exp(as), ser_pow(bs, *p.r));
        break;
    }
    }

    std::vector<Polynomial> out;
    out.reserve(order + 1);
    for (std::uint32_t i = 0; i <= order; ++i)
        out.push_back(g.egf_coefficient(i));
    return out;
}

} // namespace lahbell
