#include "lahbell/poly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "lahbell/errors.hpp"

namespace lahbell {

namespace {

char family_letter(Family f)
{
    switch (f) {
    case Family::X:
    case Family::ScalarX:
        return 'x';
    case Family::A:
        return 'a';
    case Family::B:
        return 'b';
    case Family::Y:
        return 'y';
    }
    return '?';
}

} // namespace

std::string name(const Variable& v)
{
    std::string s(1, family_letter(v.family));
    if (v.family != Family::ScalarX)
        s += std::to_string(v.index);
    return s;
}

Variable parse_variable(const std::string& text)
{
    if (text == "x")
        return scalar_x();
    if (text.size() < 2 || !std::all_of(text.begin() + 1, text.end(), [](unsigned char c) {
            return std::isdigit(c);
        }) || text[1] == '0')
        throw std::invalid_argument("bad variable name '" + text + "'");
    Family f;
    switch (text[0]) {
    case 'x': f = Family::X; break;
    case 'a': f = Family::A; break;
    case 'b': f = Family::B; break;
    case 'y': f = Family::Y; break;
    default: throw std::invalid_argument("bad variable name '" + text + "'");
    }
    return {f, static_cast<std::uint32_t>(std::stoul(text.substr(1)))};
}

Monomial::Monomial(Variable v, std::uint32_t exponent)
{
    if (exponent > 0)
        factors_.emplace_back(v, exponent);
}

std::uint32_t Monomial::degree() const noexcept
{
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors_)
        d += e;
    return d;
}

std::uint32_t Monomial::exponent(const Variable& v) const noexcept
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const factor& f, const Variable& x) { return f.first < x; });
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, o.factors_.end());
    return out;
}

Monomial Monomial::without(const Variable& v) const
{
    Monomial out;
    for (const auto& f : factors_)
        if (f.first != v)
            out.factors_.push_back(f);
    return out;
}

bool graded_lex_order::operator()(const Monomial& a, const Monomial& b) const
{
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da > db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].first != fb[i].first)
            return fa[i].first < fb[i].first; // a carries the earlier variable
        if (fa[i].second != fb[i].second)
            return fa[i].second > fb[i].second;
    }
    return i < fa.size() && i == fb.size();
}

Polynomial::Polynomial(Integer c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, std::move(c));
}

Polynomial::Polynomial(Variable v)
{
    terms_.emplace(Monomial(v), Integer(1));
}

Polynomial::Polynomial(Monomial m, Integer c)
{
    if (c != 0)
        terms_.emplace(std::move(m), std::move(c));
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Integer Polynomial::constant_term() const
{
    return coefficient(Monomial{});
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out = *this;
    for (auto& [m, v] : out.terms_)
        v = -v;
    return out;
}

Polynomial Polynomial::exact_divide(const Integer& d) const
{
    Polynomial out = *this;
    for (auto& [m, v] : out.terms_)
        v = exact_div(v, d);
    return out;
}

Polynomial pow(const Polynomial& p, std::uint32_t k)
{
    Polynomial result(1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

Integer evaluate(const Polynomial& p, const Assignment& values)
{
    Integer sum = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = values.find(v);
            if (it == values.end())
                throw missing_variable_error(name(v));
            term *= boost::multiprecision::pow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

Polynomial substitute(const Polynomial& p, const Variable& var, const Polynomial& value)
{
    std::vector<Polynomial> powers{Polynomial(1)};
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const auto e = m.exponent(var);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        while (powers.size() <= e)
            powers.push_back(powers.back() * value);
        out += Polynomial(m.without(var), c) * powers[e];
    }
    return out;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string body;
        for (const auto& [v, e] : m.factors()) {
            if (!body.empty())
                body += '*';
            body += name(v);
            if (e > 1)
                body += '^' + std::to_string(e);
        }
        if (body.empty())
            out += mag.str();
        else if (mag == 1)
            out += body;
        else
            out += mag.str() + '*' + body;
    }
    return out;
}

Polynomial parse_polynomial(const std::string& text)
{
    std::string s;
    std::copy_if(text.begin(), text.end(), std::back_inserter(s),
                 [](unsigned char c) { return !std::isspace(c); });
    if (s.empty())
        throw std::invalid_argument("empty polynomial text");

    auto bad = [&] { return std::invalid_argument("malformed polynomial '" + text + "'"); };
    auto digits = [](const std::string& t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };

    Polynomial p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw bad();
        }
        const auto end = std::min(s.find_first_of("+-", pos), s.size());
        std::string term = s.substr(pos, end - pos);
        pos = end;
        if (term.empty())
            throw bad();

        Integer coeff = 1;
        Monomial m;
        std::stringstream factors(term);
        bool first = true;
        for (std::string f; std::getline(factors, f, '*'); first = false) {
            if (first && digits(f)) {
                coeff = Integer(f);
                continue;
            }
            std::uint32_t e = 1;
            if (const auto caret = f.find('^'); caret != std::string::npos) {
                const auto exp_text = f.substr(caret + 1);
                if (!digits(exp_text))
                    throw bad();
                e = static_cast<std::uint32_t>(std::stoul(exp_text));
                f.resize(caret);
            }
            m = m * Monomial(parse_variable(f), e);
        }
        if (term.back() == '*')
            throw bad();
        p.add_term(m, negative ? Integer(-coeff) : coeff);
    }
    return p;
}

} // namespace lahbell
