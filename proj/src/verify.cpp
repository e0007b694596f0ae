#include "lahbell/verify.hpp"

#include <functional>
#include <future>
#include <map>
#include <stdexcept>

#include "lahbell/bell.hpp"
#include "lahbell/exact.hpp"
#include "lahbell/partitions.hpp"
#include "lahbell/series.hpp"

namespace lahbell::verify {

namespace {

std::string show(const Integer& v) { return v.str(); }
std::string show(const Polynomial& p) { return to_string(p); }

std::string clip(std::string s)
{
    constexpr std::size_t limit = 240;
    if (s.size() > limit)
        s = s.substr(0, limit) + "...";
    return s;
}

class recorder {
public:
    recorder(std::string identity, std::string bounds)
    {
        result_.identity = std::move(identity);
        result_.bounds = std::move(bounds);
    }

    bool ok() const noexcept { return result_.passed; }

    template <typename T>
    bool equal(const T& lhs, const T& rhs, const std::string& where, const char* lhs_name,
               const char* rhs_name)
    {
        ++result_.cases;
        if (lhs == rhs)
            return true;
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = where + ": " + lhs_name + " = " + clip(show(lhs)) + ", " +
                                     rhs_name + " = " + clip(show(rhs));
        }
        return false;
    }

    void fail(const std::string& message)
    {
        ++result_.cases;
        if (result_.passed) {
            result_.passed = false;
            result_.counterexample = message;
        }
    }

    CheckResult finish() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string nbound(std::uint32_t n_max) { return "n<=" + std::to_string(n_max); }
std::string nrbound(std::uint32_t n_max, std::uint32_t r_max)
{
    return "n<=" + std::to_string(n_max) + " r<=" + std::to_string(r_max);
}
std::string at(std::uint32_t n) { return "n=" + std::to_string(n); }
std::string at(std::uint32_t n, std::uint32_t k) { return at(n) + " k=" + std::to_string(k); }
std::string at(std::uint32_t n, std::uint32_t k, std::uint32_t r)
{
    return at(n, k) + " r=" + std::to_string(r);
}

const SequenceSpec ones = SequenceSpec::ones();

// x_i -> c_i * x_i for i = 1..len
Polynomial scale_variables(Polynomial p, std::uint32_t len,
                           const std::function<Integer(std::uint32_t)>& c)
{
    for (std::uint32_t i = 1; i <= len; ++i)
        p = substitute(p, x_var(i), Polynomial(x_var(i)) * c(i));
    return p;
}

} // namespace

CheckResult lah_bell_triple(std::uint32_t n_max)
{
    recorder rec("lah-bell numbers: closed form / complete Bell at factorials / series",
                 nbound(n_max));
    const auto series = gf_expand(GfFamily::LahBell, {}, n_max);
    for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
        const auto closed = lah_bell_number(n);
        rec.equal(closed, complete_bell(n, SequenceSpec::factorials()).constant_term(), at(n),
                  "sum L(n,k)", "B_n(1!,..,n!)");
        rec.equal(closed, series[n].constant_term(), at(n), "sum L(n,k)", "series");
    }
    return rec.finish();
}

CheckResult lah_triple(std::uint32_t n_max)
{
    recorder rec("lah numbers: closed form / pi-sum / series / all-ones B^L_{n,k}", nbound(n_max));
    for (std::uint32_t k = 0; k <= n_max && rec.ok(); ++k) {
        const auto series = gf_expand(GfFamily::Lah, {.k = k}, n_max);
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
            const auto closed = lah(n, k);
            rec.equal(closed, series[n].constant_term(), at(n, k), "L(n,k)", "series");
            if (k > n)
                continue;
            rec.equal(closed, lah_via_pi(n, k), at(n, k), "L(n,k)", "pi-sum");
            rec.equal(closed, incomplete_lah_bell(n, k, ones).constant_term(), at(n, k), "L(n,k)",
                      "B^L_{n,k}(1,..,1)");
        }
    }
    return rec.finish();
}

CheckResult rlah_triple(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("r-lah numbers: closed form / Lambda-sum / series", nrbound(n_max, r_max));
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        for (std::uint32_t k = 0; k <= n_max && rec.ok(); ++k) {
            const auto series = gf_expand(GfFamily::RLah, {.k = k, .r = r}, n_max);
            for (std::uint32_t n = k; n <= n_max && rec.ok(); ++n) {
                const auto closed = rlah(n, k, r);
                rec.equal(closed, rlah_via_lambda(n, k, r), at(n, k, r), "L_r(n,k)", "Lambda-sum");
                rec.equal(closed, series[n].constant_term(), at(n, k, r), "L_r(n,k)", "series");
            }
        }
    }
    return rec.finish();
}

CheckResult r_lah_bell_numbers(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("r-extended lah-bell numbers: sum of L_r(n,k) / series", nrbound(n_max, r_max));
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        const auto series = gf_expand(GfFamily::RLahBell, {.r = r}, n_max);
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n)
            rec.equal(r_lah_bell_number(n, r), series[n].constant_term(), at(n) + " r=" +
                      std::to_string(r), "B^L_{n,r}", "series");
    }
    return rec.finish();
}

CheckResult lah_bell_factorial_substitution(std::uint32_t n_max)
{
    recorder rec("B^L_{n,k}(x) = B_{n,k}(1!x_1, 2!x_2, ...) symbolic", nbound(n_max));
    const auto xs = SequenceSpec::symbolic(Family::X);
    for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
        for (std::uint32_t k = 0; k <= n && rec.ok(); ++k) {
            const auto bridged = scale_variables(incomplete_bell(n, k, xs), n,
                                                 [](std::uint32_t i) { return factorial(i); });
            rec.equal(incomplete_lah_bell(n, k, xs), bridged, at(n, k), "B^L_{n,k}",
                      "B_{n,k}(i! x_i)");
        }
    }
    return rec.finish();
}

CheckResult lah_bell_homogeneity(std::uint32_t n_max, int alpha_lo, int alpha_hi)
{
    recorder rec("B^L_{n,k}(alpha x) = alpha^k B^L_{n,k}(x)",
                 nbound(n_max) + " alpha in [" + std::to_string(alpha_lo) + "," +
                     std::to_string(alpha_hi) + "]");
    const auto xs = SequenceSpec::symbolic(Family::X);
    for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
        for (std::uint32_t k = 0; k <= n && rec.ok(); ++k) {
            const auto p = incomplete_lah_bell(n, k, xs);
            for (int alpha = alpha_lo; alpha <= alpha_hi && rec.ok(); ++alpha) {
                const auto scaled = scale_variables(p, n, [alpha](std::uint32_t) { return Integer(alpha); });
                rec.equal(scaled, p * boost::multiprecision::pow(Integer(alpha), k),
                          at(n, k) + " alpha=" + std::to_string(alpha), "B^L_{n,k}(alpha x)",
                          "alpha^k B^L_{n,k}(x)");
            }
        }
    }
    return rec.finish();
}

CheckResult complete_lah_bell_decomposition(std::uint32_t n_max)
{
    recorder rec("B^L_n(x) = sum_{k=1}^n B^L_{n,k}(x) = exp(sum x_i t^i) coefficient",
                 "1<=" + nbound(n_max));
    const auto xs = SequenceSpec::symbolic(Family::X);
    if (n_max == 0)
        return rec.finish();
    const auto series = gf_expand(GfFamily::CompleteGeneric,
                                  {.r = 0, .x = Polynomial(1), .a = xs, .b = ones}, n_max);
    for (std::uint32_t n = 1; n <= n_max && rec.ok(); ++n) {
        const auto complete = complete_lah_bell(n, xs);
        Polynomial sum;
        for (std::uint32_t k = 1; k <= n; ++k)
            sum += incomplete_lah_bell(n, k, xs);
        rec.equal(complete, sum, at(n), "B^L_n", "sum_k B^L_{n,k}");
        rec.equal(complete, series[n], at(n), "B^L_n", "series");
    }
    return rec.finish();
}

CheckResult uniform_lah_bell(std::uint32_t n_max)
{
    recorder rec("B^L_n(x,x,...) = sum_k x^k L(n,k)", nbound(n_max));
    const Polynomial x(scalar_x());
    const auto uniform = ones.times(x);
    for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n)
        rec.equal(complete_lah_bell(n, uniform), lah_bell_polynomial(n, 0, x), at(n),
                  "B^L_n(x,..,x)", "B^L_n(x)");
    return rec.finish();
}

CheckResult r_bell_lah_weighting(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("B^L_{n+2r,k+2r}(a:b) = B^{(2r)}_{n+2r,k+2r}(i! a_i : (i-1)! b_i) symbolic",
                 nrbound(n_max, r_max));
    const auto a = SequenceSpec::symbolic(Family::A);
    const auto b = SequenceSpec::symbolic(Family::B);
    const auto a_w = a.factorial_weighted(0);
    const auto b_w = b.factorial_weighted(1);
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r)
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n)
            for (std::uint32_t k = 0; k <= n && rec.ok(); ++k)
                rec.equal(incomplete_r_lah_bell(n, k, r, a, b), incomplete_r_bell(n, k, 2 * r, a_w, b_w),
                          at(n, k, r), "B^L_{n+2r,k+2r}", "B^{(2r)}_{n+2r,k+2r}");
    return rec.finish();
}

CheckResult complete_r_lah_bell_routes(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("B^{(L,2r)}_n(x|a:b) = series = sum_k x^k B^L_{n+2r,k+2r}; all-ones = sum x^k L_r(n,k)",
                 nrbound(n_max, r_max));
    const Polynomial x(scalar_x());
    const auto a = SequenceSpec::symbolic(Family::A);
    const auto b = SequenceSpec::symbolic(Family::B);
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        const auto series = gf_expand(GfFamily::CompleteGeneric, {.r = r, .x = x, .a = a, .b = b}, n_max);
        const auto ones_series = gf_expand(GfFamily::RLahBellPoly, {.r = r, .x = x}, n_max);
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
            const auto where = at(n) + " r=" + std::to_string(r);
            rec.equal(complete_r_lah_bell(n, r, x, a, b), series[n], where, "B^{(L,2r)}_n(x|a:b)",
                      "series");
            rec.equal(complete_r_lah_bell(n, r, Polynomial(1), a, b),
                      complete_r_bell(n, 2 * r, a.factorial_weighted(0), b.factorial_weighted(1)),
                      where, "B^{(L,2r)}_n(1|a:b)", "B^{(2r)}_n(i! a_i : (i-1)! b_i)");
            const auto at_ones = complete_r_lah_bell(n, r, x, ones, ones);
            rec.equal(at_ones, lah_bell_polynomial(n, r, x), where, "B^{(L,2r)}_n(x|1:1)",
                      "sum x^k L_r(n,k)");
            rec.equal(at_ones, ones_series[n], where, "B^{(L,2r)}_n(x|1:1)", "series");
        }
    }
    return rec.finish();
}

CheckResult all_ones_r_lah_bell(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("B^L_{n+2r,k+2r}(1,1,..:1,1,..) = L_r(n,k)", nrbound(n_max, r_max));
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r)
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n)
            for (std::uint32_t k = 0; k <= n && rec.ok(); ++k)
                rec.equal(incomplete_r_lah_bell(n, k, r, ones, ones).constant_term(), rlah(n, k, r),
                          at(n, k, r), "B^L_{n+2r,k+2r}(1:1)", "L_r(n,k)");
    return rec.finish();
}

CheckResult direct_expansion(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("direct expansion of B^{(L,2r)}_n(1|x:y) = series = complete r-extended Lah-Bell",
                 nrbound(n_max, r_max));
    const auto xs = SequenceSpec::symbolic(Family::X);
    const auto ys = SequenceSpec::symbolic(Family::Y);
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        const auto series = gf_expand(GfFamily::CompleteGeneric,
                                      {.r = r, .x = Polynomial(1), .a = xs, .b = ys}, n_max);
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
            const auto closed = r_lah_bell_direct_expansion(n, r, xs, ys);
            const auto where = at(n) + " r=" + std::to_string(r);
            rec.equal(closed, series[n], where, "expansion", "series");
            rec.equal(closed, complete_r_lah_bell(n, r, Polynomial(1), xs, ys), where, "expansion",
                      "B^{(L,2r)}_n(1|x:y)");
        }
    }
    return rec.finish();
}

CheckResult uniform_r_lah_bell(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("sum_k B^L_{n+2r,k+2r}(x,x,..:1,1,..) = B^L_{n,r}(x)", nrbound(n_max, r_max));
    const Polynomial x(scalar_x());
    const auto uniform = ones.times(x);
    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
            Polynomial sum;
            for (std::uint32_t k = 0; k <= n && rec.ok(); ++k) {
                const auto term = incomplete_r_lah_bell(n, k, r, uniform, ones);
                rec.equal(term, pow(x, k) * incomplete_r_lah_bell(n, k, r, ones, ones),
                          at(n, k, r), "B^L(x,..:1,..)", "x^k B^L(1,..:1,..)");
                sum += term;
            }
            rec.equal(sum, lah_bell_polynomial(n, r, x), at(n) + " r=" + std::to_string(r),
                      "sum_k B^L(x,..:1,..)", "B^L_{n,r}(x)");
        }
    }
    return rec.finish();
}

CheckResult faa_di_bruno(std::uint32_t m_max)
{
    recorder rec("d^m/dt^m e^{t/(1-t)} at 0 = B_m(f'(0), .., f^(m)(0)) = B^L_m",
                 "1<=m<=" + std::to_string(m_max));
    for (std::uint32_t m = 1; m <= m_max && rec.ok(); ++m) {
        const auto report = faa_di_bruno_check(m, m_max + 1);
        const auto where = "m=" + std::to_string(m);
        if (!report.passed) {
            rec.fail(where + ": derivative " + report.derivative_at_zero.str() + ", coefficient " +
                     report.egf_coefficient.str() + ", Bell " + report.bell_value.str());
            break;
        }
        rec.equal(report.bell_value, lah_bell_number(m), where, "B_m(f derivatives)", "B^L_m");
    }
    return rec.finish();
}

CheckResult series_oracle(std::uint32_t n_max, std::uint32_t r_max)
{
    recorder rec("generating-function expansions vs constructors", nrbound(n_max, r_max));
    const Polynomial x(scalar_x());
    const auto a = SequenceSpec::symbolic(Family::A);
    const auto b = SequenceSpec::symbolic(Family::B);

    const auto lb = gf_expand(GfFamily::LahBell, {}, n_max);
    for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n)
        rec.equal(lb[n], Polynomial(lah_bell_number(n)), at(n), "LAH_BELL", "B^L_n");

    for (std::uint32_t r = 0; r <= r_max && rec.ok(); ++r) {
        const auto rlb = gf_expand(GfFamily::RLahBell, {.r = r}, n_max);
        const auto poly = gf_expand(GfFamily::RLahBellPoly, {.r = r, .x = x}, n_max);
        const auto complete = gf_expand(GfFamily::CompleteGeneric, {.r = r, .x = x, .a = ones, .b = ones}, n_max);
        const auto rbell = gf_expand(GfFamily::CompleteRBell, {.r = r, .a = a, .b = b}, n_max);
        for (std::uint32_t n = 0; n <= n_max && rec.ok(); ++n) {
            const auto where = at(n) + " r=" + std::to_string(r);
            rec.equal(rlb[n], Polynomial(r_lah_bell_number(n, r)), where, "R_LAH_BELL", "B^L_{n,r}");
            rec.equal(poly[n], lah_bell_polynomial(n, r, x), where, "R_LAH_BELL_POLY", "B^L_{n,r}(x)");
            rec.equal(complete[n], complete_r_lah_bell(n, r, x, ones, ones), where,
                      "COMPLETE_GENERIC", "B^{(L,2r)}_n(x|1:1)");
            rec.equal(rbell[n], complete_r_bell(n, r, a, b), where, "COMPLETE_R_BELL", "B^{(r)}_n(a:b)");
        }
        for (std::uint32_t k = 0; k <= n_max && rec.ok(); ++k) {
            const auto lahs = gf_expand(GfFamily::Lah, {.k = k}, n_max);
            const auto rlahs = gf_expand(GfFamily::RLah, {.k = k, .r = r}, n_max);
            const auto inc = gf_expand(GfFamily::IncompleteGeneric, {.k = k, .r = r, .a = a, .b = b}, n_max);
            const auto incb = gf_expand(GfFamily::IncompleteRBell, {.k = k, .r = r, .a = a, .b = b}, n_max);
            for (std::uint32_t n = k; n <= n_max && rec.ok(); ++n) {
                const auto where = at(n, k, r);
                if (r == 0)
                    rec.equal(lahs[n], Polynomial(lah(n, k)), where, "LAH", "L(n,k)");
                rec.equal(rlahs[n], Polynomial(rlah(n, k, r)), where, "R_LAH", "L_r(n,k)");
                rec.equal(inc[n], incomplete_r_lah_bell(n, k, r, a, b), where, "INCOMPLETE_GENERIC",
                          "B^L_{n+2r,k+2r}(a:b)");
                rec.equal(incb[n], incomplete_r_bell(n, k, r, a, b), where, "INCOMPLETE_R_BELL",
                          "B^{(r)}_{n+r,k+r}(a:b)");
            }
        }
    }
    return rec.finish();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "all",      "theorem1", "prop2",    "theorem3",   "eq23",     "eq28", "eq30",
        "theorem4", "theorem5", "corollary6", "theorem7", "eq42", "faadibruno", "series-oracle"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint32_t n_max, std::uint32_t r_max)
{
    using job = std::function<CheckResult()>;
    const std::vector<std::pair<std::string, std::vector<job>>> table{
        {"theorem1", {[=] { return lah_bell_triple(n_max); }}},
        {"prop2", {[=] { return lah_triple(n_max); }, [=] { return lah_bell_factorial_substitution(n_max); }}},
        {"theorem3", {[=] { return complete_lah_bell_decomposition(n_max); }}},
        {"eq23", {[=] { return lah_bell_homogeneity(n_max, -3, 3); }}},
        {"eq28", {[=] { return uniform_lah_bell(n_max); }}},
        {"eq30", {[=] { return r_bell_lah_weighting(n_max, r_max); }}},
        {"theorem4", {[=] { return complete_r_lah_bell_routes(n_max, r_max); }}},
        {"theorem5", {[=] { return all_ones_r_lah_bell(n_max, r_max); }}},
        {"corollary6", {[=] { return rlah_triple(n_max, r_max); }}},
        {"theorem7", {[=] { return direct_expansion(n_max, r_max); }}},
        {"eq42", {[=] { return uniform_r_lah_bell(n_max, r_max); }}},
        {"faadibruno", {[=] { return faa_di_bruno(n_max); }}},
        {"series-oracle",
         {[=] { return r_lah_bell_numbers(n_max, r_max); }, [=] { return series_oracle(n_max, r_max); }}},
    };

    // an exception inside a check is reported as that check failing
    std::vector<job> selected;
    for (const auto& [name, jobs] : table)
        if (suite == "all" || suite == name)
            for (const auto& j : jobs)
                selected.push_back([j, name] {
                    try {
                        return j();
                    } catch (const std::exception& e) {
                        CheckResult r;
                        r.identity = name;
                        r.bounds = "aborted";
                        r.passed = false;
                        r.counterexample = std::string("exception: ") + e.what();
                        return r;
                    }
                });
    if (selected.empty())
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

    std::vector<std::future<CheckResult>> running;
    running.reserve(selected.size());
    for (auto& j : selected)
        running.push_back(std::async(std::launch::async, j));
    std::vector<CheckResult> results;
    results.reserve(running.size());
    for (auto& f : running)
        results.push_back(f.get());
    return results;
}

} // namespace lahbell::verify
