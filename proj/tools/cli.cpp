#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "lahbell/bell.hpp"
#include "lahbell/errors.hpp"
#include "lahbell/exact.hpp"
#include "lahbell/poly_json.hpp"
#include "lahbell/verify.hpp"

namespace lahbell::cli {

namespace {

struct usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct query {
    std::string command;
    std::string family;
    std::map<std::string, std::uint32_t> ints; // n, k, r, n-max, r-max given on the command line
    std::optional<std::string> x;
    std::optional<std::string> seq_a;
    std::optional<std::string> seq_b;
    std::string suite = "all";
    std::string format = "text";

    std::uint32_t get(const std::string& key) const
    {
        auto it = ints.find(key);
        if (it == ints.end())
            throw usage(family + " requires --" + key);
        return it->second;
    }
    std::uint32_t get_or(const std::string& key, std::uint32_t fallback) const
    {
        auto it = ints.find(key);
        return it == ints.end() ? fallback : it->second;
    }

    // Rejects flags the family does not use.
    void allow(std::initializer_list<const char*> keys) const
    {
        std::set<std::string> ok(keys.begin(), keys.end());
        for (const auto& [key, v] : ints)
            if (!ok.contains(key))
                throw usage(family + " does not take --" + key);
        if (x && !ok.contains("x"))
            throw usage(family + " does not take --x");
        if (seq_a && !ok.contains("seq-a"))
            throw usage(family + " does not take --seq-a");
        if (seq_b && !ok.contains("seq-b"))
            throw usage(family + " does not take --seq-b");
    }

    json echo() const
    {
        json q = json::object();
        q["command"] = command;
        if (!family.empty())
            q["family"] = family;
        if (command == "verify")
            q["suite"] = suite;
        for (const char* key : {"n", "k", "r", "n-max", "r-max"})
            if (auto it = ints.find(key); it != ints.end())
                q[key] = it->second;
        if (x)
            q["x"] = *x;
        if (seq_a)
            q["seq-a"] = *seq_a;
        if (seq_b)
            q["seq-b"] = *seq_b;
        return q;
    }
};

Integer parse_integer(const std::string& text)
{
    const bool ok = !text.empty() &&
                    std::all_of(text.begin() + (text[0] == '-' ? 1 : 0), text.end(),
                                [](unsigned char c) { return std::isdigit(c); }) &&
                    text != "-";
    if (!ok)
        throw usage("not an integer: '" + text + "'");
    return Integer(text);
}

SequenceSpec parse_sequence(const std::optional<std::string>& text, const SequenceSpec& fallback,
                            Family symbolic_family)
{
    if (!text)
        return fallback;
    if (*text == "ones")
        return SequenceSpec::ones();
    if (*text == "factorials")
        return SequenceSpec::factorials();
    if (*text == "symbolic")
        return SequenceSpec::symbolic(symbolic_family);
    std::vector<Integer> values;
    std::stringstream ss(*text);
    for (std::string item; std::getline(ss, item, ',');)
        values.push_back(parse_integer(item));
    return SequenceSpec::explicit_values(std::move(values));
}

Polynomial parse_scalar(const std::optional<std::string>& text)
{
    if (!text || *text == "symbolic")
        return Polynomial(scalar_x());
    return Polynomial(parse_integer(*text));
}

void emit_record(std::ostream& out, const char* kind, const query& q, json payload)
{
    json record = json::object();
    record["kind"] = kind;
    record["query"] = q.echo();
    record["payload"] = std::move(payload);
    out << record.dump() << '\n';
}

// ---------------------------------------------------------------- table

int cmd_table(const query& q, std::ostream& out)
{
    const auto n_max = q.get("n-max");
    std::function<Integer(std::uint32_t, std::uint32_t)> entry;
    std::function<Integer(std::uint32_t)> term;
    if (q.family == "lah") {
        q.allow({"n-max"});
        entry = [](std::uint32_t n, std::uint32_t k) { return lah(n, k); };
    } else if (q.family == "rlah") {
        q.allow({"n-max", "r"});
        const auto r = q.get("r");
        entry = [r](std::uint32_t n, std::uint32_t k) { return rlah(n, k, r); };
    } else if (q.family == "lah-bell") {
        q.allow({"n-max"});
        term = [](std::uint32_t n) { return lah_bell_number(n); };
    } else {
        q.allow({"n-max", "r"});
        const auto r = q.get("r");
        term = [r](std::uint32_t n) { return r_lah_bell_number(n, r); };
    }

    if (entry) {
        std::vector<std::vector<Integer>> rows;
        for (std::uint32_t n = 0; n <= n_max; ++n) {
            rows.emplace_back();
            for (std::uint32_t k = 0; k <= n; ++k)
                rows.back().push_back(entry(n, k));
        }
        if (q.format == "json") {
            json payload = json::array();
            for (const auto& row : rows) {
                json jr = json::array();
                for (const auto& v : row)
                    jr.push_back(v.str());
                payload.push_back(std::move(jr));
            }
            emit_record(out, "triangle", q, std::move(payload));
        } else if (q.format == "csv") {
            out << "n,k,value\n";
            for (std::size_t n = 0; n < rows.size(); ++n)
                for (std::size_t k = 0; k < rows[n].size(); ++k)
                    out << n << ',' << k << ',' << rows[n][k] << '\n';
        } else {
            for (const auto& row : rows) {
                for (std::size_t k = 0; k < row.size(); ++k)
                    out << (k ? ", " : "") << row[k];
                out << '\n';
            }
        }
        return success;
    }

    std::vector<Integer> seq;
    for (std::uint32_t n = 0; n <= n_max; ++n)
        seq.push_back(term(n));
    if (q.format == "json") {
        json payload = json::array();
        for (const auto& v : seq)
            payload.push_back(v.str());
        emit_record(out, "sequence", q, std::move(payload));
    } else if (q.format == "csv") {
        out << "n,value\n";
        for (std::size_t n = 0; n < seq.size(); ++n)
            out << n << ',' << seq[n] << '\n';
    } else {
        for (std::size_t n = 0; n < seq.size(); ++n)
            out << (n ? ", " : "") << seq[n];
        out << '\n';
    }
    return success;
}

// ---------------------------------------------------------------- poly / value

// Builds the polynomial for a polynomial family. `numeric` selects the
// default sequences: symbolic for `poly`, all-ones for `value`.
Polynomial build_polynomial(const query& q, bool numeric)
{
    const auto& f = q.family;
    auto seq = [&](const std::optional<std::string>& text, Family fam) {
        return parse_sequence(text, numeric ? SequenceSpec::ones() : SequenceSpec::symbolic(fam), fam);
    };
    auto scalar = [&]() {
        if (numeric && !q.x)
            throw usage(f + " requires --x for a numeric value");
        return parse_scalar(q.x);
    };

    if (f == "complete-bell") {
        q.allow({"n", "seq-a"});
        return complete_bell(q.get("n"), seq(q.seq_a, Family::X));
    }
    if (f == "incomplete-bell") {
        q.allow({"n", "k", "seq-a"});
        return incomplete_bell(q.get("n"), q.get("k"), seq(q.seq_a, Family::X));
    }
    if (f == "complete-lah-bell") {
        q.allow({"n", "seq-a"});
        return complete_lah_bell(q.get("n"), seq(q.seq_a, Family::X));
    }
    if (f == "incomplete-lah-bell") {
        q.allow({"n", "k", "seq-a"});
        return incomplete_lah_bell(q.get("n"), q.get("k"), seq(q.seq_a, Family::X));
    }
    if (f == "incomplete-r-bell") {
        q.allow({"n", "k", "r", "seq-a", "seq-b"});
        return incomplete_r_bell(q.get("n"), q.get("k"), q.get("r"), seq(q.seq_a, Family::A),
                                 seq(q.seq_b, Family::B));
    }
    if (f == "complete-r-bell") {
        q.allow({"n", "r", "seq-a", "seq-b"});
        return complete_r_bell(q.get("n"), q.get("r"), seq(q.seq_a, Family::A), seq(q.seq_b, Family::B));
    }
    if (f == "incomplete-r-lah-bell") {
        q.allow({"n", "k", "r", "seq-a", "seq-b"});
        return incomplete_r_lah_bell(q.get("n"), q.get("k"), q.get("r"), seq(q.seq_a, Family::A),
                                     seq(q.seq_b, Family::B));
    }
    if (f == "complete-r-lah-bell") {
        q.allow({"n", "r", "x", "seq-a", "seq-b"});
        return complete_r_lah_bell(q.get("n"), q.get("r"), scalar(), seq(q.seq_a, Family::A),
                                   seq(q.seq_b, Family::B));
    }
    if (f == "lah-bell-poly") {
        q.allow({"n", "r", "x"});
        return lah_bell_polynomial(q.get("n"), q.get("r"), scalar());
    }
    if (f == "theorem7") {
        q.allow({"n", "r", "seq-a", "seq-b"});
        return r_lah_bell_direct_expansion(q.get("n"), q.get("r"), seq(q.seq_a, Family::X),
                                    seq(q.seq_b, Family::Y));
    }
    throw usage("unknown family '" + f + "'");
}

int cmd_poly(const query& q, std::ostream& out)
{
    if (q.format == "csv")
        throw usage("--format csv is only available for tables");
    const auto p = build_polynomial(q, false);
    if (q.format == "json")
        emit_record(out, "polynomial", q, to_json(p));
    else
        out << to_string(p) << '\n';
    return success;
}

int cmd_value(const query& q, std::ostream& out)
{
    if (q.format == "csv")
        throw usage("--format csv is only available for tables");
    const auto& f = q.family;
    Integer v;
    if (f == "lah") {
        q.allow({"n", "k"});
        v = lah(q.get("n"), q.get("k"));
    } else if (f == "rlah") {
        q.allow({"n", "k", "r"});
        v = rlah(q.get("n"), q.get("k"), q.get("r"));
    } else if (f == "lah-bell") {
        q.allow({"n"});
        v = lah_bell_number(q.get("n"));
    } else if (f == "r-lah-bell") {
        q.allow({"n", "r"});
        v = r_lah_bell_number(q.get("n"), q.get("r"));
    } else if (f == "factorial") {
        q.allow({"n"});
        v = factorial(q.get("n"));
    } else if (f == "binomial") {
        q.allow({"n", "k"});
        v = binomial(q.get("n"), q.get("k"));
    } else if (f == "moment") {
        q.allow({"n", "seq-a"});
        if (!q.seq_a)
            throw usage("moment requires --seq-a with the cumulants");
        const auto kappas = parse_sequence(q.seq_a, SequenceSpec::ones(), Family::X);
        if (kappas.kind() != SequenceSpec::Kind::Explicit)
            throw usage("moment requires an explicit cumulant list");
        v = moments_from_cumulants(kappas.values(), q.get("n"));
    } else {
        const auto p = build_polynomial(q, true);
        if (!p.is_constant())
            throw usage("result is not a number (" + to_string(p) + "); pass numeric sequences");
        v = p.constant_term();
    }
    if (q.format == "json")
        emit_record(out, "number", q, v.str());
    else
        out << v << '\n';
    return success;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const query& q, std::ostream& out)
{
    if (q.format == "csv")
        throw usage("--format csv is only available for tables");
    const auto n_max = q.get_or("n-max", verify::default_n_max);
    const auto r_max = q.get_or("r-max", verify::default_r_max);
    const auto results = verify::run_suite(q.suite, n_max, r_max);
    const auto failed = std::count_if(results.begin(), results.end(),
                                      [](const auto& r) { return !r.passed; });

    if (q.format == "json") {
        json ids = json::array();
        for (const auto& r : results) {
            json item = json::object();
            item["identity"] = r.identity;
            item["bounds"] = r.bounds;
            item["passed"] = r.passed;
            item["cases"] = r.cases;
            item["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
            ids.push_back(std::move(item));
        }
        query echoed = q;
        echoed.ints["n-max"] = n_max;
        echoed.ints["r-max"] = r_max;
        emit_record(out, "verdict", echoed, json{{"passed", failed == 0}, {"identities", std::move(ids)}});
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.identity << " [" << r.bounds << "] ("
                << r.cases << " cases)";
            if (r.counterexample)
                out << ": " << *r.counterexample;
            out << '\n';
        }
        out << (results.size() - static_cast<std::size_t>(failed)) << '/' << results.size()
            << " identities passed\n";
    }
    return failed == 0 ? success : verification_failed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lah-Bell numbers and polynomials, Bell and r-Bell polynomials, identity checks",
                 "lahbell"};
    app.require_subcommand(1);

    query q;
    std::uint32_t n = 0, k = 0, r = 0, n_max = 0, r_max = 0;
    std::string x, seq_a, seq_b;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", q.format, "text, json or csv (tables only)")
            ->check(CLI::IsMember(formats));
    };

    auto* table = app.add_subcommand("table", "print a number triangle or sequence");
    table->add_option("family", q.family, "lah, rlah, lah-bell or r-lah-bell")
        ->required()
        ->check(CLI::IsMember({"lah", "rlah", "lah-bell", "r-lah-bell"}));
    table->add_option("--n-max", n_max, "largest n")->required();
    table->add_option("--r", r, "r for rlah / r-lah-bell");
    add_common(table);

    const std::vector<std::string> poly_families{
        "complete-bell",         "incomplete-bell",     "complete-lah-bell", "incomplete-lah-bell",
        "incomplete-r-bell",     "complete-r-bell",     "incomplete-r-lah-bell",
        "complete-r-lah-bell",   "lah-bell-poly",       "theorem7"};
    std::vector<std::string> value_families{"lah", "rlah", "lah-bell", "r-lah-bell", "factorial",
                                            "binomial", "moment"};
    value_families.insert(value_families.end(), poly_families.begin(), poly_families.end());

    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--n", n, "n");
        sub->add_option("--k", k, "k");
        sub->add_option("--r", r, "r");
        sub->add_option("--x", x, "scalar x: an integer or 'symbolic'");
        sub->add_option("--seq-a", seq_a,
                        "first argument sequence: ones, factorials, symbolic or a comma-separated list");
        sub->add_option("--seq-b", seq_b, "second argument sequence, same forms as --seq-a");
        add_common(sub);
    };

    auto* poly = app.add_subcommand("poly", "print a polynomial");
    poly->add_option("family", q.family, "polynomial family")->required()->check(CLI::IsMember(poly_families));
    add_params(poly);

    auto* value = app.add_subcommand("value", "print a single exact value");
    value->add_option("family", q.family, "number family")->required()->check(CLI::IsMember(value_families));
    add_params(value);

    auto* verify_cmd = app.add_subcommand("verify", "run identity checks");
    verify_cmd->add_option("--suite", q.suite, "identity suite")
        ->check(CLI::IsMember(verify::suite_names()));
    verify_cmd->add_option("--n-max", n_max, "largest n (default 12)");
    verify_cmd->add_option("--r-max", r_max, "largest r (default 2)");
    add_common(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    CLI::App* active = app.get_subcommands().front();
    q.command = active->get_name();
    auto given = [&](const char* flag) { return active->get_option_no_throw(flag) && active->count(flag) > 0; };
    if (given("--n")) q.ints["n"] = n;
    if (given("--k")) q.ints["k"] = k;
    if (given("--r")) q.ints["r"] = r;
    if (given("--n-max")) q.ints["n-max"] = n_max;
    if (given("--r-max")) q.ints["r-max"] = r_max;
    if (given("--x")) q.x = x;
    if (given("--seq-a")) q.seq_a = seq_a;
    if (given("--seq-b")) q.seq_b = seq_b;

    try {
        if (q.command == "table")
            return cmd_table(q, out);
        if (q.command == "poly")
            return cmd_poly(q, out);
        if (q.command == "value")
            return cmd_value(q, out);
        return cmd_verify(q, out);
    } catch (const usage& e) {
        err << "lahbell: " << e.what() << '\n';
        return usage_error;
    } catch (const parameter_error& e) {
        err << "lahbell: " << e.what() << '\n';
        return usage_error;
    } catch (const length_error& e) {
        err << "lahbell: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "lahbell: internal error: " << e.what() << '\n';
        return verification_failed;
    }
}

} // namespace lahbell::cli
