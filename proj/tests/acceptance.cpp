// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "lahbell/exact.hpp"
#include "lahbell/poly_json.hpp"
#include "lahbell/verify.hpp"

namespace {

using namespace lahbell;

struct verdict {
    bool passed = true;
    std::string detail;

    void require(const verify::CheckResult& r)
    {
        detail += (detail.empty() ? "" : "; ") + r.bounds + " " + std::to_string(r.cases) + " cases";
        if (!r.passed) {
            passed = false;
            detail += " FAILED " + r.identity + ": " + r.counterexample.value_or("");
        }
    }

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
};

struct process_result {
    int status = -1;
    std::string out;
};

process_result run_cli(const std::string& args)
{
    const std::string command = std::string(LAHBELL_CLI_PATH) + " " + args + " 2>/dev/null";
    process_result r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// B^L_n for n = 0..25 and B^L_{n,r} for r = 1..3, n = 0..9, from an
// independent rational power-series expansion.
const std::vector<const char*> frozen_lah_bell{
    "1", "1", "3", "13", "73", "501", "4051", "37633", "394353", "4596553", "58941091",
    "824073141", "12470162233", "202976401213", "3535017524403", "65573803186921",
    "1290434218669921", "26846616451246353", "588633468315403843", "13564373693588558173",
    "327697927886085654441", "8281153039765859726341", "218456450997775993367443",
    "6004647590528092507965393", "171679472549945695230447313",
    "5097728684975832001895021401"};
const std::vector<std::vector<long long>> frozen_r_lah_bell{
    {1, 3, 13, 73, 501, 4051, 37633, 394353, 4596553, 58941091},
    {1, 5, 31, 229, 1961, 19081, 207775, 2501801, 32989969, 472630861},
    {1, 7, 57, 529, 5509, 63591, 805597, 11109337, 165625929, 2654025319}};

verdict criterion_1()
{
    verdict v;
    v.require(verify::lah_bell_triple(25));
    for (std::uint32_t n = 0; n < frozen_lah_bell.size(); ++n)
        v.require(lah_bell_number(n) == Integer(frozen_lah_bell[n]), "frozen B^L_" + std::to_string(n));
    return v;
}

verdict criterion_2()
{
    verdict v;
    v.require(verify::lah_triple(18));
    return v;
}

verdict criterion_3()
{
    verdict v;
    v.require(verify::rlah_triple(12, 3));
    return v;
}

verdict criterion_4()
{
    verdict v;
    v.require(verify::r_lah_bell_numbers(15, 3));
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::uint32_t n = 0; n < 10; ++n)
            v.require(r_lah_bell_number(n, r) == frozen_r_lah_bell[r - 1][n],
                      "frozen B^L_{" + std::to_string(n) + "," + std::to_string(r) + "}");
    return v;
}

verdict criterion_5()
{
    verdict v;
    v.require(verify::lah_bell_factorial_substitution(10));
    v.require(verify::lah_bell_homogeneity(10, -3, 3));
    return v;
}

verdict criterion_6()
{
    verdict v;
    v.require(verify::complete_lah_bell_decomposition(10));
    return v;
}

verdict criterion_7()
{
    verdict v;
    v.require(verify::uniform_lah_bell(12));
    return v;
}

verdict criterion_8()
{
    verdict v;
    v.require(verify::r_bell_lah_weighting(10, 2));
    return v;
}

verdict criterion_9()
{
    verdict v;
    v.require(verify::complete_r_lah_bell_routes(12, 3));
    v.require(verify::all_ones_r_lah_bell(12, 3));
    return v;
}

verdict criterion_10()
{
    verdict v;
    v.require(verify::direct_expansion(8, 2));
    return v;
}

verdict criterion_11()
{
    verdict v;
    v.require(verify::uniform_r_lah_bell(10, 2));
    return v;
}

verdict criterion_12()
{
    verdict v;
    v.require(verify::faa_di_bruno(10));
    return v;
}

verdict criterion_13()
{
    verdict v;
    const auto all = run_cli("verify --suite all");
    v.require(all.status == 0, "verify --suite all exit status " + std::to_string(all.status));

    std::size_t goldens = 0;
    std::ifstream cases(std::string(LAHBELL_GOLDEN_DIR) + "/cases.txt");
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto a = line.find('|');
        const auto b = line.find('|', a + 1);
        const auto name = line.substr(0, a);
        const int status = std::stoi(line.substr(a + 1, b - a - 1));
        const auto r = run_cli(line.substr(b + 1));
        v.require(r.status == status, name + " exit status");
        v.require(r.out == slurp(std::string(LAHBELL_GOLDEN_DIR) + "/" + name + ".out"), name + " output");
        ++goldens;
    }
    v.require(goldens >= 20, "golden case list");

    std::size_t records = 0;
    for (const auto* args : {"table lah --n-max 8 --format json", "table r-lah-bell --r 3 --n-max 8 --format json",
                             "poly complete-r-lah-bell --n 3 --r 1 --format json",
                             "poly theorem7 --n 3 --r 1 --format json", "value lah-bell --n 25 --format json",
                             "verify --suite prop2 --n-max 6 --format json"}) {
        const auto r = run_cli(args);
        const auto body = r.out.substr(0, r.out.empty() ? 0 : r.out.size() - 1);
        bool ok = r.status == 0 && json::accept(body);
        if (ok) {
            const auto parsed = json::parse(body);
            ok = parsed.dump() == body;
            if (ok && parsed["kind"] == "polynomial")
                ok = to_json(polynomial_from_json(parsed["payload"])) == parsed["payload"];
        }
        v.require(ok, std::string("json round trip: ") + args);
        ++records;
    }
    v.detail = std::to_string(goldens) + " goldens, " + std::to_string(records) + " json records" +
               (v.detail.empty() ? "" : "; " + v.detail);
    return v;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<verdict()>>> criteria{
        {"Lah-Bell numbers: closed form = complete Bell at factorials = series, n<=25", criterion_1},
        {"Lah numbers: closed form = pi-sum = series, n<=18", criterion_2},
        {"r-Lah numbers: closed form = Lambda-sum = series, n<=12 r<=3", criterion_3},
        {"r-extended Lah-Bell numbers: sum of r-Lah = series, n<=15 r<=3", criterion_4},
        {"factorial substitution and homogeneity, symbolic, n<=10", criterion_5},
        {"complete Lah-Bell decomposition, symbolic, 1<=n<=10", criterion_6},
        {"complete Lah-Bell at a uniform scalar, n<=12", criterion_7},
        {"r-Bell bridge under Lah weighting, symbolic a,b, n<=10 r<=2", criterion_8},
        {"complete/incomplete r-extended Lah-Bell at all-ones, n<=12 r<=3", criterion_9},
        {"direct expansion vs series, symbolic x,y, n<=8 r<=2", criterion_10},
        {"uniform-argument sum = r-extended Lah-Bell polynomial, n<=10 r<=2", criterion_11},
        {"Faa di Bruno derivative check, m<=10", criterion_12},
        {"CLI contract: verify exit status, json round trip, goldens", criterion_13},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.passed = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first
                  << " (" << v.detail << ")\n";
        failed += v.passed ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
