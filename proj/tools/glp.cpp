#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "glp/candidate_sieve.hpp"
#include "glp/certifier.hpp"
#include "glp/fixtures.hpp"
#include "glp/formats.hpp"
#include "glp/newton_polygon.hpp"
#include "glp/polynomial.hpp"
#include "glp/reproduce.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw glp::Error("cannot write " + out_path);
    out << text;
}

glp::IntegerPolynomial parse_coeffs(const std::string& text) {
    std::vector<glp::BigInt> c;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            c.emplace_back(tok);
        } catch (const std::exception&) {
            throw glp::InvalidArgument("bad coefficient: " + tok);
        }
    }
    return glp::IntegerPolynomial(std::move(c));
}

glp::Ratio c_for(std::uint64_t s, const std::string& c_text) {
    return c_text.empty() ? glp::c_schedule(s) : glp::parse_ratio(c_text);
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
        failures += ok ? 0 : 1;
    };
    using namespace glp;
    check(poly_csv(g1_polynomial(GlpInstance(2, 9))) == "0,110\n1,20\n2,1", "g1(x, 2, 9) = x^2 + 20x + 110");
    check(factorial_valuation(100ULL, 2) == 97, "nu_2(100!) = 97");
    check(binomial_valuation(10ULL, 3ULL, 2) == 3, "nu_2(C(10,3)) = 3");
    check(rightmost_slope(newton_polygon(IntegerPolynomial{2, 2, 1}, 2)) == Ratio(1, 2), "rightmost slope of x^2+2x+2 at 2 is 1/2");
    check(shorey_tiwari_excludes(13, 9, 1) == std::optional<std::uint64_t>(13), "Shorey-Tiwari (13, 9, 1) -> 13");
    check(membership_test(144ULL, SieveParams(21, c_schedule(21))).member, "144 lies in H_{21,171/50}");
    check(certify(GlpInstance(272, 17)).irreducible(), "certify (272, 17)");
    try {
        const auto dir = fixture_dir();
        const auto t = ExceptionTableT::load(dir);
        check(t.pairs().size() == 44, "exception table T has 44 pairs");
        check(Lemma11Exceptions::load(dir) == Lemma11Exceptions::builtin(), "lemma11 fixture matches builtin");
    } catch (const Error& e) {
        check(false, std::string("fixtures: ") + e.what());
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Irreducibility of generalized Laguerre polynomials g1(x, n, s)"};
    app.require_subcommand(1);

    std::uint64_t n = 0, s = 0, p = 0;
    std::string format, out_path, c_text, coeffs, fixtures;
    unsigned jobs = default_jobs();
    std::size_t budget = 50;

    auto* poly = app.add_subcommand("poly", "Coefficients of g1 in ascending powers");
    poly->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    poly->add_option("--s", s, "parameter s")->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--format", format, "json or csv")->default_val("json")->check(CLI::IsMember({"json", "csv"}));
    poly->add_option("--out", out_path, "output file (default stdout)");

    auto* polygon = app.add_subcommand("polygon", "Newton polygon of g1 (or of --coeffs) at a prime");
    auto* opt_n = polygon->add_option("--n", n, "degree")->check(CLI::PositiveNumber);
    polygon->add_option("--s", s, "parameter s")->check(CLI::NonNegativeNumber);
    polygon->add_option("--coeffs", coeffs, "comma-separated coefficients, ascending powers")->excludes(opt_n);
    polygon->add_option("--p", p, "prime")->required();
    polygon->add_option("--format", format, "tsv or svg")->default_val("tsv")->check(CLI::IsMember({"tsv", "svg"}));
    polygon->add_option("--out", out_path, "output file (default stdout)");

    auto* hset = app.add_subcommand("hset", "Enumerate the candidate set H_{s,c}");
    hset->add_option("--s", s, "parameter s")->required();
    hset->add_option("--c", c_text, "c as p/q or decimal (default: schedule)");
    hset->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    hset->add_option("--format", format, "json, csv or count")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv", "count"}));
    hset->add_option("--out", out_path, "output file (default stdout)");

    auto* sieve = app.add_subcommand("sieve", "Members of H_{s,c} left by the linear-factor filter");
    sieve->add_option("--s", s, "parameter s")->required();
    sieve->add_option("--c", c_text, "c as p/q or decimal (default: schedule)");
    sieve->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sieve->add_option("--out", out_path, "output file (default stdout)");

    auto* cert = app.add_subcommand("certify", "Irreducibility certificate for g1(x, n, s)");
    cert->add_option("--n", n, "degree")->required()->check(CLI::PositiveNumber);
    cert->add_option("--s", s, "parameter s")->required()->check(CLI::NonNegativeNumber);
    cert->add_option("--budget", budget, "prime budget for root scans")->check(CLI::PositiveNumber);
    cert->add_option("--out", out_path, "output file (default stdout)");

    glp::ReproduceOptions ropts;
    auto* repro = app.add_subcommand("reproduce", "Sieve, filter and certify over a range of s; compare with T");
    repro->add_option("--s-lo", ropts.s_lo, "first s")->default_val(9);
    repro->add_option("--s-hi", ropts.s_hi, "last s")->default_val(88);
    repro->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    repro->add_option("--budget", budget, "prime budget for root scans")->check(CLI::PositiveNumber);
    repro->add_option("--out", out_path, "report file (default stdout)");
    repro->add_option("--fixtures", fixtures, "fixture directory (else $GLP_FIXTURES)");

    auto* self = app.add_subcommand("selftest", "Quick internal consistency checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*poly) {
            const glp::GlpInstance inst(n, s);
            const auto f = glp::g1_polynomial(inst);
            emit(format == "csv" ? glp::poly_csv(f) : glp::poly_json(inst, f).dump(2) + "\n", out_path);
        } else if (*polygon) {
            glp::require_prime(p);
            if (coeffs.empty() && n == 0) throw glp::InvalidArgument("polygon needs --n or --coeffs");
            const auto f = coeffs.empty() ? glp::g1_polynomial(glp::GlpInstance(n, s)) : parse_coeffs(coeffs);
            const auto pts = glp::newton_points(f, p);
            const auto np = glp::lower_hull(pts, p);
            emit(format == "svg" ? glp::polygon_svg(pts, np) : glp::polygon_tsv(pts, np), out_path);
        } else if (*hset) {
            const auto h = glp::enumerate_h(glp::SieveParams(s, c_for(s, c_text)), jobs);
            if (format == "count") {
                emit(std::to_string(h.size()) + "\n", out_path);
            } else {
                emit(format == "csv" ? glp::hset_csv(h) : glp::hset_json(h).dump(2) + "\n", out_path);
            }
        } else if (*sieve) {
            const auto run = glp::run_sieve(glp::SieveParams(s, c_for(s, c_text)), jobs);
            glp::Json survivors = glp::Json::array();
            for (const auto& sv : run.survivors) {
                survivors.push_back({{"n", glp::dec(sv.n)},
                                     {"factorization", sv.factorization.to_string()},
                                     {"part", sv.part},
                                     {"factor1_trace", glp::factor1_trace_json(sv.trace)}});
            }
            const glp::Json j{{"s", glp::dec(s)},
                              {"c", glp::dec(run.hset.params.c())},
                              {"h_size", glp::dec(run.hset.size())},
                              {"survivors", survivors}};
            emit(j.dump(2) + "\n", out_path);
        } else if (*cert) {
            glp::CertifyOptions copts;
            copts.prime_budget = budget;
            const auto c = glp::certify(glp::GlpInstance(n, s), copts);
            emit(glp::certificate_json(c).dump(2) + "\n", out_path);
            return c.irreducible() ? 0 : static_cast<int>(glp::ExitStatus::Unresolved);
        } else if (*repro) {
            ropts.jobs = jobs;
            ropts.prime_budget = budget;
            if (!fixtures.empty()) ropts.fixtures = fixtures;
            const auto report = glp::reproduce(ropts);
            emit(glp::report_json(report).dump(2) + "\n", out_path);
            std::cerr << "s in [" << report.s_lo << ", " << report.s_hi << "]: |H| total " << report.total_h()
                      << ", survivors " << report.total_survivors() << ", expected " << report.expected.size()
                      << ", status " << glp::status_name(report.status()) << "\n"
                      << glp::report_diff(report);
            return static_cast<int>(report.status());
        } else if (*self) {
            return selftest();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(glp::ExitStatus::Error);
    }
    return 0;
}
