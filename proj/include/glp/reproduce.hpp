#pragma once

// End-to-end reproduction over a range of s: enumerate H_{s,c}, filter,
// certify the survivors, and compare the union of survivors with T.
// Linking this header requires libcrypto (fixture checksums).

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "glp/candidate_sieve.hpp"
#include "glp/certifier.hpp"
#include "glp/fixtures.hpp"
#include "glp/formats.hpp"

namespace glp {

inline constexpr const char* kVersion = "1.0.0";

inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return hex.str();
}

enum class ExitStatus : int { Reproduced = 0, Error = 1, Mismatch = 2, Unresolved = 3 };

struct ReproduceOptions {
    std::uint64_t s_lo = 9;
    std::uint64_t s_hi = 88;
    unsigned jobs = 1;
    std::size_t prime_budget = 50;
    std::optional<std::string> fixtures;
};

struct SRecord {
    std::uint64_t s = 0;
    Ratio c;
    std::size_t h_size = 0;
    std::size_t h1_size = 0;
    std::size_t h2_size = 0;
    std::vector<SieveSurvivor> survivors;
    std::vector<Certificate> certificates;  ///< parallel to survivors
    double seconds = 0;
};

struct RunReport {
    std::uint64_t s_lo = 0;
    std::uint64_t s_hi = 0;
    std::vector<SRecord> records;
    std::vector<ExceptionPair> expected;    ///< T restricted to [s_lo, s_hi]
    std::vector<ExceptionPair> missing;     ///< in T, not a survivor
    std::vector<ExceptionPair> unexpected;  ///< a survivor, not in T
    std::vector<ExceptionPair> unresolved;  ///< survivors whose certificate is not Irreducible
    std::string checksum_t;
    std::string checksum_lemma11;
    double total_seconds = 0;

    ExitStatus status() const {
        if (!missing.empty() || !unexpected.empty()) return ExitStatus::Mismatch;
        if (!unresolved.empty()) return ExitStatus::Unresolved;
        return ExitStatus::Reproduced;
    }

    std::size_t total_h() const {
        std::size_t t = 0;
        for (const auto& r : records) t += r.h_size;
        return t;
    }

    std::size_t total_survivors() const {
        std::size_t t = 0;
        for (const auto& r : records) t += r.survivors.size();
        return t;
    }
};

inline std::string status_name(ExitStatus s) {
    switch (s) {
        case ExitStatus::Reproduced: return "reproduced";
        case ExitStatus::Mismatch: return "mismatch";
        case ExitStatus::Unresolved: return "unresolved";
        case ExitStatus::Error: break;
    }
    return "error";
}

inline RunReport reproduce(const ReproduceOptions& opts) {
    if (!(9 <= opts.s_lo && opts.s_lo <= opts.s_hi && opts.s_hi <= 88)) {
        throw InvalidArgument("reproduce requires 9 <= s_lo <= s_hi <= 88");
    }
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto dir = fixture_dir(opts.fixtures);
    const std::string t_text = read_file(dir / kExceptionTableFile);
    const std::string l_text = read_file(dir / kLemma11File);
    const auto table = ExceptionTableT::parse(t_text, (dir / kExceptionTableFile).string());
    const auto lemma11 = Lemma11Exceptions::parse(l_text, (dir / kLemma11File).string());
    if (!(lemma11 == Lemma11Exceptions::builtin())) throw FixtureError("lemma11 fixture differs from the builtin table");

    RunReport report;
    report.s_lo = opts.s_lo;
    report.s_hi = opts.s_hi;
    report.checksum_t = sha256_hex(t_text);
    report.checksum_lemma11 = sha256_hex(l_text);
    report.expected = table.restricted(opts.s_lo, opts.s_hi);

    CertifyOptions copts;
    copts.prime_budget = opts.prime_budget;
    copts.lemma11 = &lemma11;

    std::set<ExceptionPair> found;
    for (std::uint64_t s = opts.s_lo; s <= opts.s_hi; ++s) {
        const auto t0 = clock::now();
        SRecord rec;
        rec.s = s;
        rec.c = c_schedule(s);
        SieveRun run = run_sieve(SieveParams(s, rec.c), opts.jobs);
        rec.h_size = run.hset.size();
        rec.h1_size = run.hset.part_size(1);
        rec.h2_size = run.hset.part_size(2);
        for (const auto& sv : run.survivors) {
            const auto n = static_cast<std::uint64_t>(sv.n);
            rec.certificates.push_back(certify(GlpInstance(n, s), copts));
            found.insert({n, s});
            if (!rec.certificates.back().irreducible()) report.unresolved.push_back({n, s});
        }
        rec.survivors = std::move(run.survivors);
        rec.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        report.records.push_back(std::move(rec));
    }

    const std::set<ExceptionPair> expected(report.expected.begin(), report.expected.end());
    for (const auto& p : report.expected) {
        if (!found.count(p)) report.missing.push_back(p);
    }
    for (const auto& r : report.records) {
        for (const auto& sv : r.survivors) {
            const ExceptionPair p{static_cast<std::uint64_t>(sv.n), r.s};
            if (!expected.count(p)) report.unexpected.push_back(p);
        }
    }
    report.total_seconds = std::chrono::duration<double>(clock::now() - start).count();
    return report;
}

inline Json pair_json(const ExceptionPair& p) { return Json{{"n", dec(p.n)}, {"s", dec(p.s)}}; }

/// Everything except wall-clock timings, which sit under the "timings" key
/// in report_json. No field depends on the number of jobs.
inline Json report_body_json(const RunReport& r) {
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json survivors = Json::array();
        for (std::size_t i = 0; i < rec.survivors.size(); ++i) {
            const auto& sv = rec.survivors[i];
            survivors.push_back(Json{{"n", dec(sv.n)},
                                     {"factorization", sv.factorization.to_string()},
                                     {"part", sv.part},
                                     {"factor1_trace", factor1_trace_json(sv.trace)},
                                     {"certificate", certificate_json(rec.certificates[i])}});
        }
        records.push_back(Json{{"s", dec(rec.s)},
                               {"c", dec(rec.c)},
                               {"h_size", dec(rec.h_size)},
                               {"h1_size", dec(rec.h1_size)},
                               {"h2_size", dec(rec.h2_size)},
                               {"survivors", survivors}});
    }
    auto pairs = [](const std::vector<ExceptionPair>& v) {
        Json a = Json::array();
        for (const auto& p : v) a.push_back(pair_json(p));
        return a;
    };
    // Full traces for survivors outside T.
    Json unexpected = Json::array();
    for (const auto& p : r.unexpected) {
        for (const auto& rec : r.records) {
            if (rec.s != p.s) continue;
            for (std::size_t i = 0; i < rec.survivors.size(); ++i) {
                if (rec.survivors[i].n != p.n) continue;
                unexpected.push_back(Json{{"n", dec(p.n)},
                                          {"s", dec(p.s)},
                                          {"factorization", rec.survivors[i].factorization.to_string()},
                                          {"factor1_trace", factor1_trace_json(rec.survivors[i].trace)},
                                          {"certificate", certificate_json(rec.certificates[i])}});
            }
        }
    }
    std::size_t certified = 0;
    for (const auto& rec : r.records) {
        for (const auto& c : rec.certificates) certified += c.irreducible() ? 1 : 0;
    }
    return Json{{"version", kVersion},
                {"s_range", Json{{"lo", dec(r.s_lo)}, {"hi", dec(r.s_hi)}}},
                {"fixtures", Json{{"exceptions_T_sha256", r.checksum_t}, {"lemma11_sha256", r.checksum_lemma11}}},
                {"records", records},
                {"totals",
                 Json{{"h_size", dec(r.total_h())},
                      {"survivors", dec(r.total_survivors())},
                      {"certified_irreducible", dec(certified)},
                      {"unresolved", dec(r.unresolved.size())}}},
                {"comparison",
                 Json{{"expected", pairs(r.expected)},
                      {"missing", pairs(r.missing)},
                      {"unexpected", unexpected},
                      {"unresolved", pairs(r.unresolved)}}},
                {"status", status_name(r.status())}};
}

inline Json report_json(const RunReport& r) {
    Json j = report_body_json(r);
    Json per_s = Json::object();
    for (const auto& rec : r.records) per_s[dec(rec.s)] = rec.seconds;
    j["timings"] = Json{{"total_seconds", r.total_seconds}, {"per_s_seconds", per_s}};
    return j;
}

/// Human-readable diff between the survivors and T.
inline std::string report_diff(const RunReport& r) {
    std::ostringstream out;
    for (const auto& p : r.missing) out << "- (" << p.n << ", " << p.s << ") in T but not a survivor\n";
    for (const auto& p : r.unexpected) out << "+ (" << p.n << ", " << p.s << ") survivor not in T\n";
    for (const auto& p : r.unresolved) out << "? (" << p.n << ", " << p.s << ") certificate unresolved\n";
    return out.str();
}

}  // namespace glp
