#pragma once

// Constant tables shipped as fixture files: the exceptional pairs T and the
// exceptional (n, k, s) triples of the degree classification. Both are
// validated by count and shape when loaded.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "glp/errors.hpp"

#ifndef GLP_DEFAULT_FIXTURE_DIR
#define GLP_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace glp {

inline constexpr const char* kFixtureEnvVar = "GLP_FIXTURES";
inline constexpr const char* kExceptionTableFile = "exceptions_T.txt";
inline constexpr const char* kLemma11File = "lemma11_exceptions.txt";

/// Explicit override, else $GLP_FIXTURES, else the directory baked in at build time.
inline std::filesystem::path fixture_dir(const std::optional<std::string>& override_dir = std::nullopt) {
    if (override_dir && !override_dir->empty()) return *override_dir;
    if (const char* env = std::getenv(kFixtureEnvVar); env != nullptr && *env != '\0') return env;
    return GLP_DEFAULT_FIXTURE_DIR;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FixtureError("cannot open fixture " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace detail {

/// Rows of whitespace-separated unsigned integers; '#' starts a comment.
inline std::vector<std::vector<std::uint64_t>> parse_rows(const std::string& text, std::size_t width,
                                                          const std::string& name) {
    std::vector<std::vector<std::uint64_t>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::uint64_t> row;
        std::string tok;
        while (ls >> tok) {
            if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                throw FixtureError(name + ":" + std::to_string(lineno) + ": not an unsigned integer: " + tok);
            }
            row.push_back(std::stoull(tok));
        }
        if (row.empty()) continue;
        if (row.size() != width) {
            throw FixtureError(name + ":" + std::to_string(lineno) + ": expected " + std::to_string(width) + " fields");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

struct ExceptionPair {
    std::uint64_t n = 0;
    std::uint64_t s = 0;

    friend auto operator<=>(const ExceptionPair&, const ExceptionPair&) = default;
};

/// The 44 pairs (n, s) left over by the linear-factor filter.
class ExceptionTableT {
public:
    static constexpr std::size_t kExpectedSize = 44;

    static ExceptionTableT parse(const std::string& text, const std::string& name = kExceptionTableFile) {
        ExceptionTableT t;
        for (const auto& row : detail::parse_rows(text, 2, name)) t.pairs_.push_back({row[0], row[1]});
        if (t.pairs_.size() != kExpectedSize) {
            throw FixtureError(name + ": expected " + std::to_string(kExpectedSize) + " pairs, found " +
                               std::to_string(t.pairs_.size()));
        }
        for (const auto& p : t.pairs_) {
            if (p.s < 17 || p.s > 80 || p.n <= 127) {
                throw FixtureError(name + ": pair (" + std::to_string(p.n) + "," + std::to_string(p.s) +
                                   ") outside 17 <= s <= 80, n > 127");
            }
        }
        auto sorted = t.pairs_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw FixtureError(name + ": duplicate pair");
        return t;
    }

    static ExceptionTableT load(const std::filesystem::path& dir) {
        return parse(read_file(dir / kExceptionTableFile), (dir / kExceptionTableFile).string());
    }

    /// Pairs in file order.
    const std::vector<ExceptionPair>& pairs() const noexcept { return pairs_; }

    bool contains(std::uint64_t n, std::uint64_t s) const {
        return std::find(pairs_.begin(), pairs_.end(), ExceptionPair{n, s}) != pairs_.end();
    }

    /// Pairs with s_lo <= s <= s_hi, sorted by (s, n).
    std::vector<ExceptionPair> restricted(std::uint64_t s_lo, std::uint64_t s_hi) const {
        std::vector<ExceptionPair> out;
        for (const auto& p : pairs_) {
            if (p.s >= s_lo && p.s <= s_hi) out.push_back(p);
        }
        std::sort(out.begin(), out.end(), [](const ExceptionPair& a, const ExceptionPair& b) {
            return a.s != b.s ? a.s < b.s : a.n < b.n;
        });
        return out;
    }

private:
    std::vector<ExceptionPair> pairs_;
};

struct Lemma11Triple {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t s = 0;

    friend auto operator<=>(const Lemma11Triple&, const Lemma11Triple&) = default;
};

/// Exception triples (n, k, s) of the degree >= 2 classification for s <= 92.
class Lemma11Exceptions {
public:
    static constexpr std::size_t kExpectedSize = 10;
    static constexpr std::uint64_t kMaxS = 92;

    static const Lemma11Exceptions& builtin() {
        static const Lemma11Exceptions table = [] {
            Lemma11Exceptions t;
            t.triples_ = {{4, 2, 7},   {4, 2, 23},  {9, 2, 19}, {9, 2, 47},  {16, 2, 14},
                          {16, 2, 34}, {16, 2, 89}, {9, 3, 47}, {16, 3, 19}, {10, 5, 4}};
            t.validate("builtin");
            return t;
        }();
        return table;
    }

    static Lemma11Exceptions parse(const std::string& text, const std::string& name = kLemma11File) {
        Lemma11Exceptions t;
        for (const auto& row : detail::parse_rows(text, 3, name)) t.triples_.push_back({row[0], row[1], row[2]});
        t.validate(name);
        return t;
    }

    static Lemma11Exceptions load(const std::filesystem::path& dir) {
        return parse(read_file(dir / kLemma11File), (dir / kLemma11File).string());
    }

    const std::vector<Lemma11Triple>& triples() const noexcept { return triples_; }

    bool excepts(std::uint64_t n, std::uint64_t k, std::uint64_t s) const {
        return std::find(triples_.begin(), triples_.end(), Lemma11Triple{n, k, s}) != triples_.end();
    }

    /// Degrees 2 <= k <= n/2 that the classification leaves open for (n, s).
    std::vector<std::uint64_t> excepted_degrees(std::uint64_t n, std::uint64_t s) const {
        std::vector<std::uint64_t> out;
        for (const auto& t : triples_) {
            if (t.n == n && t.s == s && t.k >= 2 && 2 * t.k <= n) out.push_back(t.k);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Lemma11Exceptions& a, const Lemma11Exceptions& b) {
        auto x = a.triples_, y = b.triples_;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

private:
    void validate(const std::string& name) const {
        if (triples_.size() != kExpectedSize) {
            throw FixtureError(name + ": expected " + std::to_string(kExpectedSize) + " triples, found " +
                               std::to_string(triples_.size()));
        }
        for (const auto& t : triples_) {
            const bool n_ok = t.n == 4 || t.n == 9 || t.n == 10 || t.n == 16;
            const bool k_ok = t.k == 2 || t.k == 3 || t.k == 5;
            if (!n_ok || !k_ok) throw FixtureError(name + ": triple outside n in {4,9,10,16}, k in {2,3,5}");
        }
    }

    std::vector<Lemma11Triple> triples_;
};

}  // namespace glp
