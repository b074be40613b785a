#pragma once

// Irreducibility certificates for single members of the family. A
// certificate is a verdict plus an ordered evidence list; each item names
// the prime (and degrees) it concerns and can be re-checked on its own by
// replay_evidence.

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "glp/errors.hpp"
#include "glp/fixtures.hpp"
#include "glp/lemma_filters.hpp"
#include "glp/modp.hpp"
#include "glp/newton_polygon.hpp"
#include "glp/numeric.hpp"
#include "glp/polynomial.hpp"
#include "glp/valuation.hpp"

namespace glp {

namespace evidence {

/// A prime p with max((n+s)/2, n-1) < p <= n.
struct PrimeInterval {
    std::uint64_t prime = 0;
    friend bool operator==(const PrimeInterval&, const PrimeInterval&) = default;
};

/// Shorey-Tiwari exclusion of degree k at prime p.
struct STExclusion {
    std::uint64_t prime = 0;
    std::uint64_t k = 0;
    friend bool operator==(const STExclusion&, const STExclusion&) = default;
};

struct Factor1Witness {
    LinearWitness witness;
    friend bool operator==(const Factor1Witness&, const Factor1Witness&) = default;
};

/// p | n exactly once, s < p^2 and d + [s/p] < p.
struct Lemma6Violation {
    std::uint64_t prime = 0;
    friend bool operator==(const Lemma6Violation&, const Lemma6Violation&) = default;
};

struct FilasetaCert {
    std::uint64_t prime = 0;
    std::uint64_t l = 0;
    std::uint64_t k = 0;
    friend bool operator==(const FilasetaCert&, const FilasetaCert&) = default;
};

struct NoRootModP {
    std::uint64_t prime = 0;
    friend bool operator==(const NoRootModP&, const NoRootModP&) = default;
};

struct ModPIrreducible {
    std::uint64_t prime = 0;
    friend bool operator==(const ModPIrreducible&, const ModPIrreducible&) = default;
};

/// Factor degrees of g1 mod p; a degree that is not a subset sum of the
/// pattern cannot occur over the integers.
struct ModPFactorDegrees {
    std::uint64_t prime = 0;
    std::vector<std::size_t> degrees;
    friend bool operator==(const ModPFactorDegrees&, const ModPFactorDegrees&) = default;
};

/// The cited classification: for s <= 92 and no exception triple (n, k, s)
/// with 2 <= k <= n/2, g1 has no factor of degree >= 2.
struct ExternalLemma11 {
    std::uint64_t s_max = Lemma11Exceptions::kMaxS;
    bool exception_check_passed = true;
    friend bool operator==(const ExternalLemma11&, const ExternalLemma11&) = default;
};

}  // namespace evidence

using Evidence = std::variant<evidence::PrimeInterval, evidence::STExclusion, evidence::Factor1Witness,
                              evidence::Lemma6Violation, evidence::FilasetaCert, evidence::NoRootModP,
                              evidence::ModPIrreducible, evidence::ModPFactorDegrees, evidence::ExternalLemma11>;

inline std::string evidence_name(const Evidence& e) {
    static const char* const names[] = {"PrimeInterval", "STExclusion",       "Factor1Witness",
                                        "Lemma6Violation", "FilasetaCert",    "NoRootModP",
                                        "ModPIrreducible", "ModPFactorDegrees", "ExternalLemma11"};
    return names[e.index()];
}

inline std::string to_string(const Evidence& e) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, evidence::PrimeInterval>) {
                return "PrimeInterval(" + std::to_string(v.prime) + ")";
            } else if constexpr (std::is_same_v<T, evidence::STExclusion>) {
                return "STExclusion(" + std::to_string(v.prime) + ", " + std::to_string(v.k) + ")";
            } else if constexpr (std::is_same_v<T, evidence::Factor1Witness>) {
                return "Factor1Witness(" + std::to_string(v.witness.prime) + ", " + to_string(v.witness.kind) + ")";
            } else if constexpr (std::is_same_v<T, evidence::Lemma6Violation>) {
                return "Lemma6Violation(" + std::to_string(v.prime) + ")";
            } else if constexpr (std::is_same_v<T, evidence::FilasetaCert>) {
                return "FilasetaCert(" + std::to_string(v.prime) + ", " + std::to_string(v.l) + ", " +
                       std::to_string(v.k) + ")";
            } else if constexpr (std::is_same_v<T, evidence::NoRootModP>) {
                return "NoRootModP(" + std::to_string(v.prime) + ")";
            } else if constexpr (std::is_same_v<T, evidence::ModPIrreducible>) {
                return "ModPIrreducible(" + std::to_string(v.prime) + ")";
            } else if constexpr (std::is_same_v<T, evidence::ModPFactorDegrees>) {
                std::string d;
                for (auto x : v.degrees) d += (d.empty() ? "" : ",") + std::to_string(x);
                return "ModPFactorDegrees(" + std::to_string(v.prime) + ", [" + d + "])";
            } else {
                return "ExternalLemma11(s <= " + std::to_string(v.s_max) + ")";
            }
        },
        e);
}

enum class VerdictKind { Irreducible, NoLinearFactor, NoFactorDegreeAtMost, Unresolved };

struct Verdict {
    VerdictKind kind = VerdictKind::Unresolved;
    std::uint64_t k = 0;  ///< only for NoFactorDegreeAtMost

    std::string to_string() const {
        switch (kind) {
            case VerdictKind::Irreducible: return "Irreducible";
            case VerdictKind::NoLinearFactor: return "NoLinearFactor";
            case VerdictKind::NoFactorDegreeAtMost: return "NoFactorDegreeAtMost(" + std::to_string(k) + ")";
            case VerdictKind::Unresolved: break;
        }
        return "Unresolved";
    }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct Certificate {
    GlpInstance subject;
    Verdict verdict;
    std::vector<Evidence> evidence;
    std::vector<std::string> notes;

    bool irreducible() const noexcept { return verdict.kind == VerdictKind::Irreducible; }

    template <class T>
    bool has() const {
        for (const auto& e : evidence) {
            if (std::holds_alternative<T>(e)) return true;
        }
        return false;
    }
};

struct CertifyOptions {
    std::size_t prime_budget = 50;
    std::size_t confirm_degree_limit = 12;
    std::size_t degree_bound = kDefaultIrreducibilityDegreeBound;
    const Lemma11Exceptions* lemma11 = nullptr;  ///< builtin table when null

    const Lemma11Exceptions& exceptions() const { return lemma11 ? *lemma11 : Lemma11Exceptions::builtin(); }
};

/// Smallest prime p with max((n+s)/2, n-1) < p <= n; (n+s)/2 < p is tested as n+s < 2p.
inline std::optional<std::uint64_t> prime_interval_certificate(std::uint64_t n, std::uint64_t s) {
    if (n < 2) throw InvalidArgument("prime_interval_certificate requires n >= 2");
    for (std::uint64_t p : primes_in(static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n))) {
        if (n + s < 2 * p) return p;
    }
    return std::nullopt;
}

namespace detail {

/// g1(0) = n!·C(n+s, s) mod p.
inline bool divides_constant_term(const GlpInstance& inst, std::uint64_t p) {
    if (p <= inst.n()) return true;
    return binomial_valuation(inst.n() + inst.s(), inst.s(), p) > 0;
}

class LazyG1 {
public:
    explicit LazyG1(const GlpInstance& inst) : inst_(inst) {}
    const IntegerPolynomial& get() {
        if (!poly_) poly_.emplace(g1_polynomial(inst_));
        return *poly_;
    }

private:
    GlpInstance inst_;
    std::optional<IntegerPolynomial> poly_;
};

inline std::optional<std::uint64_t> first_rootless_prime(const GlpInstance& inst, std::size_t budget, LazyG1& g1) {
    if (inst.n() == 1) return std::nullopt;
    std::size_t tried = 0;
    for (std::uint64_t p = 2; tried < budget; ++p) {
        if (!is_prime(p)) continue;
        // 0 is a root mod p here; such primes say nothing and are not counted.
        if (divides_constant_term(inst, p)) continue;
        ++tried;
        if (no_root_mod_p(reduce_mod_p(g1.get(), p))) return p;
    }
    return std::nullopt;
}

}  // namespace detail

/// The first prime among prime_budget candidates at which g1 has no root.
/// Primes dividing g1(0) always give the root 0 and are skipped without
/// being charged to the budget.
inline std::optional<std::uint64_t> no_linear_factor_certificate(const GlpInstance& inst, std::size_t prime_budget) {
    if (prime_budget == 0) throw InvalidArgument("prime budget must be positive");
    detail::LazyG1 g1(inst);
    return detail::first_rootless_prime(inst, prime_budget, g1);
}

namespace detail {

inline Verdict verdict_from(const std::vector<bool>& excluded) {
    const std::size_t half = excluded.size() - 1;
    std::size_t prefix = 0;
    while (prefix < half && excluded[prefix + 1]) ++prefix;
    if (prefix == half) return {VerdictKind::Irreducible, 0};
    if (prefix == 0) return {VerdictKind::Unresolved, 0};
    if (prefix == 1) return {VerdictKind::NoLinearFactor, 0};
    return {VerdictKind::NoFactorDegreeAtMost, prefix};
}

inline bool all_excluded(const std::vector<bool>& excluded) {
    for (std::size_t k = 1; k < excluded.size(); ++k) {
        if (!excluded[k]) return false;
    }
    return true;
}

/// Degrees 1..n/2 that a single evidence item rules out, assuming it replays.
/// Lemma6Violation depends on a recorded ExternalLemma11.
inline std::vector<std::size_t> degrees_excluded_by(const Evidence& e, const GlpInstance& inst, bool has_lemma11) {
    const std::size_t half = inst.n() / 2;
    std::vector<std::size_t> out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, evidence::PrimeInterval> || std::is_same_v<T, evidence::ModPIrreducible>) {
                for (std::size_t k = 1; k <= half; ++k) out.push_back(k);
            } else if constexpr (std::is_same_v<T, evidence::STExclusion>) {
                if (v.k >= 1 && v.k <= half) out.push_back(v.k);
            } else if constexpr (std::is_same_v<T, evidence::Factor1Witness> ||
                                 std::is_same_v<T, evidence::NoRootModP>) {
                if (half >= 1) out.push_back(1);
            } else if constexpr (std::is_same_v<T, evidence::Lemma6Violation>) {
                if (half >= 1 && has_lemma11 && inst.n() >= 3) out.push_back(1);
            } else if constexpr (std::is_same_v<T, evidence::FilasetaCert>) {
                for (std::size_t k = v.l + 1; k <= v.k && k <= half; ++k) out.push_back(k);
            } else if constexpr (std::is_same_v<T, evidence::ModPFactorDegrees>) {
                const auto reach = achievable_degrees(v.degrees);
                for (std::size_t k = 1; k <= half; ++k) {
                    if (k >= reach.size() || !reach[k]) out.push_back(k);
                }
            } else {
                for (std::size_t k = 2; k <= half; ++k) out.push_back(k);
            }
        },
        e);
    return out;
}

inline std::vector<bool> excluded_by(const std::vector<Evidence>& items, const GlpInstance& inst) {
    bool has_lemma11 = false;
    for (const auto& e : items) has_lemma11 = has_lemma11 || std::holds_alternative<evidence::ExternalLemma11>(e);
    std::vector<bool> excluded(inst.n() / 2 + 1, false);
    for (const auto& e : items) {
        for (auto k : degrees_excluded_by(e, inst, has_lemma11)) excluded[k] = true;
    }
    return excluded;
}

inline bool lemma11_applies(const GlpInstance& inst, const Lemma11Exceptions& table) {
    return inst.s() <= Lemma11Exceptions::kMaxS && table.excepted_degrees(inst.n(), inst.s()).empty();
}

inline void add_notes(Certificate& cert, const CertifyOptions& opts) {
    const auto half = cert.subject.n() / 2;
    if (cert.has<evidence::ExternalLemma11>() && half >= 2) {
        cert.notes.push_back("factor degrees 2.." + std::to_string(half) +
                             " are excluded by the cited external classification for s <= 92, which is not "
                             "re-derived here");
        if (cert.subject.n() > opts.degree_bound) {
            cert.notes.push_back("degree " + std::to_string(cert.subject.n()) + " exceeds the mod-p bound " +
                                 std::to_string(opts.degree_bound) +
                                 ", so this verdict structurally depends on the external classification");
        }
    }
    if (cert.has<evidence::PrimeInterval>()) {
        cert.notes.push_back("a prime in the interval certifies irreducibility by the cited external result");
    }
    if (cert.verdict.kind == VerdictKind::Unresolved) {
        cert.notes.push_back("no evidence excludes a linear factor; this is not a reducibility claim");
    }
}

}  // namespace detail

/// Assembles a certificate for g1(x, n, s). Evidence order is fixed:
/// prime interval, external classification, linear exclusion (Shorey-Tiwari,
/// linear filter, root scan, congruence condition), Filaseta, mod-p factor
/// degrees, and a mod-p irreducibility confirmation for small degree.
/// The verdict never claims reducibility.
inline Certificate certify(const GlpInstance& inst, const CertifyOptions& opts = {}) {
    const std::uint64_t n = inst.n(), s = inst.s();
    const std::size_t half = n / 2;
    Certificate cert{inst, {}, {}, {}};
    std::vector<bool> excluded(half + 1, false);
    auto mark = [&](const Evidence& e) {
        for (auto k : detail::degrees_excluded_by(e, inst, cert.has<evidence::ExternalLemma11>())) excluded[k] = true;
    };
    auto add = [&](Evidence e) {
        cert.evidence.push_back(e);
        mark(cert.evidence.back());
    };
    detail::LazyG1 g1(inst);

    std::optional<std::uint64_t> interval;
    if (n >= 2) interval = prime_interval_certificate(n, s);
    if (interval) add(evidence::PrimeInterval{*interval});

    const bool lemma11 = n >= 2 && detail::lemma11_applies(inst, opts.exceptions());
    if (lemma11 && half >= 2) add(evidence::ExternalLemma11{});

    if (half >= 1) {
        if (auto p = shorey_tiwari_excludes(n, s, 1)) {
            add(evidence::STExclusion{*p, 1});
        } else if (auto out = factor1_no_linear(n, s); out.witness) {
            add(evidence::Factor1Witness{*out.witness});
        } else if (!interval) {
            // Root scans and the rest need the polynomial; a prime interval
            // already settles everything.
            if (auto p = detail::first_rootless_prime(inst, opts.prime_budget, g1)) {
                add(evidence::NoRootModP{*p});
            } else if (lemma11 && n >= 3) {
                for (const auto& pe : factorize(n).entries()) {
                    if (pe.exponent != 1 || BigInt(s) >= BigInt(pe.prime) * pe.prime) continue;
                    if (!lemma6_condition(n, s, pe.prime)) {
                        add(evidence::Lemma6Violation{pe.prime});
                        break;
                    }
                }
            }
        }
    }

    if (!detail::all_excluded(excluded)) {
        for (std::size_t k = 2; k <= half; ++k) {
            if (excluded[k]) continue;
            for (std::uint64_t p : primes_in(1, static_cast<std::int64_t>(std::max<std::uint64_t>(n, 2)))) {
                if (filaseta_excludes(g1.get(), p, k - 1, k)) {
                    std::size_t top = k;
                    while (top < half && filaseta_excludes(g1.get(), p, k - 1, top + 1)) ++top;
                    add(evidence::FilasetaCert{p, k - 1, top});
                    break;
                }
            }
        }
    }

    if (!detail::all_excluded(excluded) && n <= opts.degree_bound) {
        std::size_t tried = 0;
        for (std::uint64_t p = 2; tried < opts.prime_budget && !detail::all_excluded(excluded); ++p) {
            if (!is_prime(p)) continue;
            ++tried;
            const auto pattern = factor_degrees_mod_p(g1.get(), p);
            if (!pattern) continue;
            if (pattern->size() == 1) {
                add(evidence::ModPIrreducible{p});
                break;
            }
            const auto reach = achievable_degrees(*pattern);
            bool news = false;
            for (std::size_t k = 1; k <= half; ++k) news = news || (!excluded[k] && !reach[k]);
            if (news) add(evidence::ModPFactorDegrees{p, *pattern});
        }
    }

    if (detail::all_excluded(excluded) && n >= 2 && n <= opts.confirm_degree_limit &&
        !cert.has<evidence::ModPIrreducible>()) {
        std::size_t tried = 0;
        for (std::uint64_t p = 2; tried < opts.prime_budget; ++p) {
            if (!is_prime(p)) continue;
            ++tried;
            if (mod_p_irreducible(g1.get(), p, opts.degree_bound)) {
                add(evidence::ModPIrreducible{p});
                break;
            }
        }
    }

    cert.verdict = detail::verdict_from(excluded);
    detail::add_notes(cert, opts);
    return cert;
}

/// Irreducibility for n <= 127, s <= 103: the prime interval first, then certify.
inline Certificate small_range_check(std::uint64_t n, std::uint64_t s, const CertifyOptions& opts = {}) {
    if (n < 1 || n > 127 || s > 103) throw InvalidArgument("small_range_check requires 1 <= n <= 127, s <= 103");
    const GlpInstance inst(n, s);
    if (n >= 2) {
        if (auto p = prime_interval_certificate(n, s)) {
            Certificate cert{inst, {VerdictKind::Irreducible, 0}, {evidence::PrimeInterval{*p}}, {}};
            detail::add_notes(cert, opts);
            return cert;
        }
    }
    return certify(inst, opts);
}

/// Re-checks one evidence item against the operation that defines it.
/// Returns an empty string when it holds, else the reason.
inline std::string replay_evidence(const Evidence& e, const GlpInstance& inst, const CertifyOptions& opts = {}) {
    const std::uint64_t n = inst.n(), s = inst.s();
    try {
        return std::visit(
            [&](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, evidence::PrimeInterval>) {
                    if (n < 2 || !is_prime(v.prime) || v.prime > n || v.prime + 1 < n || n + s >= 2 * v.prime) {
                        return "prime not in the interval";
                    }
                } else if constexpr (std::is_same_v<T, evidence::STExclusion>) {
                    if (v.k < 1 || 2 * v.k > n || !is_prime(v.prime) || v.prime <= v.k) return "bad parameters";
                    bool divides = false;
                    for (std::uint64_t i = 0; i < v.k; ++i) divides = divides || (n - i) % v.prime == 0;
                    if (!divides) return "prime does not divide the falling product";
                    if (binomial_valuation(n + s, s, v.prime) != 0) return "prime divides C(n+s, s)";
                } else if constexpr (std::is_same_v<T, evidence::Factor1Witness>) {
                    const auto c = factor1_check_prime(n, s, v.witness.prime);
                    const bool on_n_or_s1 = n % v.witness.prime == 0 || (s + 1) % v.witness.prime == 0;
                    if (!on_n_or_s1) return "prime does not divide n(s+1)";
                    if (!c.passes || *c.passes != v.witness.kind || c.u != v.witness.u || c.z0 != v.witness.z0) {
                        return "linear filter does not pass at this prime";
                    }
                } else if constexpr (std::is_same_v<T, evidence::Lemma6Violation>) {
                    if (lemma6_condition(n, s, v.prime)) return "congruence condition holds";
                } else if constexpr (std::is_same_v<T, evidence::FilasetaCert>) {
                    if (!filaseta_excludes(g1_polynomial(inst), v.prime, v.l, v.k)) return "Filaseta hypotheses fail";
                } else if constexpr (std::is_same_v<T, evidence::NoRootModP>) {
                    if (!is_prime(v.prime) || !no_root_mod_p(g1_polynomial(inst), v.prime)) return "root found mod p";
                } else if constexpr (std::is_same_v<T, evidence::ModPIrreducible>) {
                    if (!mod_p_irreducible(g1_polynomial(inst), v.prime, opts.degree_bound)) return "reducible mod p";
                } else if constexpr (std::is_same_v<T, evidence::ModPFactorDegrees>) {
                    if (factor_degrees_mod_p(g1_polynomial(inst), v.prime) != v.degrees) return "pattern mismatch";
                } else {
                    if (v.s_max != Lemma11Exceptions::kMaxS || !v.exception_check_passed ||
                        !detail::lemma11_applies(inst, opts.exceptions())) {
                        return "external classification does not apply";
                    }
                }
                return {};
            },
            e);
    } catch (const Error& err) {
        return err.what();
    }
}

/// Replays every item and recomputes the verdict from the evidence alone.
/// Returns the list of problems; empty means the certificate checks out.
inline std::vector<std::string> verify_certificate(const Certificate& cert, const CertifyOptions& opts = {}) {
    std::vector<std::string> problems;
    for (const auto& e : cert.evidence) {
        if (auto why = replay_evidence(e, cert.subject, opts); !why.empty()) {
            problems.push_back(to_string(e) + ": " + why);
        }
    }
    const Verdict derived = detail::verdict_from(detail::excluded_by(cert.evidence, cert.subject));
    if (!(derived == cert.verdict)) {
        problems.push_back("verdict " + cert.verdict.to_string() + " does not follow from evidence (" +
                           derived.to_string() + ")");
    }
    return problems;
}

}  // namespace glp
