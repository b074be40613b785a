#pragma once

// Text formats: polynomial CSV/JSON, Newton polygon TSV/SVG, and canonical
// JSON for certificates, candidate sets and sieve traces. JSON integers are
// always decimal strings; object keys come out sorted.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glp/candidate_sieve.hpp"
#include "glp/certifier.hpp"
#include "glp/newton_polygon.hpp"
#include "glp/polynomial.hpp"

namespace glp {

using Json = nlohmann::json;

inline std::string dec(std::uint64_t x) { return std::to_string(x); }
inline std::string dec(const BigInt& x) { return x.str(); }
inline std::string dec(const Ratio& q) { return to_string(q); }

/// "j,c_j" per line, ascending powers, no trailing newline.
inline std::string poly_csv(const IntegerPolynomial& f) {
    std::string out;
    for (std::size_t j = 0; j <= f.degree(); ++j) {
        if (j) out += '\n';
        out += std::to_string(j) + "," + f[j].str();
    }
    return out;
}

inline Json poly_json(const GlpInstance& inst, const IntegerPolynomial& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(c.str());
    return Json{{"n", dec(inst.n())}, {"s", dec(inst.s())}, {"coefficients", coeffs}};
}

/// One "x\ty" line per point (y = inf for a zero coefficient), then
/// "hull\tx,y x,y ...". No trailing newline.
inline std::string polygon_tsv(const std::vector<PolygonPoint>& points, const NewtonPolygon& np) {
    std::string out;
    for (const auto& pt : points) out += std::to_string(pt.x) + "\t" + pt.y.to_string() + "\n";
    out += "hull\t";
    for (std::size_t i = 0; i < np.vertices().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(np.vertices()[i].x) + "," + std::to_string(np.vertices()[i].y);
    }
    return out;
}

/// Points as circles and the hull as a single polyline, y axis pointing up.
inline std::string polygon_svg(const std::vector<PolygonPoint>& points, const NewtonPolygon& np) {
    std::int64_t max_x = 1, max_y = 1;
    for (const auto& pt : points) {
        max_x = std::max(max_x, pt.x);
        if (pt.y.is_finite()) max_y = std::max<std::int64_t>(max_y, static_cast<std::int64_t>(pt.y.value()));
    }
    const double width = 640, height = 480, margin = 40;
    const double sx = (width - 2 * margin) / static_cast<double>(max_x);
    const double sy = (height - 2 * margin) / static_cast<double>(max_y);
    auto px = [&](std::int64_t x) { return margin + sx * static_cast<double>(x); };
    auto py = [&](std::int64_t y) { return height - margin - sy * static_cast<double>(y); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<title>Newton polygon, p = " << np.prime() << "</title>\n";
    for (const auto& pt : points) {
        if (pt.y.is_infinite()) continue;
        svg << "<circle cx=\"" << px(pt.x) << "\" cy=\"" << py(static_cast<std::int64_t>(pt.y.value()))
            << "\" r=\"3\" fill=\"black\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < np.vertices().size(); ++i) {
        if (i) svg << ' ';
        svg << px(np.vertices()[i].x) << "," << py(np.vertices()[i].y);
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

inline Json evidence_json(const Evidence& e) {
    Json j{{"kind", evidence_name(e)}};
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, evidence::STExclusion>) {
                j["prime"] = dec(v.prime);
                j["k"] = dec(v.k);
            } else if constexpr (std::is_same_v<T, evidence::Factor1Witness>) {
                j["prime"] = dec(v.witness.prime);
                j["case"] = to_string(v.witness.kind);
                j["u"] = dec(v.witness.u);
                if (v.witness.z0) j["z0"] = dec(*v.witness.z0);
            } else if constexpr (std::is_same_v<T, evidence::FilasetaCert>) {
                j["prime"] = dec(v.prime);
                j["l"] = dec(v.l);
                j["k"] = dec(v.k);
            } else if constexpr (std::is_same_v<T, evidence::ModPFactorDegrees>) {
                j["prime"] = dec(v.prime);
                Json d = Json::array();
                for (auto x : v.degrees) d.push_back(dec(x));
                j["degrees"] = d;
            } else if constexpr (std::is_same_v<T, evidence::ExternalLemma11>) {
                j["s_max"] = dec(v.s_max);
                j["exception_check_passed"] = v.exception_check_passed;
            } else {
                j["prime"] = dec(v.prime);
            }
        },
        e);
    return j;
}

inline Json certificate_json(const Certificate& c) {
    Json ev = Json::array();
    for (const auto& e : c.evidence) ev.push_back(evidence_json(e));
    Json verdict{{"kind", c.verdict.to_string()}};
    if (c.verdict.kind == VerdictKind::NoFactorDegreeAtMost) verdict["k"] = dec(c.verdict.k);
    return Json{{"n", dec(c.subject.n())},
                {"s", dec(c.subject.s())},
                {"verdict", verdict},
                {"evidence", ev},
                {"notes", c.notes}};
}

inline Json factorization_json(const Factorization& f) {
    Json out = Json::array();
    for (const auto& e : f.entries()) out.push_back(Json{{"prime", dec(e.prime)}, {"exponent", dec(e.exponent)}});
    return out;
}

inline Json factor1_trace_json(const std::vector<Factor1PrimeCheck>& trace) {
    Json out = Json::array();
    for (const auto& c : trace) {
        Json j{{"prime", dec(c.prime)}, {"u", dec(c.u)}, {"nu_n", dec(c.nu_n)}};
        if (c.z0) j["z0"] = dec(*c.z0);
        if (c.nu_shifted) j["nu_shifted"] = c.nu_shifted->to_string();
        if (c.ratio_u) j["ratio_u"] = dec(*c.ratio_u);
        if (c.ratio_shift) j["ratio_shift"] = dec(*c.ratio_shift);
        j["passes"] = c.passes ? Json(to_string(*c.passes)) : Json(nullptr);
        out.push_back(j);
    }
    return out;
}

inline Json hset_json(const HSet& h) {
    Json members = Json::array();
    for (const auto& m : h.members) {
        members.push_back(Json{{"n", dec(m.n)}, {"factorization", m.factorization.to_string()}, {"part", m.part}});
    }
    return Json{{"s", dec(h.params.s())},
                {"c", dec(h.params.c())},
                {"size", dec(h.size())},
                {"size_part1", dec(h.part_size(1))},
                {"size_part2", dec(h.part_size(2))},
                {"members", members}};
}

/// Header "n,factorization,part", then one line per member, ascending.
inline std::string hset_csv(const HSet& h) {
    std::string out = "n,factorization,part\n";
    for (const auto& m : h.members) {
        out += dec(m.n) + "," + m.factorization.to_string() + "," + std::to_string(m.part) + "\n";
    }
    return out;
}

}  // namespace glp
