#pragma once

// p-adic Newton polygons with exact rational slopes, and the factor-degree
// exclusion criterion based on the slope of the rightmost edge.
//
// Points use the reversed convention: the point at x = j carries the
// valuation of the coefficient of x^(m-j), so the polygon runs from
// (0, nu(d_m)) to (m, nu(d_0)).

#include <cstdint>
#include <string>
#include <vector>

#include "glp/errors.hpp"
#include "glp/numeric.hpp"
#include "glp/polynomial.hpp"
#include "glp/valuation.hpp"

namespace glp {

struct PolygonPoint {
    std::int64_t x = 0;
    Valuation y = Valuation(0);

    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonVertex {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonEdge {
    Ratio slope;
    std::int64_t x_begin = 0;
    std::int64_t x_end = 0;

    friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

class NewtonPolygon {
public:
    NewtonPolygon(std::uint64_t prime, std::vector<PolygonVertex> vertices)
        : prime_(prime), vertices_(std::move(vertices)) {
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            const auto& a = vertices_[i - 1];
            const auto& b = vertices_[i];
            edges_.push_back({Ratio(b.y - a.y, b.x - a.x), a.x, b.x});
        }
    }

    std::uint64_t prime() const noexcept { return prime_; }
    const std::vector<PolygonVertex>& vertices() const noexcept { return vertices_; }
    const std::vector<PolygonEdge>& edges() const noexcept { return edges_; }

    /// Height of the polygon above x, for x within [first.x, last.x].
    Ratio height_at(std::int64_t x) const {
        for (const auto& e : edges_) {
            if (x >= e.x_begin && x <= e.x_end) {
                const auto& start = vertex_at(e.x_begin);
                return Ratio(start.y) + e.slope * Ratio(x - e.x_begin);
            }
        }
        throw InvalidArgument("x outside the polygon's span");
    }

private:
    const PolygonVertex& vertex_at(std::int64_t x) const {
        for (const auto& v : vertices_) {
            if (v.x == x) return v;
        }
        throw InvalidArgument("no vertex at x");
    }

    std::uint64_t prime_;
    std::vector<PolygonVertex> vertices_;
    std::vector<PolygonEdge> edges_;
};

/// The point set S = {(j, nu_p(d_{m-j}))}. Both end coefficients must be nonzero.
inline std::vector<PolygonPoint> newton_points(const IntegerPolynomial& f, std::uint64_t p) {
    require_prime(p);
    if (f.constant() == 0) throw InvalidPolynomial("Newton polygon needs a nonzero constant term");
    const std::size_t m = f.degree();
    std::vector<PolygonPoint> pts;
    pts.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        pts.push_back({static_cast<std::int64_t>(j), nu_p(f[m - j], p)});
    }
    return pts;
}

/// Lower convex hull of the finite points (monotone chain). Points lying on
/// an edge are dropped from the vertex list.
inline NewtonPolygon lower_hull(const std::vector<PolygonPoint>& points, std::uint64_t prime = 0) {
    std::vector<PolygonVertex> finite;
    for (const auto& pt : points) {
        if (pt.y.is_finite()) finite.push_back({pt.x, static_cast<std::int64_t>(pt.y.value())});
    }
    if (finite.size() < 2) throw InvalidPolygon("need at least two finite points");
    if (points.front().y.is_infinite() || points.back().y.is_infinite()) {
        throw InvalidPolygon("endpoints of the point set must be finite");
    }
    for (std::size_t i = 1; i < finite.size(); ++i) {
        if (finite[i].x <= finite[i - 1].x) throw InvalidPolygon("x-coordinates must increase");
    }

    std::vector<PolygonVertex> hull;
    for (const auto& v : finite) {
        // Pop while the last turn is not strictly counter-clockwise.
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            const std::int64_t cross = (b.x - a.x) * (v.y - a.y) - (b.y - a.y) * (v.x - a.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(v);
    }
    return NewtonPolygon(prime, std::move(hull));
}

inline NewtonPolygon newton_polygon(const IntegerPolynomial& f, std::uint64_t p) {
    return lower_hull(newton_points(f, p), p);
}

/// Slope of the last edge.
inline Ratio rightmost_slope(const NewtonPolygon& np) {
    if (np.edges().empty()) throw InvalidPolygon("polygon has no edges");
    return np.edges().back().slope;
}

/// Filaseta's criterion. With m = deg h and m >= 2k > 2l >= 0: if p does not
/// divide the leading coefficient, p divides d_j for 0 <= j <= m-l-1, and the
/// rightmost slope is strictly below 1/k, then no polynomial sum a_j d_j x^j
/// with p not dividing a_0 a_m has a factor of degree in [l+1, k].
///
/// A false result certifies nothing.
inline bool filaseta_excludes(const IntegerPolynomial& h, std::uint64_t p, std::uint64_t l, std::uint64_t k) {
    const std::uint64_t m = h.degree();
    if (!(k >= 1 && m >= 2 * k && k > l)) throw InvalidArgument("filaseta_excludes requires m >= 2k > 2l >= 0");
    require_prime(p);
    if (h.leading() % p == 0) return false;
    for (std::uint64_t j = 0; j + l + 1 <= m; ++j) {
        if (h[j] % p != 0) return false;
    }
    const Ratio slope = rightmost_slope(newton_polygon(h, p));
    // slope < 1/k, exactly; a tie does not certify.
    return slope.numerator() * static_cast<std::int64_t>(k) < slope.denominator();
}

}  // namespace glp
