#include "remspec/newton.hpp"

#include <algorithm>

namespace remspec {

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

LatticePolygon convex_hull(std::vector<LatticePoint> points) {
    if (points.empty()) {
        throw MathError(MathError::Kind::precondition,
                        "convex hull of an empty point set");
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return LatticePolygon{points};

    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1); // last point equals the first
    if (hull.size() == 2 && hull[1] < hull[0]) std::swap(hull[0], hull[1]);
    return LatticePolygon{hull};
}

bool polygon_contains(const LatticePolygon& hull, const LatticePoint& p) {
    const auto& v = hull.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        if (cross(v[0], v[1], p) != 0) return false;
        return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const LatticePoint& a = v[i];
        const LatticePoint& b = v[(i + 1) % v.size()];
        if (cross(a, b, p) < 0) return false; // right of a CCW edge
    }
    return true;
}

std::int64_t count_lattice_nn(const LatticePolygon& hull) {
    const auto& v = hull.vertices;
    if (v.empty()) return 0;
    std::int64_t min_x = v[0].x, max_x = v[0].x, min_y = v[0].y, max_y = v[0].y;
    for (const auto& p : v) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x = std::max<std::int64_t>(min_x, 0);
    min_y = std::max<std::int64_t>(min_y, 0);
    std::int64_t count = 0;
    for (std::int64_t x = min_x; x <= max_x; ++x) {
        for (std::int64_t y = min_y; y <= max_y; ++y) {
            if (polygon_contains(hull, LatticePoint{x, y})) ++count;
        }
    }
    return count;
}

std::vector<LatticePoint> nd_support(const Derivation& d) {
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : d.a.terms()) {
        pts.push_back(LatticePoint{m.x - 1, m.y});
    }
    for (const auto& [m, c] : d.b.terms()) {
        pts.push_back(LatticePoint{m.x, m.y - 1});
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

NewtonReport bcount(const Derivation& d) {
    LatticePolygon hull = convex_hull(nd_support(d));
    return NewtonReport{hull, count_lattice_nn(hull)};
}

bool cofactor_polygon_check(const Derivation& d, const BiPoly& p) {
    auto cof = cofactor_of(d, p);
    if (!cof) {
        throw MathError(MathError::Kind::precondition,
                        "polynomial is not invariant under the derivation");
    }
    LatticePolygon hull = convex_hull(nd_support(d));
    for (const auto& [m, c] : cof->terms()) {
        if (!polygon_contains(hull, LatticePoint{m.x, m.y})) return false;
    }
    return true;
}

} // namespace remspec
