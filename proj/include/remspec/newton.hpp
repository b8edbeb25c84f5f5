#pragma once

#include <cstdint>
#include <vector>

#include "remspec/derivation.hpp"

namespace remspec {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    bool operator==(const LatticePoint& p) const { return x == p.x && y == p.y; }
    bool operator<(const LatticePoint& p) const {
        return x != p.x ? x < p.x : y < p.y;
    }
};

// Convex polygon given by its vertices in counter-clockwise order, starting
// at the lexicographically smallest vertex, with no three collinear. A
// single point or a segment are valid degenerate polygons.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;
};

// Monotone-chain hull; input may contain duplicates, order is irrelevant.
// Requires a non-empty input.
LatticePolygon convex_hull(std::vector<LatticePoint> points);

// Closed membership test (boundary counts as inside).
bool polygon_contains(const LatticePolygon& hull, const LatticePoint& p);

// Number of integer points (a, b) with a >= 0 and b >= 0 inside or on the
// polygon, by membership scan over the bounding box.
std::int64_t count_lattice_nn(const LatticePolygon& hull);

// Exponent set of the Laurent polynomial x*A/X + y*B/Y for generic (x, y):
// the union of support(a) shifted by (-1, 0) and support(b) shifted by
// (0, -1). Duplicates removed.
std::vector<LatticePoint> nd_support(const Derivation& d);

struct NewtonReport {
    LatticePolygon polygon;
    std::int64_t count = 0; // integer points of the polygon in the first quadrant
};

// The polygon spanned by nd_support together with its first-quadrant count.
NewtonReport bcount(const Derivation& d);

// Checks the support containment expected of cofactors: p must be invariant
// under d, and every exponent of its cofactor must lie in the polygon of
// nd_support. Throws when p is not invariant.
bool cofactor_polygon_check(const Derivation& d, const BiPoly& p);

} // namespace remspec
