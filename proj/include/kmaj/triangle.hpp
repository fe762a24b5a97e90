#ifndef KMAJ_TRIANGLE_HPP
#define KMAJ_TRIANGLE_HPP

#include <vector>

#include "kmaj/core.hpp"

namespace kmaj {

// A point of the triangular lattice patch with r points per side,
// written as normalized distances to the three sides: x + y + z = r - 1.
struct TriPoint {
    int x = 0;
    int y = 0;
    int z = 0;

    bool operator==(const TriPoint&) const = default;
};

enum class EdgeDirection { forward, backward };  // forward: p -> q

// Largest r whose lattice still fits the 128-vertex cap (16*17/2 = 136).
constexpr int kMaxTriangleR = 15;

// All nonnegative solutions of x+y+z = r-1, sorted lexicographically by
// (x, y). This ordering fixes the VertexId of each point. r = 0 gives
// the empty list.
std::vector<TriPoint> enumerate_points(int r);

// The three lexicographic orders on the lattice points: ascending by
// (x, y), by (y, z), and by (z, x), expressed over the canonical ids.
Profile lex_orders(int r);

// Coordinate-comparison edge rule: p -> q iff one of the six cases holds.
EdgeDirection compass_edge(const TriPoint& p, const TriPoint& q);

struct TriangleConstruction {
    int r = 0;
    std::vector<TriPoint> points;
    Profile profile;
};

TriangleConstruction make_triangle_construction(int r);

// The 3-majority tournament of the three lexicographic orders.
MajorityDigraph build_triangle_tournament(int r);

}  // namespace kmaj

#endif  // KMAJ_TRIANGLE_HPP
