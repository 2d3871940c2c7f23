#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polardisc/bipoly.hpp"

namespace polardisc {

struct LatticePoint {
    long i = 0;  // exponent of the first variable (horizontal axis)
    long j = 0;  // exponent of the distinguished variable (vertical axis)
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Edge {
    LatticePoint start;  // upper vertex
    LatticePoint end;    // lower vertex
    Rat inclination;     // horizontal length / vertical length
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Compact boundary of the Newton polygon, vertices listed from the vertical
// axis side down to the horizontal axis side (increasing first coordinate).
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<Edge> edges;
    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

NewtonPolygon polygon(const BiPoly& f);

// F_L(z) = sum over the edge of c_ij z^(j - j_end)
QPoly edge_polynomial(const BiPoly& f, const Edge& e);

struct Nondegeneracy {
    bool nondegenerate = true;
    std::optional<Edge> edge;    // offending edge
    QPoly repeated_factor;       // squarefree part carrying the repeated roots
    int multiplicity = 0;
};

Nondegeneracy is_nondegenerate(const BiPoly& f);

// Lower-left hull of points (a, j) with nonnegative rational or integer a.
// Returns the vertex chain from the top vertex (smallest a) to the bottom
// vertex (smallest j).
template <class C>
std::vector<std::pair<C, long>> lower_hull(const std::vector<std::pair<C, long>>& pts);

}  // namespace polardisc

#include "polardisc/newton_polygon_impl.hpp"
