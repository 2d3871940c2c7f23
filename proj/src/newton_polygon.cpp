#include "polardisc/newton_polygon.hpp"

namespace polardisc {

NewtonPolygon polygon(const BiPoly& f) {
    if (f.is_zero()) fail(ErrorKind::invalid_input, "Newton polygon of the zero polynomial");
    std::vector<std::pair<long, long>> pts;
    for (const auto& [e, c] : f.terms()) pts.emplace_back(e.first, e.second);
    auto chain = lower_hull(pts);
    NewtonPolygon np;
    for (const auto& [a, j] : chain) np.vertices.push_back({a, j});
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        const auto& s = np.vertices[k - 1];
        const auto& t = np.vertices[k];
        np.edges.push_back({s, t, Rat(t.i - s.i, s.j - t.j)});
        np.edges.back().inclination.canonicalize();
    }
    return np;
}

QPoly edge_polynomial(const BiPoly& f, const Edge& e) {
    long dj = e.start.j - e.end.j, di = e.end.i - e.start.i;
    if (dj <= 0 || di <= 0) fail(ErrorKind::invalid_input, "edge is not compact");
    // points (i, j) on the line through start and end: (i - si)*dj == (sj - j)*di
    std::vector<Rat> c(static_cast<std::size_t>(dj) + 1);
    for (const auto& [ex, q] : f.terms()) {
        long i = ex.first, j = ex.second;
        if (j < e.end.j || j > e.start.j) continue;
        if ((i - e.start.i) * dj != (e.start.j - j) * di) continue;
        c[j - e.end.j] = q;
    }
    return QPoly(std::move(c));
}

Nondegeneracy is_nondegenerate(const BiPoly& f) {
    Nondegeneracy out;
    NewtonPolygon np = polygon(f);
    for (const auto& e : np.edges) {
        QPoly F = edge_polynomial(f, e);
        for (const auto& [g, m] : squarefree(F)) {
            if (m > 1) {
                out.nondegenerate = false;
                out.edge = e;
                out.repeated_factor = g;
                out.multiplicity = m;
                return out;
            }
        }
    }
    return out;
}

}  // namespace polardisc
