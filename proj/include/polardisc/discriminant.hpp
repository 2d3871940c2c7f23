#pragma once

#include <string>
#include <vector>

#include "polardisc/bipoly.hpp"
#include "polardisc/invariants.hpp"
#include "polardisc/newton_polygon.hpp"
#include "polardisc/puiseux.hpp"

namespace polardisc {

struct DiscBranch {
    CharExponents chr;
    int multiplicity = 1;
    friend bool operator==(const DiscBranch&, const DiscBranch&) = default;
};

// Topological type of a (possibly non-reduced) plane curve germ: branches
// with multiplicities and the matrix of pairwise intersection numbers. The
// diagonal of `intersections` is zero.
struct EquisingularityType {
    std::vector<DiscBranch> branches;
    std::vector<std::vector<long>> intersections;

    friend bool operator==(const EquisingularityType&, const EquisingularityType&) = default;
    // "D1 D2^2, D1 smooth, S(D2)=<2,15>, i0(D1,D2)=6"
    std::string to_string() const;
    long total_degree() const;  // sum of multiplicity times branch multiplicity
};

// Sort branches into the canonical order used for comparisons.
EquisingularityType canonical(const EquisingularityType& t);

BiPoly polar(const BiPoly& f);

struct DiscriminantResult {
    BiPoly D;
    std::vector<std::string> warnings;
};

// Res_y(f_y(u,y), v - f(u,y)) in variables (u, v), content removed and made
// monic in v when the leading coefficient is constant.
DiscriminantResult discriminant_exact(const BiPoly& f);

// f(u, gamma(u)) for every polar root gamma (repeated by multiplicity), known
// below order_bound.
std::vector<PuiseuxSeries> discriminant_roots(const BiPoly& f, const Rat& order_bound, mpfr_prec_t precision);
// Every composed root f(u, gamma(u)) agrees below order_bound with a root of
// the exact discriminant, multiplicities included.
bool composed_roots_agree(const BiPoly& f, const Rat& order_bound, mpfr_prec_t precision = 256);

// Escalates precision from `precision` up to 4096 bits on ambiguity.
EquisingularityType equisingularity_type(const BiPoly& D, mpfr_prec_t precision = 256);

NewtonPolygon merle_polygon(const Semigroup& s);

}  // namespace polardisc
