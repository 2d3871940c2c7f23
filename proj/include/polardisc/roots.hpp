#pragma once

#include <vector>

#include "polardisc/bigfloat.hpp"
#include "polardisc/upoly.hpp"

namespace polardisc {

struct RootCluster {
    BigComplex root;
    int multiplicity;
};

// Numeric zero test used across the numeric pipeline: |c| < 2^(-prec/2) * scale.
bool numerically_zero(const BigComplex& c, const BigFloat& scale, mpfr_prec_t prec);

// Roots of sum coeffs[i] z^i grouped by multiplicity. Aberth iteration at
// doubled working precision, clustering at 2^(-prec/4) (relative), and Newton
// refinement of each cluster centre on the (m-1)-th derivative. A pair of
// roots whose distance falls in [2^(-prec/4), 2^(-prec/8)) is ambiguous and
// raises precision-exhausted.
std::vector<RootCluster> clustered_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec);

// All roots with multiplicity.
std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec);

// Exact rational polynomial: squarefree split over Q first, so multiplicities
// are exact.
std::vector<RootCluster> rational_poly_roots(const UPoly<Rat>& p, mpfr_prec_t prec);

}  // namespace polardisc
