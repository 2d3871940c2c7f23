#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polardisc/bipoly.hpp"
#include "polardisc/descriptor.hpp"
#include "polardisc/puiseux.hpp"

namespace polardisc {

struct NormalForm {
    std::optional<Parametrization> param;  // parametric families
    BiPoly equation;                       // always set
    std::vector<std::string> notes;
};

// Free coefficients not fixed by the descriptor are drawn from `seed` as
// nonzero rationals with denominator at most 10.
NormalForm build(const BranchDescriptor& d, std::uint64_t seed = 1, mpfr_prec_t precision = 256);

}  // namespace polardisc
