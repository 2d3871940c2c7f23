#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polardisc/descriptor.hpp"
#include "polardisc/discriminant.hpp"
#include "polardisc/normal_forms.hpp"

namespace polardisc {

struct Classification {
    EquisingularityType predicted;
    std::string fired_case;
    // alternative closed forms where the sources disagree; "proof" is the
    // primary prediction
    std::vector<std::pair<std::string, EquisingularityType>> variants;
    std::vector<std::string> notes;
};

Classification classify(const BranchDescriptor& d, mpfr_prec_t precision = 256);

struct Discrepancy {
    std::string id;
    std::string description;
};

struct VerifyConfig {
    mpfr_prec_t precision = 256;
    std::uint64_t seed = 1;
};

struct VerificationReport {
    BranchDescriptor descriptor;
    std::string fired_case;
    std::string curve;
    std::optional<std::string> parametrization;
    BiPoly discriminant;
    EquisingularityType predicted, computed;
    bool match = false;
    std::vector<std::pair<std::string, EquisingularityType>> variants;
    std::vector<std::string> confirmed_by;  // variant names equal to the computed type
    std::vector<std::string> notes;
    std::vector<Discrepancy> discrepancies;

    // cross-checks on the branch itself
    CharExponents branch_char;
    long milnor = 0;
    std::optional<long> tjurina;
    std::optional<long> zariski_lambda;
    bool nondegenerate = false;
    bool nondegeneracy_law = false;  // nondegenerate == (n = 2 or (n = 4 and g = 2))
    bool merle_match = false;
    NewtonPolygon polygon_of_D, merle;
    double seconds = 0;
};

VerificationReport verify(const BranchDescriptor& d, const VerifyConfig& cfg = {});

}  // namespace polardisc
