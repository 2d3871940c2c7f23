#pragma once

#include <map>
#include <string>
#include <vector>

#include "polardisc/bigfloat.hpp"
#include "polardisc/rational.hpp"

namespace polardisc {

enum class Family { Mult2, Mult3, Mult4G2, NF4_1, NF4_2, NF4_3, NF4_4, NF4_5, R1, R2A, R2B };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// rational, or rational * sqrt(6)
struct Coefficient {
    Rat value;
    bool sqrt6 = false;
    bool from_decimal = false;
    std::string text;

    bool is_zero() const { return sgn(value) == 0; }
    BigFloat numeric(mpfr_prec_t prec) const;
};

// Coefficient text: "3", "-2/7", "0.125", "4*sqrt(6)/9", "-sqrt(6)/81".
Coefficient parse_coefficient(const std::string& text);

struct BranchDescriptor {
    Family family = Family::Mult2;
    long s0 = 0, s1 = 0, s2 = 0, lambda = 0, j = 0, k = 0;
    // free coefficients keyed by ladder index (NF4 families) or by k (R2B)
    std::map<long, Coefficient> coeffs;
    // coefficient of t^lambda in NF4_5; when set, coeffs are raw
    // parametrization coefficients rather than normalized ones
    bool has_lambda_coeff = false;
    Rat lambda_coeff{1};

    long multiplicity() const;
    std::string to_json_string() const;
};

// {"family":"NF4_5","s1":5,"j":2,"coeffs":{}}; throws parse-error on bad
// JSON and invalid-descriptor on violated family constraints.
BranchDescriptor parse_descriptor(const std::string& json_text);

void validate(const BranchDescriptor& d);

// Exponent of the ladder index i in the NF4_2..NF4_4 normal forms.
long nf4_ladder_exponent(long s1, long j, long i);
// Exponent of the ladder index i in the NF4_5 normal form.
long nf45_exponent(long s1, long j, long i);

// Exact rational realization of an NF4_5 member:
// x = t^4, y = t^s1 + b t^lambda + sum c_i t^(e_i).
struct NF45Realization {
    Rat b{1};
    std::map<long, Rat> c;  // nonzero only
    std::vector<std::string> notes;
};
NF45Realization realize_nf45(const BranchDescriptor& d, mpfr_prec_t precision);

}  // namespace polardisc
