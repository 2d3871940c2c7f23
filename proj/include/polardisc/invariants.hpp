#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polardisc/bipoly.hpp"
#include "polardisc/puiseux.hpp"

namespace polardisc {

struct CharExponents {
    std::vector<long> beta;  // (beta_0, ..., beta_g); (1) for a smooth branch
    long genus() const { return static_cast<long>(beta.size()) - 1; }
    long multiplicity() const { return beta.empty() ? 0 : beta[0]; }
    friend bool operator==(const CharExponents&, const CharExponents&) = default;
    friend auto operator<=>(const CharExponents&, const CharExponents&) = default;
    std::string to_string() const;  // "(4;6,7)"
};

struct Semigroup {
    std::vector<long> generators;  // minimal generators s_0 < ... < s_g
    std::vector<long> e;           // e_k = gcd(s_0, ..., s_k)
    long conductor = 0;
    long gaps_above_s1 = 0;        // q: gaps in (s_1, c)

    bool contains(long v) const;
    std::vector<long> gaps() const;
    friend bool operator==(const Semigroup&, const Semigroup&) = default;
    std::string to_string() const;  // "<4,6,13>"
};

struct BranchInvariants {
    CharExponents chr;
    Semigroup semigroup;
    long milnor = 0;
    std::optional<long> tjurina;
    std::optional<long> r;
    std::optional<long> zariski_lambda;
};

// Orders of differences of the n conjugate roots y(zeta^k x^(1/n)); the
// coordinate swap is applied when ord_t y < n.
CharExponents characteristic_exponents(const Parametrization& p);
// Independent route: successive gcd descent over the support of y(t).
CharExponents characteristic_exponents_by_gcd(const Parametrization& p);
// Inverts the roles of x and y for a sequence whose first exponent after
// beta_0 is smaller than beta_0.
CharExponents normalize_char(const std::vector<long>& raw);

Semigroup semigroup_from_char(const CharExponents& b);
// Smallest generators of the numerical semigroup spanned by `values`.
Semigroup semigroup_from_values(const std::vector<long>& values);

// Valuations of h(t^n, y(t)) over a staircase basis of polynomials h with
// value below 2*degree_bound.
Semigroup semigroup_oracle(const Parametrization& p, long degree_bound);

enum class IntersectionMethod { halphen_zeuthen, resultant };
long intersection_number(const BiPoly& f, const BiPoly& g, IntersectionMethod method,
                         mpfr_prec_t precision = 256);

long milnor(const BiPoly& f);
// dim Q[x,y]/(f, f_x, f_y) localized at the origin, by linear algebra on a
// truncated monomial space; `mu` is the Milnor number.
long tjurina(const BiPoly& f, long mu);

// min(Lambda \ S) - n, or 0 if no differential value below the conductor
// escapes the semigroup.
long zariski_invariant(const Parametrization& p);

struct NumericParametrization {
    long n = 1;
    std::map<long, BigComplex> y_terms;
    long known_below = 0;  // coefficients of t^k known for k < known_below
    mpfr_prec_t precision = 256;
};
long zariski_invariant(const NumericParametrization& p, const Semigroup& s);

}  // namespace polardisc

namespace polardisc {

// Zariski invariant of the branch f = 0 with semigroup s, from a numeric
// Newton-Puiseux parametrization (the coordinates are swapped when the
// branch is tangent to x = 0).
long zariski_invariant_of_equation(const BiPoly& f, const Semigroup& s, mpfr_prec_t precision = 256);

}  // namespace polardisc
