#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polardisc/rational.hpp"
#include "polardisc/upoly.hpp"

namespace polardisc {

using QPoly = UPoly<Rat>;
using QPoly2 = UPoly<QPoly>;

// Sparse bivariate polynomial over Q. Exponent pair (i, j) refers to
// (vars[0], vars[1]); by convention vars[1] is the distinguished variable
// (y for curves, v for discriminants).
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, Rat>;

    BiPoly() : vars_{"x", "y"} {}
    BiPoly(std::string v0, std::string v1) : vars_{std::move(v0), std::move(v1)} {}

    static BiPoly constant(const Rat& c, const std::string& v0 = "x", const std::string& v1 = "y");
    static BiPoly monomial(const Rat& c, int i, int j, const std::string& v0 = "x", const std::string& v1 = "y");

    const std::string& var(int k) const { return vars_[k]; }
    const std::array<std::string, 2>& vars() const { return vars_; }
    int var_index(const std::string& name) const;
    BiPoly renamed(const std::string& v0, const std::string& v1) const;

    const Terms& terms() const { return terms_; }
    Rat coeff(int i, int j) const;
    void add_term(int i, int j, const Rat& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int degree(int var) const;    // -1 for zero
    int low_degree(int var) const;  // -1 for zero
    int order() const;            // lowest total degree, -1 for zero

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly scale(const Rat& s) const;
    BiPoly pow(unsigned e) const;
    BiPoly derivative(int var) const;
    // coefficient of vars[var]^d as a univariate polynomial in the other variable
    QPoly coefficient_in(int var, int d) const;

    // content removed, leading coefficient (in vars[1], then vars[0]) made 1
    BiPoly monic() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    // terms ordered by decreasing vars[1] degree, then increasing vars[0] degree
    std::string to_string() const;

private:
    std::array<std::string, 2> vars_;
    Terms terms_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);

// Recursive views: outer variable vars[var], coefficients in the other one.
QPoly2 to_recursive(const BiPoly& f, int var);
BiPoly from_recursive(const QPoly2& p, int var, const std::string& v0, const std::string& v1);

// Res_var(f, g) as a polynomial in the remaining variable (same variable names).
BiPoly resultant(const BiPoly& f, const BiPoly& g, const std::string& var);

struct SquarefreeFactor {
    BiPoly factor;
    int multiplicity;
};
std::vector<SquarefreeFactor> squarefree_decompose(const BiPoly& f, const std::string& var);

std::string qpoly_to_string(const QPoly& p, const std::string& var);

}  // namespace polardisc
