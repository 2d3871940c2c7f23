#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polardisc/bigfloat.hpp"
#include "polardisc/bipoly.hpp"

namespace polardisc {

// Truncated fractional power series sum c_e x^e. Coefficients are known for
// every exponent below `truncation`; when `exact` is set the series
// terminates and `truncation` is irrelevant.
struct PuiseuxSeries {
    long ramification = 1;  // lcm of exponent denominators
    std::map<Rat, BigComplex> terms;
    Rat truncation;
    bool exact = false;
    mpfr_prec_t precision = 256;

    std::optional<Rat> order() const;
    bool known_below(const Rat& e) const { return exact || e < truncation; }
    // x^(1/N) -> zeta^k x^(1/N) with N = ramification, zeta = exp(2 pi i / N)
    PuiseuxSeries conjugate(long k) const;
    PuiseuxSeries truncated(const Rat& bound) const;
    // "c * u^(p/q) + ... + O(u^(T))"
    std::string to_string(const std::string& var = "x", int digits = 12) const;
};

struct PuiseuxRoot {
    PuiseuxSeries series;
    int multiplicity = 1;
};

struct PuiseuxOptions {
    Rat order_bound{10};
    mpfr_prec_t precision = 256;
    // stop expanding a root once it is separated from every other root; its
    // truncation is then the order of the next (unknown) term
    bool stop_when_isolated = false;
    bool prune = true;
};

// Newton-Puiseux roots of f in its distinguished variable that pass through
// the origin (positive order), with multiplicities. A factor x^k of f is
// ignored. Raises precision-exhausted when a numeric decision is ambiguous.
std::vector<PuiseuxRoot> puiseux_roots(const BiPoly& f, const PuiseuxOptions& opts);
std::vector<PuiseuxRoot> puiseux_roots(const BiPoly& f, const Rat& order_bound, mpfr_prec_t precision);

// Order of a - b over the exponents known in both; nullopt when they agree on
// the whole common range (and `agree_to` receives that range end).
std::optional<Rat> contact_order(const PuiseuxSeries& a, const PuiseuxSeries& b, mpfr_prec_t prec,
                                 Rat* agree_to = nullptr);

// x = t^n, y = sum y_terms[k] t^k
struct Parametrization {
    long n = 1;
    std::map<long, Rat> y_terms;

    bool is_primitive() const;
    long order_y() const;  // smallest exponent with nonzero coefficient
    std::string to_string() const;
};

// "x = t^4; y = t^5 + t^7"
Parametrization parse_parametrization(const std::string& text);

// Res_t(x - t^n, y - y(t)), made monic in y.
BiPoly implicitize(const Parametrization& p);

// f(u, gamma(u)) truncated at order_bound. gamma must be exact or known
// below order_bound + ramification; the composition is evaluated with gamma
// cut at both orders and the two results must agree, otherwise
// insufficient-truncation.
PuiseuxSeries compose(const BiPoly& f, const PuiseuxSeries& gamma, const Rat& order_bound);

}  // namespace polardisc
