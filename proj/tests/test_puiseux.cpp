#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "polardisc/parser.hpp"
#include "polardisc/puiseux.hpp"

using namespace polardisc;

namespace {

BiPoly P(const std::string& s) { return parse_polynomial(s); }

double re(const PuiseuxSeries& s, const Rat& e) {
    auto it = s.terms.find(e);
    return it == s.terms.end() ? 0.0 : it->second.real().to_double();
}
double im(const PuiseuxSeries& s, const Rat& e) {
    auto it = s.terms.find(e);
    return it == s.terms.end() ? 0.0 : it->second.imag().to_double();
}

Parametrization param(long n, std::map<long, Rat> y) {
    Parametrization p;
    p.n = n;
    p.y_terms = std::move(y);
    return p;
}

// y(t) with t = x^(1/n) as a Puiseux series
PuiseuxSeries as_series(const Parametrization& p, mpfr_prec_t prec) {
    PuiseuxSeries s;
    s.precision = prec;
    s.exact = true;
    long N = 1;
    for (const auto& [k, c] : p.y_terms) {
        Rat e(k, p.n);
        e.canonicalize();
        s.terms.emplace(e, BigComplex(c, prec));
        N = lcm_long(N, e.get_den().get_si());
    }
    s.ramification = N;
    return s;
}

}  // namespace

TEST_CASE("cusp roots") {
    auto roots = puiseux_roots(P("y^2 - x^3"), Rat(5), 128);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 1);
    CHECK(re(roots[0].series, Rat(3, 2)) == doctest::Approx(-1));
    CHECK(re(roots[1].series, Rat(3, 2)) == doctest::Approx(1));
    CHECK(roots[0].series.exact);
    CHECK(roots[0].series.ramification == 2);
}

TEST_CASE("polar of the multiplicity three form") {
    auto roots = puiseux_roots(P("3*y^2 - 3*x^5"), Rat(6), 128);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(re(roots[0].series, Rat(5, 2))) == doctest::Approx(1));
    CHECK(std::abs(re(roots[1].series, Rat(5, 2))) == doctest::Approx(1));
}

TEST_CASE("roots with an exact zero root and irrational coefficients") {
    auto roots = puiseux_roots(P("4*y^3 - 8*x^3*y"), Rat(4), 256);
    REQUIRE(roots.size() == 3);
    int zeros = 0;
    for (const auto& r : roots) {
        if (r.series.terms.empty()) {
            ++zeros;
            CHECK(r.series.exact);
        } else {
            CHECK(std::abs(re(r.series, Rat(3, 2))) == doctest::Approx(std::sqrt(2.0)));
        }
    }
    CHECK(zeros == 1);
}

TEST_CASE("multiple roots carry multiplicity") {
    auto roots = puiseux_roots(P("(y - x^2)^2*(y + x^3)"), Rat(6), 128);
    REQUIRE(roots.size() == 2);
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    CHECK(total == 3);
    CHECK(roots[0].multiplicity == 2);
}

TEST_CASE("genus two branch") {
    // (t^4, t^6 + t^7)
    BiPoly f = P("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7");
    auto roots = puiseux_roots(f, Rat(3), 256);
    REQUIRE(roots.size() == 4);
    for (const auto& r : roots) {
        CHECK(r.series.ramification == 4);
        CHECK(std::abs(re(r.series, Rat(3, 2))) == doctest::Approx(1));
        auto it = r.series.terms.find(Rat(7, 4));
        REQUIRE(it != r.series.terms.end());
        CHECK(it->second.abs().to_double() == doctest::Approx(1));
    }
}

TEST_CASE("implicitization") {
    CHECK(implicitize(param(2, {{5, Rat(1)}})) == P("y^2 - x^5"));
    CHECK(implicitize(param(3, {{7, Rat(1)}, {8, Rat(1)}})) == P("y^3 - 3*x^5*y - x^7 - x^8"));
    CHECK(implicitize(param(4, {{5, Rat(1)}, {7, Rat(1)}})) == P("y^4 - 4*x^3*y^2 - x^5 + 2*x^6 - x^7"));
    CHECK(implicitize(param(4, {{6, Rat(1)}, {7, Rat(1)}})) == P("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"));
    CHECK_THROWS(implicitize(param(4, {{6, Rat(1)}})));
}

TEST_CASE("parametrization text") {
    Parametrization p = parse_parametrization("x = t^4; y = t^5 + t^7");
    CHECK(p.n == 4);
    CHECK(p.y_terms.size() == 2);
    CHECK(p.to_string() == "x = t^4; y = t^5 + t^7");
    CHECK(parse_parametrization("(t^3, t^7 - 2/3*t^8)").to_string() == "x = t^3; y = t^7 - 2/3*t^8");
    CHECK_THROWS_AS(parse_parametrization("x = 2*t^4; y = t^5"), ParseError);
}

TEST_CASE("composition") {
    PuiseuxSeries g;
    g.precision = 128;
    g.exact = true;
    g.ramification = 2;
    g.terms.emplace(Rat(5, 2), BigComplex(1, 128));
    auto d = compose(P("y^3 - 3*x^5*y - x^7 - x^8"), g, Rat(20));
    CHECK(d.terms.size() == 3);
    CHECK(re(d, Rat(7)) == doctest::Approx(-1));
    CHECK(re(d, Rat(15, 2)) == doctest::Approx(-2));
    CHECK(re(d, Rat(8)) == doctest::Approx(-1));

    PuiseuxSeries zero;
    zero.exact = true;
    auto e = compose(P("y^2 - x^5"), zero, Rat(10));
    CHECK(re(e, Rat(5)) == doctest::Approx(-1));

    // NF4.5 s1=5, j=2, all coefficients zero: f(u, sqrt(2) u^(3/2))
    PuiseuxSeries h;
    h.precision = 256;
    h.exact = true;
    h.ramification = 2;
    h.terms.emplace(Rat(3, 2), BigComplex(sqrt(BigFloat(2, 256)), BigFloat(256)));
    auto k = compose(P("y^4 - 4*x^3*y^2 - x^5 + 2*x^6 - x^7"), h, Rat(10));
    CHECK(k.terms.size() == 3);
    CHECK(re(k, Rat(5)) == doctest::Approx(-1));
    CHECK(re(k, Rat(6)) == doctest::Approx(-2));
    CHECK(re(k, Rat(7)) == doctest::Approx(-1));

    PuiseuxSeries shortg = g;
    shortg.exact = false;
    shortg.truncation = Rat(3);
    CHECK_THROWS_AS(compose(P("y^2 - x^5"), shortg, Rat(6)), Error);
}

TEST_CASE("round trip, conjugacy closure and residuals on random parametrizations") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
    const mpfr_prec_t prec = 256;
    for (int trial = 0; trial < 12; ++trial) {
        long n = 2 + trial % 3;
        long b1 = n + 1 + (trial % 2);
        while (gcd_long(n, b1) != 1) ++b1;
        Parametrization p = param(n, {{b1, Rat(1)}});
        for (long k = b1 + 1; k <= b1 + 3; ++k) {
            int c = coef(rng);
            if (c != 0) p.y_terms[k] = Rat(c, den(rng));
        }
        BiPoly f = implicitize(p);
        Rat T(b1 + 4);
        auto roots = puiseux_roots(f, T, prec);
        int total = 0;
        for (const auto& r : roots) total += r.multiplicity;
        CHECK(total == n);
        PuiseuxSeries truth = as_series(p, prec).truncated(T);
        bool found = false;
        for (const auto& r : roots) {
            if (!contact_order(r.series, truth, prec)) found = true;
            // every conjugate is again a computed root
            for (long k = 1; k < r.series.ramification; ++k) {
                PuiseuxSeries c = r.series.conjugate(k);
                bool hit = false;
                for (const auto& s : roots) hit = hit || !contact_order(c, s.series, prec);
                CHECK(hit);
            }
            // residual vanishes below the truncation
            auto res = compose(f, r.series, r.series.exact ? T : r.series.truncation);
            CHECK(res.terms.empty());
        }
        CHECK(found);

        PuiseuxOptions o;
        o.order_bound = T;
        o.precision = prec;
        o.prune = false;
        auto unpruned = puiseux_roots(f, o);
        REQUIRE(unpruned.size() == roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i)
            CHECK_FALSE(contact_order(roots[i].series, unpruned[i].series, prec).has_value());
    }
}

TEST_CASE("isolation mode stops at separation") {
    BiPoly f = P("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7");
    PuiseuxOptions o;
    o.order_bound = Rat(40);
    o.precision = 256;
    o.stop_when_isolated = true;
    auto roots = puiseux_roots(f, o);
    REQUIRE(roots.size() == 4);
    // polynomial parametrizations give terminating roots
    for (const auto& r : roots) {
        CHECK(r.series.exact);
        CHECK(r.series.terms.size() == 2);
    }
    // a squarefree factor with an infinite root: y^2 - x^3 - x^4 has root x^(3/2) * sqrt(1 + x)
    auto cusp = puiseux_roots(P("y^2 - x^3 - x^4"), o);
    REQUIRE(cusp.size() == 2);
    for (const auto& r : cusp) {
        CHECK_FALSE(r.series.exact);
        CHECK(r.series.terms.size() == 1);
        CHECK(r.series.truncation == Rat(5, 2));
    }
}

TEST_CASE("order bound validation") {
    CHECK_THROWS_AS(puiseux_roots(P("y^2 - x^5"), Rat(1), 128), Error);
    CHECK_THROWS_AS(puiseux_roots(P("y^2 - x^5"), Rat(3), 32), Error);
}

TEST_CASE("irrational root next to a rational one stays numeric") {
    // edge polynomial (z - 3)(z^2 - 3z - 1): 3 is a convergent of 3.30277...
    auto roots = puiseux_roots(P("(y - 3*x)*(y^2 - 3*x*y - x^2)"), Rat(3), 256);
    REQUIRE(roots.size() == 3);
    std::vector<double> lead;
    for (const auto& r : roots) lead.push_back(re(r.series, Rat(1)));
    std::sort(lead.begin(), lead.end());
    CHECK(lead[0] == doctest::Approx((3 - std::sqrt(13.0)) / 2));
    CHECK(lead[1] == doctest::Approx(3.0));
    CHECK(lead[2] == doctest::Approx((3 + std::sqrt(13.0)) / 2));
}
