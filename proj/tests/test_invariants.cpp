#include <random>

#include "doctest.h"
#include "polardisc/invariants.hpp"
#include "polardisc/parser.hpp"

using namespace polardisc;

namespace {
Parametrization P(const char* s) { return parse_parametrization(s); }
BiPoly F(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST_CASE("characteristic exponents") {
    CHECK(characteristic_exponents(P("x = t^4; y = t^6 + t^7")).beta == std::vector<long>{4, 6, 7});
    CHECK(characteristic_exponents(P("x = t^2; y = t^3")).beta == std::vector<long>{2, 3});
    CHECK(characteristic_exponents(P("x = t^3; y = t^7 + t^8")).beta == std::vector<long>{3, 7});
    CHECK(characteristic_exponents(P("x = t^4; y = t^6 + t^8 + t^9")).beta == std::vector<long>{4, 6, 9});
    // tangent not transversal: inversion
    CHECK(characteristic_exponents(P("x = t^4; y = t^2 + t^3")).beta == std::vector<long>{2, 5});
    CHECK(characteristic_exponents(P("x = t^5; y = t^3")).beta == std::vector<long>{3, 5});
    CHECK(characteristic_exponents(P("x = t^3; y = t")).beta == std::vector<long>{1});
    CHECK(characteristic_exponents(P("x = t^4; y = t^6 + t^7")).to_string() == "(4;6,7)");
}

TEST_CASE("semigroup from characteristic exponents") {
    auto s = semigroup_from_char(CharExponents{{4, 6, 7}});
    CHECK(s.generators == std::vector<long>{4, 6, 13});
    CHECK(s.conductor == 16);
    CHECK(s.to_string() == "<4,6,13>");
    CHECK(s.gaps() == std::vector<long>{1, 2, 3, 5, 7, 9, 11, 15});
    auto t = semigroup_from_char(CharExponents{{3, 7}});
    CHECK(t.generators == std::vector<long>{3, 7});
    CHECK(t.conductor == 12);
    CHECK(t.gaps_above_s1 == 2);  // 8, 11
    CHECK(semigroup_from_values({6, 4, 13, 10, 17}).generators == std::vector<long>{4, 6, 13});
}

TEST_CASE("semigroup oracle agrees with the formula") {
    auto s = semigroup_oracle(P("x = t^4; y = t^6 + t^7"), 40);
    CHECK(s.generators == std::vector<long>{4, 6, 13});
    CHECK(s.conductor == 16);
    CHECK_THROWS_AS(semigroup_oracle(P("x = t^4; y = t^6 + t^7"), 6), Error);
}

TEST_CASE("intersection numbers") {
    for (auto m : {IntersectionMethod::resultant, IntersectionMethod::halphen_zeuthen}) {
        CHECK(intersection_number(F("y^2 - x^3"), F("y"), m) == 3);
        CHECK(intersection_number(F("y^2 - x^3"), F("x"), m) == 2);
        CHECK(intersection_number(F("y^2 - x^3"), F("y^3 - x^2"), m) == 4);
        CHECK(intersection_number(F("y^2 - x^3"), F("1 + x"), m) == 0);
        CHECK_THROWS_AS(intersection_number(F("y^2 - x^3"), F("(y^2 - x^3)*(y + x)"), m), Error);
    }
}

TEST_CASE("Milnor and Tjurina numbers (local Groebner oracle)") {
    CHECK(milnor(F("y^2 - x^3")) == 2);
    CHECK(milnor(F("y^3 - x^7")) == 12);
    CHECK(milnor(F("(y^2 - x^3)^2 - 4*x^5*y - x^7")) == 16);
    struct Case { const char* f; long mu, tau; };
    for (auto c : {Case{"y^3 - x^4 + x^2*y", 4, 4}, Case{"y^5 - x^6 + x^3*y^3", 20, 18},
                   Case{"y^3 - x^7 + x^5*y", 12, 11}, Case{"y^2 - x^3", 2, 2}, Case{"y^4 - x^6 - x^5*y", 15, 14}}) {
        BiPoly f = F(c.f);
        CHECK(milnor(f) == c.mu);
        CHECK(tjurina(f, c.mu) == c.tau);
    }
}

TEST_CASE("Zariski invariant") {
    CHECK(zariski_invariant(P("x = t^3; y = t^7 + t^8")) == 8);
    CHECK(zariski_invariant(P("x = t^2; y = t^5")) == 0);
    CHECK(zariski_invariant(P("x = t^4; y = t^5 + t^7")) == 7);
    CHECK(zariski_invariant(P("x = t^3; y = t^7")) == 0);
}

TEST_CASE("property: exponent routes and semigroup routes agree") {
    std::mt19937_64 rng(20261018);
    for (int it = 0; it < 40; ++it) {
        long n = 2 + static_cast<long>(rng() % 5);
        Parametrization p;
        p.n = n;
        long k = n + 1 + static_cast<long>(rng() % 4);
        for (int t = 0; t < 4; ++t) {
            p.y_terms[k] = Rat(static_cast<long>(rng() % 7) - 3);
            if (sgn(p.y_terms[k]) == 0) p.y_terms[k] = 1;
            k += 1 + static_cast<long>(rng() % 3);
        }
        if (!p.is_primitive()) continue;
        auto a = characteristic_exponents(p), b = characteristic_exponents_by_gcd(p);
        CHECK(a == b);
        auto s = semigroup_from_char(a);
        auto o = semigroup_oracle(p, s.conductor + 2 * n + 2);
        CHECK(o == s);
        // mu = c for a branch, via the implicit equation
        BiPoly f = implicitize(p);
        CHECK(milnor(f) == s.conductor);
        long lam = zariski_invariant(p);
        CHECK((lam == 0 || (lam > s.generators[1] - n && !s.contains(lam + n))));
    }
}
