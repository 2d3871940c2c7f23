#include <random>

#include "doctest.h"
#include "polardisc/discriminant.hpp"
#include "polardisc/parser.hpp"

using namespace polardisc;

namespace {
BiPoly F(const char* s) { return parse_polynomial(s); }
BiPoly UV(const char* s) { return parse_polynomial(s, "u", "v"); }
Parametrization P(const char* s) { return parse_parametrization(s); }

EquisingularityType type_of(const BiPoly& f) { return equisingularity_type(discriminant_exact(f).D); }

bool roots_match(const BiPoly& f, const Rat& T) { return composed_roots_agree(f, T, 256); }
}  // namespace

TEST_CASE("polar curve") {
    CHECK(polar(F("y^2 - x^5")) == F("2*y"));
    CHECK(polar(F("y^3 - 3*x^5*y - x^7 - x^8")) == F("3*y^2 - 3*x^5"));
    CHECK(polar(F("y^4 - 4*x^3*y^2 - x^5 + 2*x^6 - x^7")) == F("4*y^3 - 8*x^3*y"));
}

TEST_CASE("exact discriminant (resultant oracle)") {
    CHECK(discriminant_exact(F("y^2 - x^5")).D == UV("v + u^5"));
    CHECK(discriminant_exact(F("y^3 - 3*x^5*y - x^7 - x^8")).D ==
          UV("v^2 + 2*(u^7 + u^8)*v + (u^7 + u^8)^2 - 4*u^15"));
    CHECK(discriminant_exact(F("y^3 - x^4")).D == UV("(v + u^4)^2"));
    CHECK(discriminant_exact(F("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7")).D ==
          UV("v^3 + 3*u^7*v^2 - u^6*v^2 + 3*u^14*v - 20*u^13*v + u^21 + 8*u^20 + 16*u^19"));
    CHECK(discriminant_exact(F("y^4 - 4*x^3*y^2 - x^5 + 2*x^6 - x^7")).D ==
          UV("(v + u^5 - 2*u^6 + u^7)*(v + u^5 + 2*u^6 + u^7)^2"));
    auto d = discriminant_exact(F("y - x^3"));
    CHECK(d.D == UV("1"));
    CHECK(d.warnings.size() == 1);
}

TEST_CASE("composed discriminant roots") {
    auto r = discriminant_roots(F("y^2 - x^5"), Rat(10), 256);
    REQUIRE(r.size() == 1);
    CHECK(r[0].to_string("u") == "-1 * u^5");
    auto m3 = discriminant_roots(F("y^3 - 3*x^5*y - x^7 - x^8"), Rat(9), 256);
    REQUIRE(m3.size() == 2);
    for (const auto& s : m3) {
        CHECK(s.terms.begin()->first == Rat(7));
        CHECK(s.terms.count(Rat(15, 2)) == 1);
    }
    CHECK(roots_match(F("y^3 - 3*x^5*y - x^7 - x^8"), Rat(9)));
    CHECK(roots_match(F("y^4 - 4*x^3*y^2 - x^5 + 2*x^6 - x^7"), Rat(8)));
    CHECK(roots_match(F("y^4 - 2*x^3*y^2 - 4*x^5*y + x^6 - x^7"), Rat(8)));
}

TEST_CASE("equisingularity type of discriminants") {
    auto t1 = equisingularity_type(UV("(v + u^5)^3"));
    REQUIRE(t1.branches.size() == 1);
    CHECK(t1.branches[0].chr.beta == std::vector<long>{1});
    CHECK(t1.branches[0].multiplicity == 3);

    auto t2 = type_of(implicitize(P("x = t^3; y = t^7 + t^8")));
    REQUIRE(t2.branches.size() == 1);
    CHECK(t2.branches[0].chr.beta == std::vector<long>{2, 15});
    CHECK(t2.to_string() == "D1, S(D1)=<2,15>");

    auto t3 = type_of(implicitize(P("x = t^4; y = t^5 + t^7")));
    CHECK(t3.to_string() == "D1 D2^2, D1 smooth, D2 smooth, i0(D1,D2)=6");

    auto t4 = type_of(implicitize(P("x = t^4; y = t^6 + t^7")));
    CHECK(t4.to_string() == "D1 D2, D1 smooth, S(D2)=<2,13>, i0(D1,D2)=12");

    // two smooth branches: (s1 + lambda) even
    auto t5 = type_of(implicitize(P("x = t^3; y = t^8 + t^10")));
    CHECK(t5.to_string() == "D1 D2, D1 smooth, D2 smooth, i0(D1,D2)=9");
}

TEST_CASE("Merle polygon") {
    auto s = semigroup_from_char(CharExponents{{4, 6, 7}});
    CHECK(merle_polygon(s).vertices == std::vector<LatticePoint>{{0, 3}, {6, 2}, {19, 0}});
    CHECK(merle_polygon(semigroup_from_char(CharExponents{{2, 7}})).vertices ==
          std::vector<LatticePoint>{{0, 1}, {7, 0}});
    CHECK(merle_polygon(semigroup_from_char(CharExponents{{3, 7}})).vertices ==
          std::vector<LatticePoint>{{0, 2}, {14, 0}});
    CHECK(merle_polygon(semigroup_from_char(CharExponents{{1}})).vertices.empty());
    CHECK(polygon(discriminant_exact(implicitize(P("x = t^3; y = t^7 + t^8"))).D) ==
          merle_polygon(semigroup_from_char(CharExponents{{3, 7}})));
    CHECK(polygon(discriminant_exact(implicitize(P("x = t^4; y = t^6 + t^7"))).D) == merle_polygon(s));
}

TEST_CASE("property: random branches of multiplicity 2 to 4") {
    std::mt19937_64 rng(4242);
    int checked = 0;
    for (int it = 0; it < 30; ++it) {
        Parametrization p;
        p.n = 2 + static_cast<long>(rng() % 3);
        long k = p.n + 1 + static_cast<long>(rng() % 3);
        for (int t = 0; t < 3; ++t) {
            long c = static_cast<long>(rng() % 5) - 2;
            p.y_terms[k] = Rat(c == 0 ? 1 : c);
            k += 1 + static_cast<long>(rng() % 3);
        }
        if (!p.is_primitive()) continue;
        auto chr = characteristic_exponents(p);
        auto sg = semigroup_from_char(chr);
        BiPoly f = implicitize(p);
        BiPoly D = discriminant_exact(f).D;
        CHECK(D.degree(1) == p.n - 1);
        CHECK(sgn(D.coeff(0, 0)) == 0);
        CHECK(polygon(D) == merle_polygon(sg));
        bool nd = is_nondegenerate(D).nondegenerate;
        CHECK(nd == (p.n == 2 || (p.n == 4 && chr.genus() == 2)));
        auto t = equisingularity_type(D);
        CHECK(t.total_degree() == p.n - 1);
        ++checked;
    }
    CHECK(checked > 10);
}
