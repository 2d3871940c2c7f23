// Acceptance run: one PASS/FAIL line per criterion.  Exit status is 0 when
// every failing check is on the pinned list of source defects below.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "polardisc/classifier.hpp"
#include "polardisc/parser.hpp"

using namespace polardisc;

namespace {

// pinned tolerances
constexpr mpfr_prec_t kPrecision = 256;  // order detection at 2^-128, clustering at 2^-64
constexpr double kLimit1 = 1.0, kLimit2 = 5.0, kLimit3 = 10.0, kLimit4 = 60.0, kLimit5 = 30.0, kLimitAll = 300.0;
constexpr std::uint64_t kSeed = 20261018;
constexpr int kIntersectionPairs = 50;

// checks that cannot pass because the closed form or the sample itself is
// wrong; each one is analysed in the README
const std::set<std::string> kKnownDefects{
    "4:NF4_5(11,5) B.3.2",    "4:NF4_5(11,5) B.3.3",   "4:NF4_5(15,7) C.3.2.3.2",
    "5:R1(3,4)",              "8:r-label R2B(4,11)",
};

struct Check {
    std::string key;
    bool ok;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Check> checks;
    double worst_seconds = 0;

    void add(const std::string& key, bool ok, const std::string& detail = "") {
        checks.push_back({std::to_string(id) + ":" + key, ok, detail});
    }
    bool passed() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

struct Sample {
    std::string label;
    int item;
    VerificationReport rep;
};

std::vector<Sample> samples;

std::optional<VerificationReport> run(Criterion& c, const std::string& label, const std::string& json, double limit,
                                      std::uint64_t seed = 1) {
    try {
        auto t0 = std::chrono::steady_clock::now();
        auto rep = verify(parse_descriptor(json), VerifyConfig{kPrecision, seed});
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.worst_seconds = std::max(c.worst_seconds, sec);
        if (sec >= limit) c.add(label + " time", false, label + " took " + std::to_string(sec) + " s");
        samples.push_back({label, c.id, rep});
        return rep;
    } catch (const Error& e) {
        c.add(label, false, label + ": " + error_kind_name(e.kind()) + ": " + e.what());
        return std::nullopt;
    }
}

std::string S(long v) { return std::to_string(v); }

Criterion item1() {
    Criterion c{1, "multiplicity 2: D = v + u^s1, non-degenerate"};
    for (long s1 : {3, 5, 7, 9}) {
        std::string label = "Mult2(" + S(s1) + ")";
        auto r = run(c, label, R"({"family":"Mult2","s1":)" + S(s1) + "}", kLimit1);
        if (!r) continue;
        BiPoly want = parse_polynomial("v + u^" + S(s1), "u", "v");
        c.add(label, r->discriminant == want && r->nondegenerate && r->match,
              label + ": D = " + r->discriminant.to_string());
    }
    return c;
}

Criterion item2() {
    Criterion c{2, "multiplicity 3: classifier equals computed type"};
    for (auto [s1, l] : std::vector<std::pair<long, long>>{{7, 0}, {7, 8}, {8, 10}, {10, 11}, {10, 14}, {11, 13}}) {
        std::string label = "Mult3(" + S(s1) + "," + S(l) + ")";
        auto r = run(c, label, R"({"family":"Mult3","s1":)" + S(s1) + R"(,"lambda":)" + S(l) + "}", kLimit2);
        if (!r) continue;
        bool shape = true;
        if (l == 0) shape = r->computed.branches.size() == 1 && r->computed.branches[0].multiplicity == 2;
        c.add(label, r->match && shape,
              label + ": predicted " + r->predicted.to_string() + ", computed " + r->computed.to_string());
    }
    return c;
}

Criterion item3() {
    Criterion c{3, "multiplicity 4, two characteristic exponents: smooth + <2,s2>, i0 = 2 s1, non-degenerate"};
    for (auto [s1, s2] : std::vector<std::pair<long, long>>{{6, 13}, {6, 15}, {10, 21}}) {
        std::string label = "Mult4G2(" + S(s1) + "," + S(s2) + ")";
        auto r = run(c, label, R"({"family":"Mult4G2","s1":)" + S(s1) + R"(,"s2":)" + S(s2) + "}", kLimit3);
        if (!r) continue;
        bool shape = r->computed.to_string() ==
                     "D1 D2, D1 smooth, S(D2)=<2," + S(s2) + ">, i0(D1,D2)=" + S(2 * s1);
        c.add(label, r->match && shape && r->nondegenerate,
              label + ": computed " + r->computed.to_string() + (r->nondegenerate ? "" : ", degenerate"));
    }
    return c;
}

Criterion item4() {
    Criterion c{4, "multiplicity 4, one characteristic exponent: verify passes on every normal form and sub-case"};
    std::mt19937_64 rng(kSeed);
    auto one = [&](const std::string& label, const std::string& json, const std::string& want_case = "") {
        auto r = run(c, label, json, kLimit4, rng());
        if (!r) return;
        bool ok = r->match && (want_case.empty() || r->fired_case == want_case);
        std::string conf;
        for (const auto& n : r->confirmed_by) conf += (conf.empty() ? "" : ",") + n;
        c.add(label, ok,
              label + " [" + r->fired_case + "]: predicted " + r->predicted.to_string() + ", computed " +
                  r->computed.to_string() + (conf.empty() ? "" : ", confirmed by " + conf));
    };
    for (long s1 : {5, 7}) one("NF4_1(" + S(s1) + ")", R"({"family":"NF4_1","s1":)" + S(s1) + "}");
    for (long s1 : {9, 11, 13}) {
        long q = s1 / 4;
        for (long j = 2; j <= q; ++j) {
            std::string tail = R"(,"s1":)" + S(s1) + R"(,"j":)" + S(j);
            for (long k = 1; k <= q - j; ++k)
                one("NF4_2(" + S(s1) + "," + S(j) + "," + S(k) + ")",
                    R"({"family":"NF4_2")" + tail + R"(,"k":)" + S(k) + "}");
            one("NF4_3(" + S(s1) + "," + S(j) + ")", R"({"family":"NF4_3")" + tail + "}");
            one("NF4_4(" + S(s1) + "," + S(j) + ")", R"({"family":"NF4_4")" + tail + "}");
        }
    }
    const std::string r6 = "4*sqrt(6)/9", m6 = "-4*sqrt(6)/9", t6 = "-4*sqrt(6)/81";
    struct Inst {
        long s1, j;
        std::string coeffs, sub;
    };
    for (const auto& in : std::vector<Inst>{
             {5, 2, "", "A"},
             {9, 3, "", "A"},
             {15, 6, R"("1":"1")", "B.1"},
             {19, 7, R"("1":"-2/3")", "B.1"},
             {13, 6, R"("1":"1")", "B.2"},
             {17, 8, R"("1":"3")", "B.2"},
             {11, 5, R"("1":"1")", "B.3.1"},
             {11, 5, R"("1":")" + r6 + "\"", "B.3.2"},
             {11, 5, R"("1":")" + m6 + "\"", "B.3.3"},
             {19, 8, R"("1":"1","2":"1")", "C.1"},
             {17, 8, R"("1":"1","2":"1")", "C.2"},
             {15, 7, R"("1":"1","2":"1")", "C.3.1"},
             {21, 9, R"("1":")" + r6 + R"(","2":"1")", "C.3.2.1"},
             {19, 9, R"("1":")" + r6 + R"(","3":"1")", "C.3.2.2"},
             {15, 7, R"("1":")" + r6 + R"x(","2":"sqrt(6)")x", "C.3.2.3.1"},
             {15, 7, R"("1":")" + r6 + R"(","2":")" + t6 + "\"", "C.3.2.3.2"},
         }) {
        std::string label = "NF4_5(" + S(in.s1) + "," + S(in.j) + ") " + in.sub;
        one(label, R"({"family":"NF4_5","s1":)" + S(in.s1) + R"(,"j":)" + S(in.j) + R"(,"coeffs":{)" + in.coeffs + "}}",
            in.sub);
    }
    return c;
}

Criterion item5() {
    Criterion c{5, "r = 1, 2 families: table vs proof discrepancy detected, confirming version stated"};
    for (const auto& [label, json] : std::vector<std::pair<std::string, std::string>>{
             {"R1(3,4)", R"({"family":"R1","s0":3,"s1":4})"},
             {"R1(4,5)", R"({"family":"R1","s0":4,"s1":5})"},
             {"R1(5,6)", R"({"family":"R1","s0":5,"s1":6})"},
             {"R2A(5,6)", R"({"family":"R2A","s0":5,"s1":6})"},
             {"R2B(4,11)", R"({"family":"R2B","s0":4,"s1":11})"},
             {"R2B(5,7)", R"({"family":"R2B","s0":5,"s1":7})"}}) {
        auto r = run(c, label, json, kLimit5);
        if (!r) continue;
        bool differ = !(r->variants.at(0).second == r->variants.at(1).second);
        bool flagged = false;
        for (const auto& d : r->discrepancies) flagged = flagged || d.id == "table-vs-proof";
        bool stated = !r->confirmed_by.empty();
        std::string conf;
        for (const auto& n : r->confirmed_by) conf += (conf.empty() ? "" : ",") + n;
        c.add(label, stated && differ == flagged,
              label + ": computed " + r->computed.to_string() + "; confirmed by " + (stated ? conf : "none"));
    }
    return c;
}

Criterion item6() {
    Criterion c{6, "non-degeneracy law over all sampled branches: non-degenerate iff n = 2 or (n = 4 and g = 2)"};
    for (const auto& s : samples)
        c.add("law " + s.label, s.rep.nondegeneracy_law,
              s.label + ": n = " + S(s.rep.branch_char.multiplicity()) + ", g = " + S(s.rep.branch_char.genus()) +
                  ", " + (s.rep.nondegenerate ? "non-degenerate" : "degenerate"));
    return c;
}

Criterion item7() {
    Criterion c{7, "polygon of D equals the Merle polygon for all sampled branches"};
    for (const auto& s : samples) c.add("merle " + s.label, s.rep.merle_match, s.label);
    return c;
}

BiPoly random_branch(std::mt19937_64& rng, long n) {
    for (;;) {
        Parametrization p;
        p.n = n;
        long k = n + 1 + static_cast<long>(rng() % 3);
        for (int t = 0; t < 3; ++t) {
            long num = static_cast<long>(rng() % 9) - 4;
            p.y_terms[k] = Rat(num == 0 ? 1 : num);
            k += 1 + static_cast<long>(rng() % 3);
        }
        if (p.is_primitive()) return implicitize(p);
    }
}

Criterion item8() {
    Criterion c{8, "oracle equivalences"};
    std::mt19937_64 rng(kSeed);
    int pairs = 0, attempts = 0, agree = 0;
    while (pairs < kIntersectionPairs && attempts < 10 * kIntersectionPairs) {
        ++attempts;
        BiPoly f = random_branch(rng, 2 + static_cast<long>(rng() % 3));
        BiPoly g = random_branch(rng, 2 + static_cast<long>(rng() % 3));
        try {
            long a = intersection_number(f, g, IntersectionMethod::halphen_zeuthen, kPrecision);
            long b = intersection_number(f, g, IntersectionMethod::resultant, kPrecision);
            ++pairs;
            if (a == b) ++agree;
            else c.add("HZ pair " + S(pairs), false, f.to_string() + " / " + g.to_string() + ": " + S(a) + " vs " + S(b));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::infinite_intersection) c.add("HZ pair", false, e.what());
        }
    }
    c.add("HZ count", pairs == kIntersectionPairs, "only " + S(pairs) + " admissible pairs");

    for (const auto& s : samples) {
        const auto& r = s.rep;
        Semigroup sg = semigroup_from_char(r.branch_char);
        try {
            if (r.parametrization) {
                Semigroup o = semigroup_oracle(parse_parametrization(*r.parametrization), sg.conductor + 2 * sg.generators[0] + 2);
                c.add("semigroup " + s.label, o == sg, s.label + ": oracle " + o.to_string() + " vs " + sg.to_string());
            } else {
                // one characteristic exponent: S is spanned by the values of x and y
                BiPoly f = parse_polynomial(r.curve);
                long vx = intersection_number(f, parse_polynomial("x"), IntersectionMethod::resultant);
                long vy = intersection_number(f, parse_polynomial("y"), IntersectionMethod::resultant);
                Semigroup o = semigroup_from_values({vx, vy});
                c.add("semigroup " + s.label, o == sg, s.label + ": values " + o.to_string() + " vs " + sg.to_string());
            }
        } catch (const Error& e) {
            c.add("semigroup " + s.label, false, s.label + ": " + e.what());
        }
        c.add("mu " + s.label, r.milnor == sg.conductor, s.label + ": mu " + S(r.milnor) + ", c " + S(sg.conductor));

        std::optional<long> label_r;
        switch (r.descriptor.family) {
            case Family::R1: label_r = 1; break;
            case Family::R2A:
            case Family::R2B: label_r = 2; break;
            case Family::Mult2:
            case Family::NF4_1: label_r = 0; break;
            case Family::Mult3:
                if (r.descriptor.lambda == 0) label_r = 0;
                break;
            default: break;
        }
        if (label_r) {
            long got = r.tjurina ? r.milnor - *r.tjurina : -1;
            c.add("r-label " + s.label, got == *label_r,
                  s.label + ": mu - tau = " + S(got) + ", family label " + S(*label_r));
        }

        try {
            BiPoly f = parse_polynomial(r.curve);
            long n = r.branch_char.multiplicity();
            Rat T(2 * sg.conductor + 2 * n, n);
            c.add("roots " + s.label, composed_roots_agree(f, T, kPrecision), s.label + ": composed roots differ");
        } catch (const Error& e) {
            c.add("roots " + s.label, false, s.label + ": " + e.what());
        }
    }
    return c;
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Criterion> all;
    all.push_back(item1());
    all.push_back(item2());
    all.push_back(item3());
    all.push_back(item4());
    all.push_back(item5());
    all.push_back(item6());
    all.push_back(item7());
    all.push_back(item8());
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (total >= kLimitAll) all.back().add("total time", false, "suite took " + std::to_string(total) + " s");

    int unexpected = 0;
    for (const auto& c : all) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", c.worst_seconds);
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  (" << c.checks.size()
                  << " checks";
        if (c.worst_seconds > 0) std::cout << ", slowest verify " << buf << " s";
        std::cout << ")\n";
        for (const auto& k : c.checks) {
            if (k.ok) continue;
            bool known = kKnownDefects.count(k.key) > 0;
            if (!known) ++unexpected;
            std::cout << "    " << (known ? "known defect: " : "unexpected: ") << k.detail << "\n";
        }
    }
    std::cout << "total " << static_cast<long>(total) << " s, " << unexpected << " unexpected failure(s)\n";
    return unexpected == 0 ? 0 : 1;
}
