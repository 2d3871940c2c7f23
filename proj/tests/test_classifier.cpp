#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "polardisc/classifier.hpp"
#include "polardisc/parser.hpp"
#include "polardisc/report.hpp"

using namespace polardisc;

namespace {

BranchDescriptor D(const std::string& s) { return parse_descriptor(s); }
std::string predicted(const std::string& s) { return classify(D(s)).predicted.to_string(); }

ErrorKind kind_of(const std::string& s) {
    try {
        parse_descriptor(s);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal_error;
}

bool has_discrepancy(const VerificationReport& r, const std::string& id) {
    return std::any_of(r.discrepancies.begin(), r.discrepancies.end(),
                       [&](const Discrepancy& d) { return d.id == id; });
}

}  // namespace

TEST_CASE("closed forms of the worked examples") {
    CHECK(predicted(R"({"family":"Mult3","s1":7,"lambda":8})") == "D1, S(D1)=<2,15>");
    CHECK(predicted(R"({"family":"Mult4G2","s1":6,"s2":13})") == "D1 D2, D1 smooth, S(D2)=<2,13>, i0(D1,D2)=12");
    CHECK(predicted(R"({"family":"NF4_5","s1":5,"j":2,"coeffs":{}})") ==
          "D1 D2^2, D1 smooth, D2 smooth, i0(D1,D2)=6");
    // proof text: D1^2 with i0 6 against both smooth branches, i0(D2,D3) = 10
    auto r1 = classify(D(R"({"family":"R1","s0":5,"s1":6})"));
    CHECK(r1.predicted.to_string() ==
          "D1 D2 D3^2, D1 smooth, D2 smooth, D3 smooth, i0(D1,D2)=10, i0(D1,D3)=6, i0(D2,D3)=6");
    CHECK(classify(D(R"({"family":"Mult3","s1":7,"lambda":0})")).fired_case == "Mult3/1");
    CHECK(predicted(R"({"family":"NF4_1","s1":5})") == "D1^3, D1 smooth");
}

TEST_CASE("verify on the worked examples") {
    auto m3 = verify(D(R"({"family":"Mult3","s1":7,"lambda":8})"));
    CHECK(m3.match);
    CHECK(m3.discriminant.to_string() == "v^2 + 2*u^7*v + 2*u^8*v + u^14 - 2*u^15 + u^16");
    CHECK(m3.zariski_lambda == 8);

    auto nf1 = verify(D(R"({"family":"NF4_1","s1":5})"));
    CHECK(nf1.match);
    CHECK(nf1.discriminant == parse_polynomial("(v + u^5)^3", "u", "v"));

    auto r1 = verify(D(R"({"family":"R1","s0":5,"s1":6})"));
    CHECK_FALSE(r1.match);
    CHECK(has_discrepancy(r1, "table-vs-proof"));
    CHECK(has_discrepancy(r1, "prediction-mismatch"));
    CHECK(r1.confirmed_by == std::vector<std::string>{"corrected"});
    CHECK(r1.computed.to_string() ==
          "D1 D2 D3^2, D1 smooth, D2 smooth, D3 smooth, i0(D1,D2)=10, i0(D1,D3)=10, i0(D2,D3)=10");
}

TEST_CASE("computed truths of the r = 1, 2 families") {
    auto r45 = verify(D(R"({"family":"R1","s0":4,"s1":5})"));
    CHECK(r45.discriminant == parse_polynomial("(v + u^5)*(v + u^5 + 1/4*u^6)^2", "u", "v"));
    CHECK(r45.confirmed_by == std::vector<std::string>{"corrected"});

    auto a56 = verify(D(R"({"family":"R2A","s0":5,"s1":6})"));
    CHECK(a56.computed.to_string() == "D1^2 D2, D1 smooth, S(D2)=<2,15>, i0(D1,D2)=15");
    CHECK(a56.confirmed_by == std::vector<std::string>{"corrected"});

    auto b57 = verify(D(R"({"family":"R2B","s0":5,"s1":7})"));
    CHECK(b57.computed.to_string() == "D1 D2, D1 smooth, S(D2)=<3,25>, i0(D1,D2)=25");
    CHECK(b57.confirmed_by == std::vector<std::string>{"corrected"});

    auto b411 = verify(D(R"({"family":"R2B","s0":4,"s1":11})"));
    CHECK(b411.match);
    CHECK(b411.confirmed_by.size() == 3);
}

TEST_CASE("mu - tau of the r families") {
    struct Row {
        const char* d;
        long r;
    };
    for (const auto& [d, r] : std::vector<Row>{{R"({"family":"R1","s0":4,"s1":5})", 1},
                                               {R"({"family":"R1","s0":5,"s1":6})", 1},
                                               {R"({"family":"R1","s0":5,"s1":7})", 1},
                                               {R"({"family":"R2A","s0":5,"s1":6})", 2},
                                               {R"({"family":"R2A","s0":4,"s1":7})", 2},
                                               {R"({"family":"R2B","s0":5,"s1":7})", 2},
                                               {R"({"family":"R2B","s0":5,"s1":8})", 2}}) {
        CAPTURE(d);
        auto rep = verify(D(d));
        REQUIRE(rep.tjurina);
        CHECK(rep.milnor - *rep.tjurina == r);
        CHECK_FALSE(has_discrepancy(rep, "mu-minus-tau"));
    }
    // the r = 2 recipe gives r = 3 at s0 = 4; verify flags it
    auto b411 = verify(D(R"({"family":"R2B","s0":4,"s1":11})"));
    CHECK(b411.milnor - *b411.tjurina == 3);
    CHECK(has_discrepancy(b411, "mu-minus-tau"));
}

TEST_CASE("threshold sub-cases against the corrected closed forms") {
    auto b32 = verify(D(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"4*sqrt(6)/9"}})"));
    CHECK(b32.fired_case == "B.3.2");
    CHECK(b32.predicted.to_string() == "D1 D2, D1 smooth, S(D2)=<2,25>, i0(D1,D2)=24");
    CHECK(b32.computed.to_string() == "D1 D2, D1 smooth, S(D2)=<2,27>, i0(D1,D2)=24");
    CHECK(b32.confirmed_by == std::vector<std::string>{"corrected"});

    auto b33 = verify(D(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"-4*sqrt(6)/9"}})"));
    CHECK(b33.fired_case == "B.3.3");
    CHECK(b33.confirmed_by == std::vector<std::string>{"corrected"});

    auto c = verify(D(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"4*sqrt(6)/9","2":"-4*sqrt(6)/81"}})"));
    CHECK(c.fired_case == "C.3.2.3.2");
    CHECK(c.computed.to_string() ==
          "D1 D2 D3, D1 smooth, D2 smooth, D3 smooth, i0(D1,D2)=16, i0(D1,D3)=16, i0(D2,D3)=19");
    CHECK(c.confirmed_by == std::vector<std::string>{"corrected"});

    // opposite sign of a_k moves the second threshold to +4 sqrt(6)/81
    auto c2 = classify(D(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"-4*sqrt(6)/9","2":"4*sqrt(6)/81"}})"));
    CHECK(c2.fired_case == "C.3.2.3.2");
    auto c3 = classify(D(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"-4*sqrt(6)/9","2":"-4*sqrt(6)/81"}})"));
    CHECK(c3.fired_case == "C.3.2.3.1");
}

TEST_CASE("decimal coefficients snap to the thresholds") {
    auto cl = classify(D(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"1.0886621079036347103099040332026183964293"}})"));
    CHECK(cl.fired_case == "B.3.2");
    CHECK(std::any_of(cl.notes.begin(), cl.notes.end(),
                      [](const std::string& n) { return n.find("snapped") != std::string::npos; }));
    auto off = classify(D(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"1.0886"}})"));
    CHECK(off.fired_case == "B.3.1");
}

TEST_CASE("descriptor errors") {
    CHECK(kind_of(R"({"family":"Mult3","s1":7)") == ErrorKind::parse_error);
    CHECK(kind_of("[1,2]") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult7","s1":7})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult3","s1":7,"lambda":8,"colour":1})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult3","s1":9})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult3","s1":7,"lambda":9})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult2","s1":4})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"R1","s0":3,"s1":4})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"R1","s0":4,"s1":6})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"NF4_5","s1":17,"j":7,"coeffs":{"4":"1"}})") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"x({"family":"NF4_3","s1":13,"j":2,"coeffs":{"3":"sqrt(6)"}})x") == ErrorKind::invalid_descriptor);
    CHECK(kind_of(R"({"family":"Mult4G2","s1":6,"s2":12})") == ErrorKind::invalid_descriptor);
}

TEST_CASE("every valid NF4_5 tuple fires exactly one sub-case") {
    const std::set<std::string> cases{"A",     "B.1",   "B.2",     "B.3.1",     "B.3.2",     "B.3.3",    "C.1",
                                      "C.2",   "C.3.1", "C.3.2.1", "C.3.2.2",   "C.3.2.3.1", "C.3.2.3.2"};
    const std::vector<std::string> values{"1", "-2/3", "4*sqrt(6)/9", "-4*sqrt(6)/9", "-4*sqrt(6)/81", "4*sqrt(6)/81",
                                          "sqrt(6)", "0.5"};
    std::set<std::string> seen;
    long n = 0;
    for (long s1 = 5; s1 <= 29; s1 += 2)
        for (long j = 2; j <= s1 / 2; ++j) {
            long top = j - s1 / 4 - 2;
            std::string head = R"({"family":"NF4_5","s1":)" + std::to_string(s1) + R"(,"j":)" + std::to_string(j);
            std::vector<std::string> ds{head + "}"};
            for (long k = 1; k <= top; ++k)
                for (const auto& a : values) {
                    std::string ck = "\"" + std::to_string(k) + "\":\"" + a + "\"";
                    ds.push_back(head + R"(,"coeffs":{)" + ck + "}}");
                    for (long l = k + 1; l <= top; ++l)
                        for (const auto& b : values)
                            ds.push_back(head + R"(,"coeffs":{)" + ck + ",\"" + std::to_string(l) + "\":\"" + b +
                                         "\"}}");
                }
            for (const auto& text : ds) {
                BranchDescriptor d;
                try {
                    d = parse_descriptor(text);
                } catch (const Error&) {
                    continue;
                }
                Classification c;
                try {
                    c = classify(d);
                } catch (const Error& e) {
                    FAIL_CHECK(text << " raised " << e.what());
                    continue;
                }
                CAPTURE(text);
                CHECK(cases.count(c.fired_case) == 1);
                CHECK(c.predicted.total_degree() == 3);
                seen.insert(c.fired_case);
                ++n;
            }
        }
    CHECK(n > 1000);
    // C.3.1 needs a_k != +-4 sqrt(6)/9 with two coefficients on the B.3 line
    for (const auto& c : cases) CHECK_MESSAGE(seen.count(c) == 1, c);
}

TEST_CASE("classification ignores trailing coefficients the fired case does not read") {
    auto base = classify(D(R"({"family":"NF4_5","s1":19,"j":8,"coeffs":{"1":"1","2":"3"}})"));
    for (const char* other : {"-5", "2/7", "sqrt(6)"}) {
        auto c = classify(D(std::string(R"({"family":"NF4_5","s1":19,"j":8,"coeffs":{"1":"1","2":")") + other +
                            "\"}}"));
        CHECK(c.fired_case == base.fired_case);
        CHECK(c.predicted == base.predicted);
    }
}

TEST_CASE("verify is deterministic and records the Zariski invariant of the normal form") {
    const char* text = R"({"family":"NF4_2","s1":13,"j":2,"k":1})";
    auto a = to_json(verify(D(text))).dump();
    auto b = to_json(verify(D(text))).dump();
    CHECK(a == b);

    std::mt19937_64 rng(20261018);
    for (const auto& [s1, lambda] : std::vector<std::pair<long, long>>{{7, 8}, {8, 10}, {10, 11}, {10, 14}, {11, 13}}) {
        auto rep = verify(D(R"({"family":"Mult3","s1":)" + std::to_string(s1) + R"(,"lambda":)" +
                            std::to_string(lambda) + "}"),
                          VerifyConfig{256, rng()});
        CHECK(rep.zariski_lambda == lambda);
        CHECK(rep.match);
        CHECK_FALSE(has_discrepancy(rep, "zariski-invariant"));
    }
    for (const char* t : {R"({"family":"NF4_3","s1":11,"j":2})", R"({"family":"NF4_4","s1":13,"j":3})",
                          R"({"family":"NF4_5","s1":13,"j":6,"coeffs":{"1":"1"}})"}) {
        auto rep = verify(D(t), VerifyConfig{256, rng()});
        CAPTURE(t);
        CHECK(rep.match);
        CHECK_FALSE(has_discrepancy(rep, "zariski-invariant"));
        CHECK_FALSE(has_discrepancy(rep, "milnor-conductor"));
    }
}
