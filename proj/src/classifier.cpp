#include "polardisc/classifier.hpp"

#include <chrono>

#include "polardisc/errors.hpp"

namespace polardisc {

namespace {

struct TypeBuilder {
    EquisingularityType t;
    std::size_t add(std::vector<long> beta, int mult = 1) {
        t.branches.push_back({CharExponents{std::move(beta)}, mult});
        for (auto& row : t.intersections) row.push_back(0);
        t.intersections.emplace_back(t.branches.size(), 0);
        return t.branches.size() - 1;
    }
    std::size_t smooth(int mult = 1) { return add({1}, mult); }
    TypeBuilder& i0(std::size_t a, std::size_t b, long v) {
        t.intersections[a][b] = t.intersections[b][a] = v;
        return *this;
    }
    EquisingularityType done() const { return canonical(t); }
};

// single branch with semigroup <p, m>, or p smooth branches pairwise m/p
EquisingularityType branch_or_split(long p, long m) {
    TypeBuilder b;
    if (m % p != 0) {
        b.add({p, m});
        return b.done();
    }
    std::vector<std::size_t> ids;
    for (long i = 0; i < p; ++i) ids.push_back(b.smooth());
    for (std::size_t x = 0; x < ids.size(); ++x)
        for (std::size_t y = x + 1; y < ids.size(); ++y) b.i0(ids[x], ids[y], m / p);
    return b.done();
}

// D1 smooth with a second component <2, m> (m odd) or two smooth ones
EquisingularityType smooth_plus_pair(long i0_each, long m) {
    TypeBuilder b;
    auto d1 = b.smooth();
    if (m % 2 == 1) {
        auto d2 = b.add({2, m});
        b.i0(d1, d2, 2 * i0_each);
    } else {
        auto d2 = b.smooth(), d3 = b.smooth();
        b.i0(d1, d2, i0_each).i0(d1, d3, i0_each).i0(d2, d3, m / 2);
    }
    return b.done();
}

EquisingularityType three_smooth(long a12, long a13, long a23) {
    TypeBuilder b;
    auto d1 = b.smooth(), d2 = b.smooth(), d3 = b.smooth();
    b.i0(d1, d2, a12).i0(d1, d3, a13).i0(d2, d3, a23);
    return b.done();
}

void classify_nf45(const BranchDescriptor& d, mpfr_prec_t prec, Classification& out) {
    const long s1 = d.s1, j = d.j, q = s1 / 4;
    auto r = realize_nf45(d, prec);
    out.notes.insert(out.notes.end(), r.notes.begin(), r.notes.end());
    const long a = s1 - j;
    if (r.c.empty()) {
        TypeBuilder b;
        auto d1 = b.smooth(), d2 = b.smooth(2);
        b.i0(d1, d2, 2 * a);
        out.predicted = b.done();
        out.fired_case = "A";
        return;
    }
    auto it = r.c.begin();
    const long k = it->first;
    const Rat ck = it->second;
    const bool caseC = r.c.size() >= 2;
    const long s = caseC ? std::next(it)->first - k : 0;
    const Rat cks = caseC ? std::next(it)->second : Rat(0);
    const std::string tag = caseC ? "C" : "B";
    const long m = q + k;
    if (2 * m < a) {
        out.fired_case = tag + ".1";
        long w = a + m;
        out.predicted = branch_or_split(3, 4 * w);
        return;
    }
    if (2 * m > a) {
        out.fired_case = tag + ".2";
        if (a % 2 == 1) out.predicted = smooth_plus_pair(2 * a, 3 * a + 2 * m);
        else out.predicted = three_smooth(2 * a, 2 * a, 3 * a / 2 + m);
        return;
    }
    // a_k = +-4 sqrt(6)/9 in normalized form  <=>  27 c_k^2 = 32 b^3
    const Rat b = r.b;
    const bool critical = 27 * ck * ck == 32 * b * b * b;
    const long g = s1 - 2 * j;
    if (!critical) {
        out.fired_case = tag + ".3.1";
        out.predicted = three_smooth(2 * a, 2 * a, 2 * a);
        return;
    }
    if (!caseC) {
        out.fired_case = sgn(ck) > 0 ? "B.3.2" : "B.3.3";
        if (g % 2 == 1) out.predicted = smooth_plus_pair(2 * a, 5 * s1 - 6 * j);
        else out.predicted = three_smooth(2 * a, 2 * a, (5 * s1 - 7 * j) / 2);
        // the r-terms at offset (s1 - 2j)/2 cancel; the branching term is the
        // one of the a_{k+s} = 0 limit of C.3.2.2
        out.variants.emplace_back("proof", out.predicted);
        if (g % 2 == 1) out.variants.emplace_back("corrected", smooth_plus_pair(2 * a, 7 * s1 - 10 * j));
        else out.variants.emplace_back("corrected", three_smooth(2 * a, 2 * a, (7 * s1 - 10 * j) / 2));
        return;
    }
    if (g > s) {
        out.fired_case = "C.3.2.1";
        out.predicted = smooth_plus_pair(2 * a, 4 * a + 3 * s);
        return;
    }
    if (g < s) {
        out.fired_case = "C.3.2.2";
        out.predicted = smooth_plus_pair(2 * a, 7 * s1 - 10 * j);
        return;
    }
    // critical second coefficient: a_{k+s} = -a_k / 9  <=>  c_{k+s} = -c_k b^2 / 9
    if (cks != -ck * b * b / 9) {
        out.fired_case = "C.3.2.3.1";
        if (s % 2 == 0) out.predicted = three_smooth(2 * a, 2 * a, (7 * s1 - 10 * j) / 2);
        else out.predicted = smooth_plus_pair(2 * a, 7 * s1 - 10 * j);
    } else {
        out.fired_case = "C.3.2.3.2";
        out.predicted = three_smooth(2 * a, 2 * a, 4 * s1 - 6 * j);
        out.variants.emplace_back("proof", out.predicted);
        out.variants.emplace_back("corrected", three_smooth(2 * a, 2 * a, 2 * a + 3 * s));
    }
    out.notes.push_back("second threshold taken as a_{k+s} = -a_k/9");
}

void classify_r(const BranchDescriptor& d, Classification& out) {
    const long s0 = d.s0, s1 = d.s1;
    if (d.family == Family::R1 || d.family == Family::R2A) {
        const long shift = d.family == Family::R1 ? 2 : 3;
        const long P = (s1 - shift) * s0;  // (s1 - 2) s0 or (s1 - 3) s0
        const long mult1 = s0 - 3;
        // proof text
        bool irreducible_pair = d.family == Family::R1 ? (s0 % 2 == 1 && s1 % 2 == 1) : (s0 % 2 == 1 && s1 % 2 == 0);
        EquisingularityType proof;
        if (irreducible_pair) {
            TypeBuilder b;
            auto d2 = b.add({2, P});
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, std::min(s1, P));
            proof = b.done();
        } else {
            TypeBuilder b;
            auto d2 = b.smooth(), d3 = b.smooth();
            b.i0(d2, d3, P / 2);
            if (mult1 > 0) {
                auto d1 = b.smooth(static_cast<int>(mult1));
                b.i0(d1, d2, std::min(s1, P / 2)).i0(d1, d3, std::min(s1, P / 2));
            }
            proof = b.done();
        }
        out.predicted = proof;
        out.fired_case = family_name(d.family) + (irreducible_pair ? "/branch" : "/two-smooth");
        out.variants.emplace_back("proof", proof);
        if (d.family == Family::R1) {
            // tabulated version: <3, s1 - 2> when s0, s1 coprime (always), /3 otherwise
            TypeBuilder b;
            auto d2 = b.add({3, s1 - 2});
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, std::min(s1, P));
            if ((s1 - 2) % 3 == 0) {
                TypeBuilder c;
                auto x = c.smooth(), y = c.smooth();
                c.i0(x, y, P / 3);
                if (mult1 > 0) {
                    auto d1 = c.smooth(static_cast<int>(mult1));
                    c.i0(d1, x, std::min(s1, P / 3)).i0(d1, y, std::min(s1, P / 3));
                }
                out.variants.emplace_back("table", c.done());
            } else {
                out.variants.emplace_back("table", b.done());
            }
        } else {
            out.variants.emplace_back("table", proof);
        }
        // corrected: D1 = v + u^s1 shares the leading term of every other
        // root; they separate at order e = P / 2
        EquisingularityType corr;
        if (P % 2 == 1) {
            TypeBuilder b;
            auto d2 = b.add({2, P});
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, P);
            corr = b.done();
        } else if (s0 % 2 == 0) {
            TypeBuilder b;
            auto d2 = b.smooth(2);
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, P / 2);
            corr = b.done();
        } else {
            TypeBuilder b;
            auto d2 = b.smooth(), d3 = b.smooth();
            b.i0(d2, d3, P / 2);
            if (mult1 > 0) {
                auto d1 = b.smooth(static_cast<int>(mult1));
                b.i0(d1, d2, P / 2).i0(d1, d3, P / 2);
            }
            corr = b.done();
        }
        out.variants.emplace_back("corrected", corr);
        return;
    }
    // R2B
    const long P = (s1 - 2) * s0;
    const long mult1 = s0 - 4;
    const bool coprime = (s1 - 2) % 3 != 0 && s0 % 3 != 0;
    EquisingularityType proof;
    {
        TypeBuilder b;
        if (coprime) {
            auto d2 = b.add({3, P});
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, 3 * s1);
        } else {
            auto x = b.smooth(), y = b.smooth(), z = b.smooth();
            b.i0(x, y, P / 3).i0(x, z, P / 3).i0(y, z, P / 3);
            if (mult1 > 0) {
                auto d1 = b.smooth(static_cast<int>(mult1));
                b.i0(d1, x, s1).i0(d1, y, s1).i0(d1, z, s1);
            }
        }
        proof = b.done();
    }
    out.predicted = proof;
    out.fired_case = std::string("R2B/") + (coprime ? "branch" : "three-smooth");
    out.variants.emplace_back("proof", proof);
    out.variants.emplace_back("table", proof);
    if (s0 % 3 != 0) {
        const long e3 = P;  // 3e
        TypeBuilder b;
        if ((s1 - 2) % 3 != 0) {
            auto d2 = b.add({3, e3});
            if (mult1 > 0) b.i0(b.smooth(static_cast<int>(mult1)), d2, e3);
        } else {
            auto x = b.smooth(), y = b.smooth(), z = b.smooth();
            long e = e3 / 3;
            b.i0(x, y, e).i0(x, z, e).i0(y, z, e);
            if (mult1 > 0) {
                auto d1 = b.smooth(static_cast<int>(mult1));
                b.i0(d1, x, e).i0(d1, y, e).i0(d1, z, e);
            }
        }
        out.variants.emplace_back("corrected", b.done());
    }
}

}  // namespace

Classification classify(const BranchDescriptor& d, mpfr_prec_t precision) {
    validate(d);
    Classification out;
    const long s1 = d.s1;
    switch (d.family) {
        case Family::Mult2: {
            TypeBuilder b;
            b.smooth();
            out.predicted = b.done();
            out.fired_case = "Mult2";
            break;
        }
        case Family::Mult3:
            if (d.lambda == 0) {
                TypeBuilder b;
                b.smooth(2);
                out.predicted = b.done();
                out.fired_case = "Mult3/1";
            } else {
                out.predicted = branch_or_split(2, s1 + d.lambda);
                out.fired_case = (s1 + d.lambda) % 2 == 0 ? "Mult3/2a" : "Mult3/2b";
            }
            break;
        case Family::Mult4G2: {
            TypeBuilder b;
            auto d1 = b.smooth();
            auto d2 = b.add({2, d.s2});
            b.i0(d1, d2, 2 * s1);
            out.predicted = b.done();
            out.fired_case = "Mult4G2";
            break;
        }
        case Family::NF4_1: {
            TypeBuilder b;
            b.smooth(3);
            out.predicted = b.done();
            out.fired_case = "NF4/1";
            break;
        }
        case Family::NF4_2:
        case Family::NF4_3:
        case Family::NF4_4: {
            long w = 2 * s1 + (2 * s1 - 4 * d.j);
            out.predicted = branch_or_split(3, w);
            out.fired_case = w % 3 == 0 ? "NF4/2b" : "NF4/2a";
            break;
        }
        case Family::NF4_5:
            classify_nf45(d, precision, out);
            break;
        case Family::R1:
        case Family::R2A:
        case Family::R2B:
            classify_r(d, out);
            break;
    }
    return out;
}

namespace {

bool law(long n, long g, bool nondeg) { return nondeg == (n == 2 || (n == 4 && g == 2)); }

}  // namespace

VerificationReport verify(const BranchDescriptor& d, const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.descriptor = d;
    Classification cl = classify(d, cfg.precision);
    rep.fired_case = cl.fired_case;
    rep.predicted = cl.predicted;
    rep.variants = cl.variants;
    rep.notes = cl.notes;

    NormalForm nf = build(d, cfg.seed, cfg.precision);
    for (const auto& n : nf.notes)
        if (std::find(rep.notes.begin(), rep.notes.end(), n) == rep.notes.end()) rep.notes.push_back(n);
    const BiPoly& f = nf.equation;
    rep.curve = f.to_string();

    // the branch itself
    Semigroup sg;
    if (nf.param) {
        rep.parametrization = nf.param->to_string();
        rep.branch_char = characteristic_exponents(*nf.param);
        rep.zariski_lambda = zariski_invariant(*nf.param);
        long expected = d.family == Family::Mult3 ? d.lambda
                        : d.family == Family::NF4_1 ? 0
                        : (d.family == Family::NF4_2 || d.family == Family::NF4_3 || d.family == Family::NF4_4)
                            ? 2 * d.s1 - 4 * d.j
                        : d.family == Family::NF4_5 ? 3 * d.s1 - 4 * d.j
                                                    : -1;
        if (expected >= 0 && *rep.zariski_lambda != expected)
            rep.discrepancies.push_back({"zariski-invariant", "normal form has lambda = " +
                                                                  std::to_string(*rep.zariski_lambda) + ", expected " +
                                                                  std::to_string(expected)});
    } else {
        auto own = equisingularity_type(f, cfg.precision);
        if (own.branches.size() != 1 || own.branches[0].multiplicity != 1)
            fail(ErrorKind::invalid_descriptor, "normal form is not a branch: " + own.to_string());
        rep.branch_char = own.branches[0].chr;
    }
    sg = semigroup_from_char(rep.branch_char);
    rep.milnor = milnor(f);
    if (rep.milnor != sg.conductor)
        rep.discrepancies.push_back({"milnor-conductor", "mu = " + std::to_string(rep.milnor) +
                                                             " differs from the conductor " +
                                                             std::to_string(sg.conductor)});
    rep.tjurina = tjurina(f, rep.milnor);
    long r = rep.milnor - *rep.tjurina;
    if (d.family == Family::R1 && r != 1)
        rep.discrepancies.push_back({"mu-minus-tau", "expected mu - tau = 1, got " + std::to_string(r)});
    if ((d.family == Family::R2A || d.family == Family::R2B) && r != 2)
        rep.discrepancies.push_back({"mu-minus-tau", "expected mu - tau = 2, got " + std::to_string(r)});

    // discriminant
    auto dr = discriminant_exact(f);
    rep.discriminant = dr.D;
    for (const auto& w : dr.warnings) rep.notes.push_back(w);
    rep.computed = equisingularity_type(dr.D, cfg.precision);
    rep.match = rep.computed == rep.predicted;
    for (const auto& [name, t] : rep.variants)
        if (t == rep.computed) rep.confirmed_by.push_back(name);
    if (rep.variants.empty() && rep.match) rep.confirmed_by.push_back("proof");

    rep.polygon_of_D = polygon(dr.D);
    rep.merle = merle_polygon(sg);
    rep.merle_match = rep.polygon_of_D == rep.merle;
    rep.nondegenerate = is_nondegenerate(dr.D).nondegenerate;
    rep.nondegeneracy_law = law(rep.branch_char.multiplicity(), rep.branch_char.genus(), rep.nondegenerate);
    if (sg.generators.size() >= 2)
        rep.notes.push_back("Merle polygon vertical lengths use (e_{i-1}/e_i - 1)*e_0/e_{i-1}");
    if (!rep.merle_match)
        rep.discrepancies.push_back({"merle-polygon", "polygon of D differs from the predicted jacobian polygon"});
    if (!rep.nondegeneracy_law)
        rep.discrepancies.push_back({"nondegeneracy-law", "non-degeneracy of D does not follow the n = 2 or "
                                                          "(n = 4, g = 2) rule"});

    if (d.family == Family::R1 || d.family == Family::R2A || d.family == Family::R2B) {
        rep.notes.push_back("f(u,0) = -u^s1, so D1 = v + u^s1");
        const auto& proof = rep.variants[0].second;
        const auto& table = rep.variants[1].second;
        if (!(proof == table))
            rep.discrepancies.push_back({"table-vs-proof", "tabulated and proof predictions differ"});
    }
    if (!rep.variants.empty()) {
        std::string who = rep.confirmed_by.empty() ? "none of the closed forms" : "";
        for (std::size_t i = 0; i < rep.confirmed_by.size(); ++i) who += (i ? ", " : "") + rep.confirmed_by[i];
        if (!rep.match)
            rep.discrepancies.push_back({"prediction-mismatch", "computed type is confirmed by: " + who});
    } else if (!rep.match) {
        rep.discrepancies.push_back({"prediction-mismatch", "computed type differs from the prediction"});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace polardisc
