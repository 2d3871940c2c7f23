#include "polardisc/discriminant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polardisc {

long EquisingularityType::total_degree() const {
    long d = 0;
    for (const auto& b : branches) d += b.multiplicity * b.chr.multiplicity();
    return d;
}

std::string EquisingularityType::to_string() const {
    std::ostringstream os;
    if (branches.empty()) return "empty";
    for (std::size_t i = 0; i < branches.size(); ++i) {
        os << (i ? " " : "") << "D" << i + 1;
        if (branches[i].multiplicity > 1) os << "^" << branches[i].multiplicity;
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        os << ", ";
        if (branches[i].chr.beta.size() <= 1) os << "D" << i + 1 << " smooth";
        else os << "S(D" << i + 1 << ")=" << semigroup_from_char(branches[i].chr).to_string();
    }
    for (std::size_t i = 0; i < branches.size(); ++i)
        for (std::size_t j = i + 1; j < branches.size(); ++j)
            os << ", i0(D" << i + 1 << ",D" << j + 1 << ")=" << intersections[i][j];
    return os.str();
}

EquisingularityType canonical(const EquisingularityType& t) {
    std::size_t n = t.branches.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    using Key = std::pair<std::vector<std::pair<std::vector<long>, int>>, std::vector<long>>;
    auto key_of = [&](const std::vector<std::size_t>& p) {
        Key k;
        for (std::size_t i : p) k.first.emplace_back(t.branches[i].chr.beta, t.branches[i].multiplicity);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) k.second.push_back(t.intersections[p[a]][p[b]]);
        return k;
    };
    std::vector<std::size_t> best = perm;
    Key best_key = key_of(perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        Key k = key_of(perm);
        if (k < best_key) {
            best_key = std::move(k);
            best = perm;
        }
    }
    EquisingularityType out;
    for (std::size_t i : best) out.branches.push_back(t.branches[i]);
    out.intersections.assign(n, std::vector<long>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.intersections[a][b] = t.intersections[best[a]][best[b]];
    return out;
}

BiPoly polar(const BiPoly& f) {
    if (f.degree(1) < 1) fail(ErrorKind::invalid_input, "polar needs a polynomial of positive degree in " + f.var(1));
    return f.derivative(1);
}

DiscriminantResult discriminant_exact(const BiPoly& f0) {
    DiscriminantResult out{BiPoly::constant(Rat(1), "u", "v"), {}};
    BiPoly f = f0.renamed("u", "y");
    if (f.degree(1) < 1) fail(ErrorKind::invalid_input, "discriminant needs positive degree in y");
    BiPoly fy = f.derivative(1);
    if (fy.degree(1) < 1) {
        out.warnings.push_back("polar is constant in y; discriminant set to 1");
        return out;
    }
    using Q3 = UPoly<QPoly2>;
    // coefficients in Q[u][v]: QPoly2 with outer variable v
    auto lift = [](const BiPoly& g) {
        std::vector<QPoly2> c(static_cast<std::size_t>(g.degree(1)) + 1);
        for (const auto& [e, q] : g.terms()) {
            std::vector<Rat> a(static_cast<std::size_t>(e.first) + 1);
            a[e.first] = q;
            c[e.second] = c[e.second] + QPoly2(QPoly(a));
        }
        return Q3(c);
    };
    Q3 A = lift(fy);
    Q3 B = lift(BiPoly() - f);  // -f, plus v in the constant term
    {
        auto c = B.coeffs();
        c[0] = c[0] + QPoly2(std::vector<QPoly>{QPoly(), QPoly(Rat(1))});
        B = Q3(c);
    }
    QPoly2 r = resultant(A, B);
    BiPoly D = from_recursive(r, 1, "u", "v");
    if (D.is_zero()) fail(ErrorKind::invalid_input, "discriminant vanishes identically (f is not reduced)");
    QPoly2 rec = to_recursive(D, 1);
    if (rec.lc().degree() == 0) {
        D = D.monic();
    } else {
        QPoly g;
        for (const auto& c : rec.coeffs()) g = poly_gcd(g, c);
        std::vector<QPoly> cs;
        for (const auto& c : rec.coeffs()) cs.push_back(exact_div(c, g));
        D = from_recursive(QPoly2(cs), 1, "u", "v");
        out.warnings.push_back("leading coefficient in v is not constant; only the content was removed");
    }
    out.D = D;
    return out;
}

namespace {

// numeric Puiseux steps that hit an ambiguous magnitude are retried with
// doubled precision
template <class Fn>
auto escalate(mpfr_prec_t precision, Fn fn) {
    for (mpfr_prec_t p = precision;; p *= 2) {
        try {
            return fn(p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_exhausted || p >= 4096) throw;
        }
    }
}

}  // namespace

std::vector<PuiseuxSeries> discriminant_roots(const BiPoly& f0, const Rat& order_bound, mpfr_prec_t precision) {
    BiPoly f = f0.renamed("u", "y");
    BiPoly fy = polar(f);
    if (fy.degree(1) < 1) return {};
    Rat T = order_bound + Rat(f.degree(1) + 1);
    return escalate(precision, [&](mpfr_prec_t p) {
        std::vector<PuiseuxSeries> out;
        for (const auto& r : puiseux_roots(fy, T, p)) {
            PuiseuxSeries d = compose(f, r.series, order_bound);
            for (int k = 0; k < r.multiplicity; ++k) out.push_back(d);
        }
        return out;
    });
}

bool composed_roots_agree(const BiPoly& f, const Rat& order_bound, mpfr_prec_t precision) {
    BiPoly D = discriminant_exact(f).D;
    return escalate(precision, [&](mpfr_prec_t p) {
        auto exact = puiseux_roots(D, order_bound, p);
        std::vector<int> left;
        for (const auto& r : exact) left.push_back(r.multiplicity);
        for (const auto& d : discriminant_roots(f, order_bound, p)) {
            bool hit = false;
            for (std::size_t k = 0; k < exact.size() && !hit; ++k) {
                if (left[k] == 0 || contact_order(d, exact[k].series, p)) continue;
                --left[k];
                hit = true;
            }
            if (!hit) return false;
        }
        return std::all_of(left.begin(), left.end(), [](int l) { return l == 0; });
    });
}

namespace {

struct Orbit {
    std::size_t factor;
    std::vector<std::size_t> members;  // indices into the root list
};

EquisingularityType type_at(const std::vector<SquarefreeFactor>& factors, const Rat& T, mpfr_prec_t prec) {
    std::vector<PuiseuxSeries> roots;
    std::vector<std::size_t> owner;
    for (std::size_t a = 0; a < factors.size(); ++a) {
        for (const auto& r : puiseux_roots(factors[a].factor, T, prec)) {
            if (r.multiplicity != 1)
                fail(ErrorKind::precision_exhausted, "repeated root in a squarefree factor");
            roots.push_back(r.series);
            owner.push_back(a);
        }
    }
    auto contact = [&](const PuiseuxSeries& a, const PuiseuxSeries& b) {
        auto c = contact_order(a, b, prec);
        if (!c) fail(ErrorKind::precision_exhausted, "distinct roots could not be separated");
        return *c;
    };
    auto same = [&](const PuiseuxSeries& a, const PuiseuxSeries& b) { return !contact_order(a, b, prec); };

    std::vector<Orbit> orbits;
    std::vector<char> used(roots.size(), 0);
    std::vector<CharExponents> chars;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        const PuiseuxSeries& r = roots[i];
        long N = r.ramification;
        Orbit o{owner[i], {i}};
        used[i] = 1;
        std::vector<long> raw{N};
        for (long k = 1; k < N; ++k) {
            PuiseuxSeries c = r.conjugate(k);
            bool found = false;
            for (std::size_t j = 0; j < roots.size() && !found; ++j) {
                if (used[j] || owner[j] != owner[i] || !same(c, roots[j])) continue;
                used[j] = 1;
                o.members.push_back(j);
                found = true;
            }
            Rat ck = contact(r, c);
            Rat scaled = ck * N;
            if (!is_integer(scaled)) fail(ErrorKind::internal_error, "non-integral characteristic exponent");
            raw.push_back(to_long(scaled));
        }
        if (static_cast<long>(o.members.size()) != N)
            fail(ErrorKind::precision_exhausted, "conjugate orbit is incomplete");
        std::sort(raw.begin() + 1, raw.end());
        raw.erase(std::unique(raw.begin() + 1, raw.end()), raw.end());
        chars.push_back(N == 1 ? CharExponents{{1}} : normalize_char(raw));
        orbits.push_back(std::move(o));
    }
    EquisingularityType t;
    std::size_t m = orbits.size();
    for (std::size_t k = 0; k < m; ++k) t.branches.push_back({chars[k], factors[orbits[k].factor].multiplicity});
    t.intersections.assign(m, std::vector<long>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            Rat s(0);
            for (std::size_t i : orbits[a].members)
                for (std::size_t j : orbits[b].members) s += contact(roots[i], roots[j]);
            if (!is_integer(s)) fail(ErrorKind::internal_error, "non-integral intersection number");
            t.intersections[a][b] = t.intersections[b][a] = to_long(s);
        }
    return canonical(t);
}

}  // namespace

EquisingularityType equisingularity_type(const BiPoly& D0, mpfr_prec_t precision) {
    if (D0.is_zero()) fail(ErrorKind::invalid_input, "zero curve");
    if (sgn(D0.coeff(0, 0)) != 0) return EquisingularityType{};
    BiPoly D = D0;
    if (D.degree(1) < 1) fail(ErrorKind::invalid_input, "curve has no branch transversal to " + D.var(1) + " = 0");
    auto factors = squarefree_decompose(D, D.var(1));
    // every contact order between distinct roots is bounded by the order of
    // the discriminant (same factor) or of the resultant (distinct factors)
    Rat T(1);
    for (std::size_t a = 0; a < factors.size(); ++a) {
        const BiPoly& P = factors[a].factor;
        long low = -1;
        for (const auto& [e, q] : P.terms())
            if (e.second == 0 && (low < 0 || e.first < low)) low = e.first;
        if (low > 0) T = std::max(T, Rat(low));
        if (P.degree(1) >= 2) {
            BiPoly disc = resultant(P, P.derivative(1), P.var(1));
            T = std::max(T, Rat(Rat(disc.low_degree(0)) / 2));
        }
        for (std::size_t b = a + 1; b < factors.size(); ++b) {
            BiPoly r = resultant(P, factors[b].factor, P.var(1));
            T = std::max(T, Rat(r.low_degree(0)));
        }
    }
    T += 1;
    return escalate(precision, [&](mpfr_prec_t p) { return type_at(factors, T, p); });
}

NewtonPolygon merle_polygon(const Semigroup& s) {
    NewtonPolygon np;
    if (s.generators.size() < 2) return np;
    const auto& g = s.generators;
    const auto& e = s.e;
    long e0 = e[0];
    LatticePoint cur{0, e0 - 1};
    np.vertices.push_back(cur);
    for (std::size_t i = 1; i < g.size(); ++i) {
        long r = e[i - 1] / e[i] - 1;
        LatticePoint next{cur.i + r * g[i], cur.j - r * e0 / e[i - 1]};
        np.edges.push_back(Edge{cur, next, Rat(next.i - cur.i) / Rat(cur.j - next.j)});
        np.vertices.push_back(next);
        cur = next;
    }
    return np;
}

}  // namespace polardisc
