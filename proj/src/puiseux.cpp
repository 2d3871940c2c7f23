#include "polardisc/puiseux.hpp"

#include <algorithm>
#include <sstream>

#include "polardisc/newton_polygon.hpp"
#include "polardisc/parser.hpp"
#include "polardisc/roots.hpp"

namespace polardisc {

std::optional<Rat> PuiseuxSeries::order() const {
    if (terms.empty()) return std::nullopt;
    return terms.begin()->first;
}

PuiseuxSeries PuiseuxSeries::conjugate(long k) const {
    PuiseuxSeries r = *this;
    for (auto& [e, c] : r.terms) {
        Rat scaled = e * ramification;
        long idx = to_long(scaled) * k;
        c = c * BigComplex::root_of_unity(idx, ramification, c.precision());
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rat& bound) const {
    PuiseuxSeries r = *this;
    r.terms.clear();
    for (const auto& [e, c] : terms)
        if (e < bound) r.terms.emplace(e, c);
    if (exact && r.terms.size() == terms.size()) return r;
    r.exact = false;
    r.truncation = exact ? bound : std::min(bound, truncation);
    return r;
}

namespace {

std::string exponent_text(const std::string& var, const Rat& e) {
    if (e == 0) return "";
    if (e == 1) return var;
    if (is_integer(e)) return var + "^" + e.get_str();
    return var + "^(" + e.get_str() + ")";
}

}  // namespace

std::string PuiseuxSeries::to_string(const std::string& var, int digits) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string ex = exponent_text(var, e);
        os << c.to_string(digits);
        if (!ex.empty()) os << " * " << ex;
    }
    if (!exact) {
        if (!first) os << " + ";
        os << "O(" << (truncation == 0 ? std::string("1") : exponent_text(var, truncation)) << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

namespace {

using ExactRow = std::map<Rat, Rat>;
using NumRow = std::map<Rat, BigComplex>;

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Work {
    bool exact = true;
    std::vector<ExactRow> q;
    std::vector<NumRow> c;
    std::vector<bool> lost;  // row had terms removed by pruning (directly or inherited)

    std::size_t rows() const { return exact ? q.size() : c.size(); }
    bool row_empty(std::size_t j) const { return exact ? q[j].empty() : c[j].empty(); }
};

Work to_numeric(const Work& w, mpfr_prec_t prec) {
    if (!w.exact) return w;
    Work r;
    r.exact = false;
    r.lost = w.lost;
    r.c.resize(w.q.size());
    for (std::size_t j = 0; j < w.q.size(); ++j)
        for (const auto& [a, v] : w.q[j]) r.c[j].emplace(a, BigComplex(v, prec));
    return r;
}

Work substitute_exact(const Work& g, const Rat& c, const Rat& mu) {
    Work r;
    r.exact = true;
    std::size_t n = g.q.size();
    r.q.assign(n, {});
    r.lost.assign(n, false);
    std::vector<Rat> cp{Rat(1)};
    for (std::size_t k = 1; k < n; ++k) cp.push_back(cp.back() * c);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            if (g.lost[j]) r.lost[k] = true;
            if (g.q[j].empty()) continue;
            Rat factor = cp[j - k] * binomial(static_cast<long>(j), static_cast<long>(k));
            Rat shift = mu * static_cast<long>(j - k);
            for (const auto& [a, v] : g.q[j]) {
                Rat key = a + shift;
                Rat& slot = r.q[k][key];
                slot += v * factor;
                if (sgn(slot) == 0) r.q[k].erase(key);
            }
        }
    }
    return r;
}

Work substitute_numeric(const Work& g, const BigComplex& c, const Rat& mu, mpfr_prec_t prec) {
    Work r;
    r.exact = false;
    std::size_t n = g.c.size();
    r.c.assign(n, {});
    r.lost.assign(n, false);
    std::vector<BigComplex> cp{BigComplex(1, prec)};
    for (std::size_t k = 1; k < n; ++k) cp.push_back(cp.back() * c);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k <= j; ++k) {
            if (g.lost[j]) r.lost[k] = true;
            if (g.c[j].empty()) continue;
            BigComplex factor = cp[j - k] * BigComplex(binomial(static_cast<long>(j), static_cast<long>(k)), prec);
            Rat shift = mu * static_cast<long>(j - k);
            for (const auto& [a, v] : g.c[j]) {
                Rat key = a + shift;
                auto it = r.c[k].find(key);
                if (it == r.c[k].end()) r.c[k].emplace(key, v * factor);
                else it->second += v * factor;
            }
        }
    }
    return r;
}

// Rational reconstruction of a real number by continued fractions; the
// candidate is accepted only if it is an exact root of g.
std::optional<Rat> rational_root(const QPoly& g, const BigComplex& z, mpfr_prec_t prec) {
    BigFloat tiny = BigFloat::two_pow(-static_cast<long>(prec) / 2, prec);
    if (abs(z.imag()) > tiny * max(BigFloat(1, prec), z.abs())) return std::nullopt;
    BigFloat x = z.real();
    const BigFloat x0 = x;
    // a convergent must also be close to z: a coarse convergent can hit a
    // different rational root of g
    BigFloat near = BigFloat::two_pow(-static_cast<long>(prec) / 4, prec) * max(BigFloat(1, prec), z.abs());
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        BigFloat fl(prec);
        mpfr_floor(fl.get(), x.get());
        BigInt a;
        mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
        BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
        Rat cand(p2, q2);
        cand.canonicalize();
        if (abs(BigFloat(cand, prec) - x0) < near && sgn(g.evaluate(cand)) == 0) return cand;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        BigFloat frac = x - fl;
        if (frac <= tiny) break;
        x = BigFloat(1, prec) / frac;
        if (mpz_sizeinbase(q1.get_mpz_t(), 2) > static_cast<std::size_t>(prec / 4)) break;
    }
    return std::nullopt;
}

struct Prefix {
    std::vector<std::pair<Rat, BigComplex>> terms;
};

class Expander {
public:
    Expander(const PuiseuxOptions& o) : opts_(o), prec_(o.precision) {}

    void run(Work g, int m) { expand(std::move(g), Prefix{}, Rat(0), m); }
    std::vector<PuiseuxRoot>& out() { return out_; }

private:
    // Removes numerically zero coefficients; raises on ambiguous magnitudes.
    void clean(Work& g) {
        if (g.exact) return;
        BigFloat scale(prec_);
        for (const auto& row : g.c)
            for (const auto& [a, v] : row) scale = max(scale, v.abs());
        scale = max(scale, BigFloat(1, prec_));
        BigFloat thr = scale * BigFloat::two_pow(-static_cast<long>(prec_) / 2, prec_);
        BigFloat thr2 = thr * BigFloat(2, prec_);
        for (auto& row : g.c) {
            for (auto it = row.begin(); it != row.end();) {
                BigFloat m = it->second.abs();
                if (m < thr) {
                    it = row.erase(it);
                } else {
                    if (m < thr2) fail(ErrorKind::precision_exhausted, "coefficient magnitude is at the zero threshold");
                    ++it;
                }
            }
        }
    }

    std::vector<std::pair<Rat, long>> points(const Work& g) const {
        std::vector<std::pair<Rat, long>> pts;
        for (std::size_t j = 0; j < g.rows(); ++j) {
            if (g.row_empty(j)) continue;
            Rat a = g.exact ? g.q[j].begin()->first : g.c[j].begin()->first;
            pts.emplace_back(a, static_cast<long>(j));
        }
        return pts;
    }

    void prune(Work& g, const Rat& bound) {
        if (!opts_.prune) return;
        for (std::size_t j = 0; j < g.rows(); ++j) {
            if (g.exact) {
                auto it = g.q[j].upper_bound(bound);
                if (it != g.q[j].end()) {
                    g.q[j].erase(it, g.q[j].end());
                    g.lost[j] = true;
                }
            } else {
                auto it = g.c[j].upper_bound(bound);
                if (it != g.c[j].end()) {
                    g.c[j].erase(it, g.c[j].end());
                    g.lost[j] = true;
                }
            }
        }
    }

    void emit(const Prefix& p, int mult, bool exact, const Rat& trunc) {
        PuiseuxSeries s;
        s.precision = prec_;
        s.exact = exact;
        s.truncation = trunc;
        long N = 1;
        for (const auto& [e, c] : p.terms) {
            s.terms.emplace(e, c);
            N = lcm_long(N, e.get_den().get_si());
        }
        s.ramification = N;
        out_.push_back({std::move(s), mult});
    }

    struct Child {
        Work g;
        BigComplex c;
        int mult;
    };

    std::vector<Child> children(const Work& g, long j_hi, long j_lo, const Rat& mu) {
        std::vector<Child> res;
        std::size_t d = static_cast<std::size_t>(j_hi - j_lo);
        if (g.exact) {
            std::vector<Rat> F(d + 1);
            for (long j = j_lo; j <= j_hi; ++j) {
                // point (a, j) on the edge: a = L - mu*j, L fixed by the lower vertex
                auto it = edge_coefficients_exact_.find(j);
                if (it != edge_coefficients_exact_.end()) F[j - j_lo] = it->second;
            }
            QPoly P(F);
            for (const auto& rc : rational_poly_roots(P, prec_)) {
                if (rc.root.is_zero()) continue;
                std::optional<Rat> qr;
                for (const auto& [h, mh] : squarefree(P))
                    if (mh == rc.multiplicity && !qr) qr = rational_root(h, rc.root, prec_);
                if (qr) {
                    res.push_back({substitute_exact(g, *qr, mu), BigComplex(*qr, prec_), rc.multiplicity});
                } else {
                    Work n = to_numeric(g, prec_);
                    res.push_back({substitute_numeric(n, rc.root, mu, prec_), rc.root, rc.multiplicity});
                }
            }
        } else {
            std::vector<BigComplex> F(d + 1, BigComplex(prec_));
            for (long j = j_lo; j <= j_hi; ++j) {
                auto it = edge_coefficients_num_.find(j);
                if (it != edge_coefficients_num_.end()) F[j - j_lo] = it->second;
            }
            for (const auto& rc : clustered_roots(F, prec_)) {
                if (rc.root.is_zero()) continue;
                res.push_back({substitute_numeric(g, rc.root, mu, prec_), rc.root, rc.multiplicity});
            }
        }
        return res;
    }

    void collect_edge(const Work& g, const Rat& mu, const Rat& L, long j_lo, long j_hi) {
        edge_coefficients_exact_.clear();
        edge_coefficients_num_.clear();
        for (long j = j_lo; j <= j_hi; ++j) {
            Rat a = L - mu * j;
            if (g.exact) {
                auto it = g.q[j].find(a);
                if (it != g.q[j].end()) edge_coefficients_exact_.emplace(j, it->second);
            } else {
                auto it = g.c[j].find(a);
                if (it != g.c[j].end()) edge_coefficients_num_.emplace(j, it->second);
            }
        }
    }

    // Next term order of a child holding exactly one root; nullopt if the
    // root terminates.
    std::optional<Rat> next_order(Work g, const Rat& mu0) {
        clean(g);
        std::size_t jmin = 0;
        while (jmin < g.rows() && g.row_empty(jmin)) ++jmin;
        if (jmin >= 1) {
            if (g.lost[0]) return opts_.order_bound;
            return std::nullopt;
        }
        auto hull = lower_hull(points(g));
        for (std::size_t k = 1; k < hull.size(); ++k) {
            const auto& s = hull[k - 1];
            const auto& t = hull[k];
            Rat mu = (t.first - s.first) / Rat(s.second - t.second);
            if (mu > mu0 && s.second == 1) return std::min(mu, opts_.order_bound);
        }
        fail(ErrorKind::precision_exhausted, "inconsistent Newton polygon for an isolated root");
    }

    void expand(Work g, Prefix prefix, Rat mu0, int m) {
        if (m <= 0) return;
        clean(g);
        std::size_t jmin = 0;
        while (jmin < g.rows() && g.row_empty(jmin)) ++jmin;
        if (static_cast<int>(jmin) > m) fail(ErrorKind::precision_exhausted, "zero root multiplicity exceeds root count");
        if (jmin > 0) {
            bool truncated = false;
            for (std::size_t j = 0; j < jmin; ++j) truncated = truncated || g.lost[j];
            emit(prefix, static_cast<int>(jmin), !truncated, opts_.order_bound);
        }
        if (static_cast<int>(jmin) == m) return;

        auto hull = lower_hull(points(g));
        // vertex at height m
        std::optional<Rat> a_top;
        for (const auto& [a, j] : hull)
            if (j == m) a_top = a;
        if (!a_top) fail(ErrorKind::precision_exhausted, "Newton polygon has no vertex at the expected height");
        long covered = 0;
        struct EdgeData {
            Rat mu, L;
            long hi, lo;
        };
        std::vector<EdgeData> edges;
        for (std::size_t k = 1; k < hull.size(); ++k) {
            const auto& s = hull[k - 1];
            const auto& t = hull[k];
            if (s.second > m) continue;
            Rat mu = (t.first - s.first) / Rat(s.second - t.second);
            if (!(mu > mu0)) fail(ErrorKind::precision_exhausted, "edge inclination below the current order");
            edges.push_back({mu, t.first + mu * t.second, s.second, t.second});
            covered += s.second - t.second;
        }
        if (covered != m - static_cast<long>(jmin))
            fail(ErrorKind::precision_exhausted, "Newton polygon root count mismatch");

        const Rat& T = opts_.order_bound;
        prune(g, *a_top + T * m + 1);
        for (const auto& e : edges) {
            if (e.mu >= T) {
                emit(prefix, static_cast<int>(e.hi - e.lo), false, T);
                continue;
            }
            collect_edge(g, e.mu, e.L, e.lo, e.hi);
            for (auto& ch : children(g, e.hi, e.lo, e.mu)) {
                Prefix p = prefix;
                p.terms.emplace_back(e.mu, ch.c);
                if (opts_.stop_when_isolated && ch.mult == 1) {
                    std::optional<Rat> nxt = next_order(ch.g, e.mu);
                    emit(p, 1, !nxt.has_value(), nxt.value_or(T));
                    continue;
                }
                expand(std::move(ch.g), std::move(p), e.mu, ch.mult);
            }
        }
    }

    PuiseuxOptions opts_;
    mpfr_prec_t prec_;
    std::vector<PuiseuxRoot> out_;
    std::map<long, Rat> edge_coefficients_exact_;
    std::map<long, BigComplex> edge_coefficients_num_;
};

bool series_less(const PuiseuxRoot& a, const PuiseuxRoot& b) {
    auto ia = a.series.terms.begin(), ib = b.series.terms.begin();
    for (; ia != a.series.terms.end() && ib != b.series.terms.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        double ra = ia->second.real().to_double(), rb = ib->second.real().to_double();
        if (std::abs(ra - rb) > 1e-9 * std::max(1.0, std::abs(ra))) return ra < rb;
        double ja = ia->second.imag().to_double(), jb = ib->second.imag().to_double();
        if (std::abs(ja - jb) > 1e-9 * std::max(1.0, std::abs(ja))) return ja < jb;
    }
    return a.series.terms.size() < b.series.terms.size();
}

}  // namespace

std::vector<PuiseuxRoot> puiseux_roots(const BiPoly& f, const PuiseuxOptions& opts) {
    if (f.is_zero()) fail(ErrorKind::invalid_input, "Puiseux roots of the zero polynomial");
    if (f.degree(1) < 1) fail(ErrorKind::invalid_input, "polynomial has no roots in " + f.var(1));
    if (opts.precision < 64) fail(ErrorKind::invalid_input, "precision must be at least 64 bits");
    long shift = f.low_degree(0);
    Work g;
    g.exact = true;
    g.q.assign(static_cast<std::size_t>(f.degree(1)) + 1, {});
    g.lost.assign(g.q.size(), false);
    for (const auto& [e, c] : f.terms()) g.q[e.second][Rat(e.first - shift)] = c;
    int m = -1;
    for (std::size_t j = 0; j < g.q.size(); ++j)
        if (!g.q[j].empty() && g.q[j].begin()->first == 0) {
            m = static_cast<int>(j);
            break;
        }
    if (m < 0) fail(ErrorKind::internal_error, "no term on the vertical axis after removing x-content");
    if (opts.order_bound <= 0) fail(ErrorKind::invalid_input, "order bound must be positive");
    if (m > 0) {
        std::vector<std::pair<Rat, long>> p;
        for (std::size_t j = 0; j < g.q.size(); ++j)
            if (!g.q[j].empty()) p.emplace_back(g.q[j].begin()->first, static_cast<long>(j));
        auto hull = lower_hull(p);
        if (hull.size() >= 2) {
            Rat first_mu = (hull[1].first - hull[0].first) / Rat(hull[0].second - hull[1].second);
            if (opts.order_bound < first_mu)
                fail(ErrorKind::invalid_input, "order bound below the smallest root order");
        }
    }
    Expander ex(opts);
    ex.run(std::move(g), m);
    auto out = std::move(ex.out());
    std::stable_sort(out.begin(), out.end(), series_less);
    return out;
}

std::vector<PuiseuxRoot> puiseux_roots(const BiPoly& f, const Rat& order_bound, mpfr_prec_t precision) {
    PuiseuxOptions o;
    o.order_bound = order_bound;
    o.precision = precision;
    return puiseux_roots(f, o);
}

std::optional<Rat> contact_order(const PuiseuxSeries& a, const PuiseuxSeries& b, mpfr_prec_t prec, Rat* agree_to) {
    std::optional<Rat> limit;
    if (!a.exact) limit = a.truncation;
    if (!b.exact) limit = limit ? std::min(*limit, b.truncation) : b.truncation;
    std::vector<Rat> exps;
    for (const auto& [e, c] : a.terms) exps.push_back(e);
    for (const auto& [e, c] : b.terms) exps.push_back(e);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    BigFloat lo = BigFloat::two_pow(-static_cast<long>(prec) / 4, prec);
    BigFloat hi = BigFloat::two_pow(-static_cast<long>(prec) / 8, prec);
    for (const Rat& e : exps) {
        if (limit && e >= *limit) break;
        BigComplex ca(prec), cb(prec);
        if (auto it = a.terms.find(e); it != a.terms.end()) ca = it->second;
        if (auto it = b.terms.find(e); it != b.terms.end()) cb = it->second;
        BigFloat scale = max(BigFloat(1, prec), max(ca.abs(), cb.abs()));
        BigFloat d = (ca - cb).abs() / scale;
        if (d >= hi) return e;
        if (d >= lo) fail(ErrorKind::precision_exhausted, "series comparison is ambiguous at this precision");
    }
    if (agree_to && limit) *agree_to = *limit;
    return std::nullopt;
}

bool Parametrization::is_primitive() const {
    long g = n;
    for (const auto& [k, c] : y_terms)
        if (sgn(c) != 0) g = gcd_long(g, k);
    return g == 1;
}

long Parametrization::order_y() const {
    for (const auto& [k, c] : y_terms)
        if (sgn(c) != 0) return k;
    return -1;
}

std::string Parametrization::to_string() const {
    std::ostringstream os;
    os << "x = t";
    if (n != 1) os << "^" << n;
    os << "; y = ";
    bool first = true;
    for (const auto& [k, c] : y_terms) {
        if (sgn(c) == 0) continue;
        Rat a = abs(c);
        if (first) os << (sgn(c) < 0 ? "-" : "");
        else os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (a != 1 || k == 0) os << a.get_str() << (k == 0 ? "" : "*");
        if (k == 1) os << "t";
        else if (k > 1) os << "t^" << k;
    }
    if (first) os << "0";
    return os.str();
}

Parametrization parse_parametrization(const std::string& text) {
    std::string s = text;
    std::string xs, ys;
    std::size_t semi = s.find(';');
    if (semi == std::string::npos) {
        // "(t^4, t^5 + t^7)"
        std::size_t l = s.find('('), r = s.rfind(')'), comma = s.find(',');
        if (l == std::string::npos || r == std::string::npos || comma == std::string::npos)
            throw ParseError("expected 'x = t^n; y = ...' or '(t^n, ...)'", 0);
        xs = s.substr(l + 1, comma - l - 1);
        ys = s.substr(comma + 1, r - comma - 1);
    } else {
        std::string a = s.substr(0, semi), b = s.substr(semi + 1);
        auto rhs = [&](const std::string& part, char name, std::size_t base) {
            std::size_t eq = part.find('=');
            if (eq == std::string::npos) throw ParseError(std::string("expected '") + name + " = ...'", base);
            std::string lhs = part.substr(0, eq);
            lhs.erase(std::remove_if(lhs.begin(), lhs.end(), ::isspace), lhs.end());
            if (lhs != std::string(1, name)) throw ParseError(std::string("expected '") + name + " ='", base);
            return part.substr(eq + 1);
        };
        xs = rhs(a, 'x', 0);
        ys = rhs(b, 'y', semi + 1);
    }
    QPoly xp = parse_univariate(xs, "t");
    QPoly yp = parse_univariate(ys, "t");
    if (xp.degree() < 1 || xp.low_degree() != xp.degree() || xp.lc() != 1)
        throw ParseError("x must be t^n", 0);
    Parametrization p;
    p.n = xp.degree();
    for (int k = 0; k <= yp.degree(); ++k)
        if (sgn(yp.coeffs()[k]) != 0) p.y_terms[k] = yp.coeffs()[k];
    return p;
}

BiPoly implicitize(const Parametrization& p) {
    if (p.n < 1) fail(ErrorKind::invalid_input, "parametrization needs n >= 1");
    if (!p.is_primitive()) fail(ErrorKind::invalid_input, "parametrization is not primitive");
    using Q3 = UPoly<QPoly2>;
    // coefficient ring Q[x][y]: QPoly2 with outer variable y, inner x
    std::vector<QPoly2> a(static_cast<std::size_t>(p.n) + 1);
    a[0] = QPoly2(QPoly({Rat(0), Rat(-1)}));
    a[p.n] = QPoly2(QPoly(Rat(1)));
    long deg = p.y_terms.empty() ? 0 : p.y_terms.rbegin()->first;
    std::vector<QPoly2> b(static_cast<std::size_t>(deg) + 1);
    for (const auto& [k, c] : p.y_terms) b[k] = b[k] + QPoly2(QPoly(c));
    b[0] = b[0] + QPoly2(std::vector<QPoly>{QPoly(), QPoly(Rat(-1))});
    QPoly2 r = resultant(Q3(a), Q3(b));
    BiPoly f = from_recursive(r, 1, "x", "y");
    return f.monic();
}

namespace {

using SeriesMap = std::map<Rat, BigComplex>;

SeriesMap series_mul(const SeriesMap& a, const SeriesMap& b, const Rat& bound) {
    SeriesMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat e = ea + eb;
            if (e >= bound) break;
            auto it = r.find(e);
            if (it == r.end()) r.emplace(e, ca * cb);
            else it->second += ca * cb;
        }
    return r;
}

SeriesMap compose_raw(const BiPoly& f, const SeriesMap& g, const Rat& bound, mpfr_prec_t prec) {
    int dy = f.degree(1);
    std::vector<SeriesMap> powers{{{Rat(0), BigComplex(1, prec)}}};
    for (int j = 1; j <= dy; ++j) powers.push_back(series_mul(powers.back(), g, bound));
    SeriesMap r;
    for (const auto& [e, c] : f.terms()) {
        for (const auto& [pe, pc] : powers[e.second]) {
            Rat ex = pe + e.first;
            if (ex >= bound) break;
            BigComplex v = pc * BigComplex(c, prec);
            auto it = r.find(ex);
            if (it == r.end()) r.emplace(ex, v);
            else it->second += v;
        }
    }
    return r;
}

void drop_zeros(SeriesMap& s, mpfr_prec_t prec) {
    BigFloat scale(1, prec);
    for (const auto& [e, c] : s) scale = max(scale, c.abs());
    for (auto it = s.begin(); it != s.end();) {
        if (numerically_zero(it->second, scale, prec)) it = s.erase(it);
        else ++it;
    }
}

}  // namespace

PuiseuxSeries compose(const BiPoly& f, const PuiseuxSeries& gamma, const Rat& order_bound) {
    mpfr_prec_t prec = gamma.precision;
    if (!gamma.exact && gamma.truncation < order_bound)
        fail(ErrorKind::insufficient_truncation,
             "series known below " + gamma.truncation.get_str() + ", composition needs " + order_bound.get_str());
    Rat wide = order_bound + gamma.ramification;
    if (!gamma.exact) wide = std::min(wide, gamma.truncation);
    SeriesMap cut, full;
    for (const auto& [e, c] : gamma.terms) {
        if (e < order_bound) cut.emplace(e, c);
        if (e < wide) full.emplace(e, c);
    }
    SeriesMap r1 = compose_raw(f, cut, order_bound, prec);
    SeriesMap r2 = compose_raw(f, full, order_bound, prec);
    drop_zeros(r1, prec);
    drop_zeros(r2, prec);
    BigFloat scale(1, prec);
    for (const auto& [e, c] : r2) scale = max(scale, c.abs());
    BigFloat tol = scale * BigFloat::two_pow(-static_cast<long>(prec) / 4, prec);
    bool same = r1.size() == r2.size();
    for (auto i1 = r1.begin(), i2 = r2.begin(); same && i1 != r1.end(); ++i1, ++i2)
        same = i1->first == i2->first && (i1->second - i2->second).abs() <= tol;
    if (!same) fail(ErrorKind::insufficient_truncation, "composition changed when the series was extended");
    PuiseuxSeries out;
    out.precision = prec;
    out.terms = std::move(r2);
    out.truncation = order_bound;
    bool all_below = true;
    for (const auto& [e, c] : gamma.terms) all_below = all_below && e < order_bound;
    out.exact = gamma.exact && all_below && f.degree(1) * (gamma.terms.empty() ? Rat(0) : gamma.terms.rbegin()->first) +
                                                     f.degree(0) < order_bound;
    long N = 1;
    for (const auto& [e, c] : out.terms) N = lcm_long(N, e.get_den().get_si());
    out.ramification = N;
    return out;
}

}  // namespace polardisc
