#include "polardisc/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "polardisc/newton_polygon.hpp"

namespace polardisc {

std::string CharExponents::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (k == 1) os << ";";
        else if (k > 1) os << ",";
        os << beta[k];
    }
    os << ")";
    return os.str();
}

bool Semigroup::contains(long v) const {
    if (v < 0) return false;
    if (v >= conductor) return true;
    std::vector<char> in(static_cast<std::size_t>(v) + 1, 0);
    in[0] = 1;
    for (long x = 1; x <= v; ++x)
        for (long g : generators)
            if (g <= x && in[x - g]) {
                in[x] = 1;
                break;
            }
    return in[v] != 0;
}

std::vector<long> Semigroup::gaps() const {
    std::vector<long> out;
    std::vector<char> in(static_cast<std::size_t>(conductor) + 1, 0);
    in[0] = 1;
    for (long x = 1; x < conductor; ++x) {
        for (long g : generators)
            if (g <= x && in[x - g]) {
                in[x] = 1;
                break;
            }
        if (!in[x]) out.push_back(x);
    }
    return out;
}

std::string Semigroup::to_string() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t k = 0; k < generators.size(); ++k) os << (k ? "," : "") << generators[k];
    os << ">";
    return os.str();
}

CharExponents normalize_char(const std::vector<long>& raw) {
    CharExponents c;
    if (raw.size() < 2 || raw[1] > raw[0]) {
        c.beta = raw;
        return c;
    }
    long b0 = raw[0], b1 = raw[1];
    c.beta.push_back(b1);
    if (b0 % b1 != 0) c.beta.push_back(b0);
    for (std::size_t k = 2; k < raw.size(); ++k) c.beta.push_back(raw[k] - b1 + b0);
    if (c.beta.size() >= 2 && c.beta[0] == 1) c.beta.resize(1);
    return c;
}

namespace {

void check_param(const Parametrization& p) {
    if (p.n < 1) fail(ErrorKind::invalid_input, "parametrization needs n >= 1");
    if (!p.is_primitive()) fail(ErrorKind::invalid_input, "parametrization is not primitive");
    if (p.order_y() == 0) fail(ErrorKind::invalid_input, "parametrization does not pass through the origin");
}

}  // namespace

CharExponents characteristic_exponents(const Parametrization& p) {
    check_param(p);
    if (p.n == 1) return CharExponents{{1}};
    std::set<long> orders;
    for (long k = 1; k < p.n; ++k) {
        for (const auto& [i, c] : p.y_terms) {
            if (sgn(c) == 0) continue;
            if ((i * k) % p.n != 0) {
                orders.insert(i);
                break;
            }
        }
    }
    std::vector<long> raw{p.n};
    raw.insert(raw.end(), orders.begin(), orders.end());
    return normalize_char(raw);
}

CharExponents characteristic_exponents_by_gcd(const Parametrization& p) {
    check_param(p);
    if (p.n == 1) return CharExponents{{1}};
    std::vector<long> raw{p.n};
    long e = p.n;
    for (const auto& [i, c] : p.y_terms) {
        if (sgn(c) == 0 || i % e == 0) continue;
        raw.push_back(i);
        e = gcd_long(e, i);
        if (e == 1) break;
    }
    return normalize_char(raw);
}

namespace {

long count_gaps_between(const Semigroup& s, long lo, long hi) {
    long q = 0;
    for (long g : s.gaps())
        if (g > lo && g < hi) ++q;
    return q;
}

std::vector<long> gcd_sequence(const std::vector<long>& v) {
    std::vector<long> e;
    long g = 0;
    for (long x : v) {
        g = gcd_long(g, x);
        e.push_back(g);
    }
    return e;
}

}  // namespace

Semigroup semigroup_from_char(const CharExponents& b) {
    Semigroup s;
    if (b.beta.empty() || b.beta[0] == 1) {
        s.generators = {1};
        s.e = {1};
        return s;
    }
    const auto& beta = b.beta;
    std::size_t g = beta.size() - 1;
    std::vector<long> e = gcd_sequence(beta);
    std::vector<long> gen{beta[0]};
    if (g >= 1) gen.push_back(beta[1]);
    for (std::size_t k = 2; k <= g; ++k) gen.push_back((e[k - 2] / e[k - 1]) * gen[k - 1] + beta[k] - beta[k - 1]);
    long c = 0;
    for (std::size_t k = 1; k <= g; ++k) c += (e[k - 1] - e[k]) * beta[k];
    c = c - beta[0] + 1;
    s.generators = gen;
    s.e = e;
    s.conductor = c;
    s.gaps_above_s1 = g >= 1 ? count_gaps_between(s, gen[1], c) : 0;
    return s;
}

Semigroup semigroup_from_values(const std::vector<long>& values) {
    std::vector<long> v;
    for (long x : values)
        if (x > 0) v.push_back(x);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty()) fail(ErrorKind::invalid_input, "empty value set");
    long g = 0;
    for (long x : v) g = gcd_long(g, x);
    if (g != 1) fail(ErrorKind::incomplete_semigroup, "values do not generate a numerical semigroup");
    if (v[0] == 1) return semigroup_from_char(CharExponents{{1}});
    // membership by dynamic programming until a run of length v[0]
    std::vector<char> in{1};
    std::vector<long> gen;
    long run = 0, x = 0;
    while (run < v[0]) {
        ++x;
        bool rep = false;
        for (long a : gen)
            if (a <= x && in[x - a]) {
                rep = true;
                break;
            }
        bool listed = std::binary_search(v.begin(), v.end(), x);
        if (!rep && listed) {
            gen.push_back(x);
            rep = true;
        }
        in.push_back(rep ? 1 : 0);
        run = rep ? run + 1 : 0;
    }
    Semigroup s;
    s.generators = gen;
    s.e = gcd_sequence(gen);
    s.conductor = x - v[0] + 1;
    s.gaps_above_s1 = gen.size() >= 2 ? count_gaps_between(s, gen[1], s.conductor) : 0;
    return s;
}

namespace {

// Echelon form keyed by leading index; F is Rat or BigComplex.
template <class F, class Zero>
class Staircase {
public:
    Staircase(long width, Zero z) : width_(width), is_zero_(z) {}

    // returns the leading index of the reduced row, or -1
    long insert(std::vector<F> row) {
        for (long i = 0; i < width_; ++i) {
            if (is_zero_(row[i])) continue;
            auto it = pivots_.find(i);
            if (it == pivots_.end()) {
                F inv = F(1L) / row[i];
                if constexpr (std::is_same_v<F, BigComplex>) inv = BigComplex(1, row[i].precision()) / row[i];
                for (long j = i; j < width_; ++j) row[j] = row[j] * inv;
                pivots_.emplace(i, std::move(row));
                return i;
            }
            F c = row[i];
            const auto& pv = it->second;
            for (long j = i; j < width_; ++j) row[j] = row[j] - c * pv[j];
            row[i] = zero_like(row[i]);
        }
        return -1;
    }
    std::vector<long> leading() const {
        std::vector<long> out;
        for (const auto& [k, r] : pivots_) out.push_back(k);
        return out;
    }

private:
    static F zero_like(const F& x) {
        if constexpr (std::is_same_v<F, BigComplex>) return BigComplex(x.precision());
        else return F(0);
    }
    long width_;
    Zero is_zero_;
    std::map<long, std::vector<F>> pivots_;
};

template <class F>
std::vector<F> series_mul(const std::vector<F>& a, const std::vector<F>& b, long K, const F& zero) {
    std::vector<F> r(static_cast<std::size_t>(K), zero);
    for (long i = 0; i < K; ++i)
        for (long j = 0; i + j < K; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

std::vector<Rat> y_series(const Parametrization& p, long K) {
    std::vector<Rat> y(static_cast<std::size_t>(K));
    for (const auto& [k, c] : p.y_terms)
        if (k < K) y[k] = c;
    return y;
}

template <class F, class Zero>
std::vector<long> monomial_values(long n, const std::vector<F>& y, long ord_y, long K, const F& zero, const F& one,
                                  Zero z) {
    Staircase<F, Zero> st(K, z);
    std::vector<F> ypow(static_cast<std::size_t>(K), zero);
    ypow[0] = one;
    for (long b = 0; b * ord_y < K; ++b) {
        for (long a = 0; n * a + b * ord_y < K; ++a) {
            std::vector<F> row(static_cast<std::size_t>(K), zero);
            for (long i = 0; i + n * a < K; ++i) row[i + n * a] = ypow[i];
            st.insert(std::move(row));
        }
        ypow = series_mul(ypow, y, K, zero);
    }
    return st.leading();
}

}  // namespace

Semigroup semigroup_oracle(const Parametrization& p, long degree_bound) {
    check_param(p);
    long n = p.n, s = p.order_y();
    if (n == 1 || s == 1) return semigroup_from_char(CharExponents{{1}});
    long K = 2 * degree_bound;
    auto vals = monomial_values<Rat>(n, y_series(p, K), s, K, Rat(0), Rat(1),
                                     [](const Rat& q) { return sgn(q) == 0; });
    std::set<long> S(vals.begin(), vals.end());
    long s0 = *std::next(S.begin());  // smallest positive value
    long c = K;
    while (c > 0 && S.count(c - 1)) --c;
    if (K - c < s0) fail(ErrorKind::incomplete_semigroup, "degree bound too small to reach the conductor");
    std::vector<long> listed;
    for (long v : S)
        if (v > 0 && v < c + s0) listed.push_back(v);
    Semigroup out = semigroup_from_values(listed);
    if (out.conductor != c) fail(ErrorKind::internal_error, "semigroup oracle conductor mismatch");
    return out;
}

namespace {

BiPoly shear(const BiPoly& f, long c) {
    // f(x + c*y, y)
    BiPoly out(f.var(0), f.var(1));
    BiPoly lin = BiPoly::monomial(1, 1, 0, f.var(0), f.var(1)) + BiPoly::monomial(c, 0, 1, f.var(0), f.var(1));
    std::map<int, BiPoly> powers;
    for (const auto& [e, q] : f.terms()) {
        auto it = powers.find(e.first);
        if (it == powers.end()) it = powers.emplace(e.first, lin.pow(static_cast<unsigned>(e.first))).first;
        out += (it->second * BiPoly::monomial(q, 0, e.second, f.var(0), f.var(1)));
    }
    return out;
}

long intersection_by_resultant(const BiPoly& f, const BiPoly& g) {
    for (long c = 0; c < 64; ++c) {
        BiPoly F = c ? shear(f, c) : f, G = c ? shear(g, c) : g;
        if (F.degree(1) < 1 && G.degree(1) < 1) continue;
        QPoly2 rf = to_recursive(F, 1), rg = to_recursive(G, 1);
        if (rf.is_zero() || rg.is_zero()) continue;
        bool f_monic = rf.degree() >= 1 && rf.lc().degree() == 0;
        bool g_monic = rg.degree() >= 1 && rg.lc().degree() == 0;
        if (!f_monic && !g_monic) continue;
        // common zeros on x = 0 only at the origin
        QPoly f0, g0;
        {
            std::vector<Rat> a, b;
            for (int j = 0; j <= rf.degree(); ++j) a.push_back(rf.coeffs()[j].coeff(0));
            for (int j = 0; j <= rg.degree(); ++j) b.push_back(rg.coeffs()[j].coeff(0));
            f0 = QPoly(a);
            g0 = QPoly(b);
        }
        QPoly h = poly_gcd(f0, g0);
        if (h.is_zero() || h.low_degree() != h.degree()) continue;
        QPoly res = resultant(rf, rg);
        if (res.is_zero()) fail(ErrorKind::infinite_intersection, "curves share a common component");
        return res.low_degree();
    }
    fail(ErrorKind::internal_error, "no admissible shear found for the resultant method");
}

// x-adic valuation split: f = x^k * f1
std::pair<long, BiPoly> split_x(const BiPoly& f) {
    long k = f.low_degree(0);
    BiPoly r(f.var(0), f.var(1));
    for (const auto& [e, q] : f.terms()) r.add_term(e.first - static_cast<int>(k), e.second, q);
    return {k, r};
}

long y_order_on_axis(const BiPoly& f) {
    long m = -1;
    for (const auto& [e, q] : f.terms())
        if (e.first == 0 && (m < 0 || e.second < m)) m = e.second;
    return m;
}

long intersection_by_hz(const BiPoly& f0, const BiPoly& g0, mpfr_prec_t prec) {
    auto [kf, f] = split_x(f0);
    auto [kg, g] = split_x(g0);
    if (kf > 0 && kg > 0) fail(ErrorKind::infinite_intersection, "both curves contain the line x = 0");
    long extra = 0;
    if (kf > 0) extra += kf * y_order_on_axis(g);
    if (kg > 0) extra += kg * y_order_on_axis(f);
    if (f.degree(1) < 1 || g.degree(1) < 1) {
        // a factor free of y is a unit at the origin after removing x^k
        return extra;
    }
    Rat T(8);
    for (int round = 0; round < 10; ++round, T *= 2) {
        auto rf = puiseux_roots(f, T, prec);
        auto rg = puiseux_roots(g, T, prec);
        Rat total(0);
        bool undecided = false;
        for (const auto& a : rf) {
            for (const auto& b : rg) {
                auto c = contact_order(a.series, b.series, prec);
                if (!c) {
                    if (a.series.exact && b.series.exact)
                        fail(ErrorKind::infinite_intersection, "curves share a common component");
                    undecided = true;
                    break;
                }
                total += *c * a.multiplicity * b.multiplicity;
            }
            if (undecided) break;
        }
        if (!undecided) {
            if (!is_integer(total)) fail(ErrorKind::internal_error, "Halphen-Zeuthen sum is not an integer");
            return to_long(total) + extra;
        }
    }
    fail(ErrorKind::insufficient_truncation, "root contact could not be separated");
}

}  // namespace

long intersection_number(const BiPoly& f, const BiPoly& g, IntersectionMethod method, mpfr_prec_t precision) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::infinite_intersection, "zero polynomial");
    if (sgn(f.coeff(0, 0)) != 0 || sgn(g.coeff(0, 0)) != 0) return 0;
    if (method == IntersectionMethod::resultant) return intersection_by_resultant(f, g);
    for (mpfr_prec_t p = precision;; p *= 2) {
        try {
            return intersection_by_hz(f, g, p);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_exhausted || p >= 4096) throw;
        }
    }
}

long milnor(const BiPoly& f) {
    return intersection_number(f.derivative(0), f.derivative(1), IntersectionMethod::resultant);
}

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool to_mod(const Rat& q, u64 p, u64& out) {
    BigInt pz(std::to_string(p));
    BigInt num = q.get_num() % pz, den = q.get_den() % pz;
    if (num < 0) num += pz;
    if (den == 0) return false;
    u64 n = std::stoull(num.get_str()), d = std::stoull(den.get_str());
    out = mulmod(n, powmod(d, p - 2, p), p);
    return true;
}

long rank_mod(std::vector<std::vector<u64>> rows, std::size_t width, u64 p) {
    long rank = 0;
    std::size_t r0 = 0;
    for (std::size_t col = 0; col < width && r0 < rows.size(); ++col) {
        std::size_t piv = r0;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r0]);
        u64 inv = powmod(rows[r0][col], p - 2, p);
        for (std::size_t j = col; j < width; ++j) rows[r0][j] = mulmod(rows[r0][j], inv, p);
        for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
            u64 c = rows[r][col];
            if (c == 0) continue;
            for (std::size_t j = col; j < width; ++j) {
                u64 t = mulmod(c, rows[r0][j], p);
                rows[r][j] = rows[r][j] >= t ? rows[r][j] - t : rows[r][j] + p - t;
            }
        }
        ++r0;
        ++rank;
    }
    return rank;
}

// colength of (f, f_x, f_y) + F_{>=W} where F_{>=W} is spanned by monomials of
// weighted degree >= W
long tjurina_truncated(const BiPoly& f, long wx, long wy, long W) {
    std::vector<std::pair<int, int>> monos;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int a = 0; wx * a < W; ++a)
        for (int b = 0; wx * a + wy * b < W; ++b) {
            index[{a, b}] = monos.size();
            monos.emplace_back(a, b);
        }
    std::vector<BiPoly> gens{f, f.derivative(0), f.derivative(1)};
    static const u64 primes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1152921504606846883ULL};
    long best = 0;
    for (u64 p : primes) {
        std::vector<std::vector<u64>> rows;
        bool ok = true;
        for (const auto& g : gens) {
            for (const auto& [a, b] : monos) {
                std::vector<u64> row(monos.size(), 0);
                bool nonzero = false;
                for (const auto& [e, q] : g.terms()) {
                    auto it = index.find({e.first + a, e.second + b});
                    if (it == index.end()) continue;
                    u64 v;
                    if (!to_mod(q, p, v)) {
                        ok = false;
                        break;
                    }
                    row[it->second] = (row[it->second] + v) % p;
                    nonzero = nonzero || v != 0;
                }
                if (!ok) break;
                if (nonzero) rows.push_back(std::move(row));
            }
            if (!ok) break;
        }
        if (!ok) continue;
        best = std::max(best, rank_mod(std::move(rows), monos.size(), p));
    }
    return static_cast<long>(monos.size()) - best;
}

}  // namespace

long tjurina(const BiPoly& f, long mu) {
    if (mu <= 0) return 0;
    // semi-quasihomogeneous case: one compact edge with squarefree edge
    // polynomial; the weighted filtration above the Hessian degree lies in
    // the Jacobian ideal
    NewtonPolygon np = polygon(f);
    if (np.edges.size() == 1 && np.vertices.front().i == 0 && np.vertices.back().j == 0 &&
        is_nondegenerate(f).nondegenerate) {
        long n = np.vertices.front().j, s = np.vertices.back().i;
        long g = gcd_long(n, s);
        long wx = n / g, wy = s / g, d = n * s / g;
        long W = 2 * d - 2 * wx - 2 * wy + 1;
        long t1 = tjurina_truncated(f, wx, wy, W);
        long t2 = tjurina_truncated(f, wx, wy, W + d);
        if (t1 == t2 && t1 <= mu) return t1;
    }
    long t1 = tjurina_truncated(f, 1, 1, mu + 1);
    long t2 = tjurina_truncated(f, 1, 1, mu + 2);
    if (t1 != t2 || t1 > mu) fail(ErrorKind::internal_error, "Tjurina truncation is not stable");
    return t1;
}

namespace {

template <class F, class Zero>
long zariski_from_series(long n, const std::vector<F>& y, long ord_y, const Semigroup& s, long K, const F& zero,
                         const F& one, Zero z) {
    std::vector<F> dy(static_cast<std::size_t>(K), zero);
    for (long i = 1; i < K; ++i) dy[i - 1] = y[i] * F(i);
    Staircase<F, Zero> st(K, z);
    std::vector<F> ypow(static_cast<std::size_t>(K), zero);
    ypow[0] = one;
    F nf = one * F(n);
    for (long b = 0; b * ord_y < K; ++b) {
        for (long a = 0; n * a + b * ord_y < K; ++a) {
            // m * x'(t) = n t^(n-1) t^(na) y^b
            std::vector<F> row(static_cast<std::size_t>(K), zero);
            for (long i = 0; i + n * a + n - 1 < K; ++i) row[i + n * a + n - 1] = ypow[i] * nf;
            st.insert(row);
            // m * y'(t)
            std::vector<F> shifted(static_cast<std::size_t>(K), zero);
            for (long i = 0; i + n * a < K; ++i) shifted[i + n * a] = ypow[i];
            st.insert(series_mul(shifted, dy, K, zero));
        }
        ypow = series_mul(ypow, y, K, zero);
    }
    long best = -1;
    for (long lead : st.leading()) {
        long v = lead + 1;
        if (v < s.conductor && !s.contains(v)) {
            best = v;
            break;
        }
    }
    return best < 0 ? 0 : best - n;
}

}  // namespace

long zariski_invariant(const Parametrization& p) {
    check_param(p);
    if (p.n == 1) return 0;
    if (p.order_y() < p.n) fail(ErrorKind::invalid_input, "x must be the transversal coordinate (ord y > n)");
    Semigroup s = semigroup_from_char(characteristic_exponents(p));
    long K = s.conductor + p.n;
    return zariski_from_series<Rat>(p.n, y_series(p, K), p.order_y(), s, K, Rat(0), Rat(1),
                                    [](const Rat& q) { return sgn(q) == 0; });
}

long zariski_invariant(const NumericParametrization& p, const Semigroup& s) {
    if (p.n == 1) return 0;
    long K = s.conductor + p.n;
    if (p.known_below < K) fail(ErrorKind::insufficient_truncation, "parametrization known below the needed order");
    mpfr_prec_t prec = p.precision;
    std::vector<BigComplex> y(static_cast<std::size_t>(K), BigComplex(prec));
    long ord = -1;
    BigFloat scale(1, prec);
    for (const auto& [k, c] : p.y_terms) {
        if (k >= K) continue;
        y[k] = c;
        if (ord < 0) ord = k;
        scale = max(scale, c.abs());
    }
    BigFloat thr = BigFloat::two_pow(-static_cast<long>(prec) / 4, prec);
    for (long i = 0; i < K; ++i) scale = max(scale, BigFloat(i + 1, prec));
    auto zero = [thr](const BigComplex& c) { return c.abs() < thr; };
    (void)scale;
    struct C {
        static BigComplex one(mpfr_prec_t p) { return BigComplex(1, p); }
    };
    return zariski_from_series<BigComplex>(p.n, y, ord, s, K, BigComplex(prec), C::one(prec), zero);
}

}  // namespace polardisc

namespace polardisc {

long zariski_invariant_of_equation(const BiPoly& f0, const Semigroup& s, mpfr_prec_t precision) {
    long n = s.generators.empty() ? 1 : s.generators[0];
    if (n == 1) return 0;
    BiPoly f = f0;
    Rat T = Rat(s.conductor + n, n) + 1;
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto roots = puiseux_roots(f, T, precision);
        if (roots.empty()) fail(ErrorKind::invalid_input, "curve has no branch through the origin");
        const PuiseuxSeries& r = roots.front().series;
        auto ord = r.order();
        if (ord && *ord < 1) {
            BiPoly g(f.var(0), f.var(1));
            for (const auto& [e, c] : f.terms()) g.add_term(e.second, e.first, c);
            f = g;
            continue;
        }
        if (r.ramification != n) fail(ErrorKind::internal_error, "Puiseux ramification differs from the multiplicity");
        NumericParametrization p;
        p.n = n;
        p.precision = precision;
        for (const auto& [e, c] : r.terms) {
            Rat k = e * n;
            if (!is_integer(k)) fail(ErrorKind::internal_error, "exponent outside the ramification lattice");
            p.y_terms[to_long(k)] = c;
        }
        p.known_below = r.exact ? s.conductor + 2 * n : to_long(ceil_rat(r.truncation * n));
        return zariski_invariant(p, s);
    }
    fail(ErrorKind::internal_error, "no transversal coordinate found");
}

}  // namespace polardisc
