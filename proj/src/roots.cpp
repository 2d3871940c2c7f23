#include "polardisc/roots.hpp"

#include <algorithm>
#include <numeric>

#include "polardisc/errors.hpp"

namespace polardisc {

bool numerically_zero(const BigComplex& c, const BigFloat& scale, mpfr_prec_t prec) {
    BigFloat s = max(scale, BigFloat(1, prec));
    return c.abs() < s * BigFloat::two_pow(-static_cast<long>(prec) / 2, prec);
}

namespace {

using CVec = std::vector<BigComplex>;

BigComplex horner(const CVec& c, const BigComplex& z) {
    BigComplex r(z.precision());
    for (std::size_t i = c.size(); i-- > 0;) r = r * z + c[i];
    return r;
}

CVec derivative(const CVec& c) {
    CVec d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * BigComplex(static_cast<long>(i), c[i].precision()));
    return d;
}

CVec with_precision(const CVec& c, mpfr_prec_t p) {
    CVec r;
    for (const auto& x : c) r.push_back(x + BigComplex(p));
    return r;
}

CVec aberth(const CVec& monic, mpfr_prec_t wp) {
    int n = static_cast<int>(monic.size()) - 1;
    // Fujiwara-style radius from coefficient magnitudes
    long e = -100000;
    for (int i = 0; i < n; ++i) {
        if (monic[i].is_zero()) continue;
        long ei = monic[i].abs().exponent2();
        e = std::max(e, (ei + (n - i) - 1) / (n - i));
    }
    if (e == -100000) e = 0;
    BigFloat radius = BigFloat::two_pow(e, wp);
    CVec z;
    for (int k = 0; k < n; ++k) {
        BigComplex w = BigComplex::root_of_unity(4 * k + 1, 4 * n, wp);
        BigFloat r = radius * BigFloat(Rat(3 + (k % 3), 4), wp);
        z.push_back(w * BigComplex(r, BigFloat(wp)));
    }
    CVec d = derivative(monic);
    BigFloat eps = BigFloat::two_pow(-static_cast<long>(wp) + 8, wp);
    int max_iter = 200 + static_cast<int>(wp);
    for (int it = 0; it < max_iter; ++it) {
        bool done = true;
        for (int k = 0; k < n; ++k) {
            BigComplex p = horner(monic, z[k]);
            if (p.is_zero()) continue;
            BigComplex dp = horner(d, z[k]);
            BigComplex sum(wp);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                BigComplex diff = z[k] - z[j];
                if (diff.is_zero()) diff = BigComplex(BigFloat::two_pow(-static_cast<long>(wp) / 2, wp), BigFloat(wp));
                sum += BigComplex(1, wp) / diff;
            }
            BigComplex ratio = dp.is_zero() ? BigComplex(BigFloat(1, wp), BigFloat(1, wp)) : p / dp;
            BigComplex w = ratio / (BigComplex(1, wp) - ratio * sum);
            z[k] -= w;
            BigFloat scale = max(z[k].abs(), BigFloat::two_pow(-static_cast<long>(wp), wp));
            if (w.abs() > eps * scale) done = false;
        }
        if (done) break;
    }
    return z;
}

}  // namespace

std::vector<RootCluster> clustered_roots(const std::vector<BigComplex>& coeffs_in, mpfr_prec_t prec) {
    CVec coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) fail(ErrorKind::invalid_input, "root finding needs degree >= 1");
    BigFloat scale(prec);
    for (const auto& c : coeffs) scale = max(scale, c.abs());
    if (numerically_zero(coeffs.back(), scale, prec))
        fail(ErrorKind::invalid_input, "leading coefficient is numerically zero");

    std::vector<RootCluster> out;
    std::size_t zeros = 0;
    while (zeros < coeffs.size() && coeffs[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        out.push_back({BigComplex(prec), static_cast<int>(zeros)});
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
    }
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n == 0) return out;

    mpfr_prec_t wp = 2 * prec;
    CVec monic = with_precision(coeffs, wp);
    BigComplex lead = monic.back();
    for (auto& c : monic) c /= lead;
    CVec z;
    if (n == 1) z.push_back(-monic[0]);
    else z = aberth(monic, wp);

    BigFloat root_scale(1, wp);
    for (const auto& r : z) root_scale = max(root_scale, r.abs());
    BigFloat lo = root_scale * BigFloat::two_pow(-static_cast<long>(prec) / 4, wp);
    BigFloat hi = root_scale * BigFloat::two_pow(-static_cast<long>(prec) / 8, wp);

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            BigFloat d = (z[a] - z[b]).abs();
            if (d < lo) parent[find(a)] = find(b);
            else if (d < hi) fail(ErrorKind::precision_exhausted, "root separation is ambiguous at this precision");
        }

    std::vector<std::vector<int>> groups(n);
    for (int a = 0; a < n; ++a) groups[find(a)].push_back(a);
    std::vector<CVec> derivs{monic};
    for (int k = 1; k <= n; ++k) derivs.push_back(derivative(derivs.back()));
    for (const auto& g : groups) {
        if (g.empty()) continue;
        int m = static_cast<int>(g.size());
        BigComplex c(wp);
        for (int a : g) c += z[a];
        c /= BigComplex(m, wp);
        const CVec& f = derivs[m - 1];
        const CVec& fd = derivs[m];
        for (int it = 0; it < 100; ++it) {
            BigComplex dv = horner(fd, c);
            if (dv.is_zero()) break;
            BigComplex step = horner(f, c) / dv;
            c -= step;
            if (step.abs() <= root_scale * BigFloat::two_pow(-static_cast<long>(wp) + 4, wp)) break;
        }
        // certification: the refined centre must still be a root of p
        BigComplex pv = horner(monic, c);
        BigFloat bound(wp);
        for (const auto& a : monic) bound = max(bound, a.abs());
        BigFloat pw(1, wp);
        for (int k = 0; k <= n; ++k) pw = pw * max(c.abs(), BigFloat(1, wp));
        if (pv.abs() > bound * pw * BigFloat::two_pow(-static_cast<long>(prec) / 2, wp))
            fail(ErrorKind::precision_exhausted, "root refinement did not converge");
        out.push_back({c.rounded(prec), m});
    }
    return out;
}

std::vector<BigComplex> complex_roots(const std::vector<BigComplex>& coeffs, mpfr_prec_t prec) {
    std::vector<BigComplex> out;
    for (const auto& rc : clustered_roots(coeffs, prec))
        for (int k = 0; k < rc.multiplicity; ++k) out.push_back(rc.root);
    return out;
}

std::vector<RootCluster> rational_poly_roots(const UPoly<Rat>& p, mpfr_prec_t prec) {
    if (p.degree() < 1) fail(ErrorKind::invalid_input, "root finding needs degree >= 1");
    std::vector<RootCluster> out;
    for (const auto& [g, m] : squarefree(p)) {
        std::vector<BigComplex> c;
        for (const auto& q : g.coeffs()) c.emplace_back(q, 2 * prec);
        for (auto& rc : clustered_roots(c, prec)) {
            if (rc.multiplicity != 1) fail(ErrorKind::precision_exhausted, "squarefree factor produced a cluster");
            out.push_back({rc.root, m});
        }
    }
    return out;
}

}  // namespace polardisc
