#pragma once

#include <algorithm>
#include <type_traits>
#include <utility>
#include <vector>

#include "polardisc/errors.hpp"
#include "polardisc/rational.hpp"

namespace polardisc {

template <class T>
class UPoly;

template <class T>
struct is_upoly : std::false_type {};
template <class T>
struct is_upoly<UPoly<T>> : std::true_type {};

// Dense univariate polynomial over an exact coefficient ring T, where T is Rat
// or a nested UPoly. Coefficients are stored low degree first, without
// trailing zeros.
template <class T>
class UPoly {
public:
    UPoly() = default;
    UPoly(T c) {
        if (!coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static UPoly monomial(T c, int d) {
        if (coeff_is_zero(c)) return UPoly();
        std::vector<T> v(static_cast<std::size_t>(d) + 1, T());
        v[d] = std::move(c);
        return UPoly(std::move(v));
    }
    static UPoly from_long(long v) { return UPoly(coeff_from_long(v)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lc() const { return c_.back(); }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(); }
    const std::vector<T>& coeffs() const { return c_; }
    // lowest degree with nonzero coefficient, -1 for zero
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!coeff_is_zero(c_[i])) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (coeff_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (coeff_is_zero(b.c_[j])) continue;
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return UPoly(std::move(r));
    }
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scale(const T& s) const {
        std::vector<T> r = c_;
        for (auto& x : r) x = x * s;
        return UPoly(std::move(r));
    }
    // divide every coefficient exactly by s
    UPoly exact_div_scalar(const T& s) const {
        std::vector<T> r = c_;
        for (auto& x : r) x = coeff_exact_div(x, s);
        return UPoly(std::move(r));
    }
    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<T> r(c_.size() - 1, T());
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * coeff_from_long(static_cast<long>(i));
        return UPoly(std::move(r));
    }
    UPoly pow(unsigned e) const {
        UPoly r = from_long(1), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }
    // multiply by x^k
    UPoly shift(int k) const {
        if (is_zero()) return *this;
        std::vector<T> r(static_cast<std::size_t>(k), T());
        r.insert(r.end(), c_.begin(), c_.end());
        return UPoly(std::move(r));
    }
    template <class S>
    S evaluate(const S& x) const {
        S r{};
        for (int i = degree(); i >= 0; --i) r = r * x + S(c_[i]);
        return r;
    }

    // generic coefficient helpers, also used for the nested case
    static bool coeff_is_zero(const T& c) {
        if constexpr (is_upoly<T>::value) return c.is_zero();
        else return sgn(c) == 0;
    }
    static T coeff_from_long(long v) {
        if constexpr (is_upoly<T>::value) return T::from_long(v);
        else return T(v);
    }
    static T coeff_exact_div(const T& a, const T& b) {
        if constexpr (is_upoly<T>::value) return exact_div(a, b);
        else return T(a / b);
    }

private:
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
bool ring_is_zero(const T& c) {
    return UPoly<T>::coeff_is_zero(c);
}

template <class T>
T ring_one() {
    return UPoly<T>::coeff_from_long(1);
}

template <class T>
T ring_pow(const T& a, unsigned e) {
    T r = ring_one<T>(), b = a;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

// Long division; every leading-coefficient quotient must be exact in T.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divide(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) fail(ErrorKind::invalid_input, "polynomial division by zero");
    std::vector<T> q(std::max(a.degree() - b.degree() + 1, 0), T());
    UPoly<T> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        T c = UPoly<T>::coeff_exact_div(r.lc(), b.lc());
        q[d] = c;
        r = r - (b * UPoly<T>(c)).shift(d);
    }
    return {UPoly<T>(std::move(q)), r};
}

template <class T>
UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b) {
    auto [q, r] = divide(a, b);
    if (!r.is_zero()) fail(ErrorKind::internal_error, "inexact polynomial division");
    return q;
}

// lc(b)^(deg a - deg b + 1) * a = q*b + r
template <class T>
UPoly<T> prem(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) fail(ErrorKind::invalid_input, "pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    int e = a.degree() - b.degree() + 1;
    UPoly<T> r = a;
    const T& l = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        UPoly<T> t = (b * UPoly<T>(r.lc())).shift(d);
        r = r.scale(l) - t;
        --e;
    }
    if (e > 0) r = r.scale(ring_pow(l, static_cast<unsigned>(e)));
    return r;
}

// Subresultant PRS (no content removal).
template <class T>
T resultant(UPoly<T> a, UPoly<T> b) {
    if (a.is_zero() || b.is_zero()) return T();
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
        std::swap(a, b);
    }
    auto signed_value = [&](T v) { return sign < 0 ? T(-v) : v; };
    if (b.degree() == 0) return signed_value(ring_pow(b.lc(), static_cast<unsigned>(a.degree())));
    T g = ring_one<T>(), h = ring_one<T>();
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        UPoly<T> r = prem(a, b);
        a = b;
        if (r.is_zero()) return T();
        b = r.exact_div_scalar(g * ring_pow(h, static_cast<unsigned>(delta)));
        g = a.lc();
        if (delta == 0) {
        } else if (delta == 1) {
            h = g;
        } else {
            h = UPoly<T>::coeff_exact_div(ring_pow(g, static_cast<unsigned>(delta)),
                                          ring_pow(h, static_cast<unsigned>(delta - 1)));
        }
        if (b.degree() == 0) {
            int da = a.degree();
            T hb = ring_pow(b.lc(), static_cast<unsigned>(da));
            if (da > 1) hb = UPoly<T>::coeff_exact_div(hb, ring_pow(h, static_cast<unsigned>(da - 1)));
            else if (da == 0) hb = ring_one<T>();
            return signed_value(hb);
        }
    }
}

inline Rat rat_scale(const Rat& a, const Rat& s) { return a * s; }
template <class T>
UPoly<T> rat_scale(const UPoly<T>& p, const Rat& s) {
    std::vector<T> r = p.coeffs();
    for (auto& x : r) x = rat_scale(x, s);
    return UPoly<T>(std::move(r));
}

inline Rat leading_rational(const Rat& q) { return q; }
template <class T>
Rat leading_rational(const UPoly<T>& p) {
    return p.is_zero() ? Rat(0) : leading_rational(p.lc());
}

template <class T>
T content(const UPoly<T>& p);

template <class T>
UPoly<T> poly_gcd(UPoly<T> a, UPoly<T> b);

inline Rat ring_gcd(const Rat& a, const Rat& b) { return (sgn(a) == 0 && sgn(b) == 0) ? Rat(0) : Rat(1); }
template <class T>
UPoly<T> ring_gcd(const UPoly<T>& a, const UPoly<T>& b) {
    return poly_gcd(a, b);
}

// gcd of coefficients, normalized (monic over Q at the innermost level)
template <class T>
T content(const UPoly<T>& p) {
    T c{};
    for (const auto& x : p.coeffs()) {
        if (ring_is_zero(x)) continue;
        c = ring_gcd(c, x);
        if constexpr (!is_upoly<T>::value) break;
    }
    if constexpr (is_upoly<T>::value) {
        if (!c.is_zero()) c = rat_scale(c, Rat(1) / leading_rational(c));
    } else {
        c = Rat(1);
    }
    return c;
}

template <class T>
UPoly<T> primitive_part(const UPoly<T>& p) {
    if (p.is_zero()) return p;
    UPoly<T> r = p;
    if constexpr (is_upoly<T>::value) r = r.exact_div_scalar(content(p));
    return rat_scale(r, Rat(1) / leading_rational(r));
}

template <class T>
UPoly<T> poly_gcd(UPoly<T> a, UPoly<T> b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if constexpr (!is_upoly<T>::value) {
        while (!b.is_zero()) {
            UPoly<T> r = divide(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return primitive_part(a);
    } else {
        T ca = content(a), cb = content(b);
        T c = ring_gcd(ca, cb);
        a = primitive_part(a);
        b = primitive_part(b);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            UPoly<T> r = prem(a, b);
            a = std::move(b);
            if (r.is_zero()) break;
            if (r.degree() == 0) return UPoly<T>(c);
            b = primitive_part(r);
        }
        return primitive_part(a * UPoly<T>(c));
    }
}

// Yun's algorithm; p must have a constant (unit) leading coefficient.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree(const UPoly<T>& p) {
    std::vector<std::pair<UPoly<T>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<T> d = p.derivative();
    UPoly<T> a = poly_gcd(p, d);
    UPoly<T> b = exact_div(p, a);
    UPoly<T> c = exact_div(d, a);
    UPoly<T> e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly<T> g = poly_gcd(b, e);
        UPoly<T> nb = exact_div(b, g);
        UPoly<T> nc = exact_div(e, g);
        if (g.degree() > 0) out.emplace_back(primitive_part(g), i);
        b = nb;
        e = nc - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace polardisc
