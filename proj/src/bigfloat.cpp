#include "polardisc/bigfloat.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>
#include <utility>

namespace polardisc {

BigFloat::BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        if (precision() != other.precision()) mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

long BigFloat::exponent2() const {
    if (mpfr_zero_p(v_)) return -(1L << 40);
    return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

namespace {

mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

BigFloat BigFloat::rounded(mpfr_prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::two_pow(long e, mpfr_prec_t prec) {
    BigFloat r(1, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }

BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigComplex::BigComplex(const BigFloat& re, const BigFloat& im) : re_(re), im_(im) {
    mpfr_prec_t p = std::max(re.precision(), im.precision());
    if (re_.precision() != p) re_ = re_ + BigFloat(p);
    if (im_.precision() != p) im_ = im_ + BigFloat(p);
}

mpfr_prec_t BigComplex::precision() const { return std::max(re_.precision(), im_.precision()); }

BigFloat BigComplex::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigComplex BigComplex::conj() const { return BigComplex(re_, -im_); }

BigComplex BigComplex::operator-() const { return BigComplex(-re_, -im_); }

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex BigComplex::root_of_unity(long k, long n, mpfr_prec_t prec) {
    long kk = ((k % n) + n) % n;
    if (kk == 0) return BigComplex(1, prec);
    if (2 * kk == n) return BigComplex(-1, prec);
    if (4 * kk == n) return BigComplex(BigFloat(prec), BigFloat(1, prec));
    if (4 * kk == 3 * n) return BigComplex(BigFloat(prec), BigFloat(-1, prec));
    BigFloat angle = BigFloat::pi(prec + 16) * BigFloat(Rat(2 * kk, n), prec + 16);
    BigFloat s(prec), c(prec);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    return BigComplex(c, s);
}

std::string BigComplex::to_string(int digits) const {
    BigFloat scale = max(polardisc::abs(re_), polardisc::abs(im_));
    BigFloat tiny = scale * BigFloat::two_pow(-static_cast<long>(precision()) / 2, precision());
    bool re0 = polardisc::abs(re_) <= tiny, im0 = polardisc::abs(im_) <= tiny;
    if (im0) return re_.to_string(digits);
    if (re0) return im_.to_string(digits) + "*i";
    std::string im = im_.to_string(digits);
    if (im[0] == '-') return "(" + re_.to_string(digits) + " - " + im.substr(1) + "*i)";
    return "(" + re_.to_string(digits) + " + " + im + "*i)";
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.real() + b.real(), a.imag() + b.imag());
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.real() - b.real(), a.imag() - b.imag());
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return BigComplex(a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real());
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = b.norm();
    return BigComplex((a.real() * b.real() + a.imag() * b.imag()) / d,
                      (a.imag() * b.real() - a.real() * b.imag()) / d);
}

BigComplex pow(const BigComplex& z, long e) {
    BigComplex result(1, z.precision());
    BigComplex base = z;
    if (e < 0) {
        base = BigComplex(1, z.precision()) / z;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BigComplex sqrt(const BigComplex& z) {
    mpfr_prec_t p = z.precision();
    if (z.is_zero()) return BigComplex(p);
    BigFloat r = z.abs();
    BigFloat half(Rat(1, 2), p);
    BigFloat a = sqrt((r + abs(z.real())) * half);
    BigFloat b = abs(z.imag()) / (a + a);
    if (z.real().sign() >= 0) return BigComplex(a, z.imag().sign() < 0 ? -b : b);
    return BigComplex(b, z.imag().sign() < 0 ? -a : a);
}

}  // namespace polardisc
