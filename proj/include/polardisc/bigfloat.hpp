#pragma once

#include <mpfr.h>

#include <string>

#include "polardisc/rational.hpp"

namespace polardisc {

// RAII wrapper over mpfr_t. Binary operations produce the larger of the two
// operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 256);
    BigFloat(long v, mpfr_prec_t prec);
    BigFloat(const Rat& q, mpfr_prec_t prec);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero
    long exponent2() const;
    std::string to_string(int digits) const;

    // explicit rounding to a given precision
    BigFloat rounded(mpfr_prec_t prec) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    static BigFloat pi(mpfr_prec_t prec);
    static BigFloat two_pow(long e, mpfr_prec_t prec);

private:
    mpfr_t v_;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);
bool operator>=(const BigFloat& a, const BigFloat& b);
BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat max(const BigFloat& a, const BigFloat& b);

class BigComplex {
public:
    explicit BigComplex(mpfr_prec_t prec = 256) : re_(prec), im_(prec) {}
    BigComplex(const BigFloat& re, const BigFloat& im);
    BigComplex(const Rat& re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}
    BigComplex(long re, mpfr_prec_t prec) : re_(re, prec), im_(prec) {}

    const BigFloat& real() const { return re_; }
    const BigFloat& imag() const { return im_; }
    mpfr_prec_t precision() const;

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    BigFloat abs() const;
    BigFloat norm() const;  // |z|^2
    BigComplex conj() const;
    BigComplex rounded(mpfr_prec_t prec) const { return BigComplex(re_.rounded(prec), im_.rounded(prec)); }

    BigComplex operator-() const;
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator/=(const BigComplex& o);

    // exp(2*pi*i*k/n)
    static BigComplex root_of_unity(long k, long n, mpfr_prec_t prec);

    std::string to_string(int digits) const;

private:
    BigFloat re_, im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex pow(const BigComplex& z, long e);
BigComplex sqrt(const BigComplex& z);

}  // namespace polardisc
