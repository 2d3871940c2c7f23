#pragma once

#include <gmpxx.h>

#include <string>

namespace polardisc {

using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

BigInt floor_rat(const Rat& q);
BigInt ceil_rat(const Rat& q);
long to_long(const Rat& q);  // q must be an integer fitting in a long

// "3", "-3/4" or "1.25" (exact decimal); throws ParseError.
Rat parse_rational(const std::string& text);

// "7", "-3/4"
std::string to_string(const Rat& q);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace polardisc
