#include "polardisc/rational.hpp"

#include <cctype>
#include <numeric>

#include "polardisc/errors.hpp"

namespace polardisc {

BigInt floor_rat(const Rat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil_rat(const Rat& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const Rat& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        fail(ErrorKind::internal_error, "rational " + to_string(q) + " is not a machine integer");
    return q.get_num().get_si();
}

Rat parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t start = i;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) throw ParseError("expected a number", start);
    Rat value{BigInt(digits, 10)};
    if (i < text.size() && text[i] == '.') {
        ++i;
        std::string frac;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac += text[i++];
        if (!frac.empty()) {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            value += Rat(BigInt(frac, 10), den);
        }
    } else if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den;
        std::size_t dpos = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
        if (den.empty()) throw ParseError("expected a denominator", dpos);
        BigInt d(den, 10);
        if (d == 0) throw ParseError("zero denominator", dpos);
        value = Rat(BigInt(digits, 10), d);
    }
    value.canonicalize();
    skip();
    if (i != text.size()) throw ParseError("unexpected character in number", i);
    return neg ? Rat(-value) : value;
}

std::string to_string(const Rat& q) { return q.get_str(); }

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace polardisc
