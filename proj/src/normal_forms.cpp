#include "polardisc/normal_forms.hpp"

#include <random>

#include "polardisc/errors.hpp"

namespace polardisc {

namespace {

class SmallRationals {
public:
    explicit SmallRationals(std::uint64_t seed) : rng_(seed) {}
    Rat next() {
        long num = static_cast<long>(rng_() % 19) - 9;
        if (num == 0) num = 1;
        long den = 1 + static_cast<long>(rng_() % 10);
        return Rat(num, den);
    }

private:
    std::mt19937_64 rng_;
};

Rat coefficient_or(const BranchDescriptor& d, long i, SmallRationals& gen) {
    auto it = d.coeffs.find(i);
    if (it != d.coeffs.end()) return it->second.value;
    return gen.next();
}

BiPoly xy(const Rat& c, int i, int j) { return BiPoly::monomial(c, i, j, "x", "y"); }

}  // namespace

NormalForm build(const BranchDescriptor& d, std::uint64_t seed, mpfr_prec_t precision) {
    validate(d);
    NormalForm nf;
    SmallRationals gen(seed);
    const long s0 = d.s0, s1 = d.s1, j = d.j, q = s1 / 4;
    Parametrization p;
    switch (d.family) {
        case Family::Mult2:
            p.n = 2;
            p.y_terms[s1] = 1;
            break;
        case Family::Mult3:
            p.n = 3;
            p.y_terms[s1] = 1;
            if (d.lambda) p.y_terms[d.lambda] = 1;
            break;
        case Family::Mult4G2:
            p.n = 4;
            p.y_terms[s1] = 1;
            p.y_terms[d.s2 - s1] = 1;
            break;
        case Family::NF4_1:
            p.n = 4;
            p.y_terms[s1] = 1;
            break;
        case Family::NF4_2:
        case Family::NF4_3:
        case Family::NF4_4: {
            p.n = 4;
            p.y_terms[s1] = 1;
            p.y_terms[2 * s1 - 4 * j] = 1;
            long lo = d.k, hi = q;
            if (d.family == Family::NF4_3) {
                p.y_terms[nf4_ladder_exponent(s1, j, q - j + 1)] = Rat(3 * s1 - 4 * j, 2 * s1);
                lo = q - j + 2;
            } else if (d.family == Family::NF4_4) {
                lo = q - j + 1;
                hi = q - 1;
            }
            Rat excluded(3 * s1 - 4 * j, 2 * s1);
            for (long i = lo; i <= hi; ++i) {
                Rat c = coefficient_or(d, i, gen);
                while (d.family == Family::NF4_4 && i == q - j + 1 && c == excluded) c = gen.next();
                if (sgn(c) != 0) p.y_terms[nf4_ladder_exponent(s1, j, i)] = c;
            }
            long prev = -1;
            for (const auto& [e, c] : p.y_terms) {
                if (e <= prev) nf.notes.push_back("ladder exponents are not increasing");
                prev = e;
            }
            if (d.family == Family::NF4_2)
                nf.notes.push_back("ladder exponent read as 3*s1 - 4*([s1/4] + j + 1 - i)");
            if (d.family == Family::NF4_3)
                nf.notes.push_back("last ladder exponent read as 3*s1 - 4*(j + 1)");
            break;
        }
        case Family::NF4_5: {
            p.n = 4;
            auto r = realize_nf45(d, precision);
            p.y_terms[s1] = 1;
            p.y_terms[3 * s1 - 4 * j] = r.b;
            for (const auto& [i, c] : r.c) p.y_terms[nf45_exponent(s1, j, i)] = c;
            nf.notes = r.notes;
            if (!r.c.empty()) nf.notes.push_back("coefficient exponents read as 2*s1 - 4*(j - [s1/4] - i)");
            break;
        }
        case Family::R1:
            nf.equation = xy(1, 0, static_cast<int>(s0)) - xy(1, static_cast<int>(s1), 0) +
                          xy(1, static_cast<int>(s1 - 2), static_cast<int>(s0 - 2));
            return nf;
        case Family::R2A:
            nf.equation = xy(1, 0, static_cast<int>(s0)) - xy(1, static_cast<int>(s1), 0) +
                          xy(1, static_cast<int>(s1 - 3), static_cast<int>(s0 - 2));
            return nf;
        case Family::R2B: {
            BiPoly f = xy(1, 0, static_cast<int>(s0)) - xy(1, static_cast<int>(s1), 0) +
                       xy(1, static_cast<int>(s1 - 2), static_cast<int>(s0 - 3));
            for (long k = 2; k <= 2 + s1 / s0; ++k)
                f += xy(coefficient_or(d, k, gen), static_cast<int>(s1 - k), static_cast<int>(s0 - 2));
            nf.equation = f;
            return nf;
        }
    }
    nf.param = p;
    nf.equation = implicitize(p);
    return nf;
}

}  // namespace polardisc
