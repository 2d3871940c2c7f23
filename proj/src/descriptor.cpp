#include "polardisc/descriptor.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "polardisc/errors.hpp"

namespace polardisc {

namespace {

constexpr std::array<std::pair<Family, const char*>, 11> kNames{{{Family::Mult2, "Mult2"},
                                                                 {Family::Mult3, "Mult3"},
                                                                 {Family::Mult4G2, "Mult4G2"},
                                                                 {Family::NF4_1, "NF4_1"},
                                                                 {Family::NF4_2, "NF4_2"},
                                                                 {Family::NF4_3, "NF4_3"},
                                                                 {Family::NF4_4, "NF4_4"},
                                                                 {Family::NF4_5, "NF4_5"},
                                                                 {Family::R1, "R1"},
                                                                 {Family::R2A, "R2A"},
                                                                 {Family::R2B, "R2B"}}};

[[noreturn]] void bad(const std::string& msg) { fail(ErrorKind::invalid_descriptor, msg); }

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& [k, n] : kNames)
        if (k == f) return n;
    return "?";
}

Family parse_family(const std::string& name) {
    for (const auto& [k, n] : kNames)
        if (name == n) return k;
    bad("unknown family '" + name + "'");
}

BigFloat Coefficient::numeric(mpfr_prec_t prec) const {
    BigFloat v(value, prec);
    if (sqrt6) v = v * sqrt(BigFloat(6, prec));
    return v;
}

Coefficient parse_coefficient(const std::string& text0) {
    Coefficient c;
    c.text = trim(text0);
    std::string s;
    for (char ch : c.text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    auto pos = s.find("sqrt(6)");
    if (pos == std::string::npos) {
        c.value = parse_rational(s);
        c.from_decimal = s.find('.') != std::string::npos;
        return c;
    }
    // [sign][p*]sqrt(6)[/q]
    std::string head = s.substr(0, pos), tail = s.substr(pos + 7);
    Rat p(1);
    if (head == "-") p = -1;
    else if (head == "+" || head.empty()) p = 1;
    else if (head.back() == '*') p = parse_rational(head.substr(0, head.size() - 1));
    else throw ParseError("cannot read coefficient '" + c.text + "'", pos);
    if (!tail.empty()) {
        if (tail[0] != '/') throw ParseError("cannot read coefficient '" + c.text + "'", pos + 7);
        Rat q = parse_rational(tail.substr(1));
        if (sgn(q) == 0) throw ParseError("division by zero in coefficient", pos + 8);
        p /= q;
    }
    c.value = p;
    c.sqrt6 = true;
    return c;
}

long BranchDescriptor::multiplicity() const {
    switch (family) {
        case Family::Mult2: return 2;
        case Family::Mult3: return 3;
        case Family::R1:
        case Family::R2A:
        case Family::R2B: return s0;
        default: return 4;
    }
}

std::string BranchDescriptor::to_json_string() const {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    auto put = [&](const char* key, long v) {
        if (v) j[key] = v;
    };
    put("s0", s0);
    put("s1", s1);
    put("s2", s2);
    if (family == Family::Mult3) j["lambda"] = lambda;
    put("j", this->j);
    put("k", k);
    if (has_lambda_coeff) j["lambda_coeff"] = to_string(lambda_coeff);
    if (!coeffs.empty() || family == Family::NF4_5) {
        nlohmann::ordered_json c = nlohmann::ordered_json::object();
        for (const auto& [i, v] : coeffs) c[std::to_string(i)] = v.text;
        j["coeffs"] = c;
    }
    return j.dump();
}

BranchDescriptor parse_descriptor(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("descriptor is not valid JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
    }
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        bad("descriptor needs a string field 'family'");
    BranchDescriptor d;
    d.family = parse_family(j["family"].get<std::string>());
    auto get = [&](const char* key, long& out) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
        out = j[key].get<long>();
    };
    get("s0", d.s0);
    get("s1", d.s1);
    get("s2", d.s2);
    get("lambda", d.lambda);
    get("j", d.j);
    get("k", d.k);
    auto coeff_of = [&](const nlohmann::json& v) {
        if (v.is_string()) return parse_coefficient(v.get<std::string>());
        if (v.is_number()) return parse_coefficient(v.dump());
        bad("coefficients must be numbers or strings");
    };
    if (j.contains("lambda_coeff")) {
        Coefficient b = coeff_of(j["lambda_coeff"]);
        if (b.sqrt6 || sgn(b.value) <= 0) bad("lambda_coeff must be a positive rational");
        d.has_lambda_coeff = true;
        d.lambda_coeff = b.value;
    }
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) bad("'coeffs' must be an object keyed by index");
        for (const auto& [key, v] : j["coeffs"].items()) {
            long idx;
            try {
                std::size_t used = 0;
                idx = std::stol(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                bad("coefficient index '" + key + "' is not an integer");
            }
            d.coeffs[idx] = coeff_of(v);
        }
    }
    for (const auto& [key, v] : j.items()) {
        static const char* known[] = {"family", "s0", "s1", "s2", "lambda", "j", "k", "coeffs", "lambda_coeff"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            bad("unknown descriptor field '" + key + "'");
    }
    validate(d);
    return d;
}

long nf4_ladder_exponent(long s1, long j, long i) { return 3 * s1 - 4 * (s1 / 4 + j + 1 - i); }

long nf45_exponent(long s1, long j, long i) { return 2 * s1 - 4 * (j - s1 / 4 - i); }

void validate(const BranchDescriptor& d) {
    const long s0 = d.s0, s1 = d.s1, j = d.j;
    const long q = s1 / 4;
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) bad(msg);
    };
    auto no_sqrt = [&]() {
        for (const auto& [i, c] : d.coeffs) need(!c.sqrt6, "sqrt coefficients are only supported for NF4_5");
    };
    auto indices_in = [&](long lo, long hi) {
        for (const auto& [i, c] : d.coeffs)
            need(i >= lo && i <= hi, "coefficient index " + std::to_string(i) + " outside [" + std::to_string(lo) +
                                         ", " + std::to_string(hi) + "]");
    };
    if (d.has_lambda_coeff) need(d.family == Family::NF4_5, "lambda_coeff only applies to NF4_5");
    switch (d.family) {
        case Family::Mult2:
            need(s1 >= 3 && s1 % 2 == 1, "Mult2 needs an odd s1 >= 3");
            need(d.coeffs.empty(), "Mult2 has no free coefficients");
            break;
        case Family::Mult3: {
            need(s1 >= 4 && s1 % 3 != 0, "Mult3 needs s1 >= 4 not divisible by 3");
            need(d.coeffs.empty(), "Mult3 has no free coefficients");
            if (d.lambda == 0) break;
            long e = s1 / 3;
            long base = s1 % 3 == 2 ? 3 * e + 4 : 3 * e + 2;
            bool ok = false;
            for (long kk = 0; kk <= e - 2; ++kk) ok = ok || d.lambda == base + 3 * kk;
            need(ok, "lambda is not an admissible Zariski invariant for <3," + std::to_string(s1) + ">");
            break;
        }
        case Family::Mult4G2:
            need(s1 >= 6 && s1 % 4 == 2, "Mult4G2 needs s1 = 2 mod 4");
            need(d.s2 % 2 == 1 && d.s2 > 2 * s1, "Mult4G2 needs an odd s2 > 2*s1");
            need(d.coeffs.empty(), "Mult4G2 has no free coefficients");
            break;
        case Family::NF4_1:
            need(s1 >= 5 && s1 % 2 == 1, "NF4_1 needs an odd s1 >= 5");
            need(d.coeffs.empty(), "NF4_1 has no free coefficients");
            break;
        case Family::NF4_2:
        case Family::NF4_3:
        case Family::NF4_4: {
            need(s1 >= 9 && s1 % 2 == 1, "NF4_2..4 need an odd s1 >= 9");
            need(j >= 2 && j <= q, "j must satisfy 2 <= j <= [s1/4]");
            no_sqrt();
            if (d.family == Family::NF4_2) {
                need(d.k >= 1 && d.k <= q - j, "NF4_2 needs 1 <= k <= [s1/4] - j");
                indices_in(d.k, q);
                auto it = d.coeffs.find(d.k);
                need(it == d.coeffs.end() || !it->second.is_zero(), "NF4_2 needs a_k != 0");
            } else if (d.family == Family::NF4_3) {
                indices_in(q - j + 2, q);
            } else {
                indices_in(q - j + 1, q - 1);
                auto it = d.coeffs.find(q - j + 1);
                need(it == d.coeffs.end() || it->second.value != Rat(3 * s1 - 4 * j, 2 * s1),
                     "NF4_4 excludes the NF4_3 coefficient");
            }
            break;
        }
        case Family::NF4_5:
            need(s1 >= 5 && s1 % 2 == 1, "NF4_5 needs an odd s1 >= 5");
            need(j >= 2 && j <= s1 / 2, "j must satisfy 2 <= j <= [s1/2]");
            indices_in(1, j - q - 2);
            if (d.has_lambda_coeff)
                for (const auto& [i, c] : d.coeffs)
                    need(!c.sqrt6, "raw coefficients (lambda_coeff given) must be rational");
            break;
        case Family::R1:
            need(s0 >= 3 && s0 < s1 && std::gcd(s0, s1) == 1, "R1 needs coprime 3 <= s0 < s1");
            need(2 * (s0 + s1) < s0 * s1,
                 "R1 needs 2/s0 + 2/s1 < 1; otherwise the normal form is not a branch with semigroup <s0,s1>");
            need(d.coeffs.empty(), "R1 has no free coefficients");
            break;
        case Family::R2A:
            need(s0 > 2 && s0 < s1 && std::gcd(s0, s1) == 1, "R2A needs coprime 2 < s0 < s1");
            need(3 * s0 + 2 * s1 < s0 * s1,
                 "R2A needs 2/s0 + 3/s1 < 1; otherwise the normal form is not a branch with semigroup <s0,s1>");
            need(d.coeffs.empty(), "R2A has no free coefficients");
            break;
        case Family::R2B:
            need(s0 >= 4 && s0 < s1 && std::gcd(s0, s1) == 1, "R2B needs coprime 4 <= s0 < s1");
            need(2 * s0 < (s0 - 3) * s1, "R2B needs 2*s0/(s0-3) < s1");
            no_sqrt();
            indices_in(2, 2 + s1 / s0);
            break;
    }
}

namespace {

Rat continued_fraction_approx(double x, double rel) {
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double y = x;
    for (int it = 0; it < 40; ++it) {
        double a = std::floor(y);
        long ai = static_cast<long>(a);
        long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::fabs(static_cast<double>(h1) / k1 - x) <= rel * std::fabs(x) || y == a) break;
        y = 1.0 / (y - a);
    }
    Rat q(h1, k1);
    q.canonicalize();
    return q;
}

}  // namespace

NF45Realization realize_nf45(const BranchDescriptor& d, mpfr_prec_t precision) {
    NF45Realization r;
    const long s1 = d.s1, j = d.j, lambda = 3 * s1 - 4 * j;
    if (d.has_lambda_coeff) {
        r.b = d.lambda_coeff;
        for (const auto& [i, c] : d.coeffs)
            if (!c.is_zero()) r.c[i] = c.value;
        return r;
    }
    // snap decimals that sit on a threshold
    std::map<long, Coefficient> a = d.coeffs;
    for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
    BigFloat tol = BigFloat::two_pow(-static_cast<long>(precision) / 4, precision);
    if (!a.empty()) {
        auto& ak = a.begin()->second;
        BigFloat crit = BigFloat(Rat(4, 9), precision) * sqrt(BigFloat(6, precision));
        if (ak.from_decimal && !ak.sqrt6) {
            for (int sign : {1, -1}) {
                if (abs(ak.numeric(precision) - crit * BigFloat(sign, precision)) < tol) {
                    r.notes.push_back("coefficient a_" + std::to_string(a.begin()->first) + " = " + ak.text +
                                      " snapped to " + (sign > 0 ? "" : "-") + "4*sqrt(6)/9");
                    ak.value = Rat(4 * sign, 9);
                    ak.sqrt6 = true;
                }
            }
        }
        if (a.size() >= 2 && ak.sqrt6) {
            auto& as = std::next(a.begin())->second;
            Rat target = -ak.value / 9;
            if (as.from_decimal && !as.sqrt6 &&
                abs(as.numeric(precision) - BigFloat(target, precision) * sqrt(BigFloat(6, precision))) < tol) {
                r.notes.push_back("coefficient a_" + std::to_string(std::next(a.begin())->first) + " = " + as.text +
                                  " snapped to " + to_string(target) + "*sqrt(6)");
                as.value = target;
                as.sqrt6 = true;
            }
        }
    }
    bool any_sqrt = false;
    for (const auto& [i, c] : a) any_sqrt = any_sqrt || c.sqrt6;
    if (!any_sqrt) {
        for (const auto& [i, c] : a) r.c[i] = c.value;
        return r;
    }
    // t -> kappa t with kappa^(lambda - s1) = 1/6 turns a_i into
    // c_i = a_i * 6^((e_i - s1)/(lambda - s1))
    r.b = 6;
    for (const auto& [i, c] : a) {
        Rat ex(nf45_exponent(s1, j, i) - s1, lambda - s1);
        ex.canonicalize();
        if (c.sqrt6) ex += Rat(1, 2);
        if (!is_integer(ex)) {
            // no rational c_i gives this a_i exactly; take a nearby rational
            // representative, which stays off the threshold loci
            Rat rr(nf45_exponent(s1, j, i) - s1, lambda - s1);
            BigFloat v = c.numeric(precision);
            BigFloat w(precision);
            mpfr_set_q(w.get(), rr.get_mpq_t(), MPFR_RNDN);
            BigFloat six(6, precision);
            mpfr_pow(w.get(), six.get(), w.get(), MPFR_RNDN);
            r.c[i] = continued_fraction_approx((v * w).to_double(), 1e-9);
            r.notes.push_back("coefficient a_" + std::to_string(i) + " = " + c.text +
                              " is not exactly realizable alongside sqrt(6); used c_" + std::to_string(i) + " = " +
                              to_string(r.c[i]));
            continue;
        }
        long p = to_long(ex);
        Rat scale(1);
        for (long t = 0; t < std::labs(p); ++t) scale *= 6;
        if (p < 0) scale = 1 / scale;
        r.c[i] = c.value * scale;
    }
    r.notes.push_back("realized with lambda coefficient 6 (analytically equivalent rescaling)");
    return r;
}

}  // namespace polardisc
