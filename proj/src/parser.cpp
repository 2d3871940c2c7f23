#include "polardisc/parser.hpp"

#include <array>
#include <cctype>
#include <map>

#include "polardisc/errors.hpp"

namespace polardisc {

namespace {

constexpr std::array<char, 5> kVars = {'x', 'y', 'u', 'v', 't'};
using Mono = std::array<int, 5>;
using Poly = std::map<Mono, Rat>;

void add(Poly& p, const Mono& m, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, ins] = p.emplace(m, c);
    if (!ins) {
        it->second += c;
        if (sgn(it->second) == 0) p.erase(it);
    }
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m;
            for (int k = 0; k < 5; ++k) m[k] = ma[k] + mb[k];
            add(r, m, ca * cb);
        }
    return r;
}

Poly constant(const Rat& c) {
    Poly p;
    add(p, Mono{}, c);
    return p;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expression();
        skip();
        if (i_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
        return p;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }

    Poly expression() {
        Poly p;
        bool first = true;
        for (;;) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                break;
            }
            Poly t = term();
            for (const auto& [m, c] : t) add(p, m, sign * c);
            first = false;
            skip();
            if (!(peek('+') || peek('-'))) break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (peek('*')) {
                ++i_;
                p = mul(p, factor());
            } else if (peek('/')) {
                std::size_t at = ++i_;
                Poly d = factor();
                if (d.size() != 1 || d.begin()->first != Mono{})
                    throw ParseError("division by a non-constant", at);
                p = mul(p, constant(Rat(1) / d.begin()->second));
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        Poly b = base();
        if (peek('^')) {
            ++i_;
            skip();
            std::size_t at = i_;
            std::string digits;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
            if (digits.empty()) throw ParseError("expected a nonnegative integer exponent", at);
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            int e = std::stoi(digits);
            Poly r = constant(1);
            for (int k = 0; k < e; ++k) r = mul(r, b);
            return r;
        }
        return b;
    }

    Poly base() {
        skip();
        if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Poly p = expression();
            if (!peek(')')) throw ParseError("expected ')'", i_);
            ++i_;
            return p;
        }
        if (c == '-') {
            ++i_;
            Poly p = factor();
            for (auto& [m, q] : p) q = -q;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
            return constant(parse_rational(s_.substr(start, i_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string name = s_.substr(start, i_ - start);
            for (int k = 0; k < 5; ++k) {
                if (name.size() == 1 && name[0] == kVars[k]) {
                    Mono m{};
                    m[k] = 1;
                    Poly p;
                    add(p, m, 1);
                    return p;
                }
            }
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", i_);
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

int var_slot(const std::string& v) {
    for (int k = 0; k < 5; ++k)
        if (v.size() == 1 && v[0] == kVars[k]) return k;
    return -1;
}

BiPoly project(const Poly& p, const std::string& v0, const std::string& v1) {
    int a = var_slot(v0), b = var_slot(v1);
    BiPoly out(v0, v1);
    for (const auto& [m, c] : p) {
        for (int k = 0; k < 5; ++k)
            if (k != a && k != b && m[k] != 0)
                throw ParseError(std::string("variable '") + kVars[k] + "' is not one of " + v0 + ", " + v1, 0);
        out.add_term(a >= 0 ? m[a] : 0, b >= 0 ? m[b] : 0, c);
    }
    return out;
}

}  // namespace

BiPoly parse_polynomial(const std::string& text) {
    Poly p = Parser(text).parse();
    bool has_xy = false, has_uv = false;
    for (const auto& [m, c] : p) {
        has_xy = has_xy || m[0] || m[1];
        has_uv = has_uv || m[2] || m[3];
    }
    if (has_uv && !has_xy) return project(p, "u", "v");
    return project(p, "x", "y");
}

BiPoly parse_polynomial(const std::string& text, const std::string& v0, const std::string& v1) {
    return project(Parser(text).parse(), v0, v1);
}

QPoly parse_univariate(const std::string& text, const std::string& var) {
    BiPoly b = project(Parser(text).parse(), var, var == "t" ? "x" : "t");
    if (b.degree(1) > 0) throw ParseError("expected a polynomial in " + var + " only", 0);
    return b.coefficient_in(1, 0);
}

}  // namespace polardisc
