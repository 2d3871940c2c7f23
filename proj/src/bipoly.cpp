#include "polardisc/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace polardisc {

BiPoly BiPoly::constant(const Rat& c, const std::string& v0, const std::string& v1) {
    return monomial(c, 0, 0, v0, v1);
}

BiPoly BiPoly::monomial(const Rat& c, int i, int j, const std::string& v0, const std::string& v1) {
    BiPoly p(v0, v1);
    p.add_term(i, j, c);
    return p;
}

int BiPoly::var_index(const std::string& name) const {
    if (name == vars_[0]) return 0;
    if (name == vars_[1]) return 1;
    return -1;
}

BiPoly BiPoly::renamed(const std::string& v0, const std::string& v1) const {
    BiPoly p(v0, v1);
    p.terms_ = terms_;
    return p;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(Exponent{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int BiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, var == 0 ? e.first : e.second);
    return d;
}

int BiPoly::low_degree(int var) const {
    if (terms_.empty()) return -1;
    int d = 1 << 30;
    for (const auto& [e, c] : terms_) d = std::min(d, var == 0 ? e.first : e.second);
    return d;
}

int BiPoly::order() const {
    if (terms_.empty()) return -1;
    int d = 1 << 30;
    for (const auto& [e, c] : terms_) d = std::min(d, e.first + e.second);
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) { return *this = *this * o; }

BiPoly BiPoly::scale(const Rat& s) const {
    if (sgn(s) == 0) return BiPoly(vars_[0], vars_[1]);
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = constant(1, vars_[0], vars_[1]), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

BiPoly BiPoly::derivative(int var) const {
    BiPoly r(vars_[0], vars_[1]);
    for (const auto& [e, c] : terms_) {
        int d = var == 0 ? e.first : e.second;
        if (d == 0) continue;
        if (var == 0) r.add_term(e.first - 1, e.second, c * d);
        else r.add_term(e.first, e.second - 1, c * d);
    }
    return r;
}

QPoly BiPoly::coefficient_in(int var, int d) const {
    std::vector<Rat> c;
    for (const auto& [e, q] : terms_) {
        int here = var == 0 ? e.first : e.second;
        int other = var == 0 ? e.second : e.first;
        if (here != d) continue;
        if (static_cast<int>(c.size()) <= other) c.resize(other + 1);
        c[other] = q;
    }
    return QPoly(std::move(c));
}

BiPoly BiPoly::monic() const {
    if (terms_.empty()) return *this;
    int dj = degree(1);
    int di = -1;
    for (const auto& [e, c] : terms_)
        if (e.second == dj) di = std::max(di, e.first);
    Rat l = coeff(di, dj);
    return scale(Rat(1) / l);
}

namespace {

void append_power(std::ostringstream& os, const std::string& v, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << "*";
    os << v;
    if (e > 1) os << "^" << e;
    first_factor = false;
}

}  // namespace

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.second != b.first.second) return a.first.second > b.first.second;
        return a.first.first < b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool first_factor = true;
        if (a != 1 || (e.first == 0 && e.second == 0)) {
            os << a.get_str();
            first_factor = false;
        }
        append_power(os, vars_[0], e.first, first_factor);
        append_power(os, vars_[1], e.second, first_factor);
    }
    return os.str();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    r += b;
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    r -= b;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.var(0), a.var(1));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

QPoly2 to_recursive(const BiPoly& f, int var) {
    int d = f.degree(var);
    std::vector<QPoly> c;
    for (int k = 0; k <= d; ++k) c.push_back(f.coefficient_in(var, k));
    return QPoly2(std::move(c));
}

BiPoly from_recursive(const QPoly2& p, int var, const std::string& v0, const std::string& v1) {
    BiPoly r(v0, v1);
    for (int k = 0; k <= p.degree(); ++k) {
        const QPoly& c = p.coeffs()[k];
        for (int m = 0; m <= c.degree(); ++m) {
            if (var == 1) r.add_term(m, k, c.coeffs()[m]);
            else r.add_term(k, m, c.coeffs()[m]);
        }
    }
    return r;
}

BiPoly resultant(const BiPoly& f, const BiPoly& g, const std::string& var) {
    if (f.is_zero() && g.is_zero()) fail(ErrorKind::invalid_input, "resultant of two zero polynomials");
    int k = f.var_index(var);
    if (k < 0 || g.var_index(var) != k)
        fail(ErrorKind::invalid_input, "resultant variable '" + var + "' is not shared by both polynomials");
    QPoly r = resultant(to_recursive(f, k), to_recursive(g, k));
    BiPoly out(f.var(0), f.var(1));
    for (int m = 0; m <= r.degree(); ++m) {
        if (k == 1) out.add_term(m, 0, r.coeffs()[m]);
        else out.add_term(0, m, r.coeffs()[m]);
    }
    return out;
}

std::vector<SquarefreeFactor> squarefree_decompose(const BiPoly& f, const std::string& var) {
    if (f.is_zero()) fail(ErrorKind::invalid_input, "squarefree decomposition of zero");
    int k = f.var_index(var);
    if (k < 0) fail(ErrorKind::invalid_input, "unknown variable '" + var + "'");
    QPoly2 p = to_recursive(f, k);
    if (p.lc().degree() != 0)
        fail(ErrorKind::invalid_input, "polynomial is not monic in " + var + " after normalization");
    p = p.exact_div_scalar(p.lc());
    std::vector<SquarefreeFactor> out;
    for (auto& [g, m] : squarefree(p)) {
        QPoly2 h = g.exact_div_scalar(g.lc());
        out.push_back({from_recursive(h, k, f.var(0), f.var(1)), m});
    }
    return out;
}

std::string qpoly_to_string(const QPoly& p, const std::string& var) {
    BiPoly b("_", var);
    for (int i = 0; i <= p.degree(); ++i) b.add_term(0, i, p.coeffs()[i]);
    return b.to_string();
}

}  // namespace polardisc
