#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "polardisc/classifier.hpp"
#include "polardisc/parser.hpp"
#include "polardisc/report.hpp"

using namespace polardisc;

namespace {

struct Config {
    int precision = 256;
    std::string trunc = "auto";
    std::string format = "text";
    std::uint64_t seed = 1;
};

enum class InputKind { parametrization, equation, descriptor };

InputKind detect(const std::string& s) {
    auto p = s.find_first_not_of(" \t\n");
    if (p != std::string::npos && s[p] == '{') return InputKind::descriptor;
    if (s.find("t^") != std::string::npos || s.find("t)") != std::string::npos ||
        s.find("x =") != std::string::npos || s.find("x=") != std::string::npos)
        return InputKind::parametrization;
    return InputKind::equation;
}

struct Curve {
    BiPoly f;
    std::optional<Parametrization> param;
    std::optional<BranchDescriptor> descriptor;
};

Curve read_curve(const std::string& text, const Config& cfg) {
    Curve c;
    switch (detect(text)) {
        case InputKind::descriptor: {
            c.descriptor = parse_descriptor(text);
            auto nf = build(*c.descriptor, cfg.seed, cfg.precision);
            c.f = nf.equation;
            c.param = nf.param;
            break;
        }
        case InputKind::parametrization:
            c.param = parse_parametrization(text);
            c.f = implicitize(*c.param);
            break;
        case InputKind::equation:
            c.f = parse_polynomial(text);
            if (c.f.var(0) != "x" || c.f.var(1) != "y") c.f = c.f.renamed("x", "y");
            break;
    }
    return c;
}

void emit(const Json& j, const std::string& text, const Config& cfg) {
    if (cfg.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

// branch invariants, when the curve is a branch
struct BranchInfo {
    CharExponents chr;
    Semigroup sg;
};

std::optional<BranchInfo> branch_info(const Curve& c, const EquisingularityType* own, const Config& cfg) {
    BranchInfo b;
    if (c.param) {
        b.chr = characteristic_exponents(*c.param);
    } else {
        EquisingularityType t = own ? *own : equisingularity_type(c.f, cfg.precision);
        if (t.branches.size() != 1 || t.branches[0].multiplicity != 1) return std::nullopt;
        b.chr = t.branches[0].chr;
    }
    b.sg = semigroup_from_char(b.chr);
    return b;
}

int cmd_analyze(const std::string& input, const Config& cfg) {
    Curve c = read_curve(input, cfg);
    Json j;
    std::ostringstream os;
    j["curve"] = c.f.to_string();
    os << "curve:       " << c.f.to_string() << "\n";
    if (c.param) {
        j["parametrization"] = c.param->to_string();
        os << "param:       " << c.param->to_string() << "\n";
    }
    EquisingularityType own = equisingularity_type(c.f, cfg.precision);
    j["type"] = to_json(own);
    os << "type:        " << own.to_string() << "\n";
    auto b = branch_info(c, &own, cfg);
    long mu = milnor(c.f);
    long tau = tjurina(c.f, mu);
    j["milnor"] = mu;
    j["tjurina"] = tau;
    j["mu_minus_tau"] = mu - tau;
    if (b) {
        j["char"] = b->chr.beta;
        j["semigroup"] = to_json(b->sg);
        long lambda = c.param ? zariski_invariant(*c.param) : zariski_invariant_of_equation(c.f, b->sg, cfg.precision);
        j["zariski_lambda"] = lambda;
        os << "char:        " << b->chr.to_string() << "\n";
        os << "semigroup:   " << b->sg.to_string() << ", conductor " << b->sg.conductor << ", gaps above s1 "
           << b->sg.gaps_above_s1 << "\n";
        os << "lambda:      " << lambda << "\n";
    }
    os << "mu:          " << mu << "\n";
    os << "tau:         " << tau << " (mu - tau = " << mu - tau << ")\n";
    emit(j, os.str(), cfg);
    return 0;
}

Rat trunc_order(const Config& cfg, const std::optional<BranchInfo>& b, long n) {
    if (cfg.trunc != "auto") {
        Rat t = parse_rational(cfg.trunc);
        if (sgn(t) <= 0) fail(ErrorKind::invalid_input, "--trunc-order must be positive");
        return t;
    }
    long c = b ? b->sg.conductor : 2 * n;
    Rat t(2 * c + 2 * n, std::max(1L, n));
    t.canonicalize();
    return t;
}

int cmd_discriminant(const std::string& input, const Config& cfg) {
    Curve c = read_curve(input, cfg);
    auto dr = discriminant_exact(c.f);
    Json j;
    std::ostringstream os;
    j["curve"] = c.f.to_string();
    j["D"] = dr.D.to_string();
    os << "curve:        " << c.f.to_string() << "\n";
    os << "D(u,v):       " << dr.D.to_string() << "\n";
    for (const auto& w : dr.warnings) os << "warning:      " << w << "\n";
    j["warnings"] = dr.warnings;
    NewtonPolygon np = polygon(dr.D);
    j["polygon"] = to_json(np);
    os << "polygon:      " << polygon_to_string(np) << "\n";
    auto nd = is_nondegenerate(dr.D);
    j["nondegenerate"] = nd.nondegenerate;
    os << "degenerate:   " << (nd.nondegenerate ? "no" : "yes");
    if (nd.edge) {
        std::string factor = qpoly_to_string(nd.repeated_factor, "z");
        j["degeneracy_witness"] = {{"edge", {{nd.edge->start.i, nd.edge->start.j}, {nd.edge->end.i, nd.edge->end.j}}},
                                   {"factor", factor},
                                   {"multiplicity", nd.multiplicity}};
        os << "  (edge (" << nd.edge->start.i << "," << nd.edge->start.j << ")-(" << nd.edge->end.i << ","
           << nd.edge->end.j << "), factor (" << factor << ")^" << nd.multiplicity << ")";
    }
    os << "\n";
    if (sgn(dr.D.coeff(0, 0)) != 0 || dr.D.degree(1) < 1) {
        emit(j, os.str(), cfg);
        return 0;
    }
    auto t = equisingularity_type(dr.D, cfg.precision);
    j["type"] = to_json(t);
    os << "type:         " << t.to_string() << "\n";
    auto b = branch_info(c, nullptr, cfg);
    if (b && b->sg.generators.size() >= 2) {
        NewtonPolygon m = merle_polygon(b->sg);
        j["merle_polygon"] = to_json(m);
        j["merle_match"] = m == np;
        os << "merle:        " << polygon_to_string(m) << (m == np ? " (equal)" : " (differ)") << "\n";
    }
    Rat T = trunc_order(cfg, b, c.f.degree(1));
    auto roots = discriminant_roots(c.f, T, cfg.precision);
    j["trunc_order"] = to_string(T);
    j["roots"] = Json::array();
    os << "roots below u^" << to_string(T) << ":\n";
    for (const auto& r : roots) {
        j["roots"].push_back(r.to_string("u", 12));
        os << "  " << r.to_string("u", 12) << "\n";
    }
    emit(j, os.str(), cfg);
    return 0;
}

int cmd_classify(const std::string& input, const Config& cfg) {
    BranchDescriptor d = parse_descriptor(input);
    Classification cl = classify(d, cfg.precision);
    Json j = to_json(cl);
    std::ostringstream os;
    os << "fired case:  " << cl.fired_case << "\n";
    os << "predicted:   " << cl.predicted.to_string() << "\n";
    for (const auto& [name, t] : cl.variants) os << "  " << name << ": " << t.to_string() << "\n";
    for (const auto& n : cl.notes) os << "note:        " << n << "\n";
    emit(j, os.str(), cfg);
    return 0;
}

int cmd_verify(const std::string& input, const Config& cfg) {
    BranchDescriptor d = parse_descriptor(input);
    VerifyConfig vc{static_cast<mpfr_prec_t>(cfg.precision), cfg.seed};
    auto rep = verify(d, vc);
    emit(to_json(rep), report_to_text(rep), cfg);
    return 0;
}

std::vector<std::string> table_grid(int n) {
    std::vector<std::string> g;
    auto add = [&](const std::string& s) { g.push_back(s); };
    switch (n) {
        case 1:
            for (int s1 : {3, 5, 7, 9}) add(R"({"family":"Mult2","s1":)" + std::to_string(s1) + "}");
            break;
        case 2:
            for (auto [s1, l] : std::vector<std::pair<int, int>>{{7, 0}, {7, 8}, {8, 10}, {10, 11}, {10, 14}, {11, 13}})
                add(R"({"family":"Mult3","s1":)" + std::to_string(s1) + R"(,"lambda":)" + std::to_string(l) + "}");
            break;
        case 3:
            for (auto [s1, s2] : std::vector<std::pair<int, int>>{{6, 13}, {6, 15}, {10, 21}})
                add(R"({"family":"Mult4G2","s1":)" + std::to_string(s1) + R"(,"s2":)" + std::to_string(s2) + "}");
            break;
        case 4:
            add(R"({"family":"NF4_1","s1":5})");
            add(R"({"family":"NF4_1","s1":7})");
            add(R"({"family":"NF4_2","s1":13,"j":2,"k":1})");
            for (int s1 : {9, 11, 13}) {
                add(R"({"family":"NF4_3","s1":)" + std::to_string(s1) + R"(,"j":2})");
                add(R"({"family":"NF4_4","s1":)" + std::to_string(s1) + R"(,"j":2})");
            }
            break;
        case 5:
            add(R"({"family":"NF4_5","s1":5,"j":2,"coeffs":{}})");
            add(R"({"family":"NF4_5","s1":9,"j":3,"coeffs":{}})");
            break;
        case 6:
            add(R"({"family":"NF4_5","s1":15,"j":6,"coeffs":{"1":"1"}})");
            add(R"({"family":"NF4_5","s1":13,"j":6,"coeffs":{"1":"1"}})");
            add(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"1"}})");
            add(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"4*sqrt(6)/9"}})");
            add(R"({"family":"NF4_5","s1":11,"j":5,"coeffs":{"1":"-4*sqrt(6)/9"}})");
            break;
        case 7:
            add(R"({"family":"NF4_5","s1":19,"j":8,"coeffs":{"1":"1","2":"1"}})");
            add(R"({"family":"NF4_5","s1":17,"j":8,"coeffs":{"1":"1","2":"1"}})");
            add(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"1","2":"1"}})");
            add(R"({"family":"NF4_5","s1":21,"j":9,"coeffs":{"1":"4*sqrt(6)/9","2":"1"}})");
            add(R"({"family":"NF4_5","s1":19,"j":9,"coeffs":{"1":"4*sqrt(6)/9","3":"1"}})");
            add(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"4*sqrt(6)/9","2":"1"}})");
            add(R"({"family":"NF4_5","s1":15,"j":7,"coeffs":{"1":"4*sqrt(6)/9","2":"-4*sqrt(6)/81"}})");
            break;
        case 8:
            add(R"({"family":"R1","s0":3,"s1":4})");
            add(R"({"family":"R1","s0":4,"s1":5})");
            add(R"({"family":"R1","s0":5,"s1":6})");
            add(R"({"family":"Mult4G2","s1":6,"s2":13})");
            break;
        case 9:
            add(R"({"family":"R2A","s0":5,"s1":6})");
            add(R"({"family":"R2A","s0":5,"s1":8})");
            break;
        case 10:
            add(R"({"family":"R2B","s0":4,"s1":11})");
            add(R"({"family":"R2B","s0":5,"s1":7})");
            break;
        default:
            fail(ErrorKind::invalid_input, "table number must be between 1 and 10");
    }
    return g;
}

int cmd_table(int n, const Config& cfg) {
    Json rows = Json::array();
    std::ostringstream os;
    os << "table " << n << "\n";
    VerifyConfig vc{static_cast<mpfr_prec_t>(cfg.precision), cfg.seed};
    for (const auto& text : table_grid(n)) {
        Json row;
        row["descriptor"] = Json::parse(text);
        try {
            BranchDescriptor d = parse_descriptor(text);
            auto rep = verify(d, vc);
            row["fired_case"] = rep.fired_case;
            row["predicted"] = rep.predicted.to_string();
            row["computed"] = rep.computed.to_string();
            row["match"] = rep.match;
            row["confirmed_by"] = rep.confirmed_by;
            os << text << "\n  case " << rep.fired_case << "\n  predicted: " << rep.predicted.to_string()
               << "\n  computed:  " << rep.computed.to_string() << "\n  match: " << (rep.match ? "yes" : "no");
            if (!rep.variants.empty()) {
                os << ", confirmed by: ";
                if (rep.confirmed_by.empty()) os << "none";
                for (std::size_t i = 0; i < rep.confirmed_by.size(); ++i) os << (i ? ", " : "") << rep.confirmed_by[i];
            }
            os << "\n";
        } catch (const Error& e) {
            row["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
            os << text << "\n  error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        }
        rows.push_back(row);
    }
    Json j;
    j["table"] = n;
    j["rows"] = rows;
    emit(j, os.str(), cfg);
    return 0;
}

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::string s((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discriminant curves of plane branches"};
    Config cfg;
    app.add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64, 1 << 16));
    app.add_option("--trunc-order", cfg.trunc, "truncation order p/q, or auto");
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "seed for free coefficients");
    app.require_subcommand(1);

    std::string input;
    int table_no = 0;
    auto* analyze = app.add_subcommand("analyze", "branch invariants of a curve");
    auto* disc = app.add_subcommand("discriminant", "discriminant curve of (x, f)");
    auto* cls = app.add_subcommand("classify", "predicted discriminant type of a descriptor");
    auto* ver = app.add_subcommand("verify", "compare prediction and computation");
    auto* tab = app.add_subcommand("table", "regenerate a table of sampled rows");
    for (auto* s : {analyze, disc, cls, ver}) s->add_option("input", input, "curve or descriptor (stdin if omitted)");
    tab->add_option("n", table_no, "table number 1..10")->required();
    for (auto* s : {analyze, disc, cls, ver, tab}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors map to the generic failure code
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(read_input(input), cfg);
        if (*disc) return cmd_discriminant(read_input(input), cfg);
        if (*cls) return cmd_classify(read_input(input), cfg);
        if (*ver) return cmd_verify(read_input(input), cfg);
        if (*tab) return cmd_table(table_no, cfg);
    } catch (const Error& e) {
        Json err;
        err["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
        if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["error"]["position"] = pe->position();
        if (cfg.format == "json") std::cout << err.dump(2) << "\n";
        else std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return error_exit_code(e.kind());
    } catch (const std::exception& e) {
        Json err;
        err["error"] = {{"kind", "internal-error"}, {"message", e.what()}};
        if (cfg.format == "json") std::cout << err.dump(2) << "\n";
        else std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
