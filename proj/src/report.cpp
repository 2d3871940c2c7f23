#include "polardisc/report.hpp"

#include <sstream>

namespace polardisc {

Json to_json(const CharExponents& c) { return Json(c.beta); }

Json to_json(const Semigroup& s) {
    Json j;
    j["generators"] = s.generators;
    j["conductor"] = s.conductor;
    j["gaps_above_s1"] = s.gaps_above_s1;
    return j;
}

Json to_json(const EquisingularityType& t) {
    Json j;
    j["branches"] = Json::array();
    for (const auto& b : t.branches) {
        Json e;
        e["char"] = b.chr.beta;
        e["mult"] = b.multiplicity;
        j["branches"].push_back(e);
    }
    j["intersections"] = t.intersections;
    j["text"] = t.to_string();
    return j;
}

Json to_json(const NewtonPolygon& p) {
    Json j = Json::array();
    for (const auto& v : p.vertices) j.push_back({v.i, v.j});
    return j;
}

std::string polygon_to_string(const NewtonPolygon& p) {
    std::ostringstream os;
    for (std::size_t k = 0; k < p.vertices.size(); ++k)
        os << (k ? "," : "") << "(" << p.vertices[k].i << "," << p.vertices[k].j << ")";
    return p.vertices.empty() ? "(empty)" : os.str();
}

Json to_json(const Classification& c) {
    Json j;
    j["fired_case"] = c.fired_case;
    j["predicted"] = to_json(c.predicted);
    if (!c.variants.empty()) {
        Json v;
        for (const auto& [name, t] : c.variants) v[name] = to_json(t);
        j["variants"] = v;
    }
    j["notes"] = c.notes;
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["descriptor"] = Json::parse(r.descriptor.to_json_string());
    j["fired_case"] = r.fired_case;
    j["curve"] = r.curve;
    if (r.parametrization) j["parametrization"] = *r.parametrization;
    j["branch"] = {{"char", r.branch_char.beta},
                   {"semigroup", to_json(semigroup_from_char(r.branch_char))},
                   {"milnor", r.milnor}};
    if (r.tjurina) {
        j["branch"]["tjurina"] = *r.tjurina;
        j["branch"]["mu_minus_tau"] = r.milnor - *r.tjurina;
    }
    if (r.zariski_lambda) j["branch"]["zariski_lambda"] = *r.zariski_lambda;
    j["discriminant"] = r.discriminant.to_string();
    j["predicted"] = to_json(r.predicted);
    j["computed"] = to_json(r.computed);
    j["match"] = r.match;
    if (!r.variants.empty()) {
        Json v;
        for (const auto& [name, t] : r.variants) v[name] = to_json(t);
        j["variants"] = v;
    }
    j["confirmed_by"] = r.confirmed_by;
    j["checks"] = {{"nondegenerate", r.nondegenerate},
                   {"nondegeneracy_law", r.nondegeneracy_law},
                   {"polygon", to_json(r.polygon_of_D)},
                   {"merle_polygon", to_json(r.merle)},
                   {"merle_match", r.merle_match}};
    Json d = Json::array();
    for (const auto& x : r.discrepancies) d.push_back({{"id", x.id}, {"description", x.description}});
    j["discrepancies"] = d;
    j["notes"] = r.notes;
    return j;
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "descriptor:   " << r.descriptor.to_json_string() << "\n";
    if (r.parametrization) os << "normal form:  " << *r.parametrization << "\n";
    os << "curve:        " << r.curve << "\n";
    os << "branch:       char " << r.branch_char.to_string() << ", S = "
       << semigroup_from_char(r.branch_char).to_string() << ", mu = " << r.milnor;
    if (r.tjurina) os << ", tau = " << *r.tjurina;
    if (r.zariski_lambda) os << ", lambda = " << *r.zariski_lambda;
    os << "\n";
    os << "D(u,v):       " << r.discriminant.to_string() << "\n";
    os << "fired case:   " << r.fired_case << "\n";
    os << "predicted:    " << r.predicted.to_string() << "\n";
    os << "computed:     " << r.computed.to_string() << "\n";
    os << "match:        " << (r.match ? "yes" : "no") << "\n";
    for (const auto& [name, t] : r.variants) os << "  " << name << ": " << t.to_string() << "\n";
    if (!r.variants.empty()) {
        os << "confirmed by: ";
        if (r.confirmed_by.empty()) os << "none";
        for (std::size_t i = 0; i < r.confirmed_by.size(); ++i) os << (i ? ", " : "") << r.confirmed_by[i];
        os << "\n";
    }
    os << "polygon(D):   " << polygon_to_string(r.polygon_of_D) << "  merle: " << polygon_to_string(r.merle)
       << (r.merle_match ? "  (equal)" : "  (differ)") << "\n";
    os << "degenerate:   " << (r.nondegenerate ? "no" : "yes")
       << (r.nondegeneracy_law ? "" : "  (violates the n = 2 or (4, g = 2) rule)") << "\n";
    for (const auto& d : r.discrepancies) os << "discrepancy:  [" << d.id << "] " << d.description << "\n";
    for (const auto& n : r.notes) os << "note:         " << n << "\n";
    return os.str();
}

}  // namespace polardisc
