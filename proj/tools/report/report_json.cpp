#include "report_json.hpp"

#include "nodal/errors.hpp"

namespace nodal::report {

Json rational(const Rational& q) {
    return to_string(q);
}

Json vector(const Vector& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(rational(q));
    return a;
}

Json matrix(const Matrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector(m.row(i)));
    return a;
}

Json partition(const Partition& p) {
    return p.parts();
}

Json pairing(const Pairing& p) {
    Json a = Json::array();
    for (auto [x, y] : p.pairs()) a.push_back({x, y});
    return a;
}

Json tensor(const DenseTensor& t) {
    Json entries = Json::array();
    for (std::size_t off = 0; off < t.coeffs.size(); ++off)
        if (t.coeffs[off] != 0) entries.push_back({{"index", t.multi_index(off)}, {"value", rational(t.coeffs[off])}});
    return {{"dim", t.dim}, {"order", t.order}, {"nonzero", entries}};
}

Json graph(const StableGraph& g) {
    Json vs = Json::array(), es = Json::array(), ls = Json::array();
    for (const auto& v : g.vertices) vs.push_back({{"genus", v.genus}, {"class", g.monoid.format(v.cls)}});
    for (const auto& e : g.edges) es.push_back({e.u, e.w});
    for (const auto& l : g.legs) {
        Json leg = {{"marking", l.marking}, {"vertex", l.vertex}, {"kind", l.kind == LegKind::Interior ? "interior" : "relative"}};
        if (l.kind == LegKind::Relative) leg["multiplicity"] = l.multiplicity;
        ls.push_back(leg);
    }
    return {{"monoid", g.monoid.name}, {"vertices", vs}, {"edges", es}, {"legs", ls}};
}

Json splitting(const Splitting& s) {
    Json places = Json::array();
    for (const auto& p : s.placements) {
        Json one = Json::array();
        for (const auto& e : p) one.push_back({{"side", e.side}, {"u", e.u}, {"w", e.w}});
        places.push_back(one);
    }
    return {{"label", s.label},       {"panel", s.panel}, {"ell", s.ell},
            {"m", to_string(s.m)},    {"aut", s.aut},     {"gamma1", graph(s.gamma1)},
            {"gamma2", graph(s.gamma2)}, {"placements", places}, {"caveat", s.caveat}};
}

Json contribution(const Contribution& c) {
    Json fs = Json::array();
    for (const auto& f : c.factors) fs.push_back({{"name", f.name}, {"value", rational(f.value)}, {"source", f.source}});
    return {{"case", c.case_id},
            {"splitting", c.splitting},
            {"panel", c.panel},
            {"value", rational(c.value)},
            {"factors", fs},
            {"divisor_subfactors", vector(c.divisor_subfactors)},
            {"notes", c.notes},
            {"cross_check", rational(c.cross_check)}};
}

Json case_report(const CaseReport& r) {
    Json cs = Json::array();
    for (const auto& c : r.contributions) cs.push_back(contribution(c));
    Json lf = Json::array();
    for (const auto& f : r.lhs_factors) lf.push_back({{"name", f.name}, {"value", rational(f.value)}, {"source", f.source}});
    return {{"lhs", rational(r.lhs)},
            {"lhs_trail", lf},
            {"contributions", cs},
            {"rhs_total", rational(r.rhs_total)},
            {"cross_check_total", rational(r.cross_check_total)},
            {"agreement", r.agreement}};
}

Json elliptic(const EllipticReport& r) {
    return {{"u1", rational(r.u1)},
            {"v1", rational(r.v1)},
            {"u2", rational(r.u2)},
            {"v2", rational(r.v2)},
            {"coefficient", rational(r.determinant)},
            {"invariant", "<a,b>"},
            {"invariant_form", matrix(r.invariant_form)},
            {"relations", r.relations},
            {"diagonal", r.diagonal_terms},
            {"nodal_coefficient", rational(r.nodal_coefficient)},
            {"trade_sign", r.trade_sign},
            {"nodal_input", rational(r.nodal_input)},
            {"recovered_ab", rational(r.recovered)}};
}

Rational parse_rational_value(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("rational values must be strings \"p/q\" or integers");
}

StableGraph parse_graph(const nlohmann::json& j) {
    StableGraph g;
    try {
        g.monoid.name = j.value("monoid", std::string("W"));
        g.monoid.generators = j.value("generators", std::vector<std::string>{"L"});
        for (const auto& v : j.at("vertices")) {
            std::string cls = v.at("class").is_string() ? v.at("class").get<std::string>() : std::to_string(v.at("class").get<long>());
            g.vertices.push_back({v.at("genus").get<int>(), g.monoid.parse(cls)});
        }
        for (const auto& e : j.value("edges", nlohmann::json::array())) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
        for (const auto& l : j.value("legs", nlohmann::json::array())) {
            Leg leg;
            leg.marking = l.at("marking").get<int>();
            leg.vertex = l.at("vertex").get<int>();
            leg.kind = l.value("kind", std::string("interior")) == "relative" ? LegKind::Relative : LegKind::Interior;
            leg.multiplicity = l.value("multiplicity", leg.kind == LegKind::Relative ? 1 : 0);
            g.legs.push_back(leg);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("graph JSON does not match the schema: ") + e.what());
    }
    g.validate();
    return g;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

}
