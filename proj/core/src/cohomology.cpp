#include "nodal/cohomology.hpp"

#include "bundled_data.hpp"
#include "nodal/errors.hpp"

#include <json.hpp>

#include <cctype>

namespace nodal {

using json = nlohmann::json;

bool CurveClass::is_zero() const {
    for (long c : coeffs)
        if (c != 0) return false;
    return true;
}

CurveClass CurveClass::operator+(const CurveClass& other) const {
    if (coeffs.size() != other.coeffs.size()) throw InvalidInput("adding curve classes from different monoids");
    CurveClass out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    return out;
}

CurveClass ClassMonoid::parse(std::string_view text) const {
    CurveClass c = zero();
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty curve class");
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw InvalidInput("malformed curve class \"" + std::string(text) + "\"");
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        long coef = digits ? std::stol(term.substr(0, digits)) : 1;
        std::string label = term.substr(digits);
        std::size_t g = 0;
        if (label.empty()) {
            if (generators.empty()) throw InvalidInput("monoid has no generators");
        } else {
            while (g < generators.size() && generators[g] != label) ++g;
            if (g == generators.size())
                throw InvalidInput("unknown curve class generator \"" + label + "\" in " + name);
        }
        c.coeffs[g] += coef;
        pos = end + 1;
    }
    return c;
}

std::string ClassMonoid::format(const CurveClass& c) const {
    if (generators.size() == 1) return std::to_string(c.coeffs.at(0));
    std::string out;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (c.coeffs[g] == 0) continue;
        if (!out.empty()) out += "+";
        if (c.coeffs[g] != 1) out += std::to_string(c.coeffs[g]);
        out += generators[g];
    }
    return out.empty() ? "0" : out;
}

CohRing CohRing::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidModel(std::string("ring model is not valid JSON: ") + e.what());
    }
    CohRing r;
    try {
        r.name_ = j.value("name", std::string("ring"));
        for (const auto& b : j.at("basis")) r.basis_.push_back({b.at("label").get<std::string>(), b.at("degree").get<int>()});
        const std::size_t n = r.basis_.size();
        if (n == 0) throw InvalidModel("ring model has an empty basis");
        const auto& pj = j.at("pairing");
        if (pj.size() != n) throw InvalidModel("pairing matrix has the wrong size");
        r.pairing_ = Matrix(n, n);
        for (std::size_t a = 0; a < n; ++a) {
            if (pj[a].size() != n) throw InvalidModel("pairing matrix has the wrong size");
            for (std::size_t b = 0; b < n; ++b) r.pairing_(a, b) = parse_rational(pj[a][b].get<std::string>());
        }
        r.euler_ = j.value("euler_characteristic", 0);
        for (const auto& b : r.basis_) r.top_degree_ = std::max(r.top_degree_, b.degree);

        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (r.pairing_(a, b) != 0 && r.basis_[a].degree + r.basis_[b].degree != r.top_degree_)
                    throw InvalidModel("pairing of " + r.basis_[a].label + " and " + r.basis_[b].label +
                                       " violates degree complementarity");
        try {
            r.dual_ = inverse(r.pairing_);
        } catch (const InvalidModel&) {
            throw InvalidModel("pairing of ring " + r.name_ + " is degenerate");
        }

        if (j.contains("curve_classes")) {
            const auto& cc = j.at("curve_classes");
            r.monoid_.name = r.name_;
            for (const auto& g : cc.at("generators")) r.monoid_.generators.push_back(g.get<std::string>());
            for (const auto& g : r.monoid_.generators)
                r.generator_divisors_.push_back(r.basis_vector(cc.at("divisor_of").at(g).get<std::string>()));
            const auto& in = j.at("intersections");
            r.intersections_.assign(r.monoid_.generators.size(), std::vector<Rational>(n));
            for (auto it = in.begin(); it != in.end(); ++it) {
                std::size_t d = r.index_of(it.key());
                if (r.basis_[d].degree != 2) throw InvalidModel("intersection data for a non-divisor class " + it.key());
                for (auto gt = it.value().begin(); gt != it.value().end(); ++gt) {
                    std::size_t g = 0;
                    while (g < r.monoid_.generators.size() && r.monoid_.generators[g] != gt.key()) ++g;
                    if (g == r.monoid_.generators.size()) throw InvalidModel("unknown curve generator " + gt.key());
                    r.intersections_[g][d] = parse_rational(gt.value().get<std::string>());
                }
            }
            r.canonical_ = ClassVector(n);
            if (j.contains("canonical"))
                for (auto it = j.at("canonical").begin(); it != j.at("canonical").end(); ++it)
                    r.canonical_[r.index_of(it.key())] = parse_rational(it.value().get<std::string>());
        }
    } catch (const json::exception& e) {
        throw InvalidModel(std::string("ring model does not match the schema: ") + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidModel(std::string("ring model: ") + e.what());
    }
    return r;
}

CohRing CohRing::projective_plane() { return from_json(bundled::p2_model()); }
CohRing CohRing::hirzebruch_f1() { return from_json(bundled::f1_model()); }
CohRing CohRing::elliptic_curve() { return from_json(bundled::elliptic_model()); }
CohRing CohRing::point() { return from_json(bundled::point_model()); }
CohRing CohRing::projective_line() { return from_json(bundled::line_model()); }

std::size_t CohRing::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    throw InvalidInput("class \"" + std::string(label) + "\" not in the basis of " + name_);
}

ClassVector CohRing::basis_vector(std::string_view label) const {
    ClassVector v(basis_.size());
    v[index_of(label)] = 1;
    return v;
}

std::string CohRing::describe(const ClassVector& c) const {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (c[i] < 0) out += "-";
        else if (!out.empty()) out += "+";
        Rational a = abs(c[i]);
        if (a != 1) out += to_string(a) + "*";
        out += basis_[i].label;
    }
    return out.empty() ? "0" : out;
}

int CohRing::degree_of(const ClassVector& c) const {
    if (c.size() != basis_.size()) throw InvalidInput("class vector has the wrong length");
    int deg = -1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (deg >= 0 && deg != basis_[i].degree) throw InvalidInput("class is not homogeneous");
        deg = basis_[i].degree;
    }
    return deg;
}

Rational CohRing::pair(const ClassVector& a, const ClassVector& b) const {
    return dot(a, multiply(pairing_, b));
}

Rational CohRing::divisor_degree(const CurveClass& beta, const ClassVector& divisor) const {
    if (!has_curve_classes()) throw InvalidModel("ring " + name_ + " carries no curve classes");
    if (beta.coeffs.size() != monoid_.generators.size()) throw InvalidInput("curve class from another monoid");
    int deg = degree_of(divisor);
    if (deg != 2 && deg != -1) throw InvalidInput("divisor_degree needs a degree-2 class");
    Rational acc = 0;
    for (std::size_t g = 0; g < beta.coeffs.size(); ++g)
        if (beta.coeffs[g] != 0) acc += Rational(beta.coeffs[g]) * dot(intersections_[g], divisor);
    return acc;
}

ClassVector CohRing::divisor_of(const CurveClass& beta) const {
    ClassVector out(basis_.size());
    for (std::size_t g = 0; g < beta.coeffs.size(); ++g)
        out = add(out, scale(generator_divisors_[g], Rational(beta.coeffs[g])));
    return out;
}

Rational CohRing::self_intersection(const CurveClass& beta) const {
    return divisor_degree(beta, divisor_of(beta));
}

Rational CohRing::canonical_degree(const CurveClass& beta) const {
    return divisor_degree(beta, canonical_);
}

Rational CohRing::linear_system_dimension(const CurveClass& beta) const {
    return (self_intersection(beta) - canonical_degree(beta)) / 2;
}

std::vector<KunnethTerm> kunneth_diagonal(const CohRing& ring) {
    std::vector<KunnethTerm> out;
    for (std::size_t j = 0; j < ring.size(); ++j) {
        ClassVector e(ring.size());
        e[j] = 1;
        out.push_back({j, e, ring.dual(j)});
    }
    return out;
}

InsertionList InsertionList::of_labels(const CohRing& ring, const std::vector<std::string>& labels,
                                       const CurveClass& beta, int genus, int nodes) {
    InsertionList l{{}, beta, genus, nodes};
    for (const auto& s : labels) l.insertions.push_back({ring.basis_vector(s), 0});
    return l;
}

std::vector<WeightedTerm> split_node(const InsertionList& parent, const CohRing& ring) {
    if (parent.nodes < 1) throw InvalidInput("split_node needs a term with a designated node");
    std::vector<WeightedTerm> out;
    for (const auto& k : kunneth_diagonal(ring)) {
        InsertionList child = parent;
        child.nodes -= 1;
        child.insertions.push_back({k.left, 0});
        child.insertions.push_back({k.right, 0});
        out.push_back({Rational(1), std::move(child)});
    }
    return out;
}

DivisorReduction divisor_reduce(const InsertionList& term, std::size_t position, const CohRing& ring) {
    if (position >= term.insertions.size()) throw InvalidInput("divisor_reduce: no insertion at that position");
    const auto& ins = term.insertions[position];
    if (ins.psi != 0) throw Unsupported("divisor equation with a psi-class at the removed insertion");
    if (ring.degree_of(ins.cls) != 2) throw InvalidInput("divisor_reduce needs a degree-2 insertion");
    DivisorReduction r{ring.divisor_degree(term.beta, ins.cls), term};
    r.reduced.insertions.erase(r.reduced.insertions.begin() + static_cast<std::ptrdiff_t>(position));
    return r;
}

int reorder_sign(const std::vector<int>& degrees, const std::vector<std::size_t>& order) {
    if (order.size() != degrees.size()) throw InvalidInput("reorder_sign: size mismatch");
    int sign = 1;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b] && degrees[order[a]] % 2 != 0 && degrees[order[b]] % 2 != 0) sign = -sign;
    return sign;
}

}
