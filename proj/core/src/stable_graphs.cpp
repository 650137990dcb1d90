#include "nodal/stable_graphs.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nodal {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Collapses the given edge subset; the remaining edges are re-anchored.
StableGraph collapse(const StableGraph& g, const std::vector<Edge>& collapsed, const std::vector<Edge>& kept) {
    const std::size_t nv = g.vertices.size();
    UnionFind uf(nv);
    for (const auto& e : collapsed) uf.unite(e.u, e.w);
    std::map<int, int> comp_index;
    for (std::size_t v = 0; v < nv; ++v) {
        int r = uf.find(static_cast<int>(v));
        if (!comp_index.count(r)) comp_index.emplace(r, static_cast<int>(comp_index.size()));
    }
    StableGraph out;
    out.monoid = g.monoid;
    out.vertices.assign(comp_index.size(), Vertex{0, g.monoid.zero()});
    std::vector<int> vcount(comp_index.size(), 0), ecount(comp_index.size(), 0);
    for (std::size_t v = 0; v < nv; ++v) {
        int c = comp_index[uf.find(static_cast<int>(v))];
        out.vertices[static_cast<std::size_t>(c)].genus += g.vertices[v].genus;
        out.vertices[static_cast<std::size_t>(c)].cls = out.vertices[static_cast<std::size_t>(c)].cls + g.vertices[v].cls;
        ++vcount[static_cast<std::size_t>(c)];
    }
    for (const auto& e : collapsed) ++ecount[static_cast<std::size_t>(comp_index[uf.find(e.u)])];
    for (std::size_t c = 0; c < out.vertices.size(); ++c) out.vertices[c].genus += ecount[c] - vcount[c] + 1;
    for (const auto& e : kept) out.edges.push_back({comp_index[uf.find(e.u)], comp_index[uf.find(e.w)]});
    for (auto leg : g.legs) {
        leg.vertex = comp_index[uf.find(leg.vertex)];
        out.legs.push_back(leg);
    }
    return out;
}

Edge normalized(const Edge& e) {
    return {std::min(e.u, e.w), std::max(e.u, e.w)};
}

std::vector<std::pair<int, int>> mapped_edges(const std::vector<Edge>& edges, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : edges) {
        Edge m = normalized({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.w)]});
        out.emplace_back(m.u, m.w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Interior markings per vertex, sorted.
std::vector<std::vector<int>> interior_sets(const StableGraph& g) {
    std::vector<std::vector<int>> out(g.vertices.size());
    for (const auto& l : g.legs)
        if (l.kind == LegKind::Interior) out[static_cast<std::size_t>(l.vertex)].push_back(l.marking);
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
}

std::vector<std::vector<int>> all_permutations(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Vertex permutations preserving genus, class and interior legs.
std::vector<std::vector<int>> decoration_preserving(const StableGraph& g) {
    auto legs = interior_sets(g);
    std::vector<std::vector<int>> out;
    for (const auto& p : all_permutations(g.vertices.size())) {
        bool ok = true;
        for (std::size_t v = 0; v < p.size() && ok; ++v) {
            const auto& a = g.vertices[v];
            const auto& b = g.vertices[static_cast<std::size_t>(p[v])];
            ok = a.genus == b.genus && a.cls == b.cls && legs[v] == legs[static_cast<std::size_t>(p[v])];
        }
        if (ok) {
            std::vector<int> id(p.size());
            std::iota(id.begin(), id.end(), 0);
            if (mapped_edges(g.edges, p) != mapped_edges(g.edges, id)) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

}

int StableGraph::valence(int v) const {
    int n = 0;
    for (const auto& l : legs)
        if (l.vertex == v) ++n;
    for (const auto& e : edges) n += (e.u == v) + (e.w == v);
    return n;
}

std::size_t StableGraph::component_count() const {
    UnionFind uf(vertices.size());
    for (const auto& e : edges) uf.unite(e.u, e.w);
    std::set<int> roots;
    for (std::size_t v = 0; v < vertices.size(); ++v) roots.insert(uf.find(static_cast<int>(v)));
    return roots.size();
}

int StableGraph::first_betti() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + static_cast<int>(component_count());
}

void StableGraph::validate() const {
    const int nv = static_cast<int>(vertices.size());
    for (const auto& v : vertices) {
        if (v.genus < 0) throw InvalidInput("negative vertex genus");
        if (v.cls.coeffs.size() != monoid.generators.size()) throw InvalidInput("vertex class does not belong to monoid " + monoid.name);
        for (long c : v.cls.coeffs)
            if (c < 0) throw InvalidInput("vertex class is not effective");
    }
    for (const auto& e : edges)
        if (e.u < 0 || e.u >= nv || e.w < 0 || e.w >= nv) throw InvalidInput("edge anchored at a missing vertex");
    std::set<std::pair<int, int>> seen;
    for (const auto& l : legs) {
        if (l.vertex < 0 || l.vertex >= nv) throw InvalidInput("leg anchored at a missing vertex");
        if (l.kind == LegKind::Relative && l.multiplicity < 1) throw InvalidInput("relative leg needs a positive multiplicity");
        if (!seen.insert({static_cast<int>(l.kind), l.marking}).second)
            throw InvalidInput("duplicate leg marking " + std::to_string(l.marking));
    }
    for (int v = 0; v < nv; ++v)
        if (vertices[static_cast<std::size_t>(v)].cls.is_zero() && 2 * vertices[static_cast<std::size_t>(v)].genus - 2 + valence(v) <= 0)
            throw InvalidInput("vertex " + std::to_string(v) + " of class 0 is unstable");
}

StableGraph contract_edges(const StableGraph& g) {
    return collapse(g, g.edges, {});
}

bool isomorphic(const StableGraph& a, const StableGraph& b) {
    if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size() || a.legs.size() != b.legs.size() ||
        a.monoid.generators != b.monoid.generators)
        return false;
    auto legs_of = [](const StableGraph& g, const std::vector<int>& perm) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& l : g.legs)
            out.emplace_back(static_cast<int>(l.kind), l.marking, l.multiplicity, perm[static_cast<std::size_t>(l.vertex)]);
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<int> id(b.vertices.size());
    std::iota(id.begin(), id.end(), 0);
    auto b_edges = mapped_edges(b.edges, id);
    auto b_legs = legs_of(b, id);
    for (const auto& p : all_permutations(a.vertices.size())) {
        bool ok = true;
        for (std::size_t v = 0; v < p.size() && ok; ++v) {
            const auto& x = a.vertices[v];
            const auto& y = b.vertices[static_cast<std::size_t>(p[v])];
            ok = x.genus == y.genus && x.cls == y.cls;
        }
        if (ok && mapped_edges(a.edges, p) == b_edges && legs_of(a, p) == b_legs) return true;
    }
    return false;
}

Rational branch_factor(const Edge& e) {
    return e.u == e.w ? Rational(1, 2) : Rational(1);
}

CurveClass DegenerationSide::push(const CurveClass& c) const {
    if (c.coeffs.size() != pushforward.size()) throw InvalidInput("class does not belong to side " + name);
    CurveClass out;
    for (std::size_t g = 0; g < pushforward.size(); ++g) {
        CurveClass term = pushforward[g];
        for (auto& x : term.coeffs) x *= c.coeffs[g];
        out = out.coeffs.empty() ? term : out + term;
    }
    return out;
}

long DegenerationSide::contact(const CurveClass& c) const {
    long d = 0;
    for (std::size_t g = 0; g < contact_degree.size(); ++g) d += c.coeffs.at(g) * contact_degree[g];
    return d;
}

StableGraph Splitting::side_graph(int side, std::size_t placement) const {
    StableGraph g = side == 1 ? gamma1 : gamma2;
    g.edges.clear();
    for (const auto& e : placements.at(placement))
        if (e.side == side) g.edges.push_back({e.u, e.w});
    return g;
}

StableGraph glue(const StableGraph& gamma1, const StableGraph& gamma2, const SplitScenario& scenario,
                 const ClassMonoid& parent_monoid) {
    StableGraph joined;
    joined.monoid = parent_monoid;
    for (const auto& v : gamma1.vertices) joined.vertices.push_back({v.genus, scenario.side1.push(v.cls)});
    const int offset = static_cast<int>(gamma1.vertices.size());
    for (const auto& v : gamma2.vertices) joined.vertices.push_back({v.genus, scenario.side2.push(v.cls)});
    std::vector<Edge> kept = gamma1.edges;
    for (const auto& e : gamma2.edges) kept.push_back({e.u + offset, e.w + offset});

    std::map<int, const Leg*> rel1, rel2;
    for (const auto& l : gamma1.legs) {
        if (l.kind == LegKind::Relative) rel1[l.marking] = &l;
        else joined.legs.push_back(l);
    }
    for (const auto& l : gamma2.legs) {
        if (l.kind == LegKind::Relative) {
            rel2[l.marking] = &l;
        } else {
            Leg m = l;
            m.vertex += offset;
            joined.legs.push_back(m);
        }
    }
    if (rel1.size() != rel2.size()) throw InvalidInput("relative legs do not match between the two sides");
    std::vector<Edge> glued;
    for (const auto& [mark, l1] : rel1) {
        auto it = rel2.find(mark);
        if (it == rel2.end() || it->second->multiplicity != l1->multiplicity)
            throw InvalidInput("relative leg " + std::to_string(mark) + " does not match across sides");
        glued.push_back({l1->vertex, it->second->vertex + offset});
    }
    return collapse(joined, glued, kept);
}

int relative_automorphisms(const StableGraph& gamma1, const StableGraph& gamma2) {
    std::vector<const Leg*> r1, r2;
    for (const auto& l : gamma1.legs)
        if (l.kind == LegKind::Relative) r1.push_back(&l);
    for (const auto& l : gamma2.legs)
        if (l.kind == LegKind::Relative) r2.push_back(&l);
    auto by_mark = [](const Leg* a, const Leg* b) { return a->marking < b->marking; };
    std::sort(r1.begin(), r1.end(), by_mark);
    std::sort(r2.begin(), r2.end(), by_mark);
    if (r1.size() != r2.size()) throw InvalidInput("relative legs do not match between the two sides");
    const std::size_t ell = r1.size();

    auto sym1 = decoration_preserving(gamma1);
    auto sym2 = decoration_preserving(gamma2);
    int count = 0;
    for (const auto& pi : all_permutations(ell)) {
        bool found = false;
        for (const auto& p1 : sym1) {
            for (const auto& p2 : sym2) {
                bool ok = true;
                for (std::size_t i = 0; i < ell && ok; ++i) {
                    const Leg* src1 = r1[i];
                    const Leg* dst1 = r1[static_cast<std::size_t>(pi[i])];
                    const Leg* src2 = r2[i];
                    const Leg* dst2 = r2[static_cast<std::size_t>(pi[i])];
                    ok = p1[static_cast<std::size_t>(src1->vertex)] == dst1->vertex &&
                         p2[static_cast<std::size_t>(src2->vertex)] == dst2->vertex &&
                         src1->multiplicity == dst1->multiplicity;
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) ++count;
    }
    return count;
}

namespace {

std::vector<EdgePlacement> placement_candidates(std::size_t n1, std::size_t n2) {
    std::vector<EdgePlacement> out;
    for (int side : {1, 2}) {
        int n = static_cast<int>(side == 1 ? n1 : n2);
        for (int u = 0; u < n; ++u)
            for (int w = u; w < n; ++w) out.push_back({side, u, w});
    }
    return out;
}

std::string panel_name(const Placement& p) {
    std::string s;
    for (std::size_t e = 0; e < p.size(); ++e) {
        if (e) s += ";";
        s += "side" + std::to_string(p[e].side) + (p[e].is_loop() ? "-loop" : "-bridge");
    }
    return s;
}

StableGraph side_base(const std::vector<SideVertex>& verts, const DegenerationSide& side,
                      const std::vector<Contact>& contacts, int which) {
    StableGraph g;
    g.monoid = side.monoid;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        g.vertices.push_back({verts[v].genus, side.monoid.parse(verts[v].cls)});
        for (int mark : verts[v].legs) g.legs.push_back({mark, static_cast<int>(v), LegKind::Interior, 0});
    }
    for (std::size_t i = 0; i < contacts.size(); ++i) {
        int v = which == 1 ? contacts[i].side1_vertex : contacts[i].side2_vertex;
        if (v < 0 || v >= static_cast<int>(verts.size())) throw InvalidInput("contact anchored at a missing vertex");
        g.legs.push_back({static_cast<int>(i) + 1, v, LegKind::Relative, contacts[i].multiplicity});
    }
    return g;
}

void check_contact_degrees(const StableGraph& g, const DegenerationSide& side, const std::string& label) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        long total = 0;
        for (const auto& l : g.legs)
            if (l.kind == LegKind::Relative && l.vertex == static_cast<int>(v)) total += l.multiplicity;
        if (total != side.contact(g.vertices[v].cls))
            throw InvalidInput("decomposition " + label + ": contact orders at a vertex of side " + side.name +
                               " do not add up to its intersection with the divisor");
    }
}

Decomposition merge(const std::vector<Decomposition>& parts) {
    Decomposition out;
    for (const auto& d : parts) {
        int o1 = static_cast<int>(out.side1.size());
        int o2 = static_cast<int>(out.side2.size());
        out.label += (out.label.empty() ? "" : "|") + d.label;
        out.side1.insert(out.side1.end(), d.side1.begin(), d.side1.end());
        out.side2.insert(out.side2.end(), d.side2.begin(), d.side2.end());
        for (auto c : d.contacts) out.contacts.push_back({c.side1_vertex + o1, c.side2_vertex + o2, c.multiplicity});
    }
    return out;
}

}

std::vector<Splitting> enumerate_splittings(const StableGraph& parent, const SplitScenario& scenario) {
    parent.validate();
    if (!scenario.splitter) throw InvalidInput("no class splitter supplied");

    std::vector<std::vector<Decomposition>> per_vertex;
    for (std::size_t v = 0; v < parent.vertices.size(); ++v)
        per_vertex.push_back(scenario.splitter(parent, static_cast<int>(v)));

    std::vector<int> parent_marks;
    for (const auto& l : parent.legs)
        if (l.kind == LegKind::Interior) parent_marks.push_back(l.marking);
    std::sort(parent_marks.begin(), parent_marks.end());

    std::vector<Splitting> out;
    std::vector<std::size_t> choice(per_vertex.size(), 0);
    for (const auto& options : per_vertex)
        if (options.empty()) return out;

    while (true) {
        std::vector<Decomposition> parts;
        for (std::size_t v = 0; v < per_vertex.size(); ++v) parts.push_back(per_vertex[v][choice[v]]);
        Decomposition d = merge(parts);

        if (static_cast<int>(d.side1.size()) > scenario.shape_bound || static_cast<int>(d.side2.size()) > scenario.shape_bound)
            throw ResourceLimit("shape bound " + std::to_string(scenario.shape_bound) +
                                " exceeded; frontier at decomposition " + d.label);

        std::vector<int> marks;
        for (const auto* side : {&d.side1, &d.side2})
            for (const auto& sv : *side) marks.insert(marks.end(), sv.legs.begin(), sv.legs.end());
        std::sort(marks.begin(), marks.end());
        if (marks != parent_marks) throw InvalidInput("decomposition " + d.label + " does not distribute the parent legs exactly");

        StableGraph base1 = side_base(d.side1, scenario.side1, d.contacts, 1);
        StableGraph base2 = side_base(d.side2, scenario.side2, d.contacts, 2);
        check_contact_degrees(base1, scenario.side1, d.label);
        check_contact_degrees(base2, scenario.side2, d.label);

        auto candidates = placement_candidates(base1.vertices.size(), base2.vertices.size());
        const std::size_t ne = parent.edges.size();
        std::vector<std::size_t> pick(ne, 0);
        const std::size_t first_index = out.size();
        while (true) {
            Placement place;
            for (std::size_t e = 0; e < ne; ++e) place.push_back(candidates[pick[e]]);
            StableGraph g1 = base1, g2 = base2;
            for (const auto& e : place) (e.side == 1 ? g1 : g2).edges.push_back({e.u, e.w});
            bool stable = true;
            try {
                g1.validate();
                g2.validate();
            } catch (const InvalidInput&) {
                stable = false;
            }
            if (stable && isomorphic(glue(g1, g2, scenario, parent.monoid), parent)) {
                std::string panel = panel_name(place);
                auto it = std::find_if(out.begin() + static_cast<std::ptrdiff_t>(first_index), out.end(),
                                       [&](const Splitting& s) { return s.panel == panel; });
                if (it == out.end()) {
                    Splitting s;
                    s.label = d.label;
                    s.panel = panel;
                    s.gamma1 = g1;
                    s.gamma2 = g2;
                    s.placements.push_back(place);
                    s.ell = static_cast<int>(d.contacts.size());
                    for (const auto& c : d.contacts) s.m *= c.multiplicity;
                    s.aut = relative_automorphisms(g1, g2);
                    s.caveat = "sum over classes of the two sides with the given pushforward; single term here";
                    out.push_back(std::move(s));
                } else {
                    it->placements.push_back(place);
                }
            }
            std::size_t e = 0;
            while (e < ne && ++pick[e] == candidates.size()) pick[e++] = 0;
            if (e == ne) break;
        }

        std::size_t v = 0;
        while (v < choice.size() && ++choice[v] == per_vertex[v].size()) choice[v++] = 0;
        if (v == choice.size()) break;
    }
    return out;
}

std::string RelativeQuery::key() const {
    std::string s = (splitting ? splitting->label + "/" + splitting->panel : std::string("?")) + "/placement" +
                    std::to_string(placement) + "/side" + std::to_string(side) + "/(";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    return s + ")";
}

Rational degeneration_rhs(const std::vector<Splitting>& splittings, const RelativeOracle& oracle,
                          const CohRing& ring_d, const std::map<int, int>& interior_degrees) {
    const std::size_t nb = ring_d.size();
    auto ask = [&](const RelativeQuery& q) {
        auto v = oracle(q);
        if (!v) throw MissingData(q.key());
        return *v;
    };
    auto degree_of_mark = [&](int mark) {
        auto it = interior_degrees.find(mark);
        return it == interior_degrees.end() ? 0 : it->second;
    };

    Rational total = 0;
    for (const auto& s : splittings) {
        const std::size_t ell = static_cast<std::size_t>(s.ell);
        Rational coef = Rational(s.m) / s.aut;

        std::vector<int> int1, int2;
        for (const auto& l : s.gamma1.legs)
            if (l.kind == LegKind::Interior) int1.push_back(l.marking);
        for (const auto& l : s.gamma2.legs)
            if (l.kind == LegKind::Interior) int2.push_back(l.marking);
        std::sort(int1.begin(), int1.end());
        std::sort(int2.begin(), int2.end());
        std::vector<int> all = int1;
        all.insert(all.end(), int2.begin(), int2.end());
        std::sort(all.begin(), all.end());

        for (std::size_t p = 0; p < s.placements.size(); ++p) {
            std::vector<std::size_t> j(ell, 0);
            while (true) {
                RelativeQuery q1{&s, p, 1, {}};
                for (auto idx : j) q1.labels.push_back(ring_d.basis()[idx].label);
                Rational v1 = ask(q1);
                if (v1 != 0) {
                    std::vector<std::size_t> b(ell, 0);
                    while (true) {
                        Rational weight = 1;
                        for (std::size_t i = 0; i < ell && weight != 0; ++i) weight *= ring_d.dual_matrix()(b[i], j[i]);
                        if (weight != 0) {
                            RelativeQuery q2{&s, p, 2, {}};
                            for (auto idx : b) q2.labels.push_back(ring_d.basis()[idx].label);
                            Rational v2 = ask(q2);
                            // parent order: interior legs, then (δ_j, δ_j^∨) pairs
                            std::vector<int> degrees;
                            for (int mark : all) degrees.push_back(degree_of_mark(mark));
                            for (std::size_t i = 0; i < ell; ++i) {
                                degrees.push_back(ring_d.basis()[j[i]].degree);
                                degrees.push_back(ring_d.basis()[b[i]].degree);
                            }
                            std::vector<std::size_t> order;
                            auto pos = [&](int mark) {
                                return static_cast<std::size_t>(std::find(all.begin(), all.end(), mark) - all.begin());
                            };
                            for (int mark : int1) order.push_back(pos(mark));
                            for (std::size_t i = 0; i < ell; ++i) order.push_back(all.size() + 2 * i);
                            for (int mark : int2) order.push_back(pos(mark));
                            for (std::size_t i = 0; i < ell; ++i) order.push_back(all.size() + 2 * i + 1);
                            int sign = reorder_sign(degrees, order);
                            total += coef * sign * weight * v1 * v2;
                        }
                        std::size_t i = 0;
                        while (i < ell && ++b[i] == nb) b[i++] = 0;
                        if (i == ell) break;
                    }
                }
                std::size_t i = 0;
                while (i < ell && ++j[i] == nb) j[i++] = 0;
                if (i == ell) break;
            }
        }
    }
    return total;
}

}
