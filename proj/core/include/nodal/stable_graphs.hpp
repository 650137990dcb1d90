#pragma once

#include "nodal/cohomology.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nodal {

enum class LegKind { Interior, Relative };

struct Vertex {
    int genus = 0;
    CurveClass cls;
};

// Two half-edges, anchored at vertices u and w (u == w is a self-loop).
struct Edge {
    int u = 0;
    int w = 0;
};

struct Leg {
    int marking = 0;
    int vertex = 0;
    LegKind kind = LegKind::Interior;
    int multiplicity = 0;  // relative legs only
};

struct StableGraph {
    ClassMonoid monoid;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Leg> legs;

    int valence(int v) const;
    int first_betti() const;
    std::size_t component_count() const;
    // Throws InvalidInput on malformed data or an unstable class-0 vertex.
    void validate() const;
};

// One vertex per connected component; genus gains the first Betti number.
StableGraph contract_edges(const StableGraph& g);
bool isomorphic(const StableGraph& a, const StableGraph& b);
// 1/2 for a self-loop (exchange of the two branches), 1 otherwise.
Rational branch_factor(const Edge& e);

// One side of a degeneration W ~> Y1 ∪_D Y2.
struct DegenerationSide {
    std::string name;
    ClassMonoid monoid;
    std::vector<CurveClass> pushforward;  // image of each generator in the parent monoid
    std::vector<long> contact_degree;     // generator · D

    CurveClass push(const CurveClass& c) const;
    long contact(const CurveClass& c) const;
};

struct SideVertex {
    int genus = 0;
    std::string cls;
    std::vector<int> legs;  // parent markings carried by this vertex
};

struct Contact {
    int side1_vertex = 0;
    int side2_vertex = 0;
    int multiplicity = 1;
};

struct Decomposition {
    std::string label;
    std::vector<SideVertex> side1;
    std::vector<SideVertex> side2;
    std::vector<Contact> contacts;
};

using ClassSplitter = std::function<std::vector<Decomposition>(const StableGraph& parent, int vertex)>;

struct EdgePlacement {
    int side = 1;
    int u = 0;
    int w = 0;

    bool is_loop() const { return u == w; }
    bool operator==(const EdgePlacement&) const = default;
};

using Placement = std::vector<EdgePlacement>;  // one entry per parent edge

struct Splitting {
    std::string label;
    std::string panel;  // which side carries each parent edge, and whether it is a loop there
    StableGraph gamma1;
    StableGraph gamma2;
    std::vector<Placement> placements;
    int ell = 0;
    BigInt m = 1;
    int aut = 1;
    std::string caveat;

    // gamma1/gamma2 with the edges of the given placement.
    StableGraph side_graph(int side, std::size_t placement) const;
};

struct SplitScenario {
    DegenerationSide side1;
    DegenerationSide side2;
    ClassSplitter splitter;
    int shape_bound = 4;
};

// Glue the i-th relative legs of the two sides and contract the new edges only.
StableGraph glue(const StableGraph& gamma1, const StableGraph& gamma2, const SplitScenario& scenario,
                 const ClassMonoid& parent_monoid);

std::vector<Splitting> enumerate_splittings(const StableGraph& parent, const SplitScenario& scenario);
int relative_automorphisms(const StableGraph& gamma1, const StableGraph& gamma2);

struct RelativeQuery {
    const Splitting* splitting = nullptr;
    std::size_t placement = 0;
    int side = 1;
    std::vector<std::string> labels;  // class of ringD inserted at each relative leg

    std::string key() const;
};

using RelativeOracle = std::function<std::optional<Rational>(const RelativeQuery&)>;

// Σ_σ m/|Aut| Σ_placements Σ_Künneth (−1)^ε side1 · side2; interior_degrees maps
// parent markings to cohomological degree (default even).
Rational degeneration_rhs(const std::vector<Splitting>& splittings, const RelativeOracle& oracle,
                          const CohRing& ring_d, const std::map<int, int>& interior_degrees = {});

}
