#pragma once

#include "nodal/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nodal {

struct CurveClass {
    std::vector<long> coeffs;

    bool is_zero() const;
    CurveClass operator+(const CurveClass& other) const;
    bool operator==(const CurveClass&) const = default;
    auto operator<=>(const CurveClass&) const = default;
};

// Free commutative monoid on named generators; stands in for the effective curve classes.
struct ClassMonoid {
    std::string name;
    std::vector<std::string> generators;

    CurveClass zero() const { return {std::vector<long>(generators.size(), 0)}; }
    // "D0+3F", "2L", "3"; a bare integer means a multiple of the first generator.
    CurveClass parse(std::string_view text) const;
    // Single-generator monoids print as plain integers.
    std::string format(const CurveClass& c) const;
};

struct BasisClass {
    std::string label;
    int degree = 0;
};

using ClassVector = Vector;

class CohRing {
public:
    static CohRing from_json(std::string_view text);
    static CohRing projective_plane();
    static CohRing hirzebruch_f1();
    static CohRing elliptic_curve();
    static CohRing point();
    static CohRing projective_line();

    const std::string& name() const noexcept { return name_; }
    const std::vector<BasisClass>& basis() const noexcept { return basis_; }
    const Matrix& pairing() const noexcept { return pairing_; }
    int top_degree() const noexcept { return top_degree_; }
    int euler_characteristic() const noexcept { return euler_; }
    std::size_t size() const noexcept { return basis_.size(); }

    std::size_t index_of(std::string_view label) const;
    ClassVector basis_vector(std::string_view label) const;
    std::string describe(const ClassVector& c) const;
    // Degree of a homogeneous class; throws for mixed degrees, -1 for zero.
    int degree_of(const ClassVector& c) const;
    Rational pair(const ClassVector& a, const ClassVector& b) const;

    // Column j holds the coordinates of δ_j^∨.
    const Matrix& dual_matrix() const noexcept { return dual_; }
    ClassVector dual(std::size_t j) const { return dual_.column(j); }

    bool has_curve_classes() const noexcept { return !monoid_.generators.empty(); }
    const ClassMonoid& monoid() const noexcept { return monoid_; }
    // β·D for a divisor class D (degree 2).
    Rational divisor_degree(const CurveClass& beta, const ClassVector& divisor) const;
    ClassVector divisor_of(const CurveClass& beta) const;
    Rational self_intersection(const CurveClass& beta) const;
    Rational canonical_degree(const CurveClass& beta) const;
    // (β² − K·β)/2
    Rational linear_system_dimension(const CurveClass& beta) const;

private:
    std::string name_;
    std::vector<BasisClass> basis_;
    Matrix pairing_;
    Matrix dual_;
    int top_degree_ = 0;
    int euler_ = 0;
    ClassMonoid monoid_;
    std::vector<ClassVector> generator_divisors_;
    // intersections_[g][i]: divisor basis element i against curve generator g
    std::vector<std::vector<Rational>> intersections_;
    ClassVector canonical_;
};

struct KunnethTerm {
    std::size_t index = 0;
    ClassVector left;
    ClassVector right;
};

std::vector<KunnethTerm> kunneth_diagonal(const CohRing& ring);

struct Insertion {
    ClassVector cls;
    int psi = 0;
};

struct InsertionList {
    std::vector<Insertion> insertions;
    CurveClass beta;
    int genus = 0;
    int nodes = 0;

    static InsertionList of_labels(const CohRing& ring, const std::vector<std::string>& labels,
                                   const CurveClass& beta, int genus = 0, int nodes = 0);
};

struct WeightedTerm {
    Rational weight;
    InsertionList term;
};

// Replaces one node by the two insertions δ_j, δ_j^∨, one child per Künneth summand.
// No automorphism prefactor is applied.
std::vector<WeightedTerm> split_node(const InsertionList& parent, const CohRing& ring);

struct DivisorReduction {
    Rational factor;
    InsertionList reduced;
};
DivisorReduction divisor_reduce(const InsertionList& term, std::size_t position, const CohRing& ring);

// Koszul sign of reordering classes of the given degrees into `order`
// (order[i] is the old position of the item that lands at position i).
int reorder_sign(const std::vector<int>& degrees, const std::vector<std::size_t>& order);

}
