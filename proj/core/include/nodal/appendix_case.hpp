#pragma once

#include "nodal/cohomology.hpp"
#include "nodal/gw_oracle.hpp"
#include "nodal/linalg.hpp"
#include "nodal/stable_graphs.hpp"

#include <string>
#include <vector>

namespace nodal {

struct Factor {
    std::string name;
    Rational value;
    std::string source;
};

struct Contribution {
    std::string case_id;
    std::string splitting;
    std::string panel;
    Rational value;
    std::vector<Factor> factors;
    // Σ over loop placements of the divisor factor, when the node is a loop.
    std::vector<Rational> divisor_subfactors;
    std::vector<std::string> notes;
    // Same number assembled from relative-side counts through the Künneth sum over D.
    Rational cross_check;
};

struct CaseReport {
    Rational lhs;
    std::vector<Contribution> contributions;
    Rational rhs_total;
    Rational cross_check_total;
    bool agreement = false;
    std::vector<Factor> lhs_factors;
};

// Plane cubic with one node through 8 points, degenerating to P2 ∪_L F1.
struct AppendixScenario {
    StableGraph parent;
    SplitScenario split;
    CohRing p2 = CohRing::projective_plane();
    CohRing f1 = CohRing::hirzebruch_f1();
    CohRing line = CohRing::projective_line();
};

AppendixScenario appendix_scenario();
std::vector<Decomposition> appendix_decompositions();
std::vector<Splitting> appendix_splittings();
const std::vector<std::string>& case_ids();
std::string case_id_of(const Splitting& s);

// Σ over Künneth terms δ⊗δ^∨ of (β·δ)(β·δ^∨); terms with a unit vanish.
Rational loop_divisor_factor(const CohRing& ring, const CurveClass& beta);

// Genus-0 primary invariant of P2 with the given insertions; records its reasoning.
Rational p2_primary_invariant(const InsertionList& term, const CohRing& p2, const OracleTable& table,
                              std::vector<Factor>* trail = nullptr);

struct LhsOptions {
    int points = 8;
    bool loop = true;
};
Rational compute_lhs(const LhsOptions& options, const OracleTable& table, std::vector<Factor>* trail = nullptr);
Rational compute_lhs();

Contribution compute_contribution(const std::string& case_id, const OracleTable& table);
Contribution compute_contribution(const std::string& case_id);
// Künneth assembly of one case from side counts; independent of the factor recipe.
Rational cross_check_contribution(const Splitting& s, const AppendixScenario& sc, const OracleTable& table);

CaseReport assemble_report(const OracleTable& table);
// Throws VerificationFailure when the two sides disagree.
CaseReport compute_rhs_total(const OracleTable& table);
CaseReport compute_rhs_total();

struct EllipticReport {
    Rational u1, v1, u2, v2;
    Rational determinant;
    Matrix invariant_form;  // basis of monodromy-invariant bilinear forms on span(a,b)
    std::vector<std::string> relations;
    std::vector<std::string> diagonal_terms;
    Rational nodal_coefficient;
    int trade_sign = 1;
    Rational nodal_input;
    Rational recovered;
};

// γ1 = u1 a + v1 b, γ2 = u2 a + v2 b; nodal_input is the primitive part of the nodal invariant.
EllipticReport elliptic_demo(const Rational& u1, const Rational& v1, const Rational& u2, const Rational& v2,
                             const Rational& nodal_input = 2);

}
