#include "nodal/appendix_case.hpp"
#include "nodal/errors.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace nodal;

TEST(AppendixCase, LeftHandSide) {
    EXPECT_EQ(compute_lhs(), 54);
}

TEST(AppendixCase, LeftHandSideRules) {
    auto table = OracleTable::bundled();
    // one fewer point: the Künneth children are underdetermined and vanish
    EXPECT_EQ(compute_lhs({7, true}, table), 0);
    // without the node: N_3
    EXPECT_EQ(compute_lhs({8, false}, table), 12);
}

TEST(AppendixCase, Contributions) {
    const std::map<std::string, Rational> expected{{"i", 3},  {"ii", 5},  {"iii", 8},           {"iv", 10},
                                                   {"v", 3},  {"vi", Rational(15, 2)}, {"vii", Rational(15, 2)},
                                                   {"viii", 10}};
    Rational total = 0;
    for (const auto& id : case_ids()) {
        auto c = compute_contribution(id);
        EXPECT_EQ(c.value, expected.at(id)) << id;
        EXPECT_EQ(c.cross_check, c.value) << id;
        total += c.value;
    }
    EXPECT_EQ(total, 54);
    EXPECT_THROW(compute_contribution("ix"), InvalidInput);
}

TEST(AppendixCase, RightHandSideAgrees) {
    auto r = compute_rhs_total();
    EXPECT_EQ(r.rhs_total, 54);
    EXPECT_EQ(r.cross_check_total, 54);
    EXPECT_EQ(r.lhs, 54);
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(r.contributions.size(), 8u);
}

TEST(AppendixCase, DivisorSubfactorsFromIntersectionData) {
    const std::map<std::string, std::vector<Rational>> expected{
        {"iii", {4}}, {"iv", {5}}, {"v", {1, 1}}, {"vii", {3, 0}}, {"viii", {4}}};
    for (const auto& [id, subs] : expected) EXPECT_EQ(compute_contribution(id).divisor_subfactors, subs) << id;
    auto p2 = CohRing::projective_plane();
    auto f1 = CohRing::hirzebruch_f1();
    EXPECT_EQ(loop_divisor_factor(p2, p2.monoid().parse("2")), 4);
    EXPECT_EQ(loop_divisor_factor(f1, f1.monoid().parse("D0+3F")), 5);
    EXPECT_EQ(loop_divisor_factor(f1, f1.monoid().parse("D0+2F")), 3);
    EXPECT_EQ(loop_divisor_factor(f1, f1.monoid().parse("F")), 0);
}

TEST(AppendixCase, PerturbedTableBreaksAgreement) {
    auto table = OracleTable::bundled();
    table.set("p2.conic.4pts.tangentL", {3, "perturbed"});
    auto r = assemble_report(table);
    EXPECT_FALSE(r.agreement);
    EXPECT_THROW(compute_rhs_total(table), VerificationFailure);
}

TEST(AppendixCase, MissingTableEntry) {
    auto table = OracleTable::from_json("{}");
    EXPECT_THROW(compute_contribution("iii", table), MissingData);
}

TEST(AppendixCase, PrimaryInvariantsOfThePlane) {
    auto p2 = CohRing::projective_plane();
    auto table = OracleTable::bundled();
    auto beta = p2.monoid().parse("3");
    std::vector<std::string> eight(8, "p");
    EXPECT_EQ(p2_primary_invariant(InsertionList::of_labels(p2, eight, beta), p2, table), 12);
    auto with_h = eight;
    with_h.push_back("H");
    EXPECT_EQ(p2_primary_invariant(InsertionList::of_labels(p2, with_h, beta), p2, table), 36);
    auto with_unit = eight;
    with_unit.push_back("1");
    EXPECT_EQ(p2_primary_invariant(InsertionList::of_labels(p2, with_unit, beta), p2, table), 0);
    EXPECT_EQ(p2_primary_invariant(InsertionList::of_labels(p2, std::vector<std::string>(9, "p"), beta), p2, table), 0);
}

TEST(AppendixCase, EllipticDemo) {
    auto r = elliptic_demo(1, 0, 0, 1);
    EXPECT_EQ(r.determinant, 1);
    EXPECT_EQ(r.nodal_coefficient, 2);
    EXPECT_EQ(r.trade_sign, -1);
    EXPECT_EQ(r.recovered, 1);
    for (int u1 = -2; u1 <= 2; ++u1)
        for (int v2 = -2; v2 <= 2; ++v2) {
            auto s = elliptic_demo(u1, 3, -1, v2);
            EXPECT_EQ(s.determinant, Rational(u1 * v2 + 3));
            EXPECT_EQ(s.nodal_coefficient, 2);
        }
}
