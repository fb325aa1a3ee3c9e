#include <doctest.h>

#include "dl2/restlab.hpp"
#include "test_util.hpp"

using namespace dl2;
using dl2::test::bench;

TEST_SUITE("restlab") {

TEST_CASE("restriction theorem: named q=3 cases") {
    const Lab& lab = bench(3).lab;
    CHECK(lab.restriction_deviation(TorusKind::nonsplit,
                                    lab.character(TorusKind::nonsplit, 1)) < 1e-6);
    // theta = 1: both sides are the signed Green class functions.
    CHECK(lab.restriction_deviation(TorusKind::nonsplit,
                                    lab.character(TorusKind::nonsplit, 0)) < 1e-6);
    CHECK(lab.restriction_deviation(TorusKind::split,
                                    lab.character(TorusKind::split, 0, 0)) < 1e-6);
}

TEST_CASE("restriction theorem: exhaustive sweep at q=3 and q=5") {
    for (int q : {3, 5}) {
        const SweepResult r = bench(q).lab.restriction_suite();
        CHECK(r.passed());
        CHECK(r.max_deviation < 1e-6);
        CHECK(r.checks ==
              (q * q - 1) + (q - 1) * (q - 1));  // all theta, both kinds
    }
}

TEST_CASE("iso invariance: identity and central conjugations are exact") {
    const Lab& lab = bench(3).lab;
    const TorusCharacter theta = lab.character(TorusKind::nonsplit, 1);
    CHECK(lab.iso_invariance_deviation(TorusKind::nonsplit, theta, mat_identity()) ==
          0.0);
    CHECK(lab.iso_invariance_deviation(TorusKind::nonsplit, theta, mat_scalar(2)) ==
          0.0);
}

TEST_CASE("iso invariance: sampled conjugations at q=3") {
    const SweepResult r = bench(3).lab.iso_suite(5, 12345);
    CHECK(r.passed());
    CHECK(r.max_deviation < 1e-6);
    CHECK(r.checks == 10);  // 5 per torus kind
}

TEST_CASE("restrict_datum worked examples") {
    const Lab& lab5 = bench(5).lab;
    const auto [sub, theta_h] =
        lab5.restrict_datum(TorusKind::nonsplit, lab5.character(TorusKind::nonsplit, 7));
    CHECK(sub->order() == 6);
    CHECK(theta_h.j1 == 1);

    const auto [sub0, triv] =
        lab5.restrict_datum(TorusKind::nonsplit, lab5.character(TorusKind::nonsplit, 0));
    CHECK(triv.j1 == 0);

    const Lab& lab3 = bench(3).lab;
    const auto [sub3, th3] =
        lab3.restrict_datum(TorusKind::split, lab3.character(TorusKind::split, 1, 0));
    CHECK(sub3->order() == 2);
    CHECK(th3.j1 == 1);
}

TEST_CASE("clifford analyzer: trivial character") {
    const Lab& lab = bench(3).lab;
    const RestrictionReport rep =
        lab.clifford_analyze(ClassFunction::trivial(lab.gl2()), lab.sl2());
    CHECK(rep.multiplicity == 1);
    CHECK(rep.component_count == 1);
    CHECK(rep.twist_stabilizer == 1);
    CHECK(rep.restriction_norm == 1);
    CHECK(rep.clifford_consistent);
    CHECK(rep.unique_solution);
}

TEST_CASE("clifford analyzer rejects virtual characters") {
    const Lab& lab = bench(5).lab;
    // theta = 1 on the nonsplit torus is not regular: <R,R> = 2.
    const ClassFunction r = lab.evaluator(TorusKind::nonsplit)
                                .character(lab.character(TorusKind::nonsplit, 0));
    CHECK_THROWS_AS(lab.clifford_analyze(r, lab.sl2()), Error);
}

TEST_CASE("q=5 cuspidals: j=3 splits into two halves, j=1 stays irreducible") {
    const Lab& lab = bench(5).lab;

    const RestrictionReport split_case = lab.analyze_cuspidal(3);
    CHECK(split_case.restriction_norm == 2);
    CHECK(split_case.multiplicity == 1);
    CHECK(split_case.component_count == 2);
    CHECK(split_case.twist_stabilizer == 2);
    CHECK(split_case.dim_chi == 4);
    CHECK(split_case.dim_components == 2);  // (q-1)/2
    CHECK(split_case.theta_regular);
    CHECK_FALSE(split_case.theta_h_regular);
    CHECK_FALSE(split_case.theta_h_regular_in_g);
    CHECK(split_case.prediction_matched);
    CHECK(split_case.theorem_deviation < 1e-6);

    const RestrictionReport irr_case = lab.analyze_cuspidal(1);
    CHECK(irr_case.restriction_norm == 1);
    CHECK(irr_case.multiplicity == 1);
    CHECK(irr_case.component_count == 1);
    CHECK(irr_case.dim_components == 4);
    CHECK(irr_case.theta_h_regular_in_g);
    CHECK(irr_case.prediction_matched);
}

TEST_CASE("q=3, j=1: regular with t=1") {
    const RestrictionReport rep = bench(3).lab.analyze_cuspidal(1);
    CHECK(rep.component_count == 1);
    CHECK(rep.multiplicity == 1);
    CHECK(rep.prediction_matched);
}

TEST_CASE("census q=5: 10 orbits, 8 single, 2 split") {
    const CensusSummary cs = bench(5).lab.census();
    CHECK(cs.orbit_count == 10);
    CHECK(cs.single_component == 8);
    CHECK(cs.split_component == 2);
    CHECK(cs.expected_orbits == 10);
    CHECK(cs.expected_split == 2);
    CHECK(cs.matches_index_census);
    CHECK(cs.all_multiplicity_free);
    CHECK(cs.all_predictions_matched);
    CHECK(cs.max_theorem_deviation < 1e-6);
    // The split orbits are {3,15} and {9,21}; minima 3 and 9.
    std::vector<long> split_js;
    for (const auto& rep : cs.reports)
        if (rep.component_count == 2) split_js.push_back(rep.theta_j1);
    CHECK(split_js == std::vector<long>{3, 9});
}

TEST_CASE("census q=3: exactly one split case, the orbit {2,6}") {
    // Index-arithmetic oracle: regular j in {1..7} means 4 does not divide j,
    // so {1,2,3,5,6,7}; Frobenius pairs them as {1,3}, {2,6}, {5,7}.
    long orbits = 0, split = 0;
    for (long j = 1; j < 8; ++j) {
        if (j % 4 == 0) continue;
        if ((3 * j) % 8 < j) continue;
        ++orbits;
        if ((2 * j) % 4 == 0) ++split;
    }
    CHECK(orbits == 3);
    CHECK(split == 1);

    const CensusSummary cs = bench(3).lab.census();
    CHECK(cs.orbit_count == orbits);
    CHECK(cs.split_component == split);
    CHECK(cs.matches_index_census);
    for (const auto& rep : cs.reports)
        if (rep.component_count == 2) CHECK(rep.theta_j1 == 2);
}

TEST_CASE("census q=7: 21 orbits, 3 split, against the index census") {
    // Index oracle: 48 - 6 = 42 regular values, 21 orbits; split needs
    // j = 4 mod 8, giving orbits {4,28}, {12,36}, {20,44}.
    const CensusSummary cs = bench(7).lab.census();
    CHECK(cs.orbit_count == 21);
    CHECK(cs.expected_orbits == 21);
    CHECK(cs.split_component == 3);
    CHECK(cs.expected_split == 3);
    CHECK(cs.matches_index_census);
    CHECK(cs.all_predictions_matched);
    std::vector<long> split_js;
    for (const auto& rep : cs.reports)
        if (rep.component_count == 2) split_js.push_back(rep.theta_j1);
    CHECK(split_js == std::vector<long>{4, 12, 20});
}

TEST_CASE("sign coherence: restriction of the cuspidal pairs positively") {
    const Lab& lab = bench(5).lab;
    for (long j : {1L, 3L}) {
        const TorusCharacter theta = lab.character(TorusKind::nonsplit, j);
        const ClassFunction res = restrict_classfun(
            cuspidal_character(lab.evaluator(TorusKind::nonsplit), theta), lab.sl2());
        const auto [sub, theta_h] = lab.restrict_datum(TorusKind::nonsplit, theta);
        ClassFunction rh = lab.sub_evaluator(TorusKind::nonsplit).character(theta_h);
        rh *= cd(eps_sign(lab.sl2(), *sub), 0);
        CHECK(inner_product(res, rh).real() > 0.0);
    }
}

TEST_CASE("restricted virtual characters have nonnegative integer norms") {
    const Lab& lab = bench(3).lab;
    for (long j = 0; j < 8; ++j) {
        const ClassFunction r = lab.evaluator(TorusKind::nonsplit)
                                    .character(lab.character(TorusKind::nonsplit, j));
        const ClassFunction res = restrict_classfun(r, lab.sl2());
        const long n = round_to_integer(inner_product(res, res));
        CHECK(n >= 0);
    }
}

TEST_CASE("clifford consistency against every determinant subgroup (q=5)") {
    const Lab& lab = bench(5).lab;
    const GroupModel squares = build_group(bench(5).tower, GroupKind::det_subgroup, 2);
    const GroupModel full = build_group(bench(5).tower, GroupKind::det_subgroup, 4);

    std::vector<ClassFunction> irreducibles;
    // Cuspidals.
    irreducibles.push_back(cuspidal_character(lab.evaluator(TorusKind::nonsplit),
                                              lab.character(TorusKind::nonsplit, 1)));
    irreducibles.push_back(cuspidal_character(lab.evaluator(TorusKind::nonsplit),
                                              lab.character(TorusKind::nonsplit, 3)));
    // Principal series with regular split theta.
    irreducibles.push_back(
        lab.evaluator(TorusKind::split).character(lab.character(TorusKind::split, 1, 0)));
    irreducibles.push_back(
        lab.evaluator(TorusKind::split).character(lab.character(TorusKind::split, 2, 0)));
    // Twists of the trivial and Steinberg characters via Borel combinations.
    const ClassFunction st =
        borel_induction(lab.gl2(), lab.character(TorusKind::split, 0, 0)) -
        ClassFunction::trivial(lab.gl2());
    irreducibles.push_back(st);
    irreducibles.push_back(twist_by_det(st, 1));
    irreducibles.push_back(twist_by_det(ClassFunction::trivial(lab.gl2()), 2));

    for (const GroupModel* h : {&lab.sl2(), &squares, &full}) {
        for (const ClassFunction& chi : irreducibles) {
            const RestrictionReport rep = lab.clifford_analyze(chi, *h);
            CHECK(rep.clifford_consistent);  // n = s = m^2 t
            CHECK(rep.unique_solution);
            CHECK(rep.multiplicity == 1);
            CHECK(rep.dim_chi == rep.multiplicity * rep.component_count *
                                     rep.dim_components);
        }
    }
}

}  // TEST_SUITE
