#include <doctest.h>

#include "dl2/dlchar.hpp"
#include "test_util.hpp"

using namespace dl2;
using dl2::test::bench;

TEST_SUITE("dlchar") {

TEST_CASE("green table closed forms (q=5 GL2)") {
    const GreenTable table = GreenTable::build(bench(5).gl2_model);
    REQUIRE(table.unipotent_classes().size() == 2);
    const int id = table.unipotent_classes()[0];
    const int ureg = table.unipotent_classes()[1];
    CHECK(id == 0);
    CHECK(table.value({CentralizerClass::full_group, TorusKind::split, id}) == 6);
    CHECK(table.value({CentralizerClass::full_group, TorusKind::split, ureg}) == 1);
    CHECK(table.value({CentralizerClass::full_group, TorusKind::nonsplit, id}) == -4);
    CHECK(table.value({CentralizerClass::full_group, TorusKind::nonsplit, ureg}) == 1);
    CHECK(table.value({CentralizerClass::maximal_torus, TorusKind::split, 0}) == 1);
    CHECK(table.value({CentralizerClass::maximal_torus, TorusKind::nonsplit, 0}) == 1);
    CHECK_THROWS_AS(table.value({CentralizerClass::maximal_torus, TorusKind::split, 3}),
                    Error);
}

TEST_CASE("green table: split value at 1 equals [G:B] (q=3 oracle)") {
    const GreenTable table = GreenTable::build(bench(3).gl2_model);
    // [G:B] = degree of Ind_B(triv), computed through the Frobenius formula.
    const ClassFunction ind =
        borel_induction(bench(3).gl2_model, bench(3).lab.character(TorusKind::split, 0, 0));
    CHECK(table.value({CentralizerClass::full_group, TorusKind::split, 0}) ==
          round_to_integer(ind.degree()));
}

TEST_CASE("SL2 tables give both nontrivial unipotent classes the same value") {
    const GreenTable table = GreenTable::build(bench(5).sl2_model);
    REQUIRE(table.unipotent_classes().size() == 3);
    for (TorusKind k : {TorusKind::split, TorusKind::nonsplit}) {
        const long u1 = table.value(
            {CentralizerClass::full_group, k, table.unipotent_classes()[1]});
        const long u2 = table.value(
            {CentralizerClass::full_group, k, table.unipotent_classes()[2]});
        CHECK(u1 == u2);
        CHECK(u1 == 1);
    }
}

TEST_CASE("green tables are refused for other determinant subgroups") {
    const GroupModel squares = build_group(bench(5).tower, GroupKind::det_subgroup, 2);
    CHECK_THROWS_AS(GreenTable::build(squares), Error);
}

TEST_CASE("degree identity R(1) = Q_T(1) for every theta (q=3)") {
    const Lab& lab = bench(3).lab;
    for (long j1 = 0; j1 < 2; ++j1)
        for (long j2 = 0; j2 < 2; ++j2) {
            const auto chi = lab.evaluator(TorusKind::split)
                                 .character(lab.character(TorusKind::split, j1, j2));
            CHECK(round_to_integer(chi.degree()) == 4);  // q+1
        }
    for (long j = 0; j < 8; ++j) {
        const auto chi = lab.evaluator(TorusKind::nonsplit)
                             .character(lab.character(TorusKind::nonsplit, j));
        CHECK(round_to_integer(chi.degree()) == -2);  // 1-q
    }
}

TEST_CASE("central classes: value is theta(z) * Q(1) (q=5 nonsplit)") {
    const Workspace& w = bench(5);
    const TorusCharacter theta = w.lab.character(TorusKind::nonsplit, 1);
    const ClassFunction chi = w.lab.evaluator(TorusKind::nonsplit).character(theta);
    CHECK(round_to_integer(chi.degree()) == -4);  // value at the identity

    const FieldTower& t = w.tower;
    for (int a = 1; a < t.q(); ++a) {
        const int code = encode_mat(t, mat_scalar(a));
        const cd expected =
            cd(1 - t.q(), 0) * evaluate(theta, code).value();
        CHECK(std::abs(chi.at_code(code) - expected) < 1e-9);
    }
}

TEST_CASE("split evaluator equals Borel induction on every class (q=3, all theta)") {
    const Lab& lab = bench(3).lab;
    for (long j1 = 0; j1 < 2; ++j1)
        for (long j2 = 0; j2 < 2; ++j2) {
            const TorusCharacter theta = lab.character(TorusKind::split, j1, j2);
            CHECK(max_abs_diff(lab.evaluator(TorusKind::split).character(theta),
                               borel_induction(lab.gl2(), theta)) < 1e-9);
        }
}

TEST_CASE("orthogonality sweep passes at q=3") {
    const SweepResult r = bench(3).lab.orthogonality_suite();
    CHECK(r.passed());
    CHECK(r.checks > 0);
    CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("eps signs") {
    const Workspace& w = bench(5);
    CHECK(eps_sign(w.gl2_model, w.lab.torus(TorusKind::split)) == 1);
    CHECK(eps_sign(w.gl2_model, w.lab.torus(TorusKind::nonsplit)) == -1);
    CHECK(eps_sign(w.sl2_model, w.lab.subtorus(TorusKind::split)) == 1);   // 1-1
    CHECK(eps_sign(w.sl2_model, w.lab.subtorus(TorusKind::nonsplit)) == -1);  // 1-0
}

TEST_CASE("cuspidal characters: degree and norm") {
    const Workspace& w5 = bench(5);
    const ClassFunction c5 = cuspidal_character(
        w5.lab.evaluator(TorusKind::nonsplit), w5.lab.character(TorusKind::nonsplit, 1));
    CHECK(round_to_integer(c5.degree()) == 4);  // q-1
    CHECK(round_to_integer(inner_product(c5, c5)) == 1);

    const Workspace& w3 = bench(3);
    const ClassFunction c3 = cuspidal_character(
        w3.lab.evaluator(TorusKind::nonsplit), w3.lab.character(TorusKind::nonsplit, 1));
    CHECK(round_to_integer(c3.degree()) == 2);
    CHECK(round_to_integer(inner_product(c3, c3)) == 1);

    CHECK_THROWS_AS(cuspidal_character(w5.lab.evaluator(TorusKind::nonsplit),
                                       w5.lab.character(TorusKind::nonsplit, 6)),
                    Error);  // 6 is not regular mod q+1
}

TEST_CASE("twisting a cuspidal shifts theta by omega o Norm (q=5)") {
    const Lab& lab = bench(5).lab;
    const ClassFunction lhs = twist_by_det(
        cuspidal_character(lab.evaluator(TorusKind::nonsplit),
                           lab.character(TorusKind::nonsplit, 1)),
        1);
    // omega_k o Norm has index k(q+1); theta_1 * (omega_1 o Norm) = theta_7.
    const ClassFunction rhs = cuspidal_character(
        lab.evaluator(TorusKind::nonsplit), lab.character(TorusKind::nonsplit, 7));
    CHECK(approx_equal(lhs, rhs, 1e-9));
}

TEST_CASE("twisting permutes principal series parameters (q=3)") {
    const Lab& lab = bench(3).lab;
    const ClassFunction lhs =
        twist_by_det(borel_induction(lab.gl2(), lab.character(TorusKind::split, 1, 0)), 1);
    const ClassFunction rhs =
        borel_induction(lab.gl2(), lab.character(TorusKind::split, 0, 1));
    CHECK(approx_equal(lhs, rhs, 1e-9));
}

TEST_CASE("imaginary parts of inner products stay tiny") {
    const Lab& lab = bench(5).lab;
    const auto r1 = lab.evaluator(TorusKind::nonsplit)
                        .character(lab.character(TorusKind::nonsplit, 1));
    const auto r2 = lab.evaluator(TorusKind::split)
                        .character(lab.character(TorusKind::split, 2, 1));
    CHECK(std::abs(inner_product(r1, r2).imag()) < 1e-9);
    CHECK(std::abs(inner_product(r1, r1).imag()) < 1e-9);
}

}  // TEST_SUITE
