#include <doctest.h>

#include <map>
#include <utility>

#include "dl2/ffield.hpp"

using namespace dl2;

namespace {

// Independent order computation by repeated multiplication.
int mult_order(const FieldTower& t, int x) {
    int ord = 1, acc = x;
    while (acc != 1) {
        acc = t.mul(acc, x);
        ++ord;
        REQUIRE(ord <= t.q2());
    }
    return ord;
}

}  // namespace

TEST_SUITE("ffield") {

TEST_CASE("q=3 tower picks x^2+1 (exhaustive irreducibility oracle)") {
    const FieldTower t = make_field_tower(3, 1);
    CHECK(t.q() == 3);
    CHECK(t.q2() == 9);

    // Oracle: scan monic quadratics x^2 + c1 x + c0 over F_3 in lex order of
    // (c1, c0); the first with no root must be the tower's choice.
    int first_c1 = -1, first_c0 = -1;
    for (int c1 = 0; c1 < 3 && first_c1 < 0; ++c1)
        for (int c0 = 0; c0 < 3 && first_c1 < 0; ++c0) {
            bool has_root = false;
            for (int r = 0; r < 3; ++r)
                if ((r * r + c1 * r + c0) % 3 == 0) has_root = true;
            if (!has_root) {
                first_c1 = c1;
                first_c0 = c0;
            }
        }
    CHECK(first_c1 == 0);  // x^2 + 1: -1 is a non-square mod 3
    CHECK(first_c0 == 1);
    CHECK(t.f1() == first_c1);
    CHECK(t.f0() == first_c0);
}

TEST_CASE("q=3 generator orders") {
    const FieldTower t = make_field_tower(3, 1);
    CHECK(mult_order(t, t.gamma2()) == 8);  // |F_9^x|
    CHECK(t.norm(t.gamma2()) == t.gamma1());
    CHECK(mult_order(t, t.gamma1()) == 2);  // Norm(gamma2) generates F_3^x
}

TEST_CASE("p=2 and oversized q are rejected") {
    CHECK_THROWS_AS(make_field_tower(2, 1), Error);
    CHECK_THROWS_AS(make_field_tower(13, 1), Error);
    CHECK_THROWS_AS(make_field_tower(5, 2), Error);
    CHECK_NOTHROW(make_field_tower(11, 1));
    CHECK_NOTHROW(make_field_tower(3, 2));
}

TEST_CASE("norm: zero rejected, identity fixed, fibers have size q+1") {
    const FieldTower t = make_field_tower(5, 1);
    CHECK_THROWS_AS(t.norm(0), Error);
    CHECK(t.norm(1) == 1);

    // Fiber census by enumeration: every value in F_5^x is hit q+1 times.
    std::map<int, int> fibers;
    for (int x = 1; x < t.q2(); ++x) ++fibers[t.norm(x)];
    CHECK(fibers.size() == 4);
    for (const auto& [value, count] : fibers) {
        CHECK(t.in_base(value));
        CHECK(count == t.q() + 1);
    }

    // Kernel of the norm has exactly q+1 elements.
    int kernel = 0;
    for (int x = 1; x < t.q2(); ++x)
        if (t.norm(x) == 1) ++kernel;
    CHECK(kernel == t.q() + 1);
}

TEST_CASE("field axioms hold exhaustively") {
    for (const auto& [p, e] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
        const FieldTower t = make_field_tower(p, e);
        const int n = t.q2();
        for (int x = 0; x < n; ++x) {
            CHECK(t.add(x, 0) == x);
            CHECK(t.mul(x, 1) == x);
            CHECK(t.add(x, t.neg(x)) == 0);
            if (x != 0) CHECK(t.mul(x, t.inv(x)) == 1);
        }
        // Associativity and distributivity over all triples, quietly.
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z)
                    ok = t.add(t.add(x, y), z) == t.add(x, t.add(y, z)) &&
                         t.mul(t.mul(x, y), z) == t.mul(x, t.mul(y, z)) &&
                         t.mul(x, t.add(y, z)) == t.add(t.mul(x, y), t.mul(x, z)) &&
                         t.add(x, y) == t.add(y, x) && t.mul(x, y) == t.mul(y, x);
        CHECK(ok);
    }
}

TEST_CASE("Frobenius fixes exactly F_q and has order 2") {
    for (const auto& [p, e] : {std::pair{5, 1}, {3, 2}}) {
        const FieldTower t = make_field_tower(p, e);
        int fixed = 0;
        for (int x = 0; x < t.q2(); ++x) {
            if (t.frobenius(x) == x) {
                ++fixed;
                CHECK(t.in_base(x));
            }
            CHECK(t.frobenius(t.frobenius(x)) == x);  // x^(q^2) = x
        }
        CHECK(fixed == t.q());
    }
}

TEST_CASE("subfield codes are closed under the tower operations") {
    const FieldTower t = make_field_tower(3, 2);  // q = 9
    for (int x = 0; x < t.q(); ++x)
        for (int y = 0; y < t.q(); ++y) {
            CHECK(t.in_base(t.add(x, y)));
            CHECK(t.in_base(t.mul(x, y)));
        }
    for (int x = 1; x < t.q(); ++x) CHECK(t.exp1(t.dlog1(x)) == x);
}

}  // TEST_SUITE
