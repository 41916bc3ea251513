#include <doctest.h>

#include <hqp/identities.hpp>
#include <hqp/superposition.hpp>

#include <algorithm>

#include <vector>

#include "helpers.hpp"

using namespace hqp;
using hqp::testing::fx;
using hqp::testing::op1;

namespace {

Operation g(int k) { return operation_from_index(2, 2, k - 1); }

Operation transpose(const Operation& f) {
    int n = f.order();
    std::vector<Symbol> t(f.size());
    for (Symbol a = 0; a < n; ++a)
        for (Symbol b = 0; b < n; ++b) t[a * n + b] = f.eval({b, a});
    return Operation(2, n, std::move(t));
}

}  // namespace

TEST_CASE("constant maps") {
    Operation c = constant_map(2, 3, 1);
    CHECK(c.image() == std::vector<Symbol>{1});
    for (std::uint64_t k = 0; k < c.size(); ++k) CHECK(c.at(k) == 1);
    CHECK_FAILS_WITH(SymbolOutOfRange, constant_map(2, 3, 3));
}

TEST_CASE("superposition composes outer with component tables") {
    CHECK(superpose(g(7), {g(2), g(3)}) == g(4));

    // Shape errors: wrong component count, mixed component arity, mixed order.
    CHECK_FAILS_WITH(ArityMismatch, superpose(g(7), {g(2)}));
    CHECK_FAILS_WITH(ArityMismatch,
                     superpose(g(7), {g(2), op1(1, 2, {1, 2})}));
    CHECK_FAILS_WITH(OrderMismatch, superpose(g(7), {g(2), fx("z3")}));
}

TEST_CASE("embedding: superposing constants yields the constant of the value") {
    for (const char* name : {"z3", "example-3.3-star", "example-3.3-circ"}) {
        Operation f = fx(name);
        for (int comp_arity : {1, 2, 3}) {
            for (Symbol c1 = 0; c1 < 3; ++c1)
                for (Symbol c2 = 0; c2 < 3; ++c2) {
                    Operation s = superpose(f, {constant_map(comp_arity, 3, c1),
                                                constant_map(comp_arity, 3, c2)});
                    CHECK(s == constant_map(comp_arity, 3, f.eval({c1, c2})));
                }
        }
    }
    Operation f3 = fx("example-2.1-f");
    for (Symbol c1 = 0; c1 < 3; ++c1)
        for (Symbol c2 = 0; c2 < 3; ++c2)
            for (Symbol c3 = 0; c3 < 3; ++c3) {
                Operation s = superpose(
                    f3, {constant_map(2, 3, c1), constant_map(2, 3, c2),
                         constant_map(2, 3, c3)});
                CHECK(s == constant_map(2, 3, f3.eval({c1, c2, c3})));
            }
}

TEST_CASE("projection components absorb superposition") {
    Operation pl = op1(2, 2, {1, 1, 2, 2});  // (a, b) -> a
    for (int i = 0; i < 16; ++i) {
        CHECK(superpose(pl, {g(i + 1), g(i + 1)}) == g(i + 1));
        CHECK(self_superpose(pl, g(i + 1)) == g(i + 1));
    }
}

TEST_CASE("hadamard product is binary superposition plus a latin certificate") {
    for (int s = 0; s < 16; ++s)
        for (int a = 0; a < 16; ++a)
            for (int b = 0; b < 16; ++b) {
                HadamardResult h = hadamard_product(g(s + 1), g(a + 1), g(b + 1));
                CHECK(h.op == superpose(g(s + 1), {g(a + 1), g(b + 1)}));
                CHECK(h.certified == g(s + 1).is_quasigroup());
            }
    CHECK_FAILS_WITH(ArityMismatch,
                     hadamard_product(fx("example-2.1-f"), fx("z3"), fx("z3")));
}

TEST_CASE("order-5 products reproduce the bundled family tables") {
    Operation star = fx("example-5.2-star");
    Operation star_t = transpose(star);
    Operation circ = fx("example-5.2-circ");
    Operation circ_t = transpose(circ);

    HadamardResult h = hadamard_product(star, star, star_t);
    CHECK(h.op == circ);
    CHECK(h.certified);  // star is a quasigroup
    CHECK(superpose(star, {circ, circ_t}) == star_t);
}

TEST_CASE("triangular products") {
    CHECK(tri_right(g(7), g(7)) == g(4));
    CHECK(tri_symmetric(g(7), g(7)) == g(1));

    Operation pl = op1(2, 2, {1, 1, 2, 2});
    for (int i = 0; i < 16; ++i) {
        // star(pl(a,b), b) = star(a, b) and star(pl(a,b), pl(b,a)) = star(a, b)
        CHECK(tri_right(pl, g(i + 1)) == g(i + 1));
        CHECK(tri_symmetric(pl, g(i + 1)) == g(i + 1));
    }
    CHECK_FAILS_WITH(ArityMismatch, tri_right(fx("example-2.1-f"), fx("z3")));
    CHECK_FAILS_WITH(OrderMismatch, tri_right(g(7), fx("z3")));
}

TEST_CASE("self-superposition is associative on the full binary catalog") {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            for (int c = 0; c < 16; ++c) {
                Operation lhs = self_superpose(self_superpose(g(a + 1), g(b + 1)),
                                               g(c + 1));
                Operation rhs = self_superpose(g(a + 1),
                                               self_superpose(g(b + 1), g(c + 1)));
                CHECK(lhs == rhs);
            }
    CHECK(self_superpose(g(7), constant_map(2, 2, 0)) == g(1));
}

TEST_CASE("lifting the xor table gives xor on table indices") {
    LiftedGroupoid lifted = lift_operation(g(7), 2, Limits{}, 1);
    CHECK(lifted.base_arity == 2);
    CHECK(lifted.base_order == 2);
    CHECK(lifted.component_arity == 2);
    CHECK(lifted.carrier_size == 16);
    CHECK(lifted.table.arity() == 2);
    CHECK(lifted.table.order() == 16);
    for (Symbol r = 0; r < 16; ++r)
        for (Symbol c = 0; c < 16; ++c)
            CHECK(lifted.table.eval({r, c}) == (r ^ c));

    CHECK(lifted.label(0) == "g_1");
    CHECK(lifted.label(15) == "g_16");
    CHECK(lifted.element(6) == g(7));
    CHECK(identity_set(lifted.table) == std::vector<Symbol>{0});

    LiftedGroupoid threaded = lift_operation(g(7), 2, Limits{}, 3);
    CHECK(threaded.table == lifted.table);
}

TEST_CASE("lifting with unary components") {
    LiftedGroupoid lifted = lift_operation(g(7), 1, Limits{}, 1);
    CHECK(lifted.carrier_size == 4);
    // Only the constant-0 map has its image inside the base identity set.
    CHECK(identity_set(lifted.table) == std::vector<Symbol>{0});
}

TEST_CASE("lift refuses carriers beyond the guard") {
    CHECK_FAILS_WITH(CapacityExceeded, lift_operation(fx("z3"), 2, Limits{}, 1));
}

TEST_CASE("distributivity tests") {
    Operation z3 = fx("z3");
    CHECK(is_distributive_over(constant_map(2, 3, 0), z3, Side::Both));
    Operation mul = op1(2, 3, {1, 1, 1, 1, 2, 3, 1, 3, 2});  // a*b mod 3
    CHECK(is_distributive_over(mul, z3, Side::Both));
    Operation pl3 = op1(2, 3, {1, 1, 1, 2, 2, 2, 3, 3, 3});
    CHECK_FALSE(is_distributive_over(pl3, z3, Side::Both));
    // Row-scaled table: additive in the second argument only.
    Operation left_only = op1(2, 3, {1, 1, 1, 1, 2, 3, 1, 2, 3});
    CHECK(is_distributive_over(left_only, z3, Side::Left));
    CHECK_FALSE(is_distributive_over(left_only, z3, Side::Both));
}

TEST_CASE("distributivity hulls over the cyclic tables") {
    Operation z3 = fx("z3");
    std::vector<Operation> both = mult_set(z3, Side::Both, Limits{}, 1);
    REQUIRE(both.size() == 3);
    std::vector<OpIndex> got;
    for (const Operation& op : both) got.push_back(canonical_index(op));
    // Exactly the scalings a, b -> k*a*b mod 3.
    std::vector<OpIndex> expected;
    for (Symbol k = 0; k < 3; ++k) {
        std::vector<Symbol> t(9);
        for (Symbol a = 0; a < 3; ++a)
            for (Symbol b = 0; b < 3; ++b) t[a * 3 + b] = (k * a * b) % 3;
        expected.push_back(canonical_index(Operation(2, 3, std::move(t))));
    }
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);

    CHECK(mult_set(z3, Side::Left, Limits{}, 1).size() == 27);
    std::vector<Operation> z2_hull = mult_set(fx("z2"), Side::Both, Limits{}, 1);
    REQUIRE(z2_hull.size() == 2);
    CHECK(canonical_index(z2_hull[0]) == 0);
    CHECK(canonical_index(z2_hull[1]) == 1);

    CHECK(mult_set(z3, Side::Both, Limits{}, 3) == both);

    Operation z4 = op1(2, 4, {1, 2, 3, 4, 2, 3, 4, 1, 3, 4, 1, 2, 4, 1, 2, 3});
    CHECK_FAILS_WITH(CapacityExceeded, mult_set(z4, Side::Both, Limits{}, 1));
}

TEST_CASE("iterated self-products reach a cycle") {
    HadamardCycle a = iterate_hadamard_cycle(g(7));
    CHECK(a.preperiod == 1);
    CHECK(a.period == 1);
    CHECK(a.trajectory == std::vector<OpIndex>{6, 0});

    HadamardCycle b = iterate_hadamard_cycle(fx("z3"));
    CHECK(b.preperiod == 0);
    CHECK(b.period == 2);
    CHECK(b.trajectory == std::vector<OpIndex>{4069, 5681});
    // The second table is (a, b) -> 2(a+b) mod 3.
    Operation h1 = operation_from_index(2, 3, b.trajectory[1]);
    for (Symbol x = 0; x < 3; ++x)
        for (Symbol y = 0; y < 3; ++y) CHECK(h1.eval({x, y}) == (2 * (x + y)) % 3);

    CHECK_FAILS_WITH(NotAQuasigroup, iterate_hadamard_cycle(fx("proj1")));
}
