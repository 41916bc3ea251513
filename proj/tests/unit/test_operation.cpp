#include <doctest.h>

#include <hqp/operation.hpp>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace hqp;
using hqp::testing::fx;
using hqp::testing::op1;

TEST_CASE("construction validates shape and entries") {
    CHECK_THROWS_AS(Operation(0, 2, {}), Error);
    CHECK_THROWS_AS(Operation(2, 0, {}), Error);
    CHECK_THROWS_AS(Operation(2, 2, {0, 1, 1}), Error);           // wrong length
    CHECK_THROWS_AS(Operation(2, 2, {0, 1, 1, 2}), Error);        // symbol 2 out of range
    CHECK_THROWS_AS(Operation(2, 2, {0, 1, 1, -1}), Error);
    CHECK_THROWS_AS(Operation::from_entries_1based(2, 2, {0, 1, 1, 2}), Error);

    CHECK_FAILS_WITH(LengthMismatch, Operation(2, 2, {0, 1, 1}));
    CHECK_FAILS_WITH(SymbolOutOfRange, Operation(2, 2, {0, 1, 1, 2}));
    CHECK_FAILS_WITH(PreconditionFailed, Operation(0, 2, {}));
    // 9^10 cells exceed the hard table guard.
    CHECK_FAILS_WITH(CapacityExceeded, Operation(10, 9, {}));
}

TEST_CASE("evaluation and flat indexing agree, first argument most significant") {
    Operation f = fx("example-2.1-f");
    CHECK(f.arity() == 3);
    CHECK(f.order() == 3);
    // 1-based f(1,2,3) = 3 and f(3,2,2) = 3.
    CHECK(f.eval({0, 1, 2}) == 2);
    CHECK(f.eval({2, 1, 1}) == 2);
    CHECK(f.flat_index(std::vector<Symbol>{0, 1, 2}) == 0 * 9 + 1 * 3 + 2);

    std::vector<Symbol> args(3);
    for (std::uint64_t k = 0; k < f.size(); ++k) {
        f.decode_flat(k, args);
        CHECK(f.flat_index(args) == k);
        CHECK(f.eval(args) == f.at(k));
    }
    CHECK_THROWS_AS(f.eval({0, 1}), Error);
    CHECK_THROWS_AS(f.eval({0, 1, 3}), Error);
}

TEST_CASE("image collects exactly the values that occur") {
    CHECK(fx("example-3.3-circ").image() == std::vector<Symbol>{0, 1});
    CHECK(op1(2, 3, {2, 2, 2, 2, 2, 2, 2, 2, 2}).image() == std::vector<Symbol>{1});
    CHECK(fx("z3").image() == std::vector<Symbol>{0, 1, 2});
}

TEST_CASE("quasigroup recognition") {
    CHECK(fx("z2").is_quasigroup());
    CHECK(fx("z3").is_quasigroup());
    CHECK(fx("example-5.2-star").is_quasigroup());
    CHECK_FALSE(fx("example-5.2-circ").is_quasigroup());
    CHECK_FALSE(fx("proj1").is_quasigroup());
    CHECK_FALSE(fx("proj2").is_quasigroup());
    CHECK_FALSE(fx("example-2.1-f").is_quasigroup());
    CHECK_FALSE(fx("example-2.1-g").is_quasigroup());

    // Exactly two binary quasigroups on two symbols: g_7 and g_10.
    std::vector<int> latin;
    for (int k = 0; k < 16; ++k)
        if (operation_from_index(2, 2, k).is_quasigroup()) latin.push_back(k + 1);
    CHECK(latin == std::vector<int>{7, 10});

    // A unary operation is a quasigroup iff it is a permutation.
    CHECK(op1(1, 3, {2, 3, 1}).is_quasigroup());
    CHECK_FALSE(op1(1, 3, {2, 2, 1}).is_quasigroup());
    CHECK(op1(2, 1, {1}).is_quasigroup());
}

TEST_CASE("canonical index round-trips and orders tables lexicographically") {
    CHECK(operation_count(2, 2) == std::uint64_t{16});
    CHECK(operation_count(2, 3) == std::uint64_t{19683});
    CHECK(operation_count(3, 2) == std::uint64_t{256});
    CHECK_FALSE(operation_count(2, 16).has_value());

    for (std::uint64_t k = 0; k < 16; ++k) {
        Operation g = operation_from_index(2, 2, k);
        CHECK(canonical_index(g) == k);
    }
    // The first table entry is the most significant digit.
    CHECK(operation_from_index(2, 2, 8).at(0) == 1);
    CHECK(operation_from_index(2, 2, 1).table() ==
          std::vector<Symbol>{0, 0, 0, 1});

    CHECK_FAILS_WITH(IndexOutOfRange, operation_from_index(2, 2, 16));
    CHECK_FAILS_WITH(CapacityExceeded,
                     canonical_index(Operation(2, 16, std::vector<Symbol>(256, 0))));
}

TEST_CASE("latin transversal test on cell sets") {
    Operation z3 = fx("z3");
    // 1-based cells {(1,1),(2,3),(3,2)}: values 1, 2, 2 repeat.
    CHECK_FALSE(is_latin_transversal(z3, {{0, 0}, {1, 2}, {2, 1}}));
    // 1-based cells {(1,1),(2,2),(3,3)}: values 1, 3, 2.
    CHECK(is_latin_transversal(z3, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(is_latin_transversal(z3, {{0, 0}, {1, 1}}));  // wrong count
    CHECK_THROWS_AS(is_latin_transversal(z3, {{0, 0, 0}, {1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(is_latin_transversal(z3, {{0, 3}, {1, 1}, {2, 2}}), Error);
}
