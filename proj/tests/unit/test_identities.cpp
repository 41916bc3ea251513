#include <doctest.h>

#include <hqp/identities.hpp>

#include "helpers.hpp"

using namespace hqp;
using hqp::testing::fx;
using hqp::testing::op1;

namespace {
const std::vector<Symbol> kNone{};
}

TEST_CASE("identity sets of the bundled ternary tables") {
    Operation f = fx("example-2.1-f");
    IdentityReport rf = identity_report(f);
    // Both 1 and 2 act as identities in every position; 0-based {0, 1}.
    for (int i = 0; i < 3; ++i)
        CHECK(rf.per_position[i] == std::vector<Symbol>{0, 1});
    CHECK(rf.intersection == std::vector<Symbol>{0, 1});
    CHECK(identity_set(f) == std::vector<Symbol>{0, 1});

    Operation g = fx("example-2.1-g");
    IdentityReport rg = identity_report(g);
    for (int i = 0; i < 3; ++i)
        CHECK(rg.per_position[i] == std::vector<Symbol>{1});
    CHECK(identity_set(g) == std::vector<Symbol>{1});
}

TEST_CASE("positional identities: index 0 fixes the leftmost placement") {
    // e is in position-0 set iff op(e, x, ..., x) = x for all x: checked
    // against a table that has left identities but no right ones.
    Operation star = fx("example-3.3-star");
    IdentityReport r = identity_report(star);
    CHECK(r.per_position[0] == std::vector<Symbol>{0, 1});
    CHECK(r.per_position[1] == kNone);
    CHECK(r.intersection == kNone);

    // proj2(x, y) = y: every element is a left identity, none a right one.
    IdentityReport p = identity_report(fx("proj2"));
    CHECK(p.per_position[0] == std::vector<Symbol>{0, 1, 2});
    CHECK(p.per_position[1] == kNone);
}

TEST_CASE("inverse sets demand a common identity witness across placements") {
    Operation f = fx("example-2.1-f");
    CHECK(inverses(f, 0) == std::vector<Symbol>{0, 1});
    CHECK(inverses(f, 1) == std::vector<Symbol>{0, 1});
    CHECK(inverses(f, 2) == std::vector<Symbol>{0, 2});
    CHECK_FALSE(has_unique_inverses(f));

    Operation g = fx("example-2.1-g");
    for (Symbol a = 0; a < 3; ++a)
        CHECK(inverses(g, a) == std::vector<Symbol>{a});
    CHECK(has_unique_inverses(g));

    CHECK_FAILS_WITH(SymbolOutOfRange, inverses(f, 3));
    // No identity element means inverses are undefined.
    CHECK_FAILS_WITH(NotAMonoid, inverses(fx("example-3.3-star"), 0));
}

TEST_CASE("xor table is its own inverse structure") {
    Operation x = fx("z2");
    CHECK(identity_set(x) == std::vector<Symbol>{0});
    CHECK(inverses(x, 0) == std::vector<Symbol>{0});
    CHECK(inverses(x, 1) == std::vector<Symbol>{1});
    CHECK(has_unique_inverses(x));

    Operation z = fx("z3");
    CHECK(identity_set(z) == std::vector<Symbol>{0});
    CHECK(inverses(z, 1) == std::vector<Symbol>{2});
    CHECK(has_unique_inverses(z));
}

TEST_CASE("constant tables have no identities") {
    Operation c = op1(2, 3, {1, 1, 1, 1, 1, 1, 1, 1, 1});
    IdentityReport r = identity_report(c);
    CHECK(r.per_position[0] == kNone);
    CHECK(r.per_position[1] == kNone);
    CHECK(r.intersection == kNone);
}
