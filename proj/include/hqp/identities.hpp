#pragma once

#include <vector>

#include "hqp/operation.hpp"

namespace hqp {

// per_position[i] lists the symbols e that act as an identity when the free
// argument sits in slot arity-1-i and every other slot holds e.  For a
// binary operation per_position[0] is the left identities and
// per_position[1] the right identities.  intersection is the symbols common
// to all positions.
struct IdentityReport {
  std::vector<std::vector<Symbol>> per_position;
  std::vector<Symbol> intersection;
};

IdentityReport identity_report(const Operation& op);

// Shorthand for identity_report(op).intersection.
std::vector<Symbol> identity_set(const Operation& op);

// Symbols b invertible against a: some identity element e satisfies
// op(a, ..., b, ..., a) == e with b in slot i, simultaneously for every
// slot i.  Requires a nonempty identity set.
std::vector<Symbol> inverses(const Operation& op, Symbol a);

// True iff the identity set is nonempty and every symbol has exactly one
// inverse.
bool has_unique_inverses(const Operation& op);

}  // namespace hqp
