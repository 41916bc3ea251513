#pragma once

#include <optional>
#include <vector>

#include "hqp/limits.hpp"
#include "hqp/operation.hpp"

namespace hqp {

// One-line image notation over 0-based symbols: perm[i] is the image of i.
using Permutation = std::vector<Symbol>;

// Throws NotAPermutation unless perm is a bijection of {0, ..., order-1}.
void validate_permutation(const Permutation& perm, int order);

Permutation identity_permutation(int order);
Permutation inverse_permutation(const Permutation& perm);

// maps[0..m-1] act on the argument slots, maps[m] on the result.
struct Isotopism {
  std::vector<Permutation> maps;
};

// g with g(p_1(a_1), ..., p_m(a_m)) = p_{m+1}(op(a_1, ..., a_m)).
Operation apply_isotopism(const Operation& op, const Isotopism& iso);

// pi composed after op: every table entry remapped through pi.
Operation post_compose(const Operation& op, const Permutation& pi);

// Position permutation of the graph relation.  sigma is 0-based over the
// m+1 tuple slots (slot m is the result).  The permuted relation must be
// the graph of a total single-valued operation; if not, the first
// uncovered cell is reported (an uncovered cell and a conflicting cell
// always coexist, by counting).  Always defined when sigma fixes the
// result slot or when op is a quasigroup.
Operation conjugate(const Operation& op, const Permutation& sigma);

// True iff b(pi(a_1), ..., pi(a_m)) = pi(a(a_1, ..., a_m)) for all tuples.
bool is_isomorphism(const Operation& a, const Operation& b,
                    const Permutation& pi);

// First isomorphism witness in the deterministic backtracking order
// (symbol images tried ascending), verified before return.
std::optional<Permutation> find_isomorphism(const Operation& a,
                                            const Operation& b,
                                            const Limits& limits = Limits{});

}  // namespace hqp
