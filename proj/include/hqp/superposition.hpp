#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hqp/limits.hpp"
#include "hqp/operation.hpp"

namespace hqp {

// gamma_c: the arity-ary operation whose every value is c.
Operation constant_map(int arity, int order, Symbol c);

// result(a) = f(g_1(a), ..., g_m(a)).  Components share arity and order;
// their count matches f's arity; orders of f and components agree.
Operation superpose(const Operation& f, const std::vector<Operation>& gs);

struct HadamardResult {
  Operation op;
  // True iff star is a quasigroup, the case in which the construction keeps
  // quasigroups closed.  The product itself is defined either way.
  bool certified = false;
};

// result(x,y) = star(a(x,y), b(x,y)).
HadamardResult hadamard_product(const Operation& star, const Operation& a,
                                const Operation& b);

// result(a,b) = star(asterisk(a,b), b).
Operation tri_right(const Operation& asterisk, const Operation& star);

// result(a,b) = star(asterisk(a,b), asterisk(b,a)).
Operation tri_symmetric(const Operation& asterisk, const Operation& star);

// f+g: result(a) = f(g(a), ..., g(a)); f and g share arity and order.
Operation self_superpose(const Operation& f, const Operation& g);

// The m-ary groupoid induced on all component_arity-ary operations over
// f's symbols.  Carrier symbols are canonical operation indices; the entry
// at (i_1, ..., i_m) is the index of superpose(f, [op(i_1), ..., op(i_m)]).
struct LiftedGroupoid {
  int base_arity = 0;       // arity of the lifted f
  int base_order = 0;       // order of the underlying symbol set
  int component_arity = 0;  // arity of the carrier operations
  std::uint64_t carrier_size = 0;
  Operation table;

  // The carrier operation behind a carrier symbol.
  Operation element(Symbol carrier_symbol) const;
  // Conventional 1-based name of a carrier symbol: "g_1", "g_2", ...
  std::string label(Symbol carrier_symbol) const;
};

LiftedGroupoid lift_operation(const Operation& f, int component_arity,
                              const Limits& limits = Limits{}, int jobs = 1);

enum class Side { Both, Left };

// Left distributivity of asterisk over star, plus the right law when side
// is Both.
bool is_distributive_over(const Operation& asterisk, const Operation& star,
                          Side side = Side::Both);

// All binary operations distributive over star on the requested side(s),
// in canonical-index order.
std::vector<Operation> mult_set(const Operation& star, Side side = Side::Both,
                                const Limits& limits = Limits{},
                                int jobs = 1);

struct HadamardCycle {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
  // Canonical indices of star, h_1, h_2, ... up to the last new operation;
  // h_1 = star(star, star) entrywise and h_{k+1} = star(h_k, h_k).
  std::vector<OpIndex> trajectory;
};

HadamardCycle iterate_hadamard_cycle(const Operation& star);

}  // namespace hqp
