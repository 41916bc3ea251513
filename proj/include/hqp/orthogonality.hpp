#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hqp/limits.hpp"
#include "hqp/operation.hpp"

namespace hqp {

// Exactly m operations, each of arity m and common order.
using OperationSet = std::vector<Operation>;

// Throws ArityMismatch / OrderMismatch / PreconditionFailed unless s
// satisfies the shape invariants above.
void validate_operation_set(const OperationSet& s);

// True iff the joint evaluation a -> (g_1(a), ..., g_m(a)) is a bijection
// of the m-tuples.
bool is_orthogonal_set(const OperationSet& s);

// True iff replacing each single member of s by g (one at a time) keeps
// the set orthogonal.  s itself must be orthogonal.
bool ort_contains(const OperationSet& s, const Operation& g);

// Every operation accepted by ort_contains, ascending canonical index.
// With allow_long the candidate guard is waived.
std::vector<Operation> enumerate_ort(const OperationSet& s,
                                     const Limits& limits = Limits{},
                                     int jobs = 1, bool allow_long = false);

// All arity-ary quasigroup operations of the given order, ascending
// canonical order, by backtracking over table cells in flat order.
std::vector<Operation> enumerate_quasigroups(int arity, int order,
                                             const Limits& limits = Limits{},
                                             int jobs = 1);

// Streaming form: visit(op) for each quasigroup in ascending canonical
// order; returns the count.
std::uint64_t for_each_quasigroup(
    int arity, int order, const std::function<void(const Operation&)>& visit,
    const Limits& limits = Limits{}, int jobs = 1);

std::uint64_t quasigroup_count(int arity, int order,
                               const Limits& limits = Limits{},
                               int jobs = 1);

// The unique f with f(g_1(a), ..., g_m(a)) = h(a); s must be orthogonal.
Operation solve_for_f(const Operation& h, const OperationSet& s);

struct TransversalLine {
  int position = 0;             // varying coordinate, 0-based
  std::vector<Symbol> fixed;    // the other coordinates, 0-based
  CellSet cells;                // image cells under the component maps
  bool transversal = false;
};

struct TransversalReport {
  bool all_transversal = true;
  std::vector<TransversalLine> lines;
  // First failing line when not all_transversal (index into lines).
  std::size_t first_failure = 0;
};

// For each axis-parallel line of the component domain, maps the line
// through gs and tests the resulting cell set as a Latin transversal of f.
// f and every component must be quasigroups.
TransversalReport transversal_family(const Operation& f,
                                     const std::vector<Operation>& gs);

struct BijectionReport {
  std::uint64_t quasigroup_count = 0;
  std::uint64_t ort_count = 0;
  bool injective = false;
  bool all_in_ort = false;
  bool surjective = false;
  bool roundtrip_ok = false;

  bool verified() const {
    return injective && all_in_ort && surjective && roundtrip_ok &&
           quasigroup_count == ort_count;
  }
};

// Checks that f -> superpose(f, s) is a bijection from the arity-m
// quasigroups onto the operations accepted by ort_contains(s, .), with
// solve_for_f as its inverse.
BijectionReport verify_bijection(const OperationSet& s,
                                 const Limits& limits = Limits{},
                                 int jobs = 1);

}  // namespace hqp
