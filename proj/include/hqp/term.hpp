#pragma once

#include <span>
#include <string>
#include <vector>

#include "hqp/limits.hpp"
#include "hqp/operation.hpp"

namespace hqp {

// A product term over universally quantified variables: either a variable
// x1, x2, ... or a braces application {t_1, ..., t_m} of the ambient
// operation.
class Term {
 public:
  static Term variable(int index);
  static Term apply(std::vector<Term> children);

  bool is_variable() const { return var_ > 0; }
  int variable_index() const { return var_; }
  const std::vector<Term>& children() const { return children_; }

  // Highest variable index appearing in the term, 0 if none.
  int max_variable() const;

  bool operator==(const Term&) const = default;

 private:
  Term() = default;
  int var_ = 0;
  std::vector<Term> children_;
};

std::string to_string(const Term& term);

// Grammar: term := 'x'N | '{' term (',' term)* '}' with exactly `arity`
// children per braces group; whitespace is ignored.  Requires arity >= 2.
Term parse_term(const std::string& text, int arity);

// "lhs = rhs" with exactly one '=' sign.
std::pair<Term, Term> parse_identity(const std::string& text, int arity);

// assignment[i] is the value of x(i+1).
Symbol eval_term(const Term& term, const Operation& op,
                 std::span<const Symbol> assignment);

struct IdentityCheckResult {
  bool holds = true;
  // Lexicographically first failing assignment (0-based symbols) when the
  // identity fails.
  std::vector<Symbol> counterexample;
};

IdentityCheckResult satisfies_identity(const Operation& op, const Term& lhs,
                                       const Term& rhs,
                                       const Limits& limits = Limits{},
                                       int jobs = 1);

struct LiftedIdentityCheckResult {
  bool holds = true;
  // True when every assignment of component operations was tried; false
  // when the check fell back to fixed-seed sampling.
  bool exhaustive = true;
  std::vector<Operation> counterexample;
};

// Checks the identity where products are the superposition under f and
// variables range over all component_arity-ary operations on f's symbols.
// Constant assignments are tried first in the sampling fallback, so any
// identity already failing on the base fails here deterministically.
LiftedIdentityCheckResult lifted_identity_check(
    const Operation& f, int component_arity, const Term& lhs,
    const Term& rhs, const Limits& limits = Limits{});

}  // namespace hqp
