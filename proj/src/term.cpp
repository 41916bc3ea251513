#include "hqp/term.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "hqp/error.hpp"
#include "hqp/parallel.hpp"
#include "hqp/superposition.hpp"

namespace hqp {

Term Term::variable(int index) {
  if (index < 1)
    fail(Errc::PreconditionFailed, "variable indices start at 1");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(std::vector<Term> children) {
  if (children.empty())
    fail(Errc::PreconditionFailed, "application needs children");
  Term t;
  t.children_ = std::move(children);
  return t;
}

int Term::max_variable() const {
  if (is_variable()) return var_;
  int best = 0;
  for (const Term& c : children_) best = std::max(best, c.max_variable());
  return best;
}

std::string to_string(const Term& term) {
  if (term.is_variable()) return "x" + std::to_string(term.variable_index());
  std::string out = "{";
  for (std::size_t i = 0; i < term.children().size(); ++i) {
    if (i) out += ",";
    out += to_string(term.children()[i]);
  }
  out += "}";
  return out;
}

namespace {

struct TermParser {
  const std::string& text;
  int arity;
  std::size_t pos = 0;

  [[noreturn]] void syntax(std::size_t at, const std::string& what) {
    std::ostringstream os;
    os << what << " at position " << at + 1;
    fail(Errc::SyntaxError, os.str());
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  Term parse() {
    skip_ws();
    if (pos >= text.size()) syntax(pos, "expected a term");
    const char c = text[pos];
    if (c == 'x' || c == 'X') {
      const std::size_t start = pos++;
      std::size_t digits = 0;
      long long index = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        index = index * 10 + (text[pos] - '0');
        if (index > 1'000'000) syntax(start, "variable index too large");
        ++pos;
        ++digits;
      }
      if (digits == 0) syntax(start, "expected digits after 'x'");
      if (index < 1) syntax(start, "variable indices start at x1");
      return Term::variable(static_cast<int>(index));
    }
    if (c == '{') {
      const std::size_t start = pos++;
      std::vector<Term> children;
      children.push_back(parse());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        children.push_back(parse());
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != '}')
        syntax(pos, "expected ',' or '}'");
      ++pos;
      if (children.size() != static_cast<std::size_t>(arity)) {
        std::ostringstream os;
        os << "braces group at position " << start + 1 << " has "
           << children.size() << " children, ambient arity is " << arity;
        fail(Errc::ArityMismatch, os.str());
      }
      return Term::apply(std::move(children));
    }
    syntax(pos, "expected 'x' or '{'");
  }
};

}  // namespace

Term parse_term(const std::string& text, int arity) {
  if (arity < 2)
    fail(Errc::PreconditionFailed, "term syntax needs arity at least 2");
  TermParser parser{text, arity};
  Term t = parser.parse();
  if (!parser.at_end()) parser.syntax(parser.pos, "trailing input");
  return t;
}

std::pair<Term, Term> parse_identity(const std::string& text, int arity) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos)
    fail(Errc::SyntaxError, "an identity needs an '=' sign");
  if (text.find('=', eq + 1) != std::string::npos)
    fail(Errc::SyntaxError, "an identity needs exactly one '=' sign");
  return {parse_term(text.substr(0, eq), arity),
          parse_term(text.substr(eq + 1), arity)};
}

Symbol eval_term(const Term& term, const Operation& op,
                 std::span<const Symbol> assignment) {
  if (term.is_variable()) {
    const int index = term.variable_index();
    if (static_cast<std::size_t>(index) > assignment.size()) {
      std::ostringstream os;
      os << "x" << index << " has no assigned value";
      fail(Errc::UnboundVariable, os.str());
    }
    const Symbol v = assignment[static_cast<std::size_t>(index - 1)];
    if (v < 0 || v >= op.order()) {
      std::ostringstream os;
      os << "x" << index << " = " << v << " outside 0.." << op.order() - 1;
      fail(Errc::SymbolOutOfRange, os.str());
    }
    return v;
  }
  if (term.children().size() != static_cast<std::size_t>(op.arity())) {
    std::ostringstream os;
    os << "term applies " << term.children().size()
       << " arguments, operation arity is " << op.arity();
    fail(Errc::ArityMismatch, os.str());
  }
  std::vector<Symbol> args;
  args.reserve(term.children().size());
  for (const Term& c : term.children())
    args.push_back(eval_term(c, op, assignment));
  return op.eval(args);
}

IdentityCheckResult satisfies_identity(const Operation& op, const Term& lhs,
                                       const Term& rhs, const Limits& limits,
                                       int jobs) {
  const int vars = std::max(lhs.max_variable(), rhs.max_variable());
  const auto n = static_cast<std::uint64_t>(op.order());
  auto total = checked_pow(n, static_cast<std::uint64_t>(vars));
  if (!total || *total > limits.identity_assignments) {
    std::ostringstream os;
    os << (total ? std::to_string(*total) : ">2^64")
       << " assignments exceed the cap of " << limits.identity_assignments;
    fail(Errc::CapacityExceeded, os.str());
  }
  const int chunks = detail::chunk_count(*total, jobs);
  // one slot per chunk; the lexicographic minimum is the first nonempty
  // slot because chunks cover ascending index ranges
  std::vector<std::optional<std::uint64_t>> found(
      static_cast<std::size_t>(chunks));
  detail::for_each_chunk(
      *total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<Symbol> assignment(static_cast<std::size_t>(vars));
        for (std::uint64_t flat = begin; flat < end; ++flat) {
          std::uint64_t rest = flat;
          for (int i = vars - 1; i >= 0; --i) {
            assignment[static_cast<std::size_t>(i)] =
                static_cast<Symbol>(rest % n);
            rest /= n;
          }
          if (eval_term(lhs, op, assignment) !=
              eval_term(rhs, op, assignment)) {
            found[static_cast<std::size_t>(chunk)] = flat;
            return;
          }
        }
      });
  for (const auto& hit : found) {
    if (!hit) continue;
    IdentityCheckResult result;
    result.holds = false;
    result.counterexample.resize(static_cast<std::size_t>(vars));
    std::uint64_t rest = *hit;
    for (int i = vars - 1; i >= 0; --i) {
      result.counterexample[static_cast<std::size_t>(i)] =
          static_cast<Symbol>(rest % n);
      rest /= n;
    }
    return result;
  }
  return IdentityCheckResult{};
}

namespace {

Operation eval_lifted_term(const Term& term, const Operation& f,
                           const std::vector<Operation>& assignment) {
  if (term.is_variable()) {
    const int index = term.variable_index();
    if (static_cast<std::size_t>(index) > assignment.size()) {
      std::ostringstream os;
      os << "x" << index << " has no assigned value";
      fail(Errc::UnboundVariable, os.str());
    }
    return assignment[static_cast<std::size_t>(index - 1)];
  }
  std::vector<Operation> children;
  children.reserve(term.children().size());
  for (const Term& c : term.children())
    children.push_back(eval_lifted_term(c, f, assignment));
  return superpose(f, children);
}

}  // namespace

LiftedIdentityCheckResult lifted_identity_check(const Operation& f,
                                                int component_arity,
                                                const Term& lhs,
                                                const Term& rhs,
                                                const Limits& limits) {
  if (component_arity < 1)
    fail(Errc::PreconditionFailed, "component arity must be at least 1");
  const auto q = static_cast<std::uint64_t>(f.order());
  auto comp_cells = checked_pow(q, static_cast<std::uint64_t>(
                                       component_arity));
  const std::uint64_t cell_cap =
      std::min(limits.table_entries, kMaxTableEntries);
  if (!comp_cells || *comp_cells > cell_cap)
    fail(Errc::CapacityExceeded,
         "component tables exceed the cell ceiling; cannot even sample");
  const int vars = std::max(lhs.max_variable(), rhs.max_variable());
  const auto carrier = operation_count(component_arity, f.order());

  LiftedIdentityCheckResult result;
  auto test = [&](const std::vector<Operation>& assignment) {
    if (eval_lifted_term(lhs, f, assignment) ==
        eval_lifted_term(rhs, f, assignment))
      return true;
    result.holds = false;
    result.counterexample = assignment;
    return false;
  };

  if (vars == 0) {
    // no variables: a single evaluation decides
    test({});
    return result;
  }

  const auto space =
      carrier ? checked_pow(*carrier, static_cast<std::uint64_t>(vars))
              : std::nullopt;
  if (carrier && space && *space <= limits.identity_assignments) {
    std::vector<Operation> assignment(
        static_cast<std::size_t>(vars),
        operation_from_index(component_arity, f.order(), 0));
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(vars), 0);
    for (std::uint64_t flat = 0; flat < *space; ++flat) {
      std::uint64_t rest = flat;
      for (int i = vars - 1; i >= 0; --i) {
        const std::uint64_t d = rest % *carrier;
        rest /= *carrier;
        if (flat == 0 || digits[static_cast<std::size_t>(i)] != d) {
          digits[static_cast<std::size_t>(i)] = d;
          assignment[static_cast<std::size_t>(i)] =
              operation_from_index(component_arity, f.order(), d);
        }
      }
      if (!test(assignment)) return result;
    }
    return result;
  }

  result.exhaustive = false;
  // constants first: identities refuted on the base are refuted here
  // deterministically, independent of the sampling seed
  const auto const_space = checked_pow(q, static_cast<std::uint64_t>(vars));
  if (const_space && *const_space <= limits.lifted_samples) {
    std::vector<Operation> assignment;
    for (std::uint64_t flat = 0; flat < *const_space; ++flat) {
      assignment.clear();
      std::uint64_t rest = flat;
      std::vector<Symbol> values(static_cast<std::size_t>(vars));
      for (int i = vars - 1; i >= 0; --i) {
        values[static_cast<std::size_t>(i)] = static_cast<Symbol>(rest % q);
        rest /= q;
      }
      for (int i = 0; i < vars; ++i)
        assignment.push_back(constant_map(
            component_arity, f.order(),
            values[static_cast<std::size_t>(i)]));
      if (!test(assignment)) return result;
    }
  }
  std::mt19937_64 rng(kLiftedSampleSeed);
  std::vector<Operation> assignment;
  for (std::uint64_t draw = 0; draw < limits.lifted_samples; ++draw) {
    assignment.clear();
    for (int i = 0; i < vars; ++i) {
      std::vector<Symbol> table(static_cast<std::size_t>(*comp_cells));
      for (Symbol& v : table)
        v = static_cast<Symbol>(rng() % q);
      assignment.emplace_back(component_arity, f.order(), std::move(table));
    }
    if (!test(assignment)) return result;
  }
  return result;
}

}  // namespace hqp
