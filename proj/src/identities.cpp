#include "hqp/identities.hpp"

#include <algorithm>
#include <sstream>

#include "hqp/error.hpp"

namespace hqp {

IdentityReport identity_report(const Operation& op) {
  const int m = op.arity();
  const int n = op.order();
  IdentityReport report;
  report.per_position.resize(static_cast<std::size_t>(m));
  std::vector<Symbol> args(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int free_slot = m - 1 - i;
    for (Symbol e = 0; e < n; ++e) {
      bool ok = true;
      std::fill(args.begin(), args.end(), e);
      for (Symbol a = 0; a < n && ok; ++a) {
        args[static_cast<std::size_t>(free_slot)] = a;
        ok = op.eval(args) == a;
      }
      if (ok) report.per_position[static_cast<std::size_t>(i)].push_back(e);
    }
  }
  for (Symbol e = 0; e < n; ++e) {
    bool everywhere = true;
    for (const auto& pos : report.per_position)
      everywhere = everywhere && std::ranges::binary_search(pos, e);
    if (everywhere) report.intersection.push_back(e);
  }
  return report;
}

std::vector<Symbol> identity_set(const Operation& op) {
  return identity_report(op).intersection;
}

std::vector<Symbol> inverses(const Operation& op, Symbol a) {
  if (a < 0 || a >= op.order()) {
    std::ostringstream os;
    os << "element " << a << " outside 0.." << op.order() - 1;
    fail(Errc::SymbolOutOfRange, os.str());
  }
  const std::vector<Symbol> ids = identity_set(op);
  if (ids.empty())
    fail(Errc::NotAMonoid, "inverses need a nonempty identity set");
  const int m = op.arity();
  std::vector<Symbol> args(static_cast<std::size_t>(m));
  std::vector<Symbol> out;
  for (Symbol b = 0; b < op.order(); ++b) {
    for (Symbol e : ids) {
      bool all_slots = true;
      for (int slot = 0; slot < m && all_slots; ++slot) {
        std::fill(args.begin(), args.end(), a);
        args[static_cast<std::size_t>(slot)] = b;
        all_slots = op.eval(args) == e;
      }
      if (all_slots) {
        out.push_back(b);
        break;
      }
    }
  }
  return out;
}

bool has_unique_inverses(const Operation& op) {
  if (identity_set(op).empty()) return false;
  for (Symbol a = 0; a < op.order(); ++a)
    if (inverses(op, a).size() != 1) return false;
  return true;
}

}  // namespace hqp
