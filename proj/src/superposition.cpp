#include "hqp/superposition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hqp/error.hpp"
#include "hqp/parallel.hpp"

namespace hqp {

namespace {

void require_same_order(const Operation& a, const Operation& b) {
  if (a.order() != b.order()) {
    std::ostringstream os;
    os << "orders differ: " << a.order() << " vs " << b.order();
    fail(Errc::OrderMismatch, os.str());
  }
}

void require_binary(const Operation& op, const char* role) {
  if (op.arity() != 2) {
    std::ostringstream os;
    os << role << " must be binary, got arity " << op.arity();
    fail(Errc::ArityMismatch, os.str());
  }
}

}  // namespace

Operation constant_map(int arity, int order, Symbol c) {
  if (c < 0 || c >= order) {
    std::ostringstream os;
    os << "constant " << c << " outside 0.." << order - 1;
    fail(Errc::SymbolOutOfRange, os.str());
  }
  auto cells = checked_pow(static_cast<std::uint64_t>(order),
                           static_cast<std::uint64_t>(arity));
  if (!cells || *cells > kMaxTableEntries)
    fail(Errc::CapacityExceeded, "constant table exceeds the cell ceiling");
  return Operation(arity, order,
                   std::vector<Symbol>(static_cast<std::size_t>(*cells), c));
}

Operation superpose(const Operation& f, const std::vector<Operation>& gs) {
  if (gs.size() != static_cast<std::size_t>(f.arity())) {
    std::ostringstream os;
    os << "outer operation has arity " << f.arity() << " but " << gs.size()
       << " components were given";
    fail(Errc::ArityMismatch, os.str());
  }
  for (const Operation& g : gs) {
    if (g.arity() != gs.front().arity()) {
      std::ostringstream os;
      os << "components mix arities " << gs.front().arity() << " and "
         << g.arity();
      fail(Errc::ArityMismatch, os.str());
    }
    require_same_order(f, g);
  }
  const auto n = static_cast<std::size_t>(f.order());
  const std::size_t cells = gs.front().size();
  std::vector<Symbol> out(cells);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t flat = 0;
    for (const Operation& g : gs)
      flat = flat * n + static_cast<std::size_t>(g.at(cell));
    out[cell] = f.at(flat);
  }
  return Operation(gs.front().arity(), f.order(), std::move(out));
}

HadamardResult hadamard_product(const Operation& star, const Operation& a,
                                const Operation& b) {
  require_binary(star, "the product operation");
  require_binary(a, "the first factor");
  require_binary(b, "the second factor");
  return HadamardResult{superpose(star, {a, b}), star.is_quasigroup()};
}

Operation tri_right(const Operation& asterisk, const Operation& star) {
  require_binary(asterisk, "the first operation");
  require_binary(star, "the second operation");
  require_same_order(asterisk, star);
  const Symbol n = static_cast<Symbol>(star.order());
  std::vector<Symbol> out;
  out.reserve(asterisk.size());
  for (Symbol x = 0; x < n; ++x)
    for (Symbol y = 0; y < n; ++y)
      out.push_back(star.eval({asterisk.eval({x, y}), y}));
  return Operation(2, star.order(), std::move(out));
}

Operation tri_symmetric(const Operation& asterisk, const Operation& star) {
  require_binary(asterisk, "the first operation");
  require_binary(star, "the second operation");
  require_same_order(asterisk, star);
  const Symbol n = static_cast<Symbol>(star.order());
  std::vector<Symbol> out;
  out.reserve(asterisk.size());
  for (Symbol x = 0; x < n; ++x)
    for (Symbol y = 0; y < n; ++y)
      out.push_back(
          star.eval({asterisk.eval({x, y}), asterisk.eval({y, x})}));
  return Operation(2, star.order(), std::move(out));
}

Operation self_superpose(const Operation& f, const Operation& g) {
  if (f.arity() != g.arity()) {
    std::ostringstream os;
    os << "arities differ: " << f.arity() << " vs " << g.arity();
    fail(Errc::ArityMismatch, os.str());
  }
  require_same_order(f, g);
  return superpose(
      f, std::vector<Operation>(static_cast<std::size_t>(f.arity()), g));
}

Operation LiftedGroupoid::element(Symbol carrier_symbol) const {
  if (carrier_symbol < 0 ||
      static_cast<std::uint64_t>(carrier_symbol) >= carrier_size) {
    std::ostringstream os;
    os << "carrier symbol " << carrier_symbol << " outside 0.."
       << carrier_size - 1;
    fail(Errc::SymbolOutOfRange, os.str());
  }
  return operation_from_index(component_arity, base_order,
                              static_cast<OpIndex>(carrier_symbol));
}

std::string LiftedGroupoid::label(Symbol carrier_symbol) const {
  if (carrier_symbol < 0 ||
      static_cast<std::uint64_t>(carrier_symbol) >= carrier_size) {
    std::ostringstream os;
    os << "carrier symbol " << carrier_symbol << " outside 0.."
       << carrier_size - 1;
    fail(Errc::SymbolOutOfRange, os.str());
  }
  return "g_" + std::to_string(carrier_symbol + 1);
}

LiftedGroupoid lift_operation(const Operation& f, int component_arity,
                              const Limits& limits, int jobs) {
  if (component_arity < 1)
    fail(Errc::PreconditionFailed, "component arity must be at least 1");
  const int m = f.arity();
  const auto q = static_cast<std::uint64_t>(f.order());
  auto carrier = operation_count(component_arity, f.order());
  if (!carrier || *carrier > limits.lifted_carrier) {
    std::ostringstream os;
    os << "carrier of " << (carrier ? std::to_string(*carrier) : ">2^64")
       << " operations exceeds the cap of " << limits.lifted_carrier;
    fail(Errc::CapacityExceeded, os.str());
  }
  auto cells = checked_pow(*carrier, static_cast<std::uint64_t>(m));
  const std::uint64_t cell_cap =
      std::min(limits.table_entries, kMaxTableEntries);
  if (!cells || *cells > cell_cap) {
    std::ostringstream os;
    os << "lifted table of " << (cells ? std::to_string(*cells) : ">2^64")
       << " cells exceeds the " << cell_cap << " cell ceiling";
    fail(Errc::CapacityExceeded, os.str());
  }
  std::vector<Operation> basis;
  basis.reserve(static_cast<std::size_t>(*carrier));
  for (OpIndex i = 0; i < *carrier; ++i)
    basis.push_back(operation_from_index(component_arity, f.order(), i));
  const std::size_t comp_cells = basis.front().size();

  std::vector<Symbol> out(static_cast<std::size_t>(*cells));
  detail::for_each_chunk(
      *cells, jobs, [&](int, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> comp(static_cast<std::size_t>(m));
        for (std::uint64_t cell = begin; cell < end; ++cell) {
          std::uint64_t rest = cell;
          for (int j = m - 1; j >= 0; --j) {
            comp[static_cast<std::size_t>(j)] = rest % *carrier;
            rest /= *carrier;
          }
          // canonical index of superpose(f, components), without building
          // the intermediate operation
          std::uint64_t idx = 0;
          for (std::size_t c = 0; c < comp_cells; ++c) {
            std::size_t flat = 0;
            for (int j = 0; j < m; ++j)
              flat = flat * static_cast<std::size_t>(q) +
                     static_cast<std::size_t>(
                         basis[static_cast<std::size_t>(comp[
                             static_cast<std::size_t>(j)])].at(c));
            idx = idx * q + static_cast<std::uint64_t>(f.at(flat));
          }
          out[static_cast<std::size_t>(cell)] = static_cast<Symbol>(idx);
        }
      });

  LiftedGroupoid lifted{m, f.order(), component_arity, *carrier,
                        Operation(m, static_cast<int>(*carrier),
                                  std::move(out))};
  return lifted;
}

bool is_distributive_over(const Operation& asterisk, const Operation& star,
                          Side side) {
  require_binary(asterisk, "the candidate operation");
  require_binary(star, "the base operation");
  require_same_order(asterisk, star);
  const Symbol n = static_cast<Symbol>(star.order());
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      for (Symbol c = 0; c < n; ++c) {
        if (asterisk.eval({a, star.eval({b, c})}) !=
            star.eval({asterisk.eval({a, b}), asterisk.eval({a, c})}))
          return false;
        if (side == Side::Both &&
            asterisk.eval({star.eval({a, b}), c}) !=
                star.eval({asterisk.eval({a, c}), asterisk.eval({b, c})}))
          return false;
      }
  return true;
}

std::vector<Operation> mult_set(const Operation& star, Side side,
                                const Limits& limits, int jobs) {
  require_binary(star, "the base operation");
  auto total = operation_count(2, star.order());
  if (!total || *total > limits.enumeration_candidates) {
    std::ostringstream os;
    os << "scanning " << (total ? std::to_string(*total) : ">2^64")
       << " binary operations exceeds the cap of "
       << limits.enumeration_candidates;
    fail(Errc::CapacityExceeded, os.str());
  }
  const int chunks = detail::chunk_count(*total, jobs);
  std::vector<std::vector<Operation>> parts(
      static_cast<std::size_t>(chunks));
  detail::for_each_chunk(
      *total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
          Operation cand = operation_from_index(2, star.order(), i);
          if (is_distributive_over(cand, star, side))
            parts[static_cast<std::size_t>(chunk)].push_back(
                std::move(cand));
        }
      });
  std::vector<Operation> out;
  for (auto& part : parts)
    for (Operation& op : part) out.push_back(std::move(op));
  return out;
}

HadamardCycle iterate_hadamard_cycle(const Operation& star) {
  require_binary(star, "the iterated operation");
  if (!star.is_quasigroup())
    fail(Errc::NotAQuasigroup,
         "iteration is defined for quasigroup operations");
  if (!operation_count(2, star.order()))
    fail(Errc::CapacityExceeded,
         "trajectory indices do not fit in 64 bits at this order");
  HadamardCycle cycle;
  std::map<OpIndex, std::uint64_t> seen;
  Operation current = star;
  seen[canonical_index(current)] = 0;
  cycle.trajectory.push_back(canonical_index(current));
  for (;;) {
    Operation next = superpose(star, {current, current});
    const OpIndex idx = canonical_index(next);
    auto it = seen.find(idx);
    if (it != seen.end()) {
      cycle.preperiod = it->second;
      cycle.period = cycle.trajectory.size() - it->second;
      return cycle;
    }
    seen[idx] = cycle.trajectory.size();
    cycle.trajectory.push_back(idx);
    current = std::move(next);
  }
}

}  // namespace hqp
