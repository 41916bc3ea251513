#include "hqp/orthogonality.hpp"

#include <algorithm>
#include <sstream>

#include "hqp/error.hpp"
#include "hqp/parallel.hpp"
#include "hqp/superposition.hpp"

namespace hqp {

void validate_operation_set(const OperationSet& s) {
  if (s.empty())
    fail(Errc::PreconditionFailed, "an operation set cannot be empty");
  const auto m = static_cast<int>(s.size());
  for (const Operation& op : s) {
    if (op.arity() != m) {
      std::ostringstream os;
      os << "a set of " << m << " operations needs arity " << m
         << " members, found arity " << op.arity();
      fail(Errc::ArityMismatch, os.str());
    }
    if (op.order() != s.front().order()) {
      std::ostringstream os;
      os << "orders differ: " << s.front().order() << " vs " << op.order();
      fail(Errc::OrderMismatch, os.str());
    }
  }
}

namespace {

// Joint-evaluation injectivity with one member replaced; slot == s.size()
// means no replacement.  seen must hold s[0].size() zeroed bytes.
bool orthogonal_with(const OperationSet& s, std::size_t slot,
                     const Operation* g, std::vector<char>& seen) {
  const auto n = static_cast<std::size_t>(s.front().order());
  const std::size_t cells = s.front().size();
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t key = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      const Operation& member = (j == slot && g) ? *g : s[j];
      key = key * n + static_cast<std::size_t>(member.at(cell));
    }
    if (seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

void require_member_shape(const OperationSet& s, const Operation& g) {
  if (g.arity() != static_cast<int>(s.size())) {
    std::ostringstream os;
    os << "candidate arity " << g.arity() << " does not match the set size "
       << s.size();
    fail(Errc::ArityMismatch, os.str());
  }
  if (g.order() != s.front().order()) {
    std::ostringstream os;
    os << "orders differ: " << s.front().order() << " vs " << g.order();
    fail(Errc::OrderMismatch, os.str());
  }
}

void require_orthogonal_base(const OperationSet& s) {
  std::vector<char> seen(s.front().size());
  if (!orthogonal_with(s, s.size(), nullptr, seen))
    fail(Errc::NotOrthogonalBase, "the base set is not orthogonal");
}

bool contains_with_buffer(const OperationSet& s, const Operation& g,
                          std::vector<char>& seen) {
  for (std::size_t slot = 0; slot < s.size(); ++slot)
    if (!orthogonal_with(s, slot, &g, seen)) return false;
  return true;
}

}  // namespace

bool is_orthogonal_set(const OperationSet& s) {
  validate_operation_set(s);
  std::vector<char> seen(s.front().size());
  return orthogonal_with(s, s.size(), nullptr, seen);
}

bool ort_contains(const OperationSet& s, const Operation& g) {
  validate_operation_set(s);
  require_member_shape(s, g);
  require_orthogonal_base(s);
  std::vector<char> seen(s.front().size());
  return contains_with_buffer(s, g, seen);
}

std::vector<Operation> enumerate_ort(const OperationSet& s,
                                     const Limits& limits, int jobs,
                                     bool allow_long) {
  validate_operation_set(s);
  require_orthogonal_base(s);
  const auto m = static_cast<int>(s.size());
  const int n = s.front().order();
  auto total = operation_count(m, n);
  if (!total) {
    std::ostringstream os;
    os << "the arity " << m << ", order " << n
       << " candidate space does not fit in 64 bits";
    fail(Errc::CapacityExceeded, os.str());
  }
  if (*total > limits.enumeration_candidates && !allow_long) {
    std::ostringstream os;
    os << "scanning " << *total << " candidates exceeds the cap of "
       << limits.enumeration_candidates
       << " (pass the long-run flag to scan anyway)";
    fail(Errc::CapacityExceeded, os.str());
  }
  const int chunks = detail::chunk_count(*total, jobs);
  std::vector<std::vector<Operation>> parts(static_cast<std::size_t>(chunks));
  detail::for_each_chunk(
      *total, jobs, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        std::vector<char> seen(s.front().size());
        for (std::uint64_t i = begin; i < end; ++i) {
          Operation cand = operation_from_index(m, n, i);
          if (contains_with_buffer(s, cand, seen))
            parts[static_cast<std::size_t>(chunk)].push_back(
                std::move(cand));
        }
      });
  std::vector<Operation> out;
  for (auto& part : parts)
    for (Operation& op : part) out.push_back(std::move(op));
  return out;
}

namespace {

bool census_feasible(int arity, int order) {
  if (order <= 1) return true;
  if (order == 2) return arity <= 16;
  if (arity == 1) return order <= 8;
  if (arity == 2) return order <= 5;
  if (arity == 3) return order <= 3;
  return false;
}

// Latin-hypercube backtracker: fills cells in flat order, pruning with a
// used-symbol bitmask per axis-parallel line.
struct HypercubeSearch {
  int m;
  int n;
  std::size_t cells;
  std::vector<std::size_t> stride;
  std::vector<std::vector<std::uint32_t>> used;
  std::vector<Symbol> grid;
  std::uint64_t count = 0;
  const std::function<void(const Operation&)>* visit = nullptr;

  HypercubeSearch(int arity, int order) : m(arity), n(order) {
    cells = 1;
    for (int i = 0; i < m; ++i) cells *= static_cast<std::size_t>(n);
    stride.resize(static_cast<std::size_t>(m));
    std::size_t s = cells / static_cast<std::size_t>(n);
    for (int i = 0; i < m; ++i) {
      stride[static_cast<std::size_t>(i)] = s;
      s /= static_cast<std::size_t>(n);
    }
    used.assign(static_cast<std::size_t>(m),
                std::vector<std::uint32_t>(
                    cells / static_cast<std::size_t>(n), 0));
    grid.assign(cells, 0);
  }

  std::size_t line_id(int axis, std::size_t flat) const {
    const std::size_t p = stride[static_cast<std::size_t>(axis)];
    return (flat / (p * static_cast<std::size_t>(n))) * p + flat % p;
  }

  void place(std::size_t cell, std::uint32_t bit, bool on) {
    for (int axis = 0; axis < m; ++axis) {
      auto& mask = used[static_cast<std::size_t>(axis)][line_id(axis, cell)];
      if (on)
        mask |= bit;
      else
        mask &= ~bit;
    }
  }

  bool blocked(std::size_t cell, std::uint32_t bit) const {
    for (int axis = 0; axis < m; ++axis)
      if (used[static_cast<std::size_t>(axis)][line_id(axis, cell)] & bit)
        return true;
    return false;
  }

  void rec(std::size_t cell) {
    if (cell == cells) {
      ++count;
      if (visit) (*visit)(Operation(m, n, grid));
      return;
    }
    for (Symbol v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (blocked(cell, bit)) continue;
      place(cell, bit, true);
      grid[cell] = v;
      rec(cell + 1);
      place(cell, bit, false);
    }
  }

  // Search restricted to grid[0] == first, for branch-parallel runs.
  void rec_with_first(Symbol first) {
    const std::uint32_t bit = std::uint32_t{1} << first;
    place(0, bit, true);
    grid[0] = first;
    rec(1);
    place(0, bit, false);
  }
};

}  // namespace

std::uint64_t for_each_quasigroup(
    int arity, int order, const std::function<void(const Operation&)>& visit,
    const Limits& limits, int jobs) {
  if (arity < 1) fail(Errc::PreconditionFailed, "arity must be at least 1");
  if (order < 1) fail(Errc::PreconditionFailed, "order must be at least 1");
  (void)limits;
  if (!census_feasible(arity, order)) {
    std::ostringstream os;
    os << "enumerating arity " << arity << ", order " << order
       << " quasigroups is outside the feasible range";
    fail(Errc::CapacityExceeded, os.str());
  }
  if (jobs <= 1 || order == 1) {
    HypercubeSearch search(arity, order);
    if (visit) search.visit = &visit;
    search.rec(0);
    return search.count;
  }
  // one branch per first-cell symbol; branch order equals canonical order,
  // so buffered results concatenate deterministically
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(order), 0);
  std::vector<std::vector<Operation>> buffers(
      static_cast<std::size_t>(order));
  detail::for_each_chunk(
      static_cast<std::uint64_t>(order), jobs,
      [&](int, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t v = begin; v < end; ++v) {
          HypercubeSearch search(arity, order);
          std::function<void(const Operation&)> buffer_visit;
          if (visit) {
            buffer_visit = [&buffers, v](const Operation& op) {
              buffers[static_cast<std::size_t>(v)].push_back(op);
            };
            search.visit = &buffer_visit;
          }
          search.rec_with_first(static_cast<Symbol>(v));
          counts[static_cast<std::size_t>(v)] = search.count;
        }
      });
  std::uint64_t count = 0;
  for (std::uint64_t c : counts) count += c;
  if (visit)
    for (const auto& buffer : buffers)
      for (const Operation& op : buffer) visit(op);
  return count;
}

std::vector<Operation> enumerate_quasigroups(int arity, int order,
                                             const Limits& limits,
                                             int jobs) {
  std::vector<Operation> out;
  for_each_quasigroup(
      arity, order, [&out](const Operation& op) { out.push_back(op); },
      limits, jobs);
  return out;
}

std::uint64_t quasigroup_count(int arity, int order, const Limits& limits,
                               int jobs) {
  return for_each_quasigroup(arity, order, nullptr, limits, jobs);
}

Operation solve_for_f(const Operation& h, const OperationSet& s) {
  validate_operation_set(s);
  require_member_shape(s, h);
  require_orthogonal_base(s);
  const auto n = static_cast<std::size_t>(h.order());
  const std::size_t cells = h.size();
  std::vector<Symbol> out(cells, -1);
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t joint = 0;
    for (const Operation& g : s)
      joint = joint * n + static_cast<std::size_t>(g.at(cell));
    out[joint] = h.at(cell);
  }
  // orthogonality makes the joint map bijective, so every cell is written
  return Operation(h.arity(), h.order(), std::move(out));
}

TransversalReport transversal_family(const Operation& f,
                                     const std::vector<Operation>& gs) {
  if (gs.size() != static_cast<std::size_t>(f.arity())) {
    std::ostringstream os;
    os << "the outer operation has arity " << f.arity() << " but "
       << gs.size() << " components were given";
    fail(Errc::ArityMismatch, os.str());
  }
  if (!f.is_quasigroup())
    fail(Errc::PreconditionFailed, "the outer operation is not a quasigroup");
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].arity() != gs.front().arity()) {
      std::ostringstream os;
      os << "components mix arities " << gs.front().arity() << " and "
         << gs[i].arity();
      fail(Errc::ArityMismatch, os.str());
    }
    if (gs[i].order() != f.order()) {
      std::ostringstream os;
      os << "orders differ: " << f.order() << " vs " << gs[i].order();
      fail(Errc::OrderMismatch, os.str());
    }
    if (!gs[i].is_quasigroup()) {
      std::ostringstream os;
      os << "component " << i + 1 << " is not a quasigroup";
      fail(Errc::PreconditionFailed, os.str());
    }
  }
  const int comp_arity = gs.front().arity();
  const auto n = static_cast<std::size_t>(f.order());
  TransversalReport report;
  std::vector<Symbol> args(static_cast<std::size_t>(comp_arity));
  auto rest_count = checked_pow(static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(comp_arity - 1));
  for (int pos = 0; pos < comp_arity; ++pos) {
    for (std::uint64_t rest = 0; rest < *rest_count; ++rest) {
      TransversalLine line;
      line.position = pos;
      line.fixed.resize(static_cast<std::size_t>(comp_arity - 1));
      std::uint64_t digits = rest;
      for (int i = comp_arity - 2; i >= 0; --i) {
        line.fixed[static_cast<std::size_t>(i)] =
            static_cast<Symbol>(digits % n);
        digits /= n;
      }
      for (std::size_t x = 0; x < n; ++x) {
        int k = 0;
        for (int i = 0; i < comp_arity; ++i) {
          args[static_cast<std::size_t>(i)] =
              (i == pos) ? static_cast<Symbol>(x)
                         : line.fixed[static_cast<std::size_t>(k++)];
        }
        Cell cell;
        cell.reserve(gs.size());
        for (const Operation& g : gs) cell.push_back(g.eval(args));
        line.cells.push_back(std::move(cell));
      }
      line.transversal = is_latin_transversal(f, line.cells);
      if (!line.transversal && report.all_transversal) {
        report.all_transversal = false;
        report.first_failure = report.lines.size();
      }
      report.lines.push_back(std::move(line));
    }
  }
  return report;
}

BijectionReport verify_bijection(const OperationSet& s, const Limits& limits,
                                 int jobs) {
  validate_operation_set(s);
  require_orthogonal_base(s);
  const auto m = static_cast<int>(s.size());
  const int n = s.front().order();
  if (!operation_count(m, n)) {
    std::ostringstream os;
    os << "canonical indices of arity " << m << ", order " << n
       << " operations do not fit in 64 bits";
    fail(Errc::CapacityExceeded, os.str());
  }
  BijectionReport report;
  const std::vector<Operation> quasigroups =
      enumerate_quasigroups(m, n, limits, jobs);
  report.quasigroup_count = quasigroups.size();

  std::vector<Operation> images;
  images.reserve(quasigroups.size());
  for (const Operation& f : quasigroups) images.push_back(superpose(f, s));

  std::vector<char> seen(s.front().size());
  report.all_in_ort = true;
  for (const Operation& img : images)
    if (!contains_with_buffer(s, img, seen)) {
      report.all_in_ort = false;
      break;
    }

  std::vector<OpIndex> image_indices;
  image_indices.reserve(images.size());
  for (const Operation& img : images)
    image_indices.push_back(canonical_index(img));
  std::vector<OpIndex> sorted = image_indices;
  std::ranges::sort(sorted);
  report.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  const std::vector<Operation> ort = enumerate_ort(s, limits, jobs);
  report.ort_count = ort.size();
  report.surjective = true;
  for (const Operation& member : ort)
    if (!std::ranges::binary_search(sorted, canonical_index(member))) {
      report.surjective = false;
      break;
    }

  report.roundtrip_ok = true;
  for (std::size_t i = 0; i < quasigroups.size(); ++i)
    if (!(solve_for_f(images[i], s) == quasigroups[i])) {
      report.roundtrip_ok = false;
      break;
    }
  return report;
}

}  // namespace hqp
