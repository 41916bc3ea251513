#include "hqp/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hqp/error.hpp"

namespace hqp {

void validate_permutation(const Permutation& perm, int order) {
  if (perm.size() != static_cast<std::size_t>(order)) {
    std::ostringstream os;
    os << "permutation lists " << perm.size() << " images for " << order
       << " symbols";
    fail(Errc::NotAPermutation, os.str());
  }
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  for (Symbol v : perm) {
    if (v < 0 || v >= order) {
      std::ostringstream os;
      os << "image " << v << " outside 0.." << order - 1;
      fail(Errc::NotAPermutation, os.str());
    }
    if (seen[static_cast<std::size_t>(v)]) {
      std::ostringstream os;
      os << "image " << v << " repeats";
      fail(Errc::NotAPermutation, os.str());
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation identity_permutation(int order) {
  Permutation perm(static_cast<std::size_t>(order));
  std::iota(perm.begin(), perm.end(), 0);
  return perm;
}

Permutation inverse_permutation(const Permutation& perm) {
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[static_cast<std::size_t>(perm[i])] = static_cast<Symbol>(i);
  return inv;
}

Operation apply_isotopism(const Operation& op, const Isotopism& iso) {
  const int m = op.arity();
  if (iso.maps.size() != static_cast<std::size_t>(m) + 1) {
    std::ostringstream os;
    os << "isotopism needs " << m + 1 << " permutations, got "
       << iso.maps.size();
    fail(Errc::ArityMismatch, os.str());
  }
  for (const Permutation& p : iso.maps) validate_permutation(p, op.order());
  const auto n = static_cast<std::size_t>(op.order());
  std::vector<Symbol> out(op.size());
  std::vector<Symbol> args(static_cast<std::size_t>(m));
  for (std::size_t flat = 0; flat < op.size(); ++flat) {
    op.decode_flat(flat, args);
    std::size_t dest = 0;
    for (int j = 0; j < m; ++j)
      dest = dest * n +
             static_cast<std::size_t>(
                 iso.maps[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(args[
                             static_cast<std::size_t>(j)])]);
    out[dest] = iso.maps[static_cast<std::size_t>(m)]
                        [static_cast<std::size_t>(op.at(flat))];
  }
  return Operation(m, op.order(), std::move(out));
}

Operation post_compose(const Operation& op, const Permutation& pi) {
  validate_permutation(pi, op.order());
  std::vector<Symbol> out(op.size());
  for (std::size_t i = 0; i < op.size(); ++i)
    out[i] = pi[static_cast<std::size_t>(op.at(i))];
  return Operation(op.arity(), op.order(), std::move(out));
}

Operation conjugate(const Operation& op, const Permutation& sigma) {
  const int m = op.arity();
  validate_permutation(sigma, m + 1);
  const auto n = static_cast<std::size_t>(op.order());
  constexpr Symbol kUnset = -1;
  std::vector<Symbol> out(op.size(), kUnset);
  std::vector<Symbol> tuple(static_cast<std::size_t>(m) + 1);
  bool conflict = false;
  std::size_t conflict_cell = 0;
  for (std::size_t flat = 0; flat < op.size(); ++flat) {
    op.decode_flat(flat, std::span<Symbol>(tuple.data(),
                                           static_cast<std::size_t>(m)));
    tuple[static_cast<std::size_t>(m)] = op.at(flat);
    std::size_t cell = 0;
    for (int j = 0; j < m; ++j)
      cell = cell * n +
             static_cast<std::size_t>(
                 tuple[static_cast<std::size_t>(sigma[
                     static_cast<std::size_t>(j)])]);
    const Symbol value =
        tuple[static_cast<std::size_t>(sigma[static_cast<std::size_t>(m)])];
    if (out[cell] != kUnset && out[cell] != value) {
      if (!conflict) conflict_cell = cell;
      conflict = true;
      continue;
    }
    out[cell] = value;
  }
  auto describe_cell = [&](std::size_t cell) {
    std::vector<Symbol> args(static_cast<std::size_t>(m));
    for (int j = m - 1; j >= 0; --j) {
      args[static_cast<std::size_t>(j)] = static_cast<Symbol>(cell % n);
      cell /= n;
    }
    std::ostringstream os;
    os << "(";
    for (int j = 0; j < m; ++j)
      os << (j ? "," : "") << args[static_cast<std::size_t>(j)] + 1;
    os << ")";
    return os.str();
  };
  for (std::size_t cell = 0; cell < out.size(); ++cell) {
    if (out[cell] == kUnset) {
      std::ostringstream os;
      os << "the permuted relation leaves cell " << describe_cell(cell)
         << " undefined";
      fail(Errc::NotTotal, os.str());
    }
  }
  // unreachable while |relation| == cell count, kept for safety
  if (conflict) {
    std::ostringstream os;
    os << "the permuted relation assigns two values at cell "
       << describe_cell(conflict_cell);
    fail(Errc::NotFunctional, os.str());
  }
  return Operation(m, op.order(), std::move(out));
}

bool is_isomorphism(const Operation& a, const Operation& b,
                    const Permutation& pi) {
  if (a.arity() != b.arity() || a.order() != b.order()) return false;
  validate_permutation(pi, a.order());
  const int m = a.arity();
  const auto n = static_cast<std::size_t>(a.order());
  std::vector<Symbol> args(static_cast<std::size_t>(m));
  for (std::size_t flat = 0; flat < a.size(); ++flat) {
    a.decode_flat(flat, args);
    std::size_t dest = 0;
    for (int j = 0; j < m; ++j)
      dest = dest * n +
             static_cast<std::size_t>(
                 pi[static_cast<std::size_t>(args[
                     static_cast<std::size_t>(j)])]);
    if (b.at(dest) != pi[static_cast<std::size_t>(a.at(flat))]) return false;
  }
  return true;
}

namespace {

// Backtracking with unit propagation: whenever every argument of a tuple
// has an assigned image, the image of the tuple's value is forced.
struct IsoSearch {
  const Operation& a;
  const Operation& b;
  int n;
  Permutation img;
  std::vector<char> used;
  std::vector<Symbol> trail;

  IsoSearch(const Operation& a_in, const Operation& b_in)
      : a(a_in),
        b(b_in),
        n(a_in.order()),
        img(static_cast<std::size_t>(n), -1),
        used(static_cast<std::size_t>(n), 0) {}

  bool assign(Symbol x, Symbol y) {
    if (img[static_cast<std::size_t>(x)] >= 0)
      return img[static_cast<std::size_t>(x)] == y;
    if (used[static_cast<std::size_t>(y)]) return false;
    img[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = 1;
    trail.push_back(x);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const Symbol x = trail.back();
      trail.pop_back();
      used[static_cast<std::size_t>(img[static_cast<std::size_t>(x)])] = 0;
      img[static_cast<std::size_t>(x)] = -1;
    }
  }

  bool propagate() {
    const int m = a.arity();
    std::vector<Symbol> args(static_cast<std::size_t>(m));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t flat = 0; flat < a.size(); ++flat) {
        a.decode_flat(flat, args);
        std::size_t dest = 0;
        bool ready = true;
        for (int j = 0; j < m && ready; ++j) {
          const Symbol y =
              img[static_cast<std::size_t>(args[static_cast<std::size_t>(j)])];
          if (y < 0) {
            ready = false;
          } else {
            dest = dest * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(y);
          }
        }
        if (!ready) continue;
        const Symbol forced = b.at(dest);
        const Symbol value = a.at(flat);
        const Symbol current = img[static_cast<std::size_t>(value)];
        if (current >= 0) {
          if (current != forced) return false;
        } else {
          if (!assign(value, forced)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool dfs() {
    Symbol x = -1;
    for (Symbol i = 0; i < n; ++i) {
      if (img[static_cast<std::size_t>(i)] < 0) {
        x = i;
        break;
      }
    }
    if (x < 0) return true;
    for (Symbol y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      const std::size_t mark = trail.size();
      if (assign(x, y) && propagate() && dfs()) return true;
      undo_to(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> find_isomorphism(const Operation& a,
                                            const Operation& b,
                                            const Limits& limits) {
  if (a.arity() != b.arity()) {
    std::ostringstream os;
    os << "arities differ: " << a.arity() << " vs " << b.arity();
    fail(Errc::ArityMismatch, os.str());
  }
  if (a.order() != b.order()) {
    std::ostringstream os;
    os << "orders differ: " << a.order() << " vs " << b.order();
    fail(Errc::OrderMismatch, os.str());
  }
  if (a.order() > limits.isomorphism_order) {
    std::ostringstream os;
    os << "order " << a.order() << " exceeds the search cap of "
       << limits.isomorphism_order;
    fail(Errc::CapacityExceeded, os.str());
  }
  IsoSearch search(a, b);
  if (!search.dfs()) return std::nullopt;
  if (!is_isomorphism(a, b, search.img))
    fail(Errc::PreconditionFailed, "internal: unverified witness");
  return search.img;
}

}  // namespace hqp
