#include "hqp/operation.hpp"

#include <algorithm>
#include <sstream>

#include "hqp/error.hpp"
#include "hqp/limits.hpp"

namespace hqp {

std::optional<std::uint64_t> checked_pow(std::uint64_t base,
                                         std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::optional<std::uint64_t> operation_count(int arity, int order) {
  if (arity < 1 || order < 1) return std::nullopt;
  auto cells = checked_pow(static_cast<std::uint64_t>(order),
                           static_cast<std::uint64_t>(arity));
  if (!cells) return std::nullopt;
  return checked_pow(static_cast<std::uint64_t>(order), *cells);
}

Operation::Operation(int arity, int order, std::vector<Symbol> table)
    : arity_(arity), order_(order), table_(std::move(table)) {
  if (arity_ < 1) fail(Errc::PreconditionFailed, "arity must be at least 1");
  if (order_ < 1) fail(Errc::PreconditionFailed, "order must be at least 1");
  auto cells = checked_pow(static_cast<std::uint64_t>(order_),
                           static_cast<std::uint64_t>(arity_));
  if (!cells || *cells > kMaxTableEntries) {
    std::ostringstream os;
    os << "a table of arity " << arity_ << " and order " << order_
       << " exceeds the " << kMaxTableEntries << " cell ceiling";
    fail(Errc::CapacityExceeded, os.str());
  }
  if (table_.size() != *cells) {
    std::ostringstream os;
    os << "expected " << *cells << " table entries, got " << table_.size();
    fail(Errc::LengthMismatch, os.str());
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 0 || table_[i] >= order_) {
      std::ostringstream os;
      os << "table entry " << i << " is " << table_[i]
         << ", outside 0.." << order_ - 1;
      fail(Errc::SymbolOutOfRange, os.str());
    }
  }
}

Operation Operation::from_entries_1based(int arity, int order,
                                         const std::vector<Symbol>& entries) {
  std::vector<Symbol> table(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1 || entries[i] > order) {
      std::ostringstream os;
      os << "entry " << i + 1 << " is " << entries[i] << ", outside 1.."
         << order;
      fail(Errc::SymbolOutOfRange, os.str());
    }
    table[i] = entries[i] - 1;
  }
  return Operation(arity, order, std::move(table));
}

std::size_t Operation::flat_index(std::span<const Symbol> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    std::ostringstream os;
    os << "expected " << arity_ << " arguments, got " << args.size();
    fail(Errc::ArityMismatch, os.str());
  }
  std::size_t flat = 0;
  for (Symbol a : args) {
    if (a < 0 || a >= order_) {
      std::ostringstream os;
      os << "argument " << a << " outside 0.." << order_ - 1;
      fail(Errc::SymbolOutOfRange, os.str());
    }
    flat = flat * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(a);
  }
  return flat;
}

Symbol Operation::eval(std::span<const Symbol> args) const {
  return table_[flat_index(args)];
}

Symbol Operation::eval(std::initializer_list<Symbol> args) const {
  return eval(std::span<const Symbol>(args.begin(), args.size()));
}

void Operation::decode_flat(std::size_t flat, std::span<Symbol> out) const {
  for (int i = arity_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<Symbol>(flat % static_cast<std::size_t>(order_));
    flat /= static_cast<std::size_t>(order_);
  }
}

std::vector<Symbol> Operation::image() const {
  std::vector<char> seen(static_cast<std::size_t>(order_), 0);
  for (Symbol v : table_) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<Symbol> out;
  for (Symbol v = 0; v < order_; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool Operation::is_quasigroup() const {
  const auto n = static_cast<std::size_t>(order_);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t tick = 0;
  // stride of axis i is order^(arity-1-i); a line along the axis visits
  // base + t*stride for t in [0, n).
  std::size_t stride = table_.size() / n;
  for (int axis = 0; axis < arity_; ++axis) {
    const std::size_t block = stride * n;
    for (std::size_t high = 0; high * block < table_.size(); ++high) {
      for (std::size_t low = 0; low < stride; ++low) {
        ++tick;
        const std::size_t base = high * block + low;
        for (std::size_t t = 0; t < n; ++t) {
          const auto v = static_cast<std::size_t>(table_[base + t * stride]);
          if (stamp[v] == tick) return false;
          stamp[v] = tick;
        }
      }
    }
    stride /= n;
  }
  return true;
}

bool is_latin_transversal(const Operation& op, const CellSet& cells) {
  const auto n = static_cast<std::size_t>(op.order());
  if (cells.size() != n) return false;
  for (const Cell& c : cells) {
    if (static_cast<int>(c.size()) != op.arity()) {
      std::ostringstream os;
      os << "cell has " << c.size() << " coordinates, operation arity is "
         << op.arity();
      fail(Errc::ArityMismatch, os.str());
    }
  }
  std::vector<char> seen(n, 0);
  for (int pos = 0; pos < op.arity(); ++pos) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const Cell& c : cells) {
      const Symbol v = c[static_cast<std::size_t>(pos)];
      if (v < 0 || v >= op.order()) {
        std::ostringstream os;
        os << "cell coordinate " << v << " outside 0.." << op.order() - 1;
        fail(Errc::SymbolOutOfRange, os.str());
      }
      if (seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (const Cell& c : cells) {
    const Symbol v = op.eval(std::span<const Symbol>(c.data(), c.size()));
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

OpIndex canonical_index(const Operation& op) {
  auto count = operation_count(op.arity(), op.order());
  if (!count) {
    std::ostringstream os;
    os << "canonical indices of arity " << op.arity() << ", order "
       << op.order() << " operations do not fit in 64 bits";
    fail(Errc::CapacityExceeded, os.str());
  }
  OpIndex index = 0;
  for (Symbol v : op.table())
    index = index * static_cast<OpIndex>(op.order()) +
            static_cast<OpIndex>(v);
  return index;
}

Operation operation_from_index(int arity, int order, OpIndex index) {
  if (arity < 1) fail(Errc::PreconditionFailed, "arity must be at least 1");
  if (order < 1) fail(Errc::PreconditionFailed, "order must be at least 1");
  auto count = operation_count(arity, order);
  if (!count) {
    std::ostringstream os;
    os << "canonical indices of arity " << arity << ", order " << order
       << " operations do not fit in 64 bits";
    fail(Errc::CapacityExceeded, os.str());
  }
  if (index >= *count) {
    std::ostringstream os;
    os << "index " << index << " outside 0.." << *count - 1;
    fail(Errc::IndexOutOfRange, os.str());
  }
  auto cells = checked_pow(static_cast<std::uint64_t>(order),
                           static_cast<std::uint64_t>(arity));
  std::vector<Symbol> table(static_cast<std::size_t>(*cells));
  for (std::size_t i = table.size(); i-- > 0;) {
    table[i] = static_cast<Symbol>(index % static_cast<OpIndex>(order));
    index /= static_cast<OpIndex>(order);
  }
  return Operation(arity, order, std::move(table));
}

}  // namespace hqp
