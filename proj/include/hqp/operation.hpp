#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hqp {

// Symbols are 0-based internally; every text format and printed table uses
// 1-based symbols, converted at the I/O boundary.
using Symbol = std::int32_t;

// Position of an operation in the canonical ordering of all operations of a
// given arity and order (its table read as base-`order` digits, entry 0 most
// significant).
using OpIndex = std::uint64_t;

// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

// Number of `arity`-ary operations on `order` symbols: order^(order^arity).
// nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> operation_count(int arity, int order);

// A finitary operation on {0, ..., order-1} stored as a dense flat table.
// The flat index of (a_1, ..., a_m) is sum a_i * order^(m-i), so a_1 is the
// most significant coordinate and the table lists results in row-major
// order.
class Operation {
 public:
  Operation(int arity, int order, std::vector<Symbol> table);

  // Builds from 1-based entries, as they appear in files and worked tables.
  static Operation from_entries_1based(int arity, int order,
                                       const std::vector<Symbol>& entries);

  int arity() const { return arity_; }
  int order() const { return order_; }
  std::size_t size() const { return table_.size(); }
  const std::vector<Symbol>& table() const { return table_; }

  Symbol at(std::size_t flat) const { return table_[flat]; }
  Symbol eval(std::span<const Symbol> args) const;
  Symbol eval(std::initializer_list<Symbol> args) const;

  std::size_t flat_index(std::span<const Symbol> args) const;
  // Writes the argument tuple at `flat` into out (out.size() == arity()).
  void decode_flat(std::size_t flat, std::span<Symbol> out) const;

  // Distinct values taken by the table, ascending.
  std::vector<Symbol> image() const;

  // True iff every unary line section (fix all arguments but one) is a
  // permutation of the symbols.
  bool is_quasigroup() const;

  bool operator==(const Operation&) const = default;

 private:
  int arity_ = 0;
  int order_ = 0;
  std::vector<Symbol> table_;
};

using Cell = std::vector<Symbol>;
using CellSet = std::vector<Cell>;

// True iff `cells` has exactly `order` cells, the cells share no coordinate
// value in any position, and `op` takes pairwise distinct values on them.
bool is_latin_transversal(const Operation& op, const CellSet& cells);

OpIndex canonical_index(const Operation& op);
Operation operation_from_index(int arity, int order, OpIndex index);

}  // namespace hqp
