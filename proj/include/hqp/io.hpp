#pragma once

#include <string>
#include <vector>

#include "hqp/limits.hpp"
#include "hqp/operation.hpp"
#include "hqp/transforms.hpp"

namespace hqp {

// Text format: '#' starts a comment running to end of line; first content
// line is "m n"; then exactly n^m whitespace-separated 1-based entries in
// flat order (first argument most significant); nothing else.
Operation parse_operation_file(const std::string& text,
                               const Limits& limits = Limits{});

// Canonical form: "m n" header, then n^(m-1) lines of n 1-based entries.
// parse_operation_file(write_operation_file(op)) == op.
std::string write_operation_file(const Operation& op);

// Accepts one-line image notation ("2 3 1", commas optional) or cycle
// notation ("(2 3 5)"; a lone digit run like "(235)" splits into digits
// when the order is at most 9; fixed points omissible; cycles must be
// disjoint).  Symbols are 1-based in the text, 0-based in the result.
Permutation parse_permutation(const std::string& text, int order);

const std::vector<std::string>& fixture_names();

// Embedded worked-example tables, keyed by the conventional names listed
// by fixture_names().
Operation load_fixture(const std::string& name);

}  // namespace hqp
