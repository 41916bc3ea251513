#include "hqp/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hqp/error.hpp"

namespace hqp {

namespace {

struct Scanner {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_noise() {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '#') {
        while (pos < text.size() && text[pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  // Reads the next integer token; false at end of input.
  bool next_int(long long& value, int& at_line, int& at_col) {
    skip_noise();
    if (pos >= text.size()) return false;
    at_line = line;
    at_col = col;
    bool negative = false;
    if (text[pos] == '-') {
      negative = true;
      advance();
    }
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::ostringstream os;
      os << "expected an integer at line " << at_line << " column "
         << at_col;
      fail(Errc::SyntaxError, os.str());
    }
    value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000) {
        std::ostringstream os;
        os << "integer too large at line " << at_line << " column "
           << at_col;
        fail(Errc::SyntaxError, os.str());
      }
      advance();
    }
    if (pos < text.size() &&
        !std::isspace(static_cast<unsigned char>(text[pos])) &&
        text[pos] != '#') {
      std::ostringstream os;
      os << "unexpected character '" << text[pos] << "' at line " << line
         << " column " << col;
      fail(Errc::SyntaxError, os.str());
    }
    if (negative) value = -value;
    return true;
  }
};

}  // namespace

Operation parse_operation_file(const std::string& text,
                               const Limits& limits) {
  Scanner scan{text};
  long long arity = 0;
  long long order = 0;
  int at_line = 0;
  int at_col = 0;
  if (!scan.next_int(arity, at_line, at_col))
    fail(Errc::SyntaxError, "empty input: expected an \"m n\" header");
  if (!scan.next_int(order, at_line, at_col))
    fail(Errc::SyntaxError, "missing order in the \"m n\" header");
  if (arity < 1 || arity > 32) {
    std::ostringstream os;
    os << "arity " << arity << " outside 1..32 at line " << at_line
       << " column " << at_col;
    fail(Errc::SyntaxError, os.str());
  }
  if (order < 1) {
    std::ostringstream os;
    os << "order " << order << " must be positive at line " << at_line
       << " column " << at_col;
    fail(Errc::SyntaxError, os.str());
  }
  auto cells = checked_pow(static_cast<std::uint64_t>(order),
                           static_cast<std::uint64_t>(arity));
  const std::uint64_t cap = std::min(limits.table_entries, kMaxTableEntries);
  if (!cells || *cells > cap) {
    std::ostringstream os;
    os << "a table of arity " << arity << " and order " << order
       << " exceeds the " << cap << " cell guard";
    fail(Errc::CapacityExceeded, os.str());
  }
  std::vector<Symbol> entries;
  entries.reserve(static_cast<std::size_t>(*cells));
  long long value = 0;
  while (entries.size() < *cells) {
    if (!scan.next_int(value, at_line, at_col)) {
      std::ostringstream os;
      os << "expected " << *cells << " entries, found " << entries.size();
      fail(Errc::LengthMismatch, os.str());
    }
    if (value < 1 || value > order) {
      std::ostringstream os;
      os << "entry " << value << " outside 1.." << order << " at line "
         << at_line << " column " << at_col;
      fail(Errc::SymbolOutOfRange, os.str());
    }
    entries.push_back(static_cast<Symbol>(value));
  }
  if (scan.next_int(value, at_line, at_col)) {
    std::ostringstream os;
    os << "trailing entry at line " << at_line << " column " << at_col
       << ": expected exactly " << *cells << " entries";
    fail(Errc::LengthMismatch, os.str());
  }
  return Operation::from_entries_1based(static_cast<int>(arity),
                                        static_cast<int>(order), entries);
}

std::string write_operation_file(const Operation& op) {
  std::ostringstream os;
  os << op.arity() << " " << op.order() << "\n";
  const auto n = static_cast<std::size_t>(op.order());
  for (std::size_t i = 0; i < op.size(); ++i) {
    os << op.at(i) + 1;
    os << ((i % n == n - 1) ? "\n" : " ");
  }
  return os.str();
}

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) {
        out.push_back(current);
        current.clear();
      }
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

Symbol symbol_from_token(const std::string& token, int order) {
  long long value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      std::ostringstream os;
      os << "'" << token << "' is not a symbol";
      fail(Errc::NotAPermutation, os.str());
    }
    value = value * 10 + (c - '0');
    if (value > 1'000'000) break;
  }
  if (value < 1 || value > order) {
    std::ostringstream os;
    os << "symbol " << token << " outside 1.." << order;
    fail(Errc::NotAPermutation, os.str());
  }
  return static_cast<Symbol>(value - 1);
}

Permutation parse_cycles(const std::string& text, int order) {
  Permutation perm = identity_permutation(order);
  std::vector<char> moved(static_cast<std::size_t>(order), 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      fail(Errc::SyntaxError, "expected '(' in cycle notation");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos)
      fail(Errc::SyntaxError, "unclosed '(' in cycle notation");
    std::vector<std::string> tokens =
        tokens_of(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    std::vector<Symbol> cycle;
    if (tokens.size() == 1 && tokens[0].size() > 1 && order <= 9) {
      // a lone digit run like "235" abbreviates the cycle (2 3 5)
      for (char c : tokens[0])
        cycle.push_back(symbol_from_token(std::string(1, c), order));
    } else {
      for (const std::string& token : tokens)
        cycle.push_back(symbol_from_token(token, order));
    }
    if (cycle.empty())
      fail(Errc::SyntaxError, "empty cycle in cycle notation");
    for (Symbol v : cycle) {
      if (moved[static_cast<std::size_t>(v)]) {
        std::ostringstream os;
        os << "symbol " << v + 1 << " appears in two cycles";
        fail(Errc::NotAPermutation, os.str());
      }
      moved[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      perm[static_cast<std::size_t>(cycle[i])] =
          cycle[(i + 1) % cycle.size()];
    any = true;
  }
  if (!any) fail(Errc::SyntaxError, "empty permutation text");
  validate_permutation(perm, order);
  return perm;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int order) {
  const std::size_t first =
      text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    fail(Errc::SyntaxError, "empty permutation text");
  if (text[first] == '(') return parse_cycles(text.substr(first), order);
  const std::vector<std::string> tokens = tokens_of(text);
  if (tokens.size() != static_cast<std::size_t>(order)) {
    std::ostringstream os;
    os << "one-line form lists " << tokens.size() << " images for " << order
       << " symbols";
    fail(Errc::NotAPermutation, os.str());
  }
  Permutation perm;
  perm.reserve(tokens.size());
  for (const std::string& token : tokens)
    perm.push_back(symbol_from_token(token, order));
  validate_permutation(perm, order);
  return perm;
}

}  // namespace hqp
