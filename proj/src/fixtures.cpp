#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "hqp/error.hpp"
#include "hqp/io.hpp"

namespace hqp {

namespace {

struct FixtureData {
  int arity;
  int order;
  std::vector<Symbol> entries;  // 1-based
};

// Worked-example tables; ternary tables are stored in flat order with the
// first argument most significant, which interleaves the printed
// per-layer arrays.
const std::map<std::string, FixtureData>& fixture_tables() {
  static const std::map<std::string, FixtureData> tables = {
      {"example-2.1-f",
       {3, 3, {1, 2, 3, 2, 1, 3, 3, 2, 1, 2, 1, 3, 1, 2, 3, 1, 3, 3,
               3, 2, 1, 1, 3, 3, 1, 2, 1}}},
      {"example-2.1-g",
       {3, 3, {2, 1, 3, 2, 1, 3, 2, 2, 1, 2, 1, 3, 1, 2, 3, 1, 3, 3,
               3, 2, 1, 1, 3, 3, 1, 2, 2}}},
      {"example-3.3-star", {2, 3, {1, 2, 3, 1, 2, 3, 1, 1, 1}}},
      {"example-3.3-circ", {2, 3, {1, 2, 1, 2, 2, 1, 1, 2, 2}}},
      {"example-5.2-star",
       {2, 5, {1, 5, 4, 3, 2, 3, 2, 1, 5, 4, 5, 4, 3, 2, 1,
               2, 1, 5, 4, 3, 4, 3, 2, 1, 5}}},
      {"example-5.2-circ",
       {2, 5, {1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5,
               1, 2, 3, 4, 5, 1, 2, 3, 4, 5}}},
      {"example-5.2-ast",
       {2, 5, {1, 4, 2, 5, 3, 4, 2, 5, 3, 1, 2, 5, 3, 1, 4,
               5, 3, 1, 4, 2, 3, 1, 4, 2, 5}}},
      {"z2", {2, 2, {1, 2, 2, 1}}},
      {"z3", {2, 3, {1, 2, 3, 2, 3, 1, 3, 1, 2}}},
      {"proj1", {2, 3, {1, 1, 1, 2, 2, 2, 3, 3, 3}}},
      {"proj2", {2, 3, {1, 2, 3, 1, 2, 3, 1, 2, 3}}},
  };
  return tables;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, data] : fixture_tables()) out.push_back(name);
    for (int k = 1; k <= 16; ++k)
      out.push_back("example-5.1-g" + std::to_string(k));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return names;
}

Operation load_fixture(const std::string& name) {
  const auto& tables = fixture_tables();
  if (auto it = tables.find(name); it != tables.end())
    return Operation::from_entries_1based(it->second.arity,
                                          it->second.order,
                                          it->second.entries);
  // example-5.1-gK: the K-th binary operation on two symbols in canonical
  // order, 1-based K
  constexpr const char* prefix = "example-5.1-g";
  if (name.starts_with(prefix)) {
    const std::string tail = name.substr(std::string(prefix).size());
    if (!tail.empty() && tail.size() <= 2 &&
        tail.find_first_not_of("0123456789") == std::string::npos) {
      const int k = std::stoi(tail);
      if (k >= 1 && k <= 16)
        return operation_from_index(2, 2, static_cast<OpIndex>(k - 1));
    }
  }
  std::ostringstream os;
  os << "no fixture named \"" << name << "\"";
  fail(Errc::UnknownFixture, os.str());
}

}  // namespace hqp
