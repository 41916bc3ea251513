// hqp: command line access to the multary-groupoid library.
//
// Exit codes: 0 success (and "yes" answers), 1 a checked property is false,
// 2 usage or input errors, 3 a capacity guard refused the computation.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hqp/error.hpp"
#include "hqp/identities.hpp"
#include "hqp/io.hpp"
#include "hqp/limits.hpp"
#include "hqp/operation.hpp"
#include "hqp/orthogonality.hpp"
#include "hqp/superposition.hpp"
#include "hqp/term.hpp"
#include "hqp/transforms.hpp"

namespace {

using nlohmann::json;

struct Global {
  int jobs = 1;
  std::uint64_t guard_bytes = 0;
  bool emit_json = false;

  hqp::Limits limits() const {
    hqp::Limits lim;
    if (guard_bytes > 0) {
      const std::uint64_t entries =
          std::max<std::uint64_t>(1, guard_bytes / sizeof(hqp::Symbol));
      lim.table_entries = std::min(entries, hqp::kMaxTableEntries);
    }
    return lim;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) hqp::fail(hqp::Errc::SyntaxError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A token names an operation file if such a file exists, otherwise a
// built-in fixture.
hqp::Operation load_operand(const std::string& token,
                            const hqp::Limits& limits) {
  if (std::filesystem::exists(token))
    return hqp::parse_operation_file(read_file(token), limits);
  return hqp::load_fixture(token);
}

void write_table(const hqp::Operation& op, const std::string& out_path) {
  const std::string text = hqp::write_operation_file(op);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) hqp::fail(hqp::Errc::SyntaxError, "cannot write " + out_path);
  out << text;
}

std::string set_text(const std::vector<hqp::Symbol>& symbols) {
  std::string out = "{";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(symbols[i] + 1);
  }
  return out + "}";
}

json set_json(const std::vector<hqp::Symbol>& symbols) {
  json arr = json::array();
  for (hqp::Symbol v : symbols) arr.push_back(v + 1);
  return arr;
}

json entries_json(const hqp::Operation& op) {
  json arr = json::array();
  for (hqp::Symbol v : op.table()) arr.push_back(v + 1);
  return arr;
}

json table_json(const hqp::Operation& op) {
  return json{{"arity", op.arity()},
              {"order", op.order()},
              {"entries", entries_json(op)}};
}

void emit_table_result(const Global& global, const hqp::Operation& op,
                       const std::string& out_path, json extra = json()) {
  if (!out_path.empty()) write_table(op, out_path);
  if (global.emit_json) {
    json doc = table_json(op);
    if (!extra.is_null())
      for (auto& [key, value] : extra.items()) doc[key] = value;
    std::cout << doc.dump() << "\n";
  } else {
    if (!extra.is_null())
      for (auto& [key, value] : extra.items()) {
        std::cout << key << ": ";
        if (value.is_boolean())
          std::cout << (value.get<bool>() ? "yes" : "no");
        else
          std::cout << value.dump();
        std::cout << "\n";
      }
    if (out_path.empty()) std::cout << hqp::write_operation_file(op);
  }
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

// --perms takes the m+1 permutations separated by commas that are not
// inside a cycle's parentheses.
std::vector<std::string> split_permutation_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  out.push_back(current);
  return out;
}

int run_info(const Global& global, const std::string& operand) {
  const hqp::Operation op = load_operand(operand, global.limits());
  const hqp::IdentityReport ids = hqp::identity_report(op);
  const bool is_qg = op.is_quasigroup();
  std::vector<std::vector<hqp::Symbol>> inv;
  if (!ids.intersection.empty())
    for (hqp::Symbol a = 0; a < op.order(); ++a)
      inv.push_back(hqp::inverses(op, a));
  const bool unique = hqp::has_unique_inverses(op);
  if (global.emit_json) {
    json doc{{"arity", op.arity()},
             {"order", op.order()},
             {"quasigroup", is_qg},
             {"image", set_json(op.image())},
             {"identity_set", set_json(ids.intersection)},
             {"unique_inverses", unique}};
    json per = json::array();
    for (const auto& pos : ids.per_position) per.push_back(set_json(pos));
    doc["identity_sets"] = per;
    if (inv.empty()) {
      doc["inverses"] = nullptr;
    } else {
      json arr = json::array();
      for (const auto& set : inv) arr.push_back(set_json(set));
      doc["inverses"] = arr;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "arity: " << op.arity() << "\n";
    std::cout << "order: " << op.order() << "\n";
    std::cout << "quasigroup: " << yesno(is_qg) << "\n";
    std::cout << "image: " << set_text(op.image()) << "\n";
    for (std::size_t i = 0; i < ids.per_position.size(); ++i)
      std::cout << "I_" << i << ": " << set_text(ids.per_position[i])
                << "\n";
    std::cout << "identity set: " << set_text(ids.intersection) << "\n";
    if (inv.empty()) {
      std::cout << "inverses: none (empty identity set)\n";
    } else {
      for (std::size_t a = 0; a < inv.size(); ++a)
        std::cout << "Inv(" << a + 1 << "): " << set_text(inv[a]) << "\n";
    }
    std::cout << "unique inverses: " << yesno(unique) << "\n";
  }
  return 0;
}

int run_superpose(const Global& global, const std::vector<std::string>& ops,
                  const std::string& out_path) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation f = load_operand(ops.front(), limits);
  std::vector<hqp::Operation> gs;
  for (std::size_t i = 1; i < ops.size(); ++i)
    gs.push_back(load_operand(ops[i], limits));
  emit_table_result(global, hqp::superpose(f, gs), out_path);
  return 0;
}

int run_hadamard(const Global& global, const std::string& star_name,
                 const std::string& a_name, const std::string& b_name,
                 const std::string& out_path) {
  const hqp::Limits limits = global.limits();
  const hqp::HadamardResult result =
      hqp::hadamard_product(load_operand(star_name, limits),
                            load_operand(a_name, limits),
                            load_operand(b_name, limits));
  emit_table_result(global, result.op, out_path,
                    json{{"certified", result.certified}});
  return 0;
}

int run_lift(const Global& global, const std::string& operand,
             int component_arity, const std::string& out_path) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation f = load_operand(operand, limits);
  const hqp::LiftedGroupoid lifted =
      hqp::lift_operation(f, component_arity, limits, global.jobs);
  if (!out_path.empty()) write_table(lifted.table, out_path);
  if (global.emit_json) {
    json doc{{"base_arity", lifted.base_arity},
             {"base_order", lifted.base_order},
             {"component_arity", lifted.component_arity},
             {"carrier_size", lifted.carrier_size},
             {"entries", entries_json(lifted.table)}};
    std::cout << doc.dump() << "\n";
    return 0;
  }
  std::cout << "base arity: " << lifted.base_arity << "\n";
  std::cout << "base order: " << lifted.base_order << "\n";
  std::cout << "component arity: " << lifted.component_arity << "\n";
  std::cout << "carrier size: " << lifted.carrier_size << "\n";
  const auto n = static_cast<std::size_t>(lifted.table.order());
  for (std::size_t i = 0; i < lifted.table.size(); ++i) {
    std::cout << lifted.label(lifted.table.at(i));
    std::cout << ((i % n == n - 1) ? "\n" : " ");
  }
  return 0;
}

int run_conjugate(const Global& global, const std::string& operand,
                  const std::string& perm_text,
                  const std::string& out_path) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation op = load_operand(operand, limits);
  const hqp::Permutation sigma =
      hqp::parse_permutation(perm_text, op.arity() + 1);
  emit_table_result(global, hqp::conjugate(op, sigma), out_path);
  return 0;
}

int run_isotope(const Global& global, const std::string& operand,
                const std::string& perms_text, const std::string& out_path) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation op = load_operand(operand, limits);
  hqp::Isotopism iso;
  for (const std::string& part : split_permutation_list(perms_text))
    iso.maps.push_back(hqp::parse_permutation(part, op.order()));
  emit_table_result(global, hqp::apply_isotopism(op, iso), out_path);
  return 0;
}

int run_isomorphic(const Global& global, const std::string& a_name,
                   const std::string& b_name) {
  const hqp::Limits limits = global.limits();
  const auto witness = hqp::find_isomorphism(
      load_operand(a_name, limits), load_operand(b_name, limits), limits);
  if (global.emit_json) {
    json doc{{"isomorphic", witness.has_value()}};
    if (witness) {
      json arr = json::array();
      for (hqp::Symbol v : *witness) arr.push_back(v + 1);
      doc["witness"] = arr;
    } else {
      doc["witness"] = nullptr;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "isomorphic: " << yesno(witness.has_value()) << "\n";
    if (witness) {
      std::cout << "witness:";
      for (hqp::Symbol v : *witness) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  }
  return witness ? 0 : 1;
}

int run_identity_check(const Global& global, const std::string& operand,
                       const std::string& identity_text) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation op = load_operand(operand, limits);
  const auto [lhs, rhs] = hqp::parse_identity(identity_text, op.arity());
  const hqp::IdentityCheckResult result =
      hqp::satisfies_identity(op, lhs, rhs, limits, global.jobs);
  if (global.emit_json) {
    json doc{{"holds", result.holds}};
    doc["counterexample"] =
        result.holds ? json() : set_json(result.counterexample);
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "holds: " << yesno(result.holds) << "\n";
    if (!result.holds) {
      std::cout << "counterexample:";
      for (std::size_t i = 0; i < result.counterexample.size(); ++i)
        std::cout << " x" << i + 1 << "=" << result.counterexample[i] + 1;
      std::cout << "\n";
    }
  }
  return result.holds ? 0 : 1;
}

int run_lifted_identity_check(const Global& global,
                              const std::string& operand,
                              int component_arity,
                              const std::string& identity_text) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation op = load_operand(operand, limits);
  const auto [lhs, rhs] = hqp::parse_identity(identity_text, op.arity());
  const hqp::LiftedIdentityCheckResult result =
      hqp::lifted_identity_check(op, component_arity, lhs, rhs, limits);
  if (global.emit_json) {
    json doc{{"holds", result.holds}, {"exhaustive", result.exhaustive}};
    if (result.holds) {
      doc["counterexample"] = nullptr;
    } else {
      json arr = json::array();
      for (const hqp::Operation& g : result.counterexample)
        arr.push_back(table_json(g));
      doc["counterexample"] = arr;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "holds: " << yesno(result.holds) << "\n";
    std::cout << "exhaustive: " << yesno(result.exhaustive) << "\n";
    for (std::size_t i = 0; i < result.counterexample.size(); ++i) {
      std::cout << "counterexample x" << i + 1 << ":\n";
      std::cout << hqp::write_operation_file(result.counterexample[i]);
    }
  }
  return result.holds ? 0 : 1;
}

int run_orthogonal(const Global& global,
                   const std::vector<std::string>& names) {
  const hqp::Limits limits = global.limits();
  hqp::OperationSet s;
  for (const std::string& name : names)
    s.push_back(load_operand(name, limits));
  const bool ok = hqp::is_orthogonal_set(s);
  if (global.emit_json)
    std::cout << json{{"orthogonal", ok}}.dump() << "\n";
  else
    std::cout << "orthogonal: " << yesno(ok) << "\n";
  return ok ? 0 : 1;
}

int run_ort_count(const Global& global, const std::vector<std::string>& names,
                  bool list, bool force) {
  const hqp::Limits limits = global.limits();
  hqp::OperationSet s;
  for (const std::string& name : names)
    s.push_back(load_operand(name, limits));
  const std::vector<hqp::Operation> members =
      hqp::enumerate_ort(s, limits, global.jobs, force);
  if (global.emit_json) {
    json doc{{"count", members.size()}};
    if (list) {
      json arr = json::array();
      for (const hqp::Operation& g : members) {
        json entry = table_json(g);
        entry["index"] = hqp::canonical_index(g);
        arr.push_back(entry);
      }
      doc["members"] = arr;
    }
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << "count: " << members.size() << "\n";
    if (list)
      for (const hqp::Operation& g : members) {
        std::cout << "index: " << hqp::canonical_index(g) << "\n";
        std::cout << hqp::write_operation_file(g);
      }
  }
  return 0;
}

int run_census(const Global& global, int arity, int order) {
  const std::uint64_t count =
      hqp::quasigroup_count(arity, order, global.limits(), global.jobs);
  if (global.emit_json)
    std::cout << json{{"arity", arity}, {"order", order}, {"count", count}}
                     .dump()
              << "\n";
  else
    std::cout << "count: " << count << "\n";
  return 0;
}

int run_verify_theorem(const Global& global,
                       const std::vector<std::string>& names) {
  const hqp::Limits limits = global.limits();
  hqp::OperationSet s;
  for (const std::string& name : names)
    s.push_back(load_operand(name, limits));
  const hqp::BijectionReport report =
      hqp::verify_bijection(s, limits, global.jobs);
  if (global.emit_json) {
    std::cout << json{{"quasigroup_count", report.quasigroup_count},
                      {"ort_count", report.ort_count},
                      {"injective", report.injective},
                      {"all_in_ort", report.all_in_ort},
                      {"surjective", report.surjective},
                      {"roundtrip_ok", report.roundtrip_ok},
                      {"verified", report.verified()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "quasigroup count: " << report.quasigroup_count << "\n";
    std::cout << "ort count: " << report.ort_count << "\n";
    std::cout << "injective: " << yesno(report.injective) << "\n";
    std::cout << "all in ort: " << yesno(report.all_in_ort) << "\n";
    std::cout << "surjective: " << yesno(report.surjective) << "\n";
    std::cout << "roundtrip: " << yesno(report.roundtrip_ok) << "\n";
    std::cout << "verified: " << yesno(report.verified()) << "\n";
  }
  return report.verified() ? 0 : 1;
}

json line_json(const hqp::TransversalLine& line) {
  json fixed = json::array();
  for (hqp::Symbol v : line.fixed) fixed.push_back(v + 1);
  json cells = json::array();
  for (const hqp::Cell& cell : line.cells) {
    json tuple = json::array();
    for (hqp::Symbol v : cell) tuple.push_back(v + 1);
    cells.push_back(tuple);
  }
  return json{{"position", line.position + 1},
              {"fixed", fixed},
              {"cells", cells},
              {"transversal", line.transversal}};
}

std::string cell_text(const hqp::Cell& cell) {
  std::string out = "(";
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cell[i] + 1);
  }
  return out + ")";
}

int run_transversals(const Global& global,
                     const std::vector<std::string>& names) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation f = load_operand(names.front(), limits);
  std::vector<hqp::Operation> gs;
  for (std::size_t i = 1; i < names.size(); ++i)
    gs.push_back(load_operand(names[i], limits));
  const hqp::TransversalReport report = hqp::transversal_family(f, gs);
  if (global.emit_json) {
    json lines = json::array();
    for (const auto& line : report.lines) lines.push_back(line_json(line));
    std::cout << json{{"all_transversal", report.all_transversal},
                      {"lines", lines}}
                     .dump()
              << "\n";
  } else {
    std::cout << "all transversal: " << yesno(report.all_transversal)
              << "\n";
    if (!report.all_transversal) {
      const auto& line = report.lines[report.first_failure];
      std::cout << "first failure: varying slot " << line.position + 1
                << ", fixed";
      for (hqp::Symbol v : line.fixed) std::cout << " " << v + 1;
      std::cout << ", cells";
      for (const hqp::Cell& cell : line.cells)
        std::cout << " " << cell_text(cell);
      std::cout << "\n";
    }
  }
  return report.all_transversal ? 0 : 1;
}

int run_mult_set(const Global& global, const std::string& star_name,
                 bool left) {
  const hqp::Limits limits = global.limits();
  const hqp::Operation star = load_operand(star_name, limits);
  const std::vector<hqp::Operation> members = hqp::mult_set(
      star, left ? hqp::Side::Left : hqp::Side::Both, limits, global.jobs);
  if (global.emit_json) {
    json arr = json::array();
    for (const hqp::Operation& g : members) {
      json entry = table_json(g);
      entry["index"] = hqp::canonical_index(g);
      arr.push_back(entry);
    }
    std::cout << json{{"count", members.size()}, {"members", arr}}.dump()
              << "\n";
  } else {
    std::cout << "count: " << members.size() << "\n";
    for (const hqp::Operation& g : members) {
      std::cout << "index: " << hqp::canonical_index(g) << "\n";
      std::cout << hqp::write_operation_file(g);
    }
  }
  return 0;
}

int run_iterate_hadamard(const Global& global,
                         const std::string& star_name) {
  const hqp::HadamardCycle cycle = hqp::iterate_hadamard_cycle(
      load_operand(star_name, global.limits()));
  if (global.emit_json) {
    json arr = json::array();
    for (hqp::OpIndex idx : cycle.trajectory) arr.push_back(idx);
    std::cout << json{{"preperiod", cycle.preperiod},
                      {"period", cycle.period},
                      {"trajectory", arr}}
                     .dump()
              << "\n";
  } else {
    std::cout << "preperiod: " << cycle.preperiod << "\n";
    std::cout << "period: " << cycle.period << "\n";
    std::cout << "trajectory:";
    for (hqp::OpIndex idx : cycle.trajectory) std::cout << " " << idx;
    std::cout << "\n";
  }
  return 0;
}

int run_fixture(const Global& global, const std::string& name,
                const std::string& out_path) {
  emit_table_result(global, hqp::load_fixture(name), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Global global;
  CLI::App app{"finite multary groupoid and quasigroup toolkit"};
  app.require_subcommand(1);
  app.add_option("--jobs", global.jobs, "worker threads for enumerations")
      ->check(CLI::Range(1, 256));
  app.add_option("--guard", global.guard_bytes,
                 "table memory guard in bytes");
  app.add_flag("--json", global.emit_json, "machine readable output");

  int rc = 0;

  auto* info = app.add_subcommand("info", "structural report");
  {
    static std::string operand;
    info->add_option("operand", operand, "operation file or fixture name")
        ->required();
    info->callback([&] { rc = run_info(global, operand); });
  }

  auto* superpose_cmd =
      app.add_subcommand("superpose", "superpose F over G1 ... Gm");
  {
    static std::vector<std::string> names;
    static std::string out;
    superpose_cmd->add_option("operands", names, "F then its components")
        ->required()
        ->expected(-2);
    superpose_cmd->add_option("-o,--output", out, "write result table here");
    superpose_cmd->callback([&] { rc = run_superpose(global, names, out); });
  }

  auto* hadamard_cmd =
      app.add_subcommand("hadamard", "entrywise product STAR of A and B");
  {
    static std::string star, a, b, out;
    hadamard_cmd->add_option("star", star, "binary operation")->required();
    hadamard_cmd->add_option("a", a, "first factor")->required();
    hadamard_cmd->add_option("b", b, "second factor")->required();
    hadamard_cmd->add_option("-o,--output", out, "write result table here");
    hadamard_cmd->callback(
        [&] { rc = run_hadamard(global, star, a, b, out); });
  }

  auto* tri_right_cmd = app.add_subcommand(
      "tri-right", "derived operation (a,b) -> STAR(A(a,b), b)");
  {
    static std::string a, star, out;
    tri_right_cmd->add_option("a", a, "first operation")->required();
    tri_right_cmd->add_option("star", star, "second operation")->required();
    tri_right_cmd->add_option("-o,--output", out, "write result table here");
    tri_right_cmd->callback([&] {
      const hqp::Limits limits = global.limits();
      emit_table_result(global,
                        hqp::tri_right(load_operand(a, limits),
                                       load_operand(star, limits)),
                        out);
      rc = 0;
    });
  }

  auto* tri_sym_cmd = app.add_subcommand(
      "tri-sym", "derived operation (a,b) -> STAR(A(a,b), A(b,a))");
  {
    static std::string a, star, out;
    tri_sym_cmd->add_option("a", a, "first operation")->required();
    tri_sym_cmd->add_option("star", star, "second operation")->required();
    tri_sym_cmd->add_option("-o,--output", out, "write result table here");
    tri_sym_cmd->callback([&] {
      const hqp::Limits limits = global.limits();
      emit_table_result(global,
                        hqp::tri_symmetric(load_operand(a, limits),
                                           load_operand(star, limits)),
                        out);
      rc = 0;
    });
  }

  auto* plus_cmd =
      app.add_subcommand("plus", "F+G: superpose F over copies of G");
  {
    static std::string f, g, out;
    plus_cmd->add_option("f", f, "outer operation")->required();
    plus_cmd->add_option("g", g, "inner operation")->required();
    plus_cmd->add_option("-o,--output", out, "write result table here");
    plus_cmd->callback([&] {
      const hqp::Limits limits = global.limits();
      emit_table_result(global,
                        hqp::self_superpose(load_operand(f, limits),
                                            load_operand(g, limits)),
                        out);
      rc = 0;
    });
  }

  auto* lift_cmd = app.add_subcommand(
      "lift", "materialize the induced groupoid on component operations");
  {
    static std::string operand, out;
    static int component_arity = 0;
    lift_cmd->add_option("operand", operand, "operation to lift")
        ->required();
    lift_cmd
        ->add_option("--component-arity", component_arity,
                     "arity of the carrier operations")
        ->required()
        ->check(CLI::Range(1, 16));
    lift_cmd->add_option("-o,--output", out, "write carrier table here");
    lift_cmd->callback(
        [&] { rc = run_lift(global, operand, component_arity, out); });
  }

  auto* conjugate_cmd = app.add_subcommand(
      "conjugate", "permute the argument and result slots of the graph");
  {
    static std::string operand, perm, out;
    conjugate_cmd->add_option("operand", operand, "operation")->required();
    conjugate_cmd
        ->add_option("--perm", perm,
                     "permutation of the m+1 slots (images or cycles)")
        ->required();
    conjugate_cmd->add_option("-o,--output", out,
                              "write result table here");
    conjugate_cmd->callback(
        [&] { rc = run_conjugate(global, operand, perm, out); });
  }

  auto* isotope_cmd =
      app.add_subcommand("isotope", "apply per-slot symbol permutations");
  {
    static std::string operand, perms, out;
    isotope_cmd->add_option("operand", operand, "operation")->required();
    isotope_cmd
        ->add_option("--perms", perms,
                     "m+1 comma-separated permutations (last acts on the "
                     "result)")
        ->required();
    isotope_cmd->add_option("-o,--output", out, "write result table here");
    isotope_cmd->callback(
        [&] { rc = run_isotope(global, operand, perms, out); });
  }

  auto* isomorphic_cmd =
      app.add_subcommand("isomorphic", "search for an isomorphism A -> B");
  {
    static std::string a, b;
    isomorphic_cmd->add_option("a", a, "first operation")->required();
    isomorphic_cmd->add_option("b", b, "second operation")->required();
    isomorphic_cmd->callback([&] { rc = run_isomorphic(global, a, b); });
  }

  auto* identity_check_cmd = app.add_subcommand(
      "identity-check", "check a term identity over all assignments");
  {
    static std::string operand, identity;
    identity_check_cmd->add_option("operand", operand, "operation")
        ->required();
    identity_check_cmd
        ->add_option("identity", identity, "e.g. \"{x1,x2} = {x2,x1}\"")
        ->required();
    identity_check_cmd->callback(
        [&] { rc = run_identity_check(global, operand, identity); });
  }

  auto* lifted_identity_cmd = app.add_subcommand(
      "lifted-identity-check",
      "check a term identity over component operations");
  {
    static std::string operand, identity;
    static int component_arity = 0;
    lifted_identity_cmd->add_option("operand", operand, "operation")
        ->required();
    lifted_identity_cmd
        ->add_option("--component-arity", component_arity,
                     "arity of the carrier operations")
        ->required()
        ->check(CLI::Range(1, 16));
    lifted_identity_cmd
        ->add_option("identity", identity, "e.g. \"{x1,x2} = {x2,x1}\"")
        ->required();
    lifted_identity_cmd->callback([&] {
      rc = run_lifted_identity_check(global, operand, component_arity,
                                     identity);
    });
  }

  auto* orthogonal_cmd =
      app.add_subcommand("orthogonal", "joint-bijectivity test of a set");
  {
    static std::vector<std::string> names;
    orthogonal_cmd->add_option("operands", names, "G1 ... Gm")
        ->required()
        ->expected(-1);
    orthogonal_cmd->callback([&] { rc = run_orthogonal(global, names); });
  }

  auto* ort_count_cmd = app.add_subcommand(
      "ort-count", "count (and list) operations orthogonal to a set");
  {
    static std::vector<std::string> names;
    static bool list = false;
    static bool force = false;
    ort_count_cmd->add_option("operands", names, "S1 ... Sm")
        ->required()
        ->expected(-1);
    ort_count_cmd->add_flag("--list", list, "print every member");
    ort_count_cmd->add_flag("--force", force,
                            "scan even past the candidate guard");
    ort_count_cmd->callback(
        [&] { rc = run_ort_count(global, names, list, force); });
  }

  auto* census_cmd =
      app.add_subcommand("census", "count quasigroup operations");
  {
    static int arity = 0;
    static int order = 0;
    census_cmd->add_option("--arity", arity, "operation arity")
        ->required()
        ->check(CLI::Range(1, 16));
    census_cmd->add_option("--order", order, "symbol count")
        ->required()
        ->check(CLI::Range(1, 16));
    census_cmd->callback([&] { rc = run_census(global, arity, order); });
  }

  auto* verify_cmd = app.add_subcommand(
      "verify-theorem",
      "check the quasigroup <-> orthogonal-complement bijection for a set");
  {
    static std::vector<std::string> names;
    verify_cmd->add_option("operands", names, "S1 ... Sm")
        ->required()
        ->expected(-1);
    verify_cmd->callback([&] { rc = run_verify_theorem(global, names); });
  }

  auto* transversals_cmd = app.add_subcommand(
      "transversals", "per-line Latin-transversal report for F under gs");
  {
    static std::vector<std::string> names;
    transversals_cmd->add_option("operands", names, "F then G1 ... Gm")
        ->required()
        ->expected(-2);
    transversals_cmd->callback(
        [&] { rc = run_transversals(global, names); });
  }

  auto* mult_set_cmd = app.add_subcommand(
      "mult-set", "binary operations distributive over STAR");
  {
    static std::string star;
    static bool left = false;
    mult_set_cmd->add_option("star", star, "base operation")->required();
    mult_set_cmd->add_flag("--left", left,
                           "left distributivity only (default both sides)");
    mult_set_cmd->callback([&] { rc = run_mult_set(global, star, left); });
  }

  auto* iterate_cmd = app.add_subcommand(
      "iterate-hadamard", "entrywise self-product iteration of STAR");
  {
    static std::string star;
    iterate_cmd->add_option("star", star, "binary quasigroup")->required();
    iterate_cmd->callback([&] { rc = run_iterate_hadamard(global, star); });
  }

  auto* fixture_cmd =
      app.add_subcommand("fixture", "export a built-in example table");
  {
    static std::string name, out;
    fixture_cmd->add_option("name", name, "fixture name")->required();
    fixture_cmd->add_option("-o,--output", out, "write table here");
    fixture_cmd->callback([&] { rc = run_fixture(global, name, out); });
  }

  // Let --jobs / --guard / --json appear after the subcommand name too.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hqp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case hqp::Errc::CapacityExceeded:
        return 3;
      case hqp::Errc::NotFunctional:
      case hqp::Errc::NotTotal:
        return 1;
      default:
        return 2;
    }
  }
  return rc;
}
