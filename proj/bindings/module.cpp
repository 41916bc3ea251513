// Python surface.  Symbols, table entries, and permutation images are
// 1-based here, matching the file format and the command line tool; the
// C++ core is 0-based throughout.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <hqp/error.hpp>
#include <hqp/identities.hpp>
#include <hqp/io.hpp>
#include <hqp/operation.hpp>
#include <hqp/orthogonality.hpp>
#include <hqp/superposition.hpp>
#include <hqp/term.hpp>
#include <hqp/transforms.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hqp;

namespace {

std::vector<Symbol> up(const std::vector<Symbol>& xs) {
    std::vector<Symbol> out;
    out.reserve(xs.size());
    for (Symbol x : xs) out.push_back(x + 1);
    return out;
}

std::vector<Symbol> down_args(const Operation& op,
                              const std::vector<Symbol>& args) {
    std::vector<Symbol> out;
    out.reserve(args.size());
    for (Symbol a : args) out.push_back(a - 1);
    (void)op;
    return out;
}

Permutation down_perm(const std::vector<Symbol>& images) {
    Permutation p;
    p.reserve(images.size());
    for (Symbol v : images) p.push_back(v - 1);
    validate_permutation(p, static_cast<int>(images.size()));
    return p;
}

std::vector<Symbol> up_perm(const Permutation& p) { return up(p); }

Side side_from(const std::string& name) {
    if (name == "both") return Side::Both;
    if (name == "left") return Side::Left;
    fail(Errc::PreconditionFailed, "side must be \"both\" or \"left\"");
}

py::dict report_dict(const IdentityReport& r) {
    py::list per;
    for (const auto& xs : r.per_position) per.append(up(xs));
    py::dict d;
    d["per_position"] = per;
    d["intersection"] = up(r.intersection);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Finite m-ary groupoids as dense tables: superposition, lifting, "
        "identities, orthogonality";

    py::register_exception<Error>(m, "Error");

    py::class_<Operation>(m, "Operation")
        .def(py::init([](int arity, int order, std::vector<Symbol> entries) {
                 return Operation::from_entries_1based(arity, order,
                                                       std::move(entries));
             }),
             py::arg("arity"), py::arg("order"), py::arg("entries"))
        .def_property_readonly("arity", &Operation::arity)
        .def_property_readonly("order", &Operation::order)
        .def_property_readonly("entries",
                               [](const Operation& op) { return up(op.table()); })
        .def("__call__",
             [](const Operation& op, const std::vector<Symbol>& args) {
                 return op.eval(down_args(op, args)) + 1;
             })
        .def("is_quasigroup", &Operation::is_quasigroup)
        .def("image", [](const Operation& op) { return up(op.image()); })
        .def(py::self == py::self)
        .def("__repr__", [](const Operation& op) {
            std::ostringstream os;
            os << "Operation(arity=" << op.arity() << ", order=" << op.order()
               << ")";
            return os.str();
        });

    m.def("canonical_index",
          [](const Operation& op) { return canonical_index(op); });
    m.def("operation_from_index", [](int arity, int order, OpIndex index) {
        return operation_from_index(arity, order, index);
    });

    m.def("identity_report",
          [](const Operation& op) { return report_dict(identity_report(op)); });
    m.def("identity_set",
          [](const Operation& op) { return up(identity_set(op)); });
    m.def("inverses",
          [](const Operation& op, Symbol a) { return up(inverses(op, a - 1)); });
    m.def("has_unique_inverses",
          [](const Operation& op) { return has_unique_inverses(op); });

    m.def("constant_map", [](int arity, int order, Symbol c) {
        return constant_map(arity, order, c - 1);
    });
    m.def("superpose", [](const Operation& f, const std::vector<Operation>& gs) {
        return superpose(f, gs);
    });
    m.def("hadamard_product",
          [](const Operation& star, const Operation& a, const Operation& b) {
              HadamardResult r = hadamard_product(star, a, b);
              return py::make_tuple(r.op, r.certified);
          });
    m.def("tri_right", [](const Operation& a, const Operation& star) {
        return tri_right(a, star);
    });
    m.def("tri_symmetric", [](const Operation& a, const Operation& star) {
        return tri_symmetric(a, star);
    });
    m.def("self_superpose", [](const Operation& f, const Operation& g) {
        return self_superpose(f, g);
    });

    py::class_<LiftedGroupoid>(m, "LiftedGroupoid")
        .def_readonly("base_arity", &LiftedGroupoid::base_arity)
        .def_readonly("base_order", &LiftedGroupoid::base_order)
        .def_readonly("component_arity", &LiftedGroupoid::component_arity)
        .def_readonly("carrier_size", &LiftedGroupoid::carrier_size)
        .def_readonly("table", &LiftedGroupoid::table)
        .def("element",
             [](const LiftedGroupoid& l, Symbol k) { return l.element(k - 1); })
        .def("label",
             [](const LiftedGroupoid& l, Symbol k) { return l.label(k - 1); });
    m.def(
        "lift_operation",
        [](const Operation& f, int component_arity, int jobs) {
            return lift_operation(f, component_arity, Limits{}, jobs);
        },
        py::arg("f"), py::arg("component_arity"), py::arg("jobs") = 1);

    m.def(
        "is_distributive_over",
        [](const Operation& asterisk, const Operation& star,
           const std::string& side) {
            return is_distributive_over(asterisk, star, side_from(side));
        },
        py::arg("asterisk"), py::arg("star"), py::arg("side") = "both");
    m.def(
        "mult_set",
        [](const Operation& star, const std::string& side, int jobs) {
            return mult_set(star, side_from(side), Limits{}, jobs);
        },
        py::arg("star"), py::arg("side") = "both", py::arg("jobs") = 1);
    m.def("iterate_hadamard_cycle", [](const Operation& star) {
        HadamardCycle cycle = iterate_hadamard_cycle(star);
        py::dict d;
        d["preperiod"] = cycle.preperiod;
        d["period"] = cycle.period;
        d["trajectory"] = cycle.trajectory;
        return d;
    });

    m.def("apply_isotopism",
          [](const Operation& op,
             const std::vector<std::vector<Symbol>>& perms) {
              Isotopism iso;
              for (const auto& images : perms) iso.maps.push_back(down_perm(images));
              return apply_isotopism(op, iso);
          });
    m.def("post_compose",
          [](const Operation& op, const std::vector<Symbol>& images) {
              return post_compose(op, down_perm(images));
          });
    m.def("conjugate",
          [](const Operation& op, const std::vector<Symbol>& sigma) {
              return conjugate(op, down_perm(sigma));
          });
    m.def("is_isomorphism", [](const Operation& a, const Operation& b,
                               const std::vector<Symbol>& pi) {
        return is_isomorphism(a, b, down_perm(pi));
    });
    m.def("find_isomorphism",
          [](const Operation& a, const Operation& b) -> py::object {
              auto w = find_isomorphism(a, b);
              if (!w) return py::none();
              return py::cast(up_perm(*w));
          });

    m.def(
        "satisfies_identity",
        [](const Operation& op, const std::string& identity, int jobs) {
            auto [lhs, rhs] = parse_identity(identity, op.arity());
            IdentityCheckResult r = satisfies_identity(op, lhs, rhs, Limits{}, jobs);
            py::dict d;
            d["holds"] = r.holds;
            d["counterexample"] = up(r.counterexample);
            return d;
        },
        py::arg("op"), py::arg("identity"), py::arg("jobs") = 1);
    m.def("lifted_identity_check", [](const Operation& f, int component_arity,
                                      const std::string& identity) {
        auto [lhs, rhs] = parse_identity(identity, f.arity());
        LiftedIdentityCheckResult r =
            lifted_identity_check(f, component_arity, lhs, rhs);
        py::dict d;
        d["holds"] = r.holds;
        d["exhaustive"] = r.exhaustive;
        d["counterexample"] = r.counterexample;
        return d;
    });

    m.def("is_orthogonal_set", [](const std::vector<Operation>& s) {
        return is_orthogonal_set(s);
    });
    m.def("ort_contains",
          [](const std::vector<Operation>& s, const Operation& g) {
              return ort_contains(s, g);
          });
    m.def(
        "enumerate_ort",
        [](const std::vector<Operation>& s, int jobs, bool force) {
            return enumerate_ort(s, Limits{}, jobs, force);
        },
        py::arg("s"), py::arg("jobs") = 1, py::arg("force") = false);
    m.def(
        "enumerate_quasigroups",
        [](int arity, int order, int jobs) {
            return enumerate_quasigroups(arity, order, Limits{}, jobs);
        },
        py::arg("arity"), py::arg("order"), py::arg("jobs") = 1);
    m.def(
        "quasigroup_count",
        [](int arity, int order, int jobs) {
            return quasigroup_count(arity, order, Limits{}, jobs);
        },
        py::arg("arity"), py::arg("order"), py::arg("jobs") = 1);
    m.def("solve_for_f",
          [](const Operation& h, const std::vector<Operation>& s) {
              return solve_for_f(h, s);
          });
    m.def("transversal_family",
          [](const Operation& f, const std::vector<Operation>& gs) {
              TransversalReport r = transversal_family(f, gs);
              py::list lines;
              for (const TransversalLine& line : r.lines) {
                  py::dict ld;
                  ld["position"] = line.position + 1;
                  ld["fixed"] = up(line.fixed);
                  py::list cells;
                  for (const Cell& cell : line.cells) cells.append(up(cell));
                  ld["cells"] = cells;
                  ld["transversal"] = line.transversal;
                  lines.append(ld);
              }
              py::dict d;
              d["all_transversal"] = r.all_transversal;
              d["lines"] = lines;
              if (!r.all_transversal) d["first_failure"] = r.first_failure;
              return d;
          });
    m.def(
        "verify_bijection",
        [](const std::vector<Operation>& s, int jobs) {
            BijectionReport r = verify_bijection(s, Limits{}, jobs);
            py::dict d;
            d["quasigroup_count"] = r.quasigroup_count;
            d["ort_count"] = r.ort_count;
            d["injective"] = r.injective;
            d["all_in_ort"] = r.all_in_ort;
            d["surjective"] = r.surjective;
            d["roundtrip_ok"] = r.roundtrip_ok;
            d["verified"] = r.verified();
            return d;
        },
        py::arg("s"), py::arg("jobs") = 1);

    m.def("parse_operation_file",
          [](const std::string& text) { return parse_operation_file(text); });
    m.def("write_operation_file",
          [](const Operation& op) { return write_operation_file(op); });
    m.def("parse_permutation", [](const std::string& text, int order) {
        return up_perm(parse_permutation(text, order));
    });
    m.def("fixture_names", [] { return fixture_names(); });
    m.def("load_fixture",
          [](const std::string& name) { return load_fixture(name); });
}
