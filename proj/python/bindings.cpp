#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/io.hpp"
#include "ultragrowth/lambdanorms.hpp"
#include "ultragrowth/matrices.hpp"
#include "ultragrowth/oscillator.hpp"
#include "ultragrowth/relations.hpp"
#include "ultragrowth/report.hpp"
#include "ultragrowth/seqcore.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ultragrowth;

namespace {

// reports go through their JSON form so Python sees plain dicts
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

RunConfig config(int truncation) {
  RunConfig c;
  c.truncation = truncation;
  return c;
}

WeightMatrix matrix_from(const py::dict& entries, const std::string& name) {
  std::map<double, LogSequence> m;
  for (auto [k, v] : entries) m.emplace(k.cast<double>(), v.cast<LogSequence>());
  return WeightMatrix(std::move(m), name);
}

py::dict matrix_to(const WeightMatrix& M) {
  py::dict d;
  for (const auto& [l, seq] : M.entries()) d[py::float_(l)] = seq;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Growth conditions for weight sequences, weight functions and weight matrices";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("status", [](const Verdict& v) { return std::string(to_string(v.status)); })
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("counterexample", &Verdict::counterexample)
      .def_property_readonly("window", [](const Verdict& v) { return py::make_tuple(v.window_lo, v.window_hi); })
      .def_readonly("detail", &Verdict::detail)
      .def_property_readonly("holds", &Verdict::holds)
      .def("to_dict", [](const Verdict& v) { return to_py(to_json(v)); })
      .def("__repr__", [](const Verdict& v) {
        return "<Verdict " + std::string(to_string(v.status)) + ">";
      });

  py::class_<LogSequence>(m, "LogSequence")
      .def(py::init([](std::vector<double> logm, std::string name) {
             return LogSequence(std::move(logm), std::move(name));
           }),
           py::arg("log_values"), py::arg("name") = "sequence")
      .def_property_readonly("log_values", [](const LogSequence& s) {
        return std::vector<double>(s.logm().begin(), s.logm().end());
      })
      .def_property_readonly("truncation", &LogSequence::truncation)
      .def_property_readonly("name", &LogSequence::name)
      .def_property_readonly("is_exotic", &LogSequence::is_exotic)
      .def("__len__", &LogSequence::size)
      .def("__getitem__", [](const LogSequence& s, std::size_t p) {
        if (p >= s.size()) throw py::index_error();
        return s[p];
      })
      .def("to_dict", [](const LogSequence& s) { return to_py(to_json(s)); });

  m.def("gevrey", &make_gevrey, py::arg("s"), py::arg("truncation"),
        "log M_p = s log p!, p = 0..truncation");

  py::class_<WeightFn>(m, "Weight")
      .def(py::init([](const std::string& spec, int truncation) { return parse_weight_spec(spec, truncation); }),
           py::arg("spec"), py::arg("truncation") = 4096)
      .def("__call__", &WeightFn::operator())
      .def_property_readonly("spec", &WeightFn::spec)
      .def("__repr__", [](const WeightFn& w) { return "<Weight " + w.spec() + ">"; });

  m.def("check_sequence_condition",
        [](const LogSequence& s, const std::string& cond) {
          return check_sequence_condition(s, sequence_condition_from_string(cond));
        },
        py::arg("sequence"), py::arg("condition"));
  m.def("check_weight_condition",
        [](const WeightFn& w, const std::string& cond) {
          return check_weight_condition(w, weight_condition_from_string(cond));
        },
        py::arg("weight"), py::arg("condition"));
  m.def("classify_triviality",
        [](const WeightFn& w, const std::string& c) {
          return std::string(to_string(classify_triviality(w, class_case_from_string(c)).result));
        },
        py::arg("weight"), py::arg("case"));

  m.def("omega", [](const LogSequence& s, double t) { return omega_of_sequence(s, t).value; },
        py::arg("sequence"), py::arg("t"));
  m.def("sequence_of_omega", [](const WeightFn& w, int P) { return sequence_of_omega(w, P); },
        py::arg("weight"), py::arg("truncation"));
  m.def("young_conjugate", [](const WeightFn& w, double s) { return young_conjugate(w, s); },
        py::arg("weight"), py::arg("s"));
  m.def("matrix_of_weight",
        [](const WeightFn& w, std::vector<double> lambdas, int P) {
          return matrix_to(matrix_of_weight(w, std::move(lambdas), P));
        },
        py::arg("weight"), py::arg("lambdas"), py::arg("truncation"),
        "dict lambda -> LogSequence");
  m.def("check_matrix_condition",
        [](const py::dict& entries, const std::string& cond) {
          return check_matrix_condition(matrix_from(entries, "matrix"),
                                        matrix_condition_from_string(cond));
        },
        py::arg("matrix"), py::arg("condition"));
  m.def("relate_matrices",
        [](const py::dict& a, const py::dict& b, const std::string& mode) {
          return relate_matrices(matrix_from(a, "a"), matrix_from(b, "b"),
                                 matrix_mode_from_string(mode));
        },
        py::arg("a"), py::arg("b"), py::arg("mode") = "roumieu");

  m.def("seq_relate",
        [](const LogSequence& a, const LogSequence& b, const std::string& rel) {
          return to_py(to_json(seq_relate(a, b, relation_from_string(rel))));
        },
        py::arg("a"), py::arg("b"), py::arg("relation") = "preceq");
  m.def("crosscheck_transfer",
        [](const LogSequence& a, const LogSequence& b) { return crosscheck_transfer(a, b); },
        py::arg("a"), py::arg("b"));

  m.def("oscillate",
        [](const std::string& target, int Q, int J) {
          auto t = parse_sequence_spec(target);
          const auto r = build(plan(*t, Q, J), t);
          Json j = to_json(r);
          for (const auto& [k, v] : verify(r)) j["checks"][k] = to_json(v);
          return to_py(j);
        },
        py::arg("target"), py::arg("Q") = 3, py::arg("stages") = 8);

  m.def("lambda_norm",
        [](const py::dict& coefficients, const WeightFn& w, const std::string& mode, int j) {
          const auto c = coefficients_from_json(Json::parse(py::module_::import("json").attr("dumps")(coefficients).cast<std::string>()), "coefficients");
          return to_py(to_json(lambda_norm(c, w, {norm_kind_from_string(mode), j})));
        },
        py::arg("coefficients"), py::arg("weight"), py::arg("mode") = "roumieu", py::arg("j") = 1);
  m.def("empirical_domination",
        [](const WeightFn& w, const WeightFn& v, int j) {
          return to_py(to_json(empirical_domination(w, v, j)));
        },
        py::arg("w"), py::arg("v"), py::arg("j") = 1);

  m.def("run_suite",
        [](const std::string& name, int truncation) {
          return to_py(to_json(run_suite(name, config(truncation))));
        },
        py::arg("name"), py::arg("truncation") = 4096);
}
