#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "rttkit/bethe.hpp"
#include "rttkit/chain.hpp"
#include "rttkit/errors.hpp"
#include "rttkit/qdet.hpp"
#include "rttkit/rtt.hpp"
#include "rttkit/scalar_product.hpp"
#include "rttkit/suites.hpp"

namespace py = pybind11;
using namespace rttkit;

// Rationals cross the boundary as "p/q" strings; the Python package wraps
// them in fractions.Fraction.

namespace {

std::vector<Scalar> parse_all(const std::vector<std::string>& xs) {
  std::vector<Scalar> out;
  for (const auto& x : xs) out.push_back(parse_scalar(x));
  return out;
}

std::vector<std::string> text_all(const std::vector<Scalar>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

BetheParams params(int n, const std::vector<std::vector<std::string>>& sets) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& set : sets) s.push_back(parse_all(set));
  return BetheParams(n, s);
}

std::shared_ptr<ChainRealization> make_chain(int n, const std::string& c, const std::vector<std::string>& z,
                                             const std::vector<std::string>& twist,
                                             const std::vector<std::string>& kinds) {
  std::vector<SiteKind> k;
  for (const auto& name : kinds) {
    if (name == "fundamental") k.push_back(SiteKind::Fundamental);
    else if (name == "conjugate") k.push_back(SiteKind::Conjugate);
    else throw DomainError("site kind must be 'fundamental' or 'conjugate', got '" + name + "'");
  }
  return std::make_shared<ChainRealization>(n, parse_scalar(c), parse_all(z), parse_all(twist), k);
}

/// Sparse operator as {(row, col): "p/q"}.
py::dict operator_dict(const SparseOperator& op) {
  py::dict d;
  for (std::size_t r = 0; r < op.dim(); ++r)
    for (const auto& e : op.row(r)) d[py::make_tuple(r, e.col)] = to_string(e.value);
  return d;
}

py::dict vector_dict(const StateVector& v) {
  py::dict d;
  for (const auto& [k, x] : v.entries()) d[py::int_(k)] = to_string(x);
  return d;
}

}  // namespace

PYBIND11_MODULE(_rttkit, m) {
  m.doc() = "Exact-rational RTT-algebra workbench";

  py::register_exception<Error>(m, "RttkitError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<ChainRealization, std::shared_ptr<ChainRealization>>(m, "Chain")
      .def(py::init(&make_chain), py::arg("n"), py::arg("c"), py::arg("z"), py::arg("twist") = std::vector<std::string>{},
           py::arg("kinds") = std::vector<std::string>{})
      .def_property_readonly("n", &ChainRealization::n)
      .def_property_readonly("dim", [](const ChainRealization& s) { return s.shape().dim; })
      .def("describe", &ChainRealization::describe)
      .def("entry", [](const ChainRealization& s, int i, int j, const std::string& u) {
        return operator_dict(s.entry(i, j, parse_scalar(u)));
      })
      .def("lambda_", [](const ChainRealization& s, int i, const std::string& u) {
        return to_string(s.lambda(i, parse_scalar(u)));
      })
      .def("hat_entry", [](const std::shared_ptr<ChainRealization>& s, int i, int j, const std::string& u) {
        return operator_dict(hatted_source(s)->entry(i, j, parse_scalar(u)));
      })
      .def("qdet", [](const ChainRealization& s, const std::string& u) {
        return operator_dict(qdet(s, parse_scalar(u)));
      })
      .def("rtt_residual", [](const ChainRealization& s, const std::string& u, const std::string& v) {
        const auto r = rtt_residual(s, parse_scalar(u), parse_scalar(v));
        py::dict d;
        d["passed"] = r.passed;
        d["tuples_checked"] = r.tuples_checked;
        d["detail"] = r.detail;
        return d;
      })
      .def("bethe_vector",
           [](const ChainRealization& s, const std::vector<std::vector<std::string>>& sets) {
             return vector_dict(evaluate(bethe_polynomial(params(s.n(), sets), s.c()), s));
           })
      .def("theorem1",
           [](const std::shared_ptr<ChainRealization>& s, const std::vector<std::vector<std::string>>& sets,
              bool dual) {
             Theorem1Options o;
             o.dual = dual;
             const auto r = verify_theorem1(*hatted_source(s), params(s->n(), sets), o);
             py::dict d;
             d["passed"] = r.passed;
             d["lhs"] = vector_dict(r.lhs);
             d["rhs"] = vector_dict(r.rhs);
             d["detail"] = r.detail;
             return d;
           },
           py::arg("sets"), py::arg("dual") = false);

  m.def("mu_map", [](int n, const std::vector<std::vector<std::string>>& sets, const std::string& c) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : mu_map(params(n, sets), parse_scalar(c)).sets) out.push_back(text_all(s));
    return out;
  });

  m.def(
      "w_table",
      [](int n, const std::vector<std::vector<std::string>>& x, const std::vector<std::vector<std::string>>& t,
         const std::string& c, std::uint64_t seed) {
        const Scalar cc = parse_scalar(c);
        const auto bx = params(n, x), bt = params(n, t);
        auto avoid = bx.all_points();
        for (const auto& p : bt.all_points()) avoid.push_back(p);
        py::gil_scoped_release release;
        return extract_w_table(bx, bt, cc, chain_ensemble(n, cc, avoid, Sampler(seed))).to_json();
      },
      py::arg("n"), py::arg("x"), py::arg("t"), py::arg("c") = "1", py::arg("seed") = 1);

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("suites", &RunConfig::suites)
      .def_readwrite("n", &RunConfig::n)
      .def_readwrite("l", &RunConfig::l)
      .def_property(
          "c", [](const RunConfig& r) { return to_string(r.c); },
          [](RunConfig& r, const std::string& c) { r.c = parse_scalar(c); })
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("bound", &RunConfig::bound)
      .def_readwrite("rtt_pairs", &RunConfig::rtt_pairs)
      .def_readwrite("qdet_points", &RunConfig::qdet_points)
      .def_readwrite("hat_points", &RunConfig::hat_points)
      .def_readwrite("gauss_points", &RunConfig::gauss_points)
      .def_readwrite("gauss_max_l", &RunConfig::gauss_max_l)
      .def_readwrite("theorem1_max_n2", &RunConfig::theorem1_max_n2)
      .def_readwrite("theorem1_max_set", &RunConfig::theorem1_max_set)
      .def_readwrite("scalar_max_n2", &RunConfig::scalar_max_n2)
      .def_readwrite("scalar_max_set", &RunConfig::scalar_max_set)
      .def_readwrite("held_out", &RunConfig::held_out)
      .def_readwrite("jobs", &RunConfig::jobs)
      .def_readwrite("mutate", &RunConfig::mutate);

  m.def(
      "run_json",
      [](const RunConfig& cfg, bool include_timing) {
        py::gil_scoped_release release;
        const auto report = run(cfg);
        return std::make_pair(report.passed(), report.to_json(include_timing));
      },
      py::arg("config"), py::arg("include_timing") = true);

  m.def("suite_names", &suite_names);
  m.def("mutation_keys", &mutation_keys);
}
