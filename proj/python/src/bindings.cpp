#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qcpn/basis_cert.hpp"
#include "qcpn/cli.hpp"
#include "qcpn/corep.hpp"
#include "qcpn/errors.hpp"
#include "qcpn/pairing.hpp"
#include "qcpn/qsphere.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src) return false;
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!as_int) {
      PyErr_Clear();
      return false;
    }
    const std::string text = str(as_int);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string text = v.get_str(10);
    return PyLong_FromString(text.c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

using namespace qcpn;

namespace {

using Coeffs = std::vector<BigInt>;
using Rows = std::vector<std::vector<BigInt>>;

KClass klass(const Coeffs& coeffs) {
  if (coeffs.empty()) throw DomainError("a class needs at least one coefficient");
  return KClass(TruncatedPoly(static_cast<int>(coeffs.size()) - 1, coeffs));
}

RewriteOptions options(const std::string& orientation, bool sphere_rule) {
  RewriteOptions o;
  if (orientation == "zero-adjacent")
    o.orientation = Orientation::kZeroAdjacent;
  else if (orientation == "stars-ascending")
    o.orientation = Orientation::kStarsAscending;
  else
    throw DomainError("unknown orientation '" + orientation + "'");
  o.sphere_rule = sphere_rule;
  return o;
}

NCPoly parse(const std::string& expr, std::optional<int> n) {
  return n ? parse_nc(expr, *n) : parse_nc(expr);
}

py::dict report_dict(const ReductionReport& r) {
  py::list mismatches;
  for (const auto& m : r.mismatches) mismatches.append(py::make_tuple(m.input, m.form_a, m.form_b));
  py::dict d;
  d["inputs"] = r.inputs;
  d["max_steps"] = r.max_steps;
  d["step_cap_hits"] = r.step_cap_hits;
  d["degree_violations"] = r.degree_violations;
  d["mismatches"] = mismatches;
  d["passed"] = r.passed();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact K-theory of quantum projective spaces and the quantum-sphere algebra.";

  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", domain_error.ptr());
  py::register_exception<StepCapExceeded>(m, "StepCapExceeded", domain_error.ptr());

  // K-classes are coefficient lists [c0, ..., cn] in the t-basis.
  m.def("line_class", [](int n, long mm) { return line_class(n, mm).coeffs(); }, py::arg("n"), py::arg("m"),
        "Coefficients of (1 - t)^m truncated at t^(n+1).");
  m.def(
      "euler_class",
      [](int n) {
        auto e = euler_class(n);
        return py::make_tuple(e.value.coeffs(), e.degenerate);
      },
      py::arg("n"));
  m.def("multiply", [](const Coeffs& a, const Coeffs& b) { return (klass(a) * klass(b)).coeffs(); });
  m.def("render", [](const Coeffs& c) { return klass(c).to_string(); });
  m.def("restrict", [](const Coeffs& c, int to) { return restrict_to(klass(c), to).coeffs(); },
        py::arg("coeffs"), py::arg("to"));
  m.def("pair_mu", [](int k, const Coeffs& c) { return pair_mu(k, klass(c)); }, py::arg("k"), py::arg("coeffs"));
  m.def("pair_vector", [](const Coeffs& c) { return pair_vector(klass(c)).values; });

  m.def("pi_weights", [](int mm) { return pi_weights(mm).weights(); });
  m.def("associated_class",
        [](int n, const std::vector<std::int64_t>& w) { return associated_class(n, WeightVector(w)).coeffs(); },
        py::arg("n"), py::arg("weights"));
  m.def("fundamental_decomposition", &fundamental_decomposition, py::arg("n"), py::arg("m"));

  m.def("e_class", [](int n, int mm) { return e_class(n, mm).coeffs(); }, py::arg("n"), py::arg("m"));
  m.def("e_class_formula", [](int n, int mm) { return e_class_formula(n, mm).coeffs(); }, py::arg("n"),
        py::arg("m"));
  m.def("basis_matrix", [](int n) { return basis_matrix(n).to_rows(); });
  m.def("det_exact", [](const Rows& rows) { return det_exact(IntMatrix::from_rows(rows)); });
  m.def(
      "certify_basis",
      [](int n) {
        const auto cert = certify_basis(n);
        py::dict d;
        d["n"] = cert.n;
        d["matrix"] = cert.matrix.to_rows();
        d["det"] = cert.det;
        d["inverse"] = cert.inverse.to_rows();
        return d;
      },
      py::arg("n"));
  m.def("expand_in_e_basis", [](const Coeffs& c) { return expand_in_e_basis(klass(c)); });
  m.def("nesting_check", &nesting_check);

  // Sphere-algebra elements travel as expression strings.
  m.def(
      "normal_form",
      [](const std::string& expr, int n, const std::string& orientation, bool sphere_rule) {
        return normal_form(parse_nc(expr, n), options(orientation, sphere_rule)).to_string();
      },
      py::arg("expr"), py::arg("n"), py::arg("orientation") = "zero-adjacent", py::arg("sphere_rule") = true);
  m.def("canonical", [](const std::string& expr, std::optional<int> n) { return parse(expr, n).to_string(); },
        py::arg("expr"), py::arg("n") = py::none());
  m.def("u1_degree", [](const std::string& expr, std::optional<int> n) { return u1_degree(parse(expr, n)); },
        py::arg("expr"), py::arg("n") = py::none());
  m.def("adjoint", [](const std::string& expr, std::optional<int> n) { return adjoint(parse(expr, n)).to_string(); },
        py::arg("expr"), py::arg("n") = py::none());
  m.def("phi", [](const std::string& expr, int n) { return phi(parse_nc(expr, n)).to_string(); }, py::arg("expr"),
        py::arg("n"));
  m.def(
      "verify_defining_relations",
      [](int n, const std::string& orientation) {
        return report_dict(verify_defining_relations(n, options(orientation, true)));
      },
      py::arg("n"), py::arg("orientation") = "zero-adjacent");
  m.def(
      "fuzz_confluence",
      [](int n, int max_len, std::size_t trials, std::uint64_t seed, const std::string& orientation) {
        const RewriteOptions opts = options(orientation, true);
        ReductionReport r;
        {
          py::gil_scoped_release release;
          r = fuzz_confluence(n, max_len, trials, seed, opts);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("max_len") = 6, py::arg("trials") = 10000, py::arg("seed") = 42,
      py::arg("orientation") = "zero-adjacent");
  m.def(
      "exhaustive_confluence",
      [](int n, int length, const std::string& orientation) {
        return report_dict(exhaustive_confluence(n, length, options(orientation, true)));
      },
      py::arg("n"), py::arg("length"), py::arg("orientation") = "zero-adjacent");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
