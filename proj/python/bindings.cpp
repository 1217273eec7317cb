#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <string>
#include <vector>

#include "uniqlab/cli.hpp"
#include "uniqlab/counterexample_lab.hpp"
#include "uniqlab/decay_bounds.hpp"
#include "uniqlab/exponent_engine.hpp"
#include "uniqlab/uniqueness_tester.hpp"

namespace py = pybind11;
using namespace uniqlab;

namespace {

// +infinity crosses into Python as float('inf').
double to_float(const ExtendedReal& x) { return x.value_or(std::numeric_limits<double>::infinity()); }

py::tuple step_tuple(const RecursionStep& s) { return py::make_tuple(s.a, s.b); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of uniqlab";

  py::register_exception<RankDeficientError>(m, "RankDeficientError", PyExc_RuntimeError);

  py::class_<ExponentPair>(m, "ExponentPair")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("alpha", &ExponentPair::alpha)
      .def_property_readonly("beta", &ExponentPair::beta)
      .def("swapped", &ExponentPair::swapped)
      .def("ordered", &ExponentPair::ordered)
      .def("__repr__", [](const ExponentPair& p) {
        return "ExponentPair(" + std::to_string(p.alpha()) + ", " + std::to_string(p.beta()) + ")";
      });

  m.def("derive_constants", [](const ExponentPair& p) {
    const auto c = derive_constants(p);
    py::dict d;
    d["gamma"] = c.gamma;
    d["lambda"] = c.lambda;
    d["delta"] = c.delta;
    d["theta1"] = c.theta1;
    d["theta2"] = c.theta2;
    d["L1"] = to_float(c.L1);
    d["L2"] = to_float(c.L2);
    d["tau"] = to_float(c.tau);
    d["epsilon_f"] = to_float(c.epsilon_f);
    d["epsilon_fhat"] = to_float(c.epsilon_fhat);
    return d;
  });

  m.def("region_A_membership", [](const ExponentPair& p) {
    const auto r = region_A_membership(p);
    py::dict d;
    d["in_region_A"] = r.in_region_A;
    d["sum_ok"] = r.sum_ok;
    d["branch_alpha"] = r.branch_alpha;
    d["branch_beta"] = r.branch_beta;
    d["order_bound"] = to_float(r.order_bound);
    d["hadamard_contradiction"] = r.hadamard_contradiction;
    return d;
  });

  m.def("diagonal_threshold", &diagonal_threshold);

  m.def(
      "recursion_trace",
      [](const ExponentPair& p, double a0, double b0, std::size_t n_steps, double omega) {
        std::vector<py::tuple> out;
        for (const auto& s : recursion_trace(p, a0, b0, n_steps, omega)) out.push_back(step_tuple(s));
        return out;
      },
      py::arg("pair"), py::arg("a0"), py::arg("b0"), py::arg("n_steps"), py::arg("omega") = 1.0);
  m.def(
      "recursion_fixed_point", [](const ExponentPair& p, double omega) { return step_tuple(recursion_fixed_point(p, omega)); },
      py::arg("pair"), py::arg("omega") = 1.0);
  m.def("omega_limit_closed_form",
        [](const ExponentPair& p, double omega) { return step_tuple(omega_limit_closed_form(p, omega)); });
  m.def("solve_omega", &solve_omega, py::arg("alpha"), py::arg("beta"));
  m.def("omega_for_full_range", &omega_for_full_range);

  py::class_<NodeFamily>(m, "NodeFamily")
      .def_static("power", &NodeFamily::power, py::arg("alpha"))
      .def_static("logarithmic", &NodeFamily::logarithmic)
      .def_static("custom", &NodeFamily::custom, py::arg("values"))
      .def("__call__", &NodeFamily::operator())
      .def("take", &NodeFamily::take)
      .def("describe", &NodeFamily::describe);

  m.def("derivative_zero_intervals", [](const NodeFamily& nodes, std::size_t k, std::size_t m_index) {
    const auto z = derivative_zero_intervals(nodes, k, m_index);
    return py::make_tuple(z.lower, z.upper, z.gap);
  });

  m.def("gamma_moment_bound", [](double delta, double theta, std::size_t k) {
    const auto g = gamma_moment_bound(delta, theta, k);
    py::dict d;
    d["value"] = g.value;
    d["log_value"] = g.log_value;
    d["overflow"] = g.overflow;
    return d;
  });

  m.def(
      "max_sum_squares",
      [](std::size_t n, double a, double b) {
        const auto r = max_sum_squares({n, a, b});
        py::dict d;
        d["max_value"] = r.max_value;
        d["argmax"] = r.argmax;
        d["attained"] = r.attained;
        return d;
      },
      py::arg("N"), py::arg("A"), py::arg("B"));

  py::class_<GapSequence>(m, "GapSequence")
      .def_property_readonly("block_begin", &GapSequence::block_begin)
      .def_property_readonly("block_end", &GapSequence::block_end)
      .def_property_readonly("k_max", &GapSequence::k_max)
      .def("level_size", &GapSequence::level_size)
      .def("value", &GapSequence::value)
      .def("gap", &GapSequence::gap)
      .def("first_gap", &GapSequence::first_gap)
      .def("check_constraints", [](const GapSequence& s) { return check_sharpness_constraints(s); });
  m.def("build_sharpness_sequence", &build_sharpness_sequence, py::arg("alpha"), py::arg("j"), py::arg("k_max"),
        py::arg("blocked") = false, py::arg("window") = py::none());
  m.def("sharpness_ratio", &sharpness_ratio);

  py::class_<BasisSpec>(m, "BasisSpec")
      .def(py::init([](std::size_t size, const std::string& parity) { return BasisSpec{size, parse_parity(parity)}; }),
           py::arg("size"), py::arg("parity") = "even")
      .def_readonly("size", &BasisSpec::size)
      .def("order", &BasisSpec::order)
      .def("describe", &BasisSpec::describe);

  m.def(
      "verify_basis",
      [](const BasisSpec& spec, std::size_t quad_points) {
        const auto r = verify_basis(spec, quad_points);
        py::dict d;
        d["passed"] = r.passed;
        d["max_deviation"] = r.max_deviation;
        d["gram_error"] = r.gram_error;
        d["quad_points"] = r.quad_points;
        d["eigenvalues"] = r.eigenvalues;
        return d;
      },
      py::arg("spec"), py::arg("quad_points") = 0);

  py::class_<SamplingOperator>(m, "SamplingOperator")
      .def_readonly("matrix", &SamplingOperator::matrix)
      .def_readonly("direct_nodes", &SamplingOperator::direct_nodes)
      .def_readonly("transform_nodes", &SamplingOperator::transform_nodes)
      .def_readonly("flagged_rows", &SamplingOperator::flagged_rows)
      .def_property_readonly("shape", [](const SamplingOperator& op) { return py::make_tuple(op.rows(), op.cols()); });

  m.def(
      "build_operator",
      [](const ExponentPair& p, std::size_t m_direct, std::size_t m_transform, const BasisSpec& basis, bool normalize) {
        return build_operator(p, m_direct, m_transform, basis, OperatorOptions{normalize});
      },
      py::arg("pair"), py::arg("m_direct"), py::arg("m_transform"), py::arg("basis"), py::arg("normalize_rows") = false);
  m.def(
      "build_operator",
      [](const NodeFamily& direct, const NodeFamily& transform, std::size_t m_direct, std::size_t m_transform,
         const BasisSpec& basis, bool normalize) {
        return build_operator(direct, transform, m_direct, m_transform, basis, OperatorOptions{normalize});
      },
      py::arg("direct"), py::arg("transform"), py::arg("m_direct"), py::arg("m_transform"), py::arg("basis"),
      py::arg("normalize_rows") = false);

  m.def("sigma_min", [](const Eigen::MatrixXcd& matrix) {
    const auto s = sigma_min(matrix);
    return py::make_tuple(s.sigma_min, s.sigma_max);
  });
  m.def("sample_combination", &sample_combination);
  m.def("reconstruct", [](const SamplingOperator& op, const Eigen::VectorXcd& samples) {
    const auto r = reconstruct(op, samples);
    return py::make_tuple(r.coefficients, r.residual);
  });

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "uniq-lab");
        std::vector<char*> argv;
        for (auto& a : args) argv.push_back(a.data());
        return cli::main_entry(static_cast<int>(argv.size()), argv.data());
      },
      py::arg("args"));
}
