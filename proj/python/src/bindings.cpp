#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpball/constants.hpp"
#include "lpball/error.hpp"
#include "lpball/geometry.hpp"
#include "lpball/oracle.hpp"
#include "lpball/p_exponential.hpp"
#include "lpball/radial.hpp"
#include "lpball/rng.hpp"
#include "lpball/tail_estimator.hpp"

namespace py = pybind11;
using namespace lpball;

namespace {

SamplingPlan make_plan(std::uint64_t trials, std::uint64_t seed, std::size_t chunks,
                       std::size_t workers) {
  return SamplingPlan{trials, seed, chunks, workers};
}

// One row per point; point i uses stream (seed, i) like the CLI sampler.
py::array_t<double> sample_points(const std::string& region, double p, std::size_t n,
                                  std::size_t count, std::uint64_t seed,
                                  const std::string& normalization) {
  Normalization norm;
  if (normalization == "small_ell") {
    norm = Normalization::small_ell;
  } else if (normalization == "big_l") {
    norm = Normalization::big_l;
  } else {
    throw py::value_error("normalization must be 'small_ell' or 'big_l'");
  }
  if (region != "quadrant_sphere" && region != "full_sphere" && region != "full_ball") {
    throw py::value_error("region must be 'quadrant_sphere', 'full_sphere' or 'full_ball'");
  }
  py::array_t<double> out({count, n});
  auto view = out.mutable_unchecked<2>();
  {
    py::gil_scoped_release release;
    for (std::size_t i = 0; i < count; ++i) {
      RandomStream stream(seed, i);
      SpherePoint point;
      if (region == "full_ball") {
        point = sample_ball(p, n, norm, stream);
      } else {
        point = region == "full_sphere" ? sample_full_sphere(p, n, stream)
                                        : sample_quadrant_sphere(p, n, stream);
        point = with_normalization(point, norm);
      }
      for (std::size_t j = 0; j < n; ++j) view(i, j) = point.coords[j];
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sampling and tail estimates for L_p^n spheres and balls";

  static py::exception<InsufficientDataError> insufficient(m, "InsufficientDataError",
                                                           PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const InsufficientDataError& err) {
      insufficient(err.what());
    }
  });

  m.attr("inf") = kInfinity;

  py::enum_<Body>(m, "Body")
      .value("mu_sphere", Body::mu_sphere)
      .value("nu_ball", Body::nu_ball);
  py::enum_<WindowPolicy>(m, "WindowPolicy")
      .value("both_bounds", WindowPolicy::both_bounds)
      .value("upper_bound_only", WindowPolicy::upper_bound_only);

  py::class_<TailEstimate>(m, "TailEstimate")
      .def_readonly("hits", &TailEstimate::hits)
      .def_readonly("trials", &TailEstimate::trials)
      .def_readonly("p_hat", &TailEstimate::p_hat)
      .def_readonly("ci_low", &TailEstimate::ci_low)
      .def_readonly("ci_high", &TailEstimate::ci_high)
      .def_readonly("seed", &TailEstimate::seed)
      .def_readonly("chunks", &TailEstimate::chunks)
      .def("__repr__", [](const TailEstimate& e) {
        return "TailEstimate(hits=" + std::to_string(e.hits) + ", trials=" +
               std::to_string(e.trials) + ", p_hat=" + std::to_string(e.p_hat) + ")";
      });

  py::class_<BoundEnvelope>(m, "BoundEnvelope")
      .def_readonly("exponent_arg", &BoundEnvelope::exponent_arg)
      .def_readonly("lower", &BoundEnvelope::lower)
      .def_readonly("upper", &BoundEnvelope::upper)
      .def_readonly("c", &BoundEnvelope::c_used)
      .def_readonly("C", &BoundEnvelope::C_used)
      .def_readonly("T", &BoundEnvelope::T_used)
      .def_readonly("cap", &BoundEnvelope::cap)
      .def_readonly("upper_valid", &BoundEnvelope::upper_valid)
      .def_readonly("lower_valid", &BoundEnvelope::lower_valid)
      .def_readonly("moreover", &BoundEnvelope::moreover)
      .def_readonly("caveat", &BoundEnvelope::caveat)
      .def_readonly("beyond_cap", &BoundEnvelope::beyond_cap);

  py::class_<FitPoint>(m, "FitPoint")
      .def_readonly("t", &FitPoint::t)
      .def_readonly("exponent_arg", &FitPoint::exponent_arg)
      .def_readonly("estimate", &FitPoint::estimate)
      .def_readonly("admissible", &FitPoint::admissible)
      .def_readonly("reason", &FitPoint::reason);

  py::class_<ExponentFit>(m, "ExponentFit")
      .def_readonly("slope", &ExponentFit::slope)
      .def_readonly("slope_low", &ExponentFit::slope_low)
      .def_readonly("slope_high", &ExponentFit::slope_high)
      .def_readonly("admissible_count", &ExponentFit::admissible_count)
      .def_readonly("points", &ExponentFit::points);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("value", &OracleResult::value)
      .def_readonly("abs_error_bound", &OracleResult::abs_error_bound)
      .def_property_readonly("method",
                             [](const OracleResult& r) { return std::string(to_string(r.method)); });

  m.def("estimate_tail",
        [](double p, double q, std::size_t n, double t, Body body, std::uint64_t trials,
           std::uint64_t seed, std::size_t chunks, std::size_t workers) {
          const TailQuery query{p, q, n, t, body};
          py::gil_scoped_release release;
          return estimate_tail(query, make_plan(trials, seed, chunks, workers));
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("t"), py::arg("body") = Body::mu_sphere,
        py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("chunks") = 16,
        py::arg("workers") = 0,
        "Monte Carlo estimate of mu or nu(||u||_{L_q^n} > t) with a 99% Clopper-Pearson interval.");

  m.def("bound_envelope",
        [](double p, double q, std::size_t n, double t) {
          return bound_envelope(TailQuery{p, q, n, t, Body::mu_sphere});
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("t"));

  m.def("fit_exponent",
        [](double p, double q, std::size_t n, std::vector<double> t_grid, std::uint64_t trials,
           std::uint64_t seed, WindowPolicy policy, std::size_t workers) {
          py::gil_scoped_release release;
          return fit_exponent(p, q, n, t_grid, make_plan(trials, seed, 16, workers), policy);
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("t_grid"), py::arg("trials") = 100000,
        py::arg("seed") = 1, py::arg("policy") = WindowPolicy::both_bounds,
        py::arg("workers") = 0);

  m.def("envelope_t_grid", &envelope_t_grid, py::arg("p"), py::arg("q"), py::arg("n"),
        py::arg("points"), py::arg("min_predicted") = 1e-5);
  m.def("threshold_T", &threshold_T, py::arg("p"), py::arg("q"), py::arg("n"));
  m.def("geometric_cap", &geometric_cap, py::arg("p"), py::arg("q"), py::arg("n"));
  m.def("clopper_pearson",
        [](std::uint64_t hits, std::uint64_t trials, double confidence) {
          const auto ci = clopper_pearson(hits, trials, confidence);
          return py::make_tuple(ci.low, ci.high);
        },
        py::arg("hits"), py::arg("trials"), py::arg("confidence") = 0.99);

  m.def("exact_small_n", &exact_small_n, py::arg("p"), py::arg("q"), py::arg("n"), py::arg("t"),
        py::arg("body") = Body::mu_sphere, "Sampling-free value for n <= 3.");

  m.def("nu_from_oracle",
        [](double p, double q, std::size_t n, double t, int order) {
          return nu_from_mu(n, t, oracle_mu(p, q, n), order).value;
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("t"), py::arg("order") = 64,
        "Ball measure from the exact cone-measure tail through the radial formula.");

  m.def("sample", &sample_points, py::arg("region"), py::arg("p"), py::arg("n"),
        py::arg("count"), py::arg("seed") = 1, py::arg("normalization") = "small_ell",
        "count x n array of points on the quadrant sphere, full sphere or ball.");

  m.def("ratio_statistic",
        [](std::vector<double> x, double p, double q) { return ratio_statistic(x, p, q); },
        py::arg("x"), py::arg("p"), py::arg("q"));
  m.def("big_l_norm", [](std::vector<double> u, double r) { return big_l_norm(u, r); },
        py::arg("u"), py::arg("r"));
  m.def("moment_xq", &moment_xq, py::arg("p"), py::arg("q"));
  m.def("normalizing_constant", &normalizing_constant, py::arg("p"));

  m.def("constants", [] {
    py::dict out;
    for (const auto& c : constants::all()) out[py::str(std::string(c.name))] = c.value;
    return out;
  });
  m.attr("constants_version") = std::string(constants::kVersion);
}
