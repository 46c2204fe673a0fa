#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stcap/baseline.hpp"
#include "stcap/design_query.hpp"
#include "stcap/errors.hpp"
#include "stcap/guardzone.hpp"
#include "stcap/mcsim.hpp"
#include "stcap/specfun.hpp"

namespace py = pybind11;
using namespace stcap;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Secrecy transmission capacity of Poisson wireless networks";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);
  py::register_exception<WindowTooSmall>(m, "WindowTooSmall", PyExc_ValueError);

  py::class_<NetworkParams>(m, "NetworkParams")
      .def(py::init([](double lambda_l, double lambda_e, double alpha, double r) {
             return NetworkParams{lambda_l, lambda_e, alpha, r};
           }),
           py::arg("lambda_l") = 0.01, py::arg("lambda_e") = 0.001, py::arg("alpha") = 4.0,
           py::arg("r") = 1.0)
      .def_readwrite("lambda_l", &NetworkParams::lambda_l)
      .def_readwrite("lambda_e", &NetworkParams::lambda_e)
      .def_readwrite("alpha", &NetworkParams::alpha)
      .def_readwrite("r", &NetworkParams::r);

  py::class_<OutageConstraints>(m, "OutageConstraints")
      .def(py::init([](double sigma, double epsilon) { return OutageConstraints{sigma, epsilon}; }),
           py::arg("sigma") = 0.3, py::arg("epsilon") = 0.01)
      .def_readwrite("sigma", &OutageConstraints::sigma)
      .def_readwrite("epsilon", &OutageConstraints::epsilon);

  py::enum_<Protocol>(m, "Protocol")
      .value("NonCooperative", Protocol::NonCooperative)
      .value("Cooperative", Protocol::Cooperative);

  py::class_<GuardZoneConfig>(m, "GuardZoneConfig")
      .def(py::init([](double radius_d, Protocol protocol) { return GuardZoneConfig{radius_d, protocol}; }),
           py::arg("radius_d") = 0.0, py::arg("protocol") = Protocol::Cooperative)
      .def_readwrite("radius_d", &GuardZoneConfig::radius_d)
      .def_readwrite("protocol", &GuardZoneConfig::protocol);

  py::class_<WynerRates>(m, "WynerRates")
      .def_readonly("rate_t", &WynerRates::rate_t)
      .def_readonly("rate_e", &WynerRates::rate_e)
      .def_readonly("rate_s", &WynerRates::rate_s)
      .def_readonly("beta_t", &WynerRates::beta_t)
      .def_readonly("beta_e", &WynerRates::beta_e);

  py::class_<CapacityResult>(m, "CapacityResult")
      .def_readonly("tau", &CapacityResult::tau)
      .def_readonly("rates", &CapacityResult::rates)
      .def_readonly("feasible", &CapacityResult::feasible);

  m.def("interference_constant", &specfun::interference_constant, py::arg("alpha"));
  m.def("lambert_w0", &specfun::lambert_w0, py::arg("x"));

  m.def("connection_outage", &baseline::connection_outage, py::arg("params"), py::arg("beta_t"));
  m.def("rate_t_from_sigma",
        py::overload_cast<const NetworkParams&, double>(&baseline::rate_t_from_sigma),
        py::arg("params"), py::arg("sigma"));
  m.def("secrecy_outage_bounds",
        [](const NetworkParams& p, double beta_e) {
          const auto b = baseline::secrecy_outage_bounds(p, beta_e);
          return py::make_tuple(b.lower, b.upper);
        },
        py::arg("params"), py::arg("beta_e"), "(lower, upper) bounds on secrecy outage");
  m.def("rate_e_from_epsilon", &baseline::rate_e_from_epsilon, py::arg("params"), py::arg("epsilon"));
  m.def("capacity", py::overload_cast<const NetworkParams&, const OutageConstraints&>(&baseline::capacity),
        py::arg("params"), py::arg("constraints"));
  m.def("positivity", &baseline::positivity, py::arg("params"), py::arg("constraints"));
  m.def("feasible_sigma_range",
        [](const NetworkParams& p, double epsilon) {
          const auto r = baseline::feasible_sigma_range(p, epsilon);
          return py::make_tuple(r.lo, r.hi);
        },
        py::arg("params"), py::arg("epsilon"));
  m.def("optimal_lambda_asymptotic", &baseline::optimal_lambda_asymptotic, py::arg("params"),
        py::arg("epsilon"));
  m.def("optimal_sigma_sparse",
        [](const NetworkParams& p, double epsilon) {
          const auto s = baseline::optimal_sigma_sparse(p, epsilon);
          return py::dict(py::arg("kappa") = s.kappa, py::arg("sigma_opt") = s.sigma_opt,
                          py::arg("outside_sparse_regime") = s.outside_sparse_regime);
        },
        py::arg("params"), py::arg("epsilon"));

  m.def("active_density", &guardzone::active_density, py::arg("lambda_l"), py::arg("lambda_e"),
        py::arg("radius_d"));
  m.def("laplace_z", &guardzone::laplace_z, py::arg("x"), py::arg("lambda_active"), py::arg("alpha"),
        py::arg("radius_d"));
  m.def("noncoop_secrecy_outage_ub", &guardzone::noncoop_secrecy_outage_ub, py::arg("params"),
        py::arg("radius_d"), py::arg("beta_e"));
  m.def("noncoop_capacity", &guardzone::noncoop_capacity, py::arg("params"), py::arg("constraints"),
        py::arg("radius_d"));
  m.def("coop_rate_e", &guardzone::coop_rate_e, py::arg("params"), py::arg("constraints"),
        py::arg("radius_d"));
  m.def("coop_capacity", &guardzone::coop_capacity, py::arg("params"), py::arg("constraints"),
        py::arg("radius_d"));
  m.def("coop_positivity", &guardzone::coop_positivity, py::arg("params"), py::arg("constraints"),
        py::arg("radius_d"));
  m.def("coop_min_feasible_sigma", &guardzone::coop_min_feasible_sigma, py::arg("params"),
        py::arg("epsilon"), py::arg("radius_d"));

  m.def("optimize",
        [](const std::string& target, const NetworkParams& p, const OutageConstraints& c,
           const GuardZoneConfig& g) {
          design::Query q{design::parse_target(target), p, c, g};
          const auto a = design::run_optimize(q);
          py::dict out(py::arg("argmax") = a.argmax, py::arg("tau_max") = a.tau_max);
          if (a.comparator) out[py::str(a.comparator->name)] = a.comparator->value;
          return out;
        },
        py::arg("target"), py::arg("params"), py::arg("constraints"),
        py::arg("guard") = GuardZoneConfig{});

  py::class_<mc::MonteCarloConfig>(m, "MonteCarloConfig")
      .def(py::init([](std::int64_t trials, std::uint64_t seed, std::optional<double> window_radius,
                       double tail_tolerance, int threads) {
             mc::MonteCarloConfig c;
             c.trials = trials;
             c.seed = seed;
             c.window_radius = window_radius;
             c.tail_tolerance = tail_tolerance;
             c.threads = threads;
             return c;
           }),
           py::arg("trials") = 100000, py::arg("seed") = 0, py::arg("window_radius") = py::none(),
           py::arg("tail_tolerance") = 1e-3, py::arg("threads") = 0)
      .def_readwrite("trials", &mc::MonteCarloConfig::trials)
      .def_readwrite("seed", &mc::MonteCarloConfig::seed)
      .def_readwrite("window_radius", &mc::MonteCarloConfig::window_radius)
      .def_readwrite("tail_tolerance", &mc::MonteCarloConfig::tail_tolerance)
      .def_readwrite("threads", &mc::MonteCarloConfig::threads);

  py::class_<mc::OutageEstimate>(m, "OutageEstimate")
      .def_readonly("p_hat", &mc::OutageEstimate::p_hat)
      .def_readonly("std_err", &mc::OutageEstimate::std_err)
      .def_readonly("trials", &mc::OutageEstimate::trials)
      .def_readonly("events", &mc::OutageEstimate::events);

  m.def("estimate_connection_outage", &mc::estimate_connection_outage, py::arg("params"),
        py::arg("beta_t"), py::arg("config"), py::call_guard<py::gil_scoped_release>());
  m.def("estimate_secrecy_outage",
        [](const NetworkParams& p, double beta_e, const mc::MonteCarloConfig& c) {
          mc::SecrecyEstimate e;
          {
            py::gil_scoped_release release;
            e = mc::estimate_secrecy_outage(p, beta_e, c);
          }
          return py::make_tuple(e.any, e.nearest);
        },
        py::arg("params"), py::arg("beta_e"), py::arg("config"),
        "(any-eavesdropper, nearest-eavesdropper) estimates");
  m.def("estimate_guardzone_outages",
        [](const NetworkParams& p, const GuardZoneConfig& g, double beta_t, double beta_e,
           const mc::MonteCarloConfig& c) {
          mc::GuardZoneEstimate e;
          {
            py::gil_scoped_release release;
            e = mc::estimate_guardzone_outages(p, g, beta_t, beta_e, c);
          }
          return py::dict(py::arg("connection") = e.connection, py::arg("secrecy") = e.secrecy,
                          py::arg("nearest") = e.nearest,
                          py::arg("active_fraction") = e.active_fraction);
        },
        py::arg("params"), py::arg("guard"), py::arg("beta_t"), py::arg("beta_e"),
        py::arg("config"));
}
