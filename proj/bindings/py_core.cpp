#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "entprime/classify.hpp"
#include "entprime/numtheory.hpp"
#include "entprime/oscillator.hpp"
#include "entprime/selftest.hpp"
#include "entprime/spectral.hpp"
#include "entprime/spin.hpp"
#include "entprime/tables.hpp"
#include "entprime/version.hpp"

namespace py = pybind11;
using namespace entprime;

namespace {

std::string repr_logreal(const LogReal& v) {
    std::ostringstream os;
    if (v.is_zero())
        os << "LogReal(0)";
    else
        os << "LogReal(sign=" << v.sign() << ", log_mag=" << v.log_mag() << ")";
    return os.str();
}

py::dict classification_dict(const numtheory::Classification& c) {
    py::dict d;
    d["kind"] = numtheory::to_string(c.kind);
    d["families"] = numtheory::families_string(c);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Prime and semiprime identification from the Fourier amplitudes of "
              "entanglement-entropy dynamics";
    m.attr("__version__") = kVersion;

    py::class_<LogReal>(m, "LogReal")
        .def(py::init([](double x) { return LogReal::from_real(x); }), py::arg("value"))
        .def_static("from_log", &LogReal::from_log, py::arg("log_mag"), py::arg("sign") = 1)
        .def_static("zero", &LogReal::zero)
        .def_property_readonly("sign", &LogReal::sign)
        .def_property_readonly("log_mag", &LogReal::log_mag)
        .def_property_readonly("log10", &LogReal::log10_mag)
        .def("is_zero", &LogReal::is_zero)
        .def("to_float", &LogReal::to_real)
        .def("__float__", &LogReal::to_real)
        .def("__mul__", [](const LogReal& a, const LogReal& b) { return log_mul(a, b); })
        .def("__add__", [](const LogReal& a, const LogReal& b) { return log_add(a, b); })
        .def("__sub__", [](const LogReal& a, const LogReal& b) { return log_sub(a, b); })
        .def("__neg__", [](const LogReal& a) { return -a; })
        .def("__repr__", &repr_logreal);
    m.def("rel_diff", &rel_diff, py::arg("a"), py::arg("b"));

    m.def("log_factorial", &special::log_factorial, py::arg("n"));
    m.def("log_binomial", &special::log_binomial, py::arg("n"), py::arg("k"));
    m.def("bessel_i_log", &special::bessel_i_log, py::arg("chi"), py::arg("w"),
          py::arg("eps") = special::kDefaultSeriesEps);
    m.def("g_poly_log", &special::g_poly_log, py::arg("chi"), py::arg("twoS"), py::arg("w"));

    m.def(
        "divisors",
        [](std::uint64_t n) { return numtheory::divisors(n).divisors; },
        py::arg("n"));
    m.def("reduced_divisors", &numtheory::reduced_divisors, py::arg("n"));
    m.def("is_prime", &numtheory::is_prime, py::arg("n"));
    m.def(
        "sieve_classify",
        [](std::uint64_t n) { return classification_dict(numtheory::sieve_classify(n)); },
        py::arg("n"));
    m.def("sieve_pi", &numtheory::sieve_pi, py::arg("N"));

    py::class_<OscEngine>(m, "OscEngine")
        .def(py::init([](double u, double omega, double series_eps, int fock_cutoff) {
                 return OscEngine({u, omega, series_eps, fock_cutoff});
             }),
             py::arg("u"), py::arg("omega") = 1.0,
             py::arg("series_eps") = special::kDefaultSeriesEps, py::arg("fock_cutoff") = 0)
        .def_property_readonly("u", [](const OscEngine& e) { return e.params().u; })
        .def_property_readonly("omega", [](const OscEngine& e) { return e.params().omega; })
        .def_property_readonly("fock_cutoff",
                               [](const OscEngine& e) { return e.params().fock_cutoff; })
        .def_property_readonly("period", &OscEngine::period)
        .def("bessel", &OscEngine::bessel, py::arg("chi"))
        .def("coeff", &OscEngine::coeff, py::arg("n"))
        .def("prime_bound", &OscEngine::prime_bound, py::arg("n"))
        .def("family_curve", &OscEngine::family_curve, py::arg("q"), py::arg("n"))
        .def("gap", &OscEngine::gap, py::arg("n"))
        .def("c0", &OscEngine::c0)
        .def("c0_series_sum", &OscEngine::c0_series_sum)
        .def("entropy", &OscEngine::entropy, py::arg("t"))
        .def("entropy_sample", &OscEngine::entropy_sample, py::arg("k"), py::arg("m_samples"))
        .def("purity_oracle", &OscEngine::purity_oracle, py::arg("t"), py::arg("omega0") = 0.0)
        .def("tuple_scan_coeff", &OscEngine::tuple_scan_coeff, py::arg("n"),
             py::arg("fock_limit"))
        .def("alias_budget", &OscEngine::alias_budget, py::arg("m_samples"));

    py::enum_<SpinRegion>(m, "SpinRegion")
        .value("I", SpinRegion::I)
        .value("II", SpinRegion::II)
        .value("III", SpinRegion::III)
        .value("IV", SpinRegion::IV);

    py::class_<SpinEngine>(m, "SpinEngine")
        .def(py::init([](int twoS, double u, double omega) {
                 return SpinEngine({twoS, u, omega});
             }),
             py::arg("twoS"), py::arg("u"), py::arg("omega") = 1.0)
        .def_property_readonly("twoS", [](const SpinEngine& e) { return e.params().twoS; })
        .def_property_readonly("u", [](const SpinEngine& e) { return e.params().u; })
        .def_property_readonly("period", &SpinEngine::period)
        .def_property_readonly("mode_limit", &SpinEngine::mode_limit)
        .def("g_poly", &SpinEngine::g_poly, py::arg("chi"))
        .def("coeff", &SpinEngine::coeff, py::arg("n"))
        .def("prime_bound_region1", &SpinEngine::prime_bound_region1, py::arg("n"))
        .def("gap_region1", &SpinEngine::gap_region1, py::arg("n"))
        .def("c0", &SpinEngine::c0)
        .def("entropy", &SpinEngine::entropy, py::arg("t"))
        .def("entropy_sample", &SpinEngine::entropy_sample, py::arg("k"), py::arg("m_samples"))
        .def("purity_oracle", &SpinEngine::purity_oracle, py::arg("t"), py::arg("omega0") = 0.0)
        .def("tuple_scan", &SpinEngine::tuple_scan, py::arg("n"))
        .def("tuple_scan_all", &SpinEngine::tuple_scan_all)
        .def("alias_budget", &SpinEngine::alias_budget, py::arg("m_samples"));

    m.def(
        "region_of",
        [](std::uint64_t n, int twoS) {
            return region_of(n, SpinParams{twoS, 1.0, 1.0});
        },
        py::arg("n"), py::arg("twoS"));
    m.def(
        "lambda_bar_set",
        [](std::uint64_t n, int twoS, int k, int mm) {
            return lambda_bar_set(n, SpinParams{twoS, 1.0, 1.0}, k, mm);
        },
        py::arg("n"), py::arg("twoS"), py::arg("k"), py::arg("m"));

    m.def(
        "classify_osc",
        [](const OscEngine& e, std::uint64_t n, const LogReal& c, double tol) {
            return classification_dict(classify_osc(e, n, c, tol));
        },
        py::arg("engine"), py::arg("n"), py::arg("c_measured"),
        py::arg("tol_rel") = kAnalyticTolRel);
    m.def(
        "classify_osc",
        [](const OscEngine& e, std::uint64_t n, double c, double tol) {
            return classification_dict(classify_osc(e, n, c, tol));
        },
        py::arg("engine"), py::arg("n"), py::arg("c_measured"),
        py::arg("tol_rel") = kAnalyticTolRel);
    m.def(
        "classify_spin",
        [](const SpinEngine& e, std::uint64_t n, const LogReal& c, double tol_rel,
           double tol_abs) {
            const auto v = classify_spin(e, n, c, tol_rel, tol_abs);
            py::dict d;
            d["decidable"] = v.decidable;
            d["region"] = to_string(v.region);
            d["kind"] = v.decidable ? numtheory::to_string(v.cls.kind) : "NotDecidable";
            return d;
        },
        py::arg("engine"), py::arg("n"), py::arg("cbar_measured"),
        py::arg("tol_rel") = kAnalyticTolRel, py::arg("tol_abs") = kSpinRegion2AbsFloor);
    m.def("prime_count", &prime_count, py::arg("engine"), py::arg("N"),
          py::arg("tol_rel") = kAnalyticTolRel);

    py::class_<spectral::TimeSeries>(m, "TimeSeries")
        .def_readonly("omega", &spectral::TimeSeries::omega)
        .def_readonly("m_samples", &spectral::TimeSeries::m_samples)
        .def_readonly("values", &spectral::TimeSeries::values);
    m.def(
        "sample_period",
        [](const OscEngine& e, int m) { return spectral::sample_period(e, m); },
        py::arg("engine"), py::arg("m_samples"));
    m.def(
        "sample_period",
        [](const SpinEngine& e, int m) { return spectral::sample_period(e, m); },
        py::arg("engine"), py::arg("m_samples"));
    m.def("extract_mode", &spectral::extract_mode, py::arg("series"), py::arg("n"));
    m.def("extract_dc", &spectral::extract_dc, py::arg("series"));
    m.def(
        "choose_sample_count",
        [](const OscEngine& e, std::uint64_t n_max, double target) {
            return spectral::choose_sample_count(
                [&](int m) { return e.alias_budget(m); }, n_max, target);
        },
        py::arg("engine"), py::arg("n_max"), py::arg("target") = 1e-10);

    m.def(
        "osc_table_csv",
        [](const OscEngine& e, std::uint64_t n_max, double tol) {
            return tables::to_csv(tables::build_osc_table(e, n_max, tol));
        },
        py::arg("engine"), py::arg("n_max"), py::arg("tol_rel") = kAnalyticTolRel);
    m.def(
        "osc_table_json",
        [](const OscEngine& e, std::uint64_t n_max, double tol) {
            return tables::to_json(tables::build_osc_table(e, n_max, tol));
        },
        py::arg("engine"), py::arg("n_max"), py::arg("tol_rel") = kAnalyticTolRel);
    m.def(
        "spin_table_csv",
        [](const SpinEngine& e, double tol) {
            return tables::to_csv(tables::build_spin_table(e, tol));
        },
        py::arg("engine"), py::arg("tol_rel") = kAnalyticTolRel);
    m.def(
        "spin_table_json",
        [](const SpinEngine& e, double tol) {
            return tables::to_json(tables::build_spin_table(e, tol));
        },
        py::arg("engine"), py::arg("tol_rel") = kAnalyticTolRel);

    m.def(
        "run_selftest",
        [](const std::string& level) {
            std::ostringstream os;
            const bool ok = selftest::run(
                level == "full" ? selftest::Level::Full : selftest::Level::Quick, os);
            py::print(os.str());
            return ok;
        },
        py::arg("level") = "quick");
}
