// Python bindings for the main operations: matrices, signals, transforms,
// distribution grids, moments/bounds and the Radon-based detector.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swdl/config.hpp"
#include "swdl/detect.hpp"
#include "swdl/moments.hpp"
#include "swdl/pipeline.hpp"

namespace py = pybind11;
using namespace swdl;

namespace {

py::array_t<std::complex<double>> grid_values(const TFGrid& g) {
    py::array_t<std::complex<double>> arr({g.nt, g.nu});
    auto r = arr.mutable_unchecked<2>();
    for (std::size_t it = 0; it < g.nt; ++it) {
        for (std::size_t iu = 0; iu < g.nu; ++iu) {
            r(it, iu) = g.at(it, iu);
        }
    }
    return arr;
}

py::array_t<double> radon_values(const RadonMap& m) {
    py::array_t<double> arr({m.slopes.size(), m.intercepts.size()});
    auto r = arr.mutable_unchecked<2>();
    for (std::size_t is = 0; is < m.slopes.size(); ++is) {
        for (std::size_t ic = 0; ic < m.intercepts.size(); ++ic) {
            r(is, ic) = m.at(is, ic);
        }
    }
    return arr;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "symplectic Wigner distribution in the LCT domain";

    py::register_exception<NotSymplectic>(m, "NotSymplecticError");
    py::register_exception<ZeroEntry>(m, "ZeroEntryError");
    py::register_exception<ZeroB>(m, "ZeroBError");
    py::register_exception<DegenerateInput>(m, "DegenerateInputError");
    py::register_exception<ZeroEnergy>(m, "ZeroEnergyError");
    py::register_exception<DegenerateMap>(m, "DegenerateMapError");

    py::class_<SymplecticMatrix>(m, "SymplecticMatrix")
        .def(py::init<double, double, double, double>(), py::arg("a"), py::arg("b"),
             py::arg("c"), py::arg("d"))
        .def_property_readonly("a", &SymplecticMatrix::a)
        .def_property_readonly("b", &SymplecticMatrix::b)
        .def_property_readonly("c", &SymplecticMatrix::c)
        .def_property_readonly("d", &SymplecticMatrix::d)
        .def("det", &SymplecticMatrix::det)
        .def("inverse", &SymplecticMatrix::inverse)
        .def("to_csv", &SymplecticMatrix::to_csv)
        .def_static("from_csv", &SymplecticMatrix::from_csv)
        .def("__repr__", [](const SymplecticMatrix& s) {
            return "SymplecticMatrix(" + s.to_csv() + ")";
        });

    m.def("l1", &matrices::l1);
    m.def("wd_a1", &matrices::wd_a1);
    m.def("validate", &validate);
    m.def("derive_a3", &derive_a3);
    m.def("derive_a4", &derive_a4);
    m.def("derive_a5", &derive_a5);
    m.def("optimal_a1", &optimal_a1, py::arg("a1"), py::arg("b1"));
    m.def("lfm_a2", &lfm_a2, py::arg("beta"), py::arg("b2"), py::arg("d2"),
          py::arg("a1"), py::arg("b1"));
    m.def("resolution_bound", &resolution_bound);
    m.def("superresolution_flags", [](const SymplecticMatrix& a1,
                                      const SymplecticMatrix& a2) {
        const auto f = superresolution_flags(a1, a2);
        return py::make_tuple(f.beats_swd, f.beats_wdl);
    });

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi);

    py::class_<GaussianParams>(m, "GaussianParams")
        .def(py::init<>())
        .def_readwrite("t0_center", &GaussianParams::t0_center)
        .def_readwrite("zeta", &GaussianParams::zeta)
        .def_readwrite("epsilon", &GaussianParams::epsilon)
        .def_readwrite("omega0", &GaussianParams::omega0)
        .def_readwrite("xi", &GaussianParams::xi)
        .def_readwrite("m", &GaussianParams::m)
        .def_readwrite("varsigma", &GaussianParams::varsigma);

    py::class_<Signal>(m, "Signal")
        .def("__call__", [](const Signal& s, double t) { return s(t); })
        .def_property_readonly("support", &Signal::support)
        .def_property_readonly("band", &Signal::band);

    m.def("lfm", &lfm, py::arg("alpha"), py::arg("beta"),
          py::arg("window") = Interval{-5.0, 5.0});
    m.def("gaussian", &gaussian);
    m.def("gauss_exponential", &gauss_exponential);
    m.def("gauss_chirp", &gauss_chirp);

    py::class_<SampledSignal>(m, "SampledSignal")
        .def(py::init<double, double, std::vector<cplx>>(), py::arg("t0"),
             py::arg("dt"), py::arg("values"))
        .def_property_readonly("t0", &SampledSignal::t0)
        .def_property_readonly("dt", &SampledSignal::dt)
        .def_property_readonly("values", &SampledSignal::values);

    m.def("sample", &sample, py::arg("f"), py::arg("t0"), py::arg("dt"),
          py::arg("n"));
    m.def("evaluate", &evaluate, py::arg("samples"), py::arg("t"));

    py::class_<AxisSpec>(m, "AxisSpec")
        .def(py::init<double, double, std::size_t>(), py::arg("lo"), py::arg("hi"),
             py::arg("count"))
        .def_readwrite("lo", &AxisSpec::lo)
        .def_readwrite("hi", &AxisSpec::hi)
        .def_readwrite("count", &AxisSpec::count)
        .def("step", &AxisSpec::step);

    py::class_<LctResult>(m, "LctResult")
        .def_readonly("u0", &LctResult::u0)
        .def_readonly("du", &LctResult::du)
        .def_readonly("alias_risk", &LctResult::alias_risk)
        .def_property_readonly("values", [](const LctResult& r) {
            py::array_t<std::complex<double>> arr(
                static_cast<py::ssize_t>(r.values.size()));
            auto w = arr.mutable_unchecked<1>();
            for (std::size_t i = 0; i < r.values.size(); ++i) {
                w(static_cast<py::ssize_t>(i)) = r.values[i];
            }
            return arr;
        });

    m.def("lct_kernel", &lct_kernel);
    m.def("lct_quadrature", &lct_quadrature);
    m.def("lct_fast", &lct_fast);
    m.def("lct_inverse", &lct_inverse);

    py::enum_<Method>(m, "Method")
        .value("definition", Method::definition)
        .value("equivalent", Method::equivalent);

    py::class_<TFGrid>(m, "TFGrid")
        .def_readonly("t0", &TFGrid::t0)
        .def_readonly("dt", &TFGrid::dt)
        .def_readonly("u0", &TFGrid::u0)
        .def_readonly("du", &TFGrid::du)
        .def_readonly("nt", &TFGrid::nt)
        .def_readonly("nu", &TFGrid::nu)
        .def_property_readonly("values", &grid_values)
        .def("peak_abs", &TFGrid::peak_abs);

    m.def("swdl", &swdl::swdl, py::arg("f"), py::arg("a1"), py::arg("a2"),
          py::arg("t_grid"), py::arg("u_grid"),
          py::arg("method") = Method::definition);
    m.def("swdl_definition", &swdl_definition);
    m.def("swdl_equivalent", &swdl_equivalent);
    m.def("grid_l2_norm", &grid_l2_norm);
    m.def("moyal_inner", &moyal_inner);

    py::class_<Stats>(m, "Stats")
        .def_readonly("moment", &Stats::moment)
        .def_readonly("spread", &Stats::spread);
    m.def("time_stats", &time_stats);
    m.def("frequency_stats", &frequency_stats);
    m.def("lct_stats", &lct_stats);
    m.def("signal_energy", &signal_energy);
    m.def("covariances", [](const Signal& f) {
        const auto c = covariances(f);
        return py::make_tuple(c.cov, c.abscov);
    });

    py::enum_<SignalClass>(m, "SignalClass")
        .value("arbitrary", SignalClass::arbitrary)
        .value("real_valued", SignalClass::real_valued)
        .value("complex_valued", SignalClass::complex_valued);

    py::class_<MomentReport>(m, "MomentReport")
        .def_readonly("t_moment", &MomentReport::t_moment)
        .def_readonly("t_spread", &MomentReport::t_spread)
        .def_readonly("omega_moment", &MomentReport::omega_moment)
        .def_readonly("omega_spread", &MomentReport::omega_spread)
        .def_readonly("u_spread_a3", &MomentReport::u_spread_a3)
        .def_readonly("u_spread_a4", &MomentReport::u_spread_a4)
        .def_readonly("swdl_t_spread", &MomentReport::swdl_t_spread)
        .def_readonly("swdl_u_spread", &MomentReport::swdl_u_spread)
        .def_readonly("cov", &MomentReport::cov)
        .def_readonly("abscov", &MomentReport::abscov)
        .def_readonly("energy", &MomentReport::energy);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("lower_bound", &BoundReport::lower_bound)
        .def_readonly("product", &BoundReport::product)
        .def_readonly("slack", &BoundReport::slack)
        .def_readonly("attained", &BoundReport::attained)
        .def_readonly("secondary_bound", &BoundReport::secondary_bound);

    m.def("moment_report",
          py::overload_cast<const Signal&, const SymplecticMatrix&,
                            const SymplecticMatrix&>(&moment_report));
    m.def("lower_bound", &lower_bound, py::arg("cls"), py::arg("a1"),
          py::arg("a2"), py::arg("stats"), py::arg("tolerance") = 1e-4);
    m.def("uncertainty_product", &uncertainty_product);
    m.def("suggest_grids", &suggest_grids, py::arg("f"), py::arg("a1"),
          py::arg("a2"), py::arg("n_sigma") = 9.0);

    py::class_<RadonMap>(m, "RadonMap")
        .def_readonly("slopes", &RadonMap::slopes)
        .def_readonly("intercepts", &RadonMap::intercepts)
        .def_property_readonly("values", &radon_values);
    m.def("radon", &radon);

    py::class_<RateAmplitude>(m, "RateAmplitude")
        .def_readonly("rates", &RateAmplitude::rates)
        .def_readonly("amplitude", &RateAmplitude::amplitude)
        .def_readonly("peak_rate", &RateAmplitude::peak_rate)
        .def_readonly("peak_to_mean", &RateAmplitude::peak_to_mean);
    m.def("rate_distribution", &rate_distribution, py::arg("rmap"), py::arg("a1"),
          py::arg("a2"), py::arg("alpha_known") = std::nullopt);

    py::class_<MethodResult>(m, "MethodResult")
        .def_readonly("name", &MethodResult::name)
        .def_readonly("grid", &MethodResult::grid)
        .def_readonly("peak_rate", &MethodResult::peak_rate)
        .def_readonly("peak_to_mean", &MethodResult::peak_to_mean)
        .def_readonly("normalized_peak", &MethodResult::normalized_peak);
    py::class_<MethodComparison>(m, "MethodComparison")
        .def_readonly("methods", &MethodComparison::methods);
    m.def("compare_methods", &compare_methods, py::arg("f"), py::arg("a1"),
          py::arg("a2"), py::arg("t_grid"), py::arg("u_grid"), py::arg("slopes"),
          py::arg("alpha_known") = std::nullopt);
}
