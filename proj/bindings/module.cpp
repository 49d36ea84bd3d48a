#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gsw/checkpoint.hpp"
#include "gsw/harness.hpp"
#include "gsw/initial_data.hpp"
#include "gsw/run.hpp"
#include "gsw/tracking.hpp"

namespace py = pybind11;
using namespace gsw;

PYBIND11_MODULE(gswpy, m) {
    m.doc() = "pseudospectral evolution and estimate verification toolkit";

    py::register_exception<Error>(m, "GswError");

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<int, double>(), py::arg("n"), py::arg("length"))
        .def_readonly("n", &GridSpec::n)
        .def_readonly("length", &GridSpec::length)
        .def("xi", &GridSpec::xi)
        .def("dealias_mode", &GridSpec::dealias_mode);

    py::class_<SpectralField>(m, "SpectralField")
        .def(py::init<const GridSpec&>())
        .def_static("from_coeffs", &SpectralField::from_coeffs)
        .def_static("synthesize",
                    [](const GridSpec& g, const std::vector<double>& samples) {
                        return SpectralField::synthesize(g, samples);
                    })
        .def("coeffs", &SpectralField::coeffs)
        .def("coeff", &SpectralField::coeff)
        .def("collocate", &SpectralField::collocate)
        .def("derivative", &SpectralField::derivative, py::arg("order") = 1)
        .def("band_limited", &SpectralField::band_limited)
        .def("dealiased", &SpectralField::dealiased)
        .def("symmetrized", &SpectralField::symmetrized)
        .def("max_abs", &SpectralField::max_abs)
        .def("grid", &SpectralField::grid)
        .def("__add__", [](const SpectralField& a, const SpectralField& b) { return a + b; })
        .def("__sub__", [](const SpectralField& a, const SpectralField& b) { return a - b; })
        .def("__mul__", [](const SpectralField& a, double c) { return a * c; })
        .def("__rmul__", [](const SpectralField& a, double c) { return c * a; });

    m.def("pointwise_product", &pointwise_product);
    m.def("inner_product", &inner_product);

    py::class_<GevreyParams>(m, "GevreyParams")
        .def(py::init<double, double, double>(), py::arg("sigma"), py::arg("delta"),
             py::arg("q"))
        .def_readonly("sigma", &GevreyParams::sigma)
        .def_readonly("delta", &GevreyParams::delta)
        .def_readonly("q", &GevreyParams::q);

    m.def("sobolev_norm", &sobolev_norm);
    m.def("gevrey_norm", &gevrey_norm);
    m.def("bar_gevrey_norm", &bar_gevrey_norm);

    py::class_<RadiusFit>(m, "RadiusFit")
        .def_readonly("delta_hat", &RadiusFit::delta_hat)
        .def_readonly("residual", &RadiusFit::residual);
    m.def("estimate_radius",
          py::overload_cast<const SpectralField&, double>(&estimate_radius));

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<int, double, double, double>(), py::arg("s"), py::arg("a"),
             py::arg("alpha") = 0.0, py::arg("kappa") = 0.0)
        .def_readonly("s", &SystemParams::s)
        .def_readonly("a", &SystemParams::a);

    py::class_<TwoComponentState>(m, "TwoComponentState")
        .def(py::init<double, SpectralField, SpectralField>(), py::arg("t"),
             py::arg("u"), py::arg("rho"))
        .def_readonly("t", &TwoComponentState::t)
        .def_readonly("u", &TwoComponentState::u)
        .def_readonly("rho", &TwoComponentState::rho);

    py::enum_<Scheme>(m, "Scheme")
        .value("rk4", Scheme::rk4)
        .value("rk45_adaptive", Scheme::rk45_adaptive);

    m.def("step", &step, py::arg("z"), py::arg("params"), py::arg("dt"),
          py::arg("scheme") = Scheme::rk4, py::arg("rel_tol") = 1e-9);
    m.def("cfl_dt", &cfl_dt, py::arg("z"), py::arg("c") = 0.5);

    py::class_<Conserved>(m, "Conserved")
        .def_readonly("H", &Conserved::H)
        .def_readonly("Mrho", &Conserved::Mrho);
    m.def("conserved_quantities", &conserved_quantities);

    py::class_<KTerm>(m, "KTerm")
        .def_readonly("outer", &KTerm::outer)
        .def_readonly("inner", &KTerm::inner)
        .def_readonly("coeff", &KTerm::coeff);
    py::class_<KDecomposition>(m, "KDecomposition")
        .def_readonly("s", &KDecomposition::s)
        .def_readonly("a", &KDecomposition::a)
        .def_readonly("terms", &KDecomposition::terms);
    m.def("derive_k_decomposition", &derive_k_decomposition);

    m.def("gevrey_random_field", &gevrey_random_field);
    m.def("lifespan_T0_one_component", &lifespan_T0_one_component);
    m.def("lifespan_T0_two_component", &lifespan_T0_two_component);
    m.def("holomorphy_time", &holomorphy_time);

    m.def("checkpoint_line", &checkpoint_line);
    m.def("parse_checkpoint_line", &parse_checkpoint_line);

    m.def("run_config_json", [](const std::string& text, bool quiet) {
        return run(parse_config(text), quiet);
    }, py::arg("text"), py::arg("quiet") = true);
}
