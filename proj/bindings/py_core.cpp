#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chemobound/cascade.hpp"
#include "chemobound/config.hpp"
#include "chemobound/diagnostics.hpp"
#include "chemobound/simulator.hpp"

namespace py = pybind11;
namespace cb = chemobound;

namespace {

py::dict exponents_dict(const cb::ExponentSet& e) {
    py::dict d;
    d["pbar"] = e.pbar;
    d["k"] = e.k;
    d["a1"] = e.a1;
    d["a2"] = e.a2;
    d["a3"] = e.a3;
    d["beta"] = e.beta;
    d["sigma"] = e.sigma;
    d["gamma"] = e.gamma;
    d["delta"] = e.delta;
    d["lambda"] = e.lambda;
    return d;
}

py::dict cascade_dict(const cb::Cascade& c) {
    py::dict d;
    d["exponents"] = exponents_dict(c.exps);
    d["cgn"] = c.prob.cgn;
    d["gn_observed_max"] = c.gn.observed_max;
    py::dict en;
    en["E0"] = c.en.E0;
    en["E1"] = c.en.E1;
    en["E2"] = c.en.E2;
    en["E3"] = c.en.E3;
    en["E4"] = c.en.E4;
    en["E5"] = c.en.E5;
    en["D0"] = c.en.D0;
    en["delta0"] = c.en.delta0;
    d["energy"] = en;
    py::dict odi;
    odi["eps"] = c.odi.eps;
    odi["c4"] = c.odi.c4;
    odi["c5"] = c.odi.c5;
    odi["E8"] = c.odi.E8;
    odi["E9"] = c.odi.E9;
    odi["E10"] = c.odi.E10;
    odi["H"] = c.odi.H;
    d["odi"] = odi;
    d["phi0"] = c.phi0;
    d["T_osgood"] = c.t_osgood.value;
    d["T_osgood_error"] = c.t_osgood.error;
    d["T_explicit"] = c.t_explicit;
    return d;
}

cb::Problem make_problem(int n, const std::string& shape, double R, double m1, double m2,
                         double alpha, double chi, const py::dict& init, double p0, double q1,
                         double q2, double cgn) {
    cb::DomainGeometry geom = shape == "interval" ? cb::DomainGeometry::interval(R)
                                                  : cb::DomainGeometry::ball(n, R);
    const std::string kind = init.contains("kind") ? py::cast<std::string>(init["kind"])
                                                   : std::string("constant");
    cb::InitialData u0;
    if (kind == "constant") {
        u0 = cb::InitialData::constant(py::cast<double>(init["amplitude"]));
    } else if (kind == "gaussian") {
        u0 = cb::InitialData::gaussian(py::cast<double>(init["amplitude"]),
                                       py::cast<double>(init["width"]),
                                       init.contains("center") ? py::cast<double>(init["center"])
                                                               : 0.0);
    } else if (kind == "table") {
        u0 = cb::InitialData::table(py::cast<std::vector<double>>(init["values"]));
    } else {
        throw std::invalid_argument("init kind must be constant, gaussian or table");
    }
    return cb::Problem::validated(geom, m1, m2, alpha, chi, std::move(u0), p0, q1, q2, cgn);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "blow-up time lower bounds for a radial nonlinear-diffusion chemotaxis model";

    m.def(
        "validate_blowup_restrictions",
        [](double m1, double m2, int n) {
            const cb::BlowupCheck c = cb::validate_blowup_restrictions(m1, m2, n);
            return py::make_tuple(c.ok, c.violations);
        },
        py::arg("m1"), py::arg("m2"), py::arg("n"));

    m.def(
        "default_free_parameters",
        [](double m1, double m2, int n) {
            const cb::FreeParameters f = cb::default_free_parameters(m1, m2, n);
            return py::make_tuple(f.p0, f.q1, f.q2);
        },
        py::arg("m1"), py::arg("m2"), py::arg("n"));

    m.def("compute_pbar", &cb::compute_pbar, py::arg("m1"), py::arg("m2"), py::arg("n"),
          py::arg("p0"), py::arg("q1"), py::arg("q2"));

    m.def(
        "compute_exponents",
        [](double m1, double m2, int n, double p0, double pbar) {
            return exponents_dict(cb::compute_exponents(m1, m2, n, p0, pbar));
        },
        py::arg("m1"), py::arg("m2"), py::arg("n"), py::arg("p0"), py::arg("pbar"));

    m.def("osgood_lower_bound",
          [](double E8, double E9, double E5, double gamma, double delta, double phi0) {
              const cb::OsgoodResult r = cb::osgood_lower_bound(E8, E9, E5, gamma, delta, phi0);
              return py::make_tuple(r.value, r.error);
          });

    m.def("explicit_lower_bound", &cb::explicit_lower_bound);

    py::class_<cb::Problem>(m, "Problem")
        .def_static("create", &make_problem, py::arg("n"), py::arg("shape"), py::arg("R"),
                    py::arg("m1"), py::arg("m2"), py::arg("alpha"), py::arg("chi"),
                    py::arg("init"), py::arg("p0") = 0.0, py::arg("q1") = 0.0,
                    py::arg("q2") = 0.0, py::arg("cgn") = 0.0)
        .def_static("from_config", &cb::load_problem_config, py::arg("path"))
        .def_property_readonly("m1", [](const cb::Problem& p) { return p.m1; })
        .def_property_readonly("m2", [](const cb::Problem& p) { return p.m2; })
        .def_property_readonly("p0", [](const cb::Problem& p) { return p.p0; })
        .def_property_readonly("q1", [](const cb::Problem& p) { return p.q1; })
        .def_property_readonly("q2", [](const cb::Problem& p) { return p.q2; })
        .def_property_readonly("M", [](const cb::Problem& p) { return p.mass_mean; })
        .def_property_readonly("measure", [](const cb::Problem& p) { return p.geom.measure(); });

    m.def(
        "build_cascade",
        [](const cb::Problem& p, int gn_samples, int gn_grid, std::uint64_t seed, double L) {
            cb::GnOptions o;
            o.samples = gn_samples;
            o.grid_cells = gn_grid;
            o.seed = seed;
            return cascade_dict(cb::build_cascade(p, o, L));
        },
        py::arg("problem"), py::arg("gn_samples") = 200, py::arg("gn_grid") = 256,
        py::arg("seed") = 20240901ULL, py::arg("L") = 1.0);

    m.def(
        "simulate",
        [](const cb::Problem& p, int N, double t_end, double threshold, double cfl, int stride) {
            const double pbar = cb::compute_pbar(p.m1, p.m2, p.geom.dim, p.p0, p.q1, p.q2);
            cb::RunOptions opts;
            opts.t_end = t_end;
            opts.u_linf_threshold = threshold;
            opts.threshold_ladder = {threshold / 100.0, threshold / 10.0, threshold};
            opts.cfl = cfl;
            opts.stride = stride;
            opts.row = cb::RowSpec{pbar, p.p0, p.q1, p.m1, p.m2, p.alpha};
            const cb::RadialGrid grid = cb::build_grid(p.geom, N);
            const cb::SimTrace tr = cb::run(p, grid, opts);
            py::dict d;
            d["verdict"] = cb::verdict_name(tr.verdict);
            d["t_final"] = tr.t_final;
            d["steps"] = tr.steps;
            std::vector<double> t, linf, phi, mass;
            for (const auto& r : tr.rows) {
                t.push_back(r.t);
                linf.push_back(r.linf);
                phi.push_back(r.phi);
                mass.push_back(r.mass);
            }
            d["t"] = t;
            d["linf"] = linf;
            d["phi"] = phi;
            d["mass"] = mass;
            return d;
        },
        py::arg("problem"), py::arg("N") = 256, py::arg("t_end") = 1.0,
        py::arg("threshold") = 1e5, py::arg("cfl") = 0.4, py::arg("stride") = 10);
}
