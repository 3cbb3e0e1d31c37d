#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "n7/coadjoint.hpp"
#include "n7/coherent_frame.hpp"
#include "n7/dual_topology.hpp"
#include "n7/group_law.hpp"
#include "n7/ncdl_report.hpp"
#include "n7/orbits.hpp"

namespace py = pybind11;
using namespace n7;

namespace {

std::vector<double> to_doubles(const RatVec& v) {
    std::vector<double> out;
    for (const auto& c : v) out.push_back(to_double(c));
    return out;
}

RatVec to_rationals(const std::vector<std::pair<long long, long long>>& v) {
    RatVec out;
    for (const auto& [num, den] : v) out.emplace_back(Rat(num, den));
    return out;
}

}  // namespace

PYBIND11_MODULE(_n7orbits, m) {
    m.doc() = "Orbit-method toolkit for the 7-dimensional nilpotent group N7";

    py::class_<StructureConstants>(m, "StructureConstants")
        .def_static("n7", &StructureConstants::n7)
        .def_static("load", &StructureConstants::load)
        .def_static("parse", &StructureConstants::parse)
        .def_property_readonly("dim", &StructureConstants::dim)
        .def("validate",
             [](const StructureConstants& sc) {
                 const auto rep = sc.validate();
                 py::dict out;
                 out["antisymmetry_ok"] = rep.antisymmetry_ok;
                 out["jacobi_ok"] = rep.jacobi_ok;
                 out["nilpotent"] = rep.nilpotent;
                 out["nilpotency_step"] = rep.nilpotency_step;
                 out["lower_central_dims"] = rep.lower_central_dims;
                 return out;
             })
        .def("bracket", [](const StructureConstants& sc, const std::vector<double>& x,
                           const std::vector<double>& y) {
            return sc.bracket<double>(x, y,
                                      [](double f, const Rat& c) { return f * to_double(c); });
        });

    m.def(
        "bch_product",
        [](const StructureConstants& sc, const std::vector<std::pair<long long, long long>>& x,
           const std::vector<std::pair<long long, long long>>& y) {
            return to_doubles(bch_product(sc, to_rationals(x), to_rationals(y)));
        },
        "BCH product of two algebra elements given as (num, den) pairs");
    m.def("bch_product_f", [](const StructureConstants& sc, const std::vector<double>& x,
                              const std::vector<double>& y) {
        RatVec rx, ry;
        for (double v : x) rx.emplace_back(Rat(v));
        for (double v : y) ry.emplace_back(Rat(v));
        return to_doubles(bch_product(sc, rx, ry));
    });

    m.def("coadjoint",
          py::overload_cast<const StructureConstants&, const std::vector<double>&,
                            const std::vector<double>&>(&coadjoint),
          "Coadjoint action Ad*(g) f in first-kind coordinates");

    m.def("classify_layer", [](const std::vector<double>& f, double tol) {
        return layer_name(classify_layer(f, tol));
    }, py::arg("f"), py::arg("zero_threshold") = 1e-12);

    m.def("orbit_invariants", [](const std::vector<double>& f) {
        return orbit_invariants(f);
    });

    m.def("stabilizer_dim", [](const StructureConstants& sc, const std::vector<double>& f) {
        RatVec rf;
        for (double v : f) rf.emplace_back(Rat(v));
        return stabilizer(sc, rf).dim();
    });
    m.def("polarization_dim", [](const StructureConstants& sc, const std::vector<double>& f) {
        RatVec rf;
        for (double v : f) rf.emplace_back(Rat(v));
        return vergne_polarization(sc, rf).space.dim();
    });

    py::class_<Grid>(m, "Grid")
        .def(py::init([](int n, double half_width, std::pair<double, double> centre) {
                 Grid g;
                 g.n = n;
                 g.half_width = half_width;
                 g.centre = {centre.first, centre.second};
                 return g;
             }),
             py::arg("n") = 48, py::arg("half_width") = 6.0,
             py::arg("centre") = std::pair<double, double>(0.0, 0.0))
        .def_readonly("n", &Grid::n)
        .def_readonly("half_width", &Grid::half_width)
        .def("spacing", &Grid::spacing)
        .def("weight", &Grid::weight);

    py::class_<TestFunction>(m, "TestFunction")
        .def_static("gaussian",
                    [](std::complex<double> coef, const std::array<double, 7>& centre, double a,
                       const StructureConstants& sc) {
                        TestFunction f = TestFunction::gaussian(coef, centre, a);
                        f.bind(sc);
                        return f;
                    },
                    py::arg("coef") = std::complex<double>(1.0, 0.0),
                    py::arg("centre") = std::array<double, 7>{}, py::arg("a") = M_PI,
                    py::arg("sc") = StructureConstants::n7())
        .def("involution", &TestFunction::involution)
        .def("__add__", &TestFunction::operator+)
        .def("l1_norm", &TestFunction::l1_norm)
        .def("character",
             [](const TestFunction& f, const std::array<double, 4>& xi) { return f.character(xi); })
        .def("hat", [](const TestFunction& f, const std::array<double, 2>& x,
                       const std::array<double, 5>& q) { return f.hat(x, q); });

    m.def(
        "induced_kernel",
        [](const StructureConstants& sc, const TestFunction& f, const std::vector<double>& func,
           const Grid& grid) { return induced_kernel(sc, f, func, grid).kernel; },
        "Discretized induced-representation kernel (complex matrix)");

    m.def("operator_norm", &operator_norm);
    m.def("pi0_sup_norm", [](const TestFunction& f, int n, double half_width) {
        Grid4 g;
        g.n = n;
        g.half_width = half_width;
        return pi0_sup_norm(f, g);
    }, py::arg("f"), py::arg("n") = 17, py::arg("half_width") = 3.0);

    py::class_<OrbitSequence>(m, "OrbitSequence")
        .def(py::init([](const std::string& layer, const std::vector<std::string>& rules,
                         int horizon) {
                 OrbitSequence seq;
                 seq.layer = layer == "Gamma1" ? LayerTag::Gamma1 : LayerTag::Gamma2;
                 for (const auto& r : rules) seq.rules.push_back(RuleExpr::parse(r));
                 seq.horizon = horizon;
                 return seq;
             }),
             py::arg("layer"), py::arg("rules"), py::arg("horizon") = 200)
        .def("representative_at", &OrbitSequence::representative_at);

    m.def("limit_set", [](const OrbitSequence& seq) {
        const auto ls = limit_set(seq);
        py::dict out;
        out["kind"] = limit_kind_name(ls.kind);
        if (ls.c1) out["c1"] = *ls.c1;
        if (ls.c2) out["c2"] = *ls.c2;
        out["point"] = ls.point;
        return out;
    });

    m.def(
        "verify_limit",
        [](const OrbitSequence& seq, const std::vector<double>& candidate, double tol,
           const std::string& mode, int K) {
            const auto rep = verify_limit(
                seq, candidate, tol,
                mode == "on-orbit" ? WitnessMode::OnOrbit : WitnessMode::Stated, K);
            py::dict out;
            out["pass"] = rep.pass;
            out["in_limit_set"] = rep.in_limit_set;
            out["max_distance"] = rep.max_distance;
            out["max_orbit_defect"] = rep.max_orbit_defect;
            out["note"] = rep.note;
            return out;
        },
        py::arg("seq"), py::arg("candidate"), py::arg("tol") = 1e-3,
        py::arg("mode") = "stated", py::arg("K") = 1000);

    m.def(
        "ncdl_report",
        [](const StructureConstants& sc, const TestFunction& f, const OrbitSequence& seq,
           const std::string& case_name, std::vector<int> k_list, int grid_n, double window) {
            NcdlCase tag = case_name == "degenerate"
                               ? NcdlCase::Degenerate
                               : (case_name == "gamma0" ? NcdlCase::Gamma0 : NcdlCase::Generic);
            NcdlOptions opts;
            if (!k_list.empty()) opts.k_list = std::move(k_list);
            opts.grid_n = grid_n;
            opts.window = window;
            const auto rep = ncdl_report(sc, f, seq, tag, opts);
            py::list rows;
            for (const auto& r : rep.rows) {
                py::dict d;
                d["k"] = r.k;
                d["schedule_scalar"] = r.schedule_scalar;
                d["pi_norm"] = r.pi_norm;
                d["sigma_norm"] = r.sigma_norm;
                d["diff_norm"] = r.diff_norm;
                rows.append(d);
            }
            py::dict out;
            out["rows"] = rows;
            out["decreasing"] = rep.decreasing;
            out["final_ratio"] = rep.final_ratio;
            out["pass"] = rep.pass;
            return out;
        },
        py::arg("sc"), py::arg("f"), py::arg("seq"), py::arg("case_name"),
        py::arg("k_list") = std::vector<int>{}, py::arg("grid_n") = 32, py::arg("window") = 6.0);

    m.def("sigma_gamma0_norm", [](const StructureConstants& sc, const TestFunction& f, double f5,
                                  double f6, int grid_n, double window) {
        Grid g;
        g.n = grid_n;
        g.half_width = window;
        auto h = [&f](const std::array<double, 4>& xi) { return f.character(xi); };
        return operator_norm(sigma_gamma0(sc, f5, f6, h, g).kernel);
    });
}
