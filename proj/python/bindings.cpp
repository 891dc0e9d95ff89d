/*
 * Copyright 2026 The brcaustics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brc/curve.hpp"
#include "brc/distance.hpp"
#include "brc/errors.hpp"
#include "brc/lightcone.hpp"
#include "brc/lightsheets.hpp"
#include "brc/normal_forms.hpp"
#include "brc/scene.hpp"
#include "brc/verify.hpp"
#include "brc/worldsheet.hpp"

namespace py = pybind11;
using namespace brc;

namespace {

MinkVec to_vec(const std::vector<double>& xs) { return MinkVec(xs); }
std::vector<double> from_vec(const MinkVec& v) { return v.components(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "light sheets, caustics and Maxwell sets of world hyper-sheets";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    // --- Minkowski primitives -------------------------------------------
    m.def("pseudo_dot",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return pseudo_dot(to_vec(a), to_vec(b));
          },
          py::arg("x"), py::arg("y"));
    m.def("mink_norm",
          [](const std::vector<double>& a) { return mink_norm(to_vec(a)); });
    m.def("causal_character",
          [](const std::vector<double>& a, double tol) {
              return to_string(causal_character(to_vec(a), tol));
          },
          py::arg("x"), py::arg("tol") = 1e-9);
    m.def("wedge",
          [](const std::vector<std::vector<double>>& rows) {
              std::vector<MinkVec> xs;
              for (const auto& r : rows) xs.push_back(to_vec(r));
              return from_vec(wedge(xs));
          });
    m.def("on_lightcone",
          [](const std::vector<double>& x, const std::vector<double>& v, double tol) {
              return on_lightcone(to_vec(x), to_vec(v), tol);
          },
          py::arg("x"), py::arg("vertex"), py::arg("tol") = 1e-9);

    // --- expressions ------------------------------------------------------
    m.def("eval_expression",
          [](const std::string& text, const std::vector<std::string>& params,
             const std::vector<double>& values) {
              return Expression::parse(text, params).eval(values);
          },
          py::arg("text"), py::arg("params"), py::arg("values"));
    m.def("expression_partial",
          [](const std::string& text, const std::vector<std::string>& params,
             const std::vector<double>& values, const std::vector<int>& exponents) {
              const Expression e = Expression::parse(text, params);
              std::vector<int> dirs;
              int order = 0;
              for (std::size_t i = 0; i < exponents.size(); ++i) order += exponents[i];
              for (std::size_t i = 0; i < exponents.size(); ++i)
                  dirs.push_back(static_cast<int>(i));
              const Jet j = e.eval_jet(values, std::min(order, 4), dirs);
              return j.deriv(exponents);
          },
          py::arg("text"), py::arg("params"), py::arg("values"), py::arg("exponents"),
          "Partial derivative with the given exponent per parameter (total order <= 4).");

    // --- scenes and sheets -------------------------------------------------
    py::class_<Scene>(m, "Scene")
        .def_readonly("dim", &Scene::dim)
        .def_property_readonly("mu_range", [](const Scene& s) { return s.mu_range; })
        .def_property_readonly("signs", &Scene::signs);
    m.def("load_scene", [](const std::string& p) { return load_scene(p); });
    m.def("scene_from_json", &scene_from_json_text);

    py::class_<MomentaryFrame>(m, "MomentaryFrame")
        .def_property_readonly("point", [](const MomentaryFrame& f) { return from_vec(f.point); })
        .def_property_readonly("nS", [](const MomentaryFrame& f) { return from_vec(f.nS); })
        .def_property_readonly("nT", [](const MomentaryFrame& f) { return from_vec(f.nT); })
        .def_property_readonly("ok", &MomentaryFrame::ok)
        .def_property_readonly("status",
                               [](const MomentaryFrame& f) { return to_string(f.status); });

    py::class_<FocalPoint>(m, "FocalPoint")
        .def_property_readonly("point", [](const FocalPoint& p) { return from_vec(p.lambda); })
        .def_readonly("t", &FocalPoint::t)
        .def_readonly("u", &FocalPoint::u)
        .def_readonly("sign", &FocalPoint::sign)
        .def_readonly("branch", &FocalPoint::branch)
        .def_readonly("kappa", &FocalPoint::kappa)
        .def_readonly("mu", &FocalPoint::mu);

    py::class_<MaxwellPoint>(m, "MaxwellPoint")
        .def_property_readonly("point", [](const MaxwellPoint& p) { return from_vec(p.lambda); })
        .def_readonly("t", &MaxwellPoint::t)
        .def_readonly("s1", &MaxwellPoint::s1)
        .def_readonly("mu1", &MaxwellPoint::mu1)
        .def_readonly("sign1", &MaxwellPoint::sign1)
        .def_readonly("s2", &MaxwellPoint::s2)
        .def_readonly("mu2", &MaxwellPoint::mu2)
        .def_readonly("sign2", &MaxwellPoint::sign2);

    py::class_<WorldSheet>(m, "WorldSheet")
        .def(py::init<Scene>())
        .def_property_readonly("dim", &WorldSheet::dim)
        .def("embed",
             [](const WorldSheet& ws, const std::vector<double>& u, double t) {
                 return from_vec(ws.embed(u, t));
             })
        .def("frame_at",
             [](const WorldSheet& ws, const std::vector<double>& u, double t) {
                 return ws.frame_at(u, t);
             })
        .def("validate",
             [](const WorldSheet& ws) {
                 const auto rep = ws.validate();
                 return py::make_tuple(rep.pass(), rep.table());
             })
        .def("lightcone_gauss",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, int sign) {
                 return from_vec(lightcone_gauss(ws.frame_at(u, t), sign));
             })
        .def("principal_curvatures",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, int sign) {
                 return curvature_data(ws, u, t, sign).kappas;
             })
        .def("light_sheet_point",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, double mu,
                int sign) { return from_vec(light_sheet_point(ws, u, t, mu, sign)); })
        .def("focal_points",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, int sign) {
                 return lightlike_focal_points(ws, u, t, sign);
             })
        .def("br_caustic", [](const WorldSheet& ws) { return br_caustic(ws).points; })
        .def("maxwell_set", [](const WorldSheet& ws) { return maxwell_set(ws).points; })
        .def("evolute",
             [](const WorldSheet& ws) {
                 std::vector<std::vector<double>> pts;
                 for (const auto& p : evolute_points(ws).points)
                     pts.push_back(from_vec(p.point));
                 return pts;
             })
        .def("focal_mu_roots",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, int sign) {
                 return focal_mu_roots(ws, u, t, sign, ws.scene().mu_range);
             })
        .def("G",
             [](const WorldSheet& ws, const std::vector<double>& u, double t,
                const std::vector<double>& lambda) {
                 return G_eval(ws, u, t, to_vec(lambda));
             })
        .def("criticality",
             [](const WorldSheet& ws, const std::vector<double>& u, double t,
                const std::vector<double>& lambda) {
                 const auto rep =
                     criticality_check(ws, u, t, to_vec(lambda), ws.scene().tol.criticality);
                 return to_string(rep.verdict);
             })
        .def("legendrian_lift",
             [](const WorldSheet& ws, const std::vector<double>& u, double t, double mu,
                int sign) {
                 const auto lp = legendrian_lift(ws, u, t, mu, sign);
                 return py::make_tuple(from_vec(lp.lambda), lp.t, from_vec(lp.p));
             })
        .def("frenet_frame",
             [](const WorldSheet& ws, double s, double t) {
                 const auto f = frenet_frame(ws, s, t);
                 py::dict d;
                 d["t"] = from_vec(f.t_vec);
                 d["n"] = from_vec(f.n_vec);
                 d["b"] = from_vec(f.b_vec);
                 d["kappa_g"] = f.kappa_g;
                 d["kappa_n"] = f.kappa_n;
                 d["tau_g"] = f.tau_g;
                 d["speed"] = f.speed;
                 return d;
             })
        .def("sigma",
             [](const WorldSheet& ws, double s, double t, int sign) {
                 const auto sv = sigma_invariant(ws, s, t, sign);
                 return py::make_tuple(sv.sigma, sv.dsigma_ds);
             })
        .def("classify",
             [](const WorldSheet& ws, double s, double t, int sign) {
                 return to_string(classify_lightsheet_point(ws, s, t, sign).tag);
             })
        .def("sigma_roots",
             [](const WorldSheet& ws, double t, int sign) {
                 std::vector<py::tuple> out;
                 for (const auto& r : find_sigma_roots(ws, t, sign))
                     out.push_back(py::make_tuple(r.s, to_string(r.cls.tag)));
                 return out;
             })
        .def("conical_vertex",
             [](const WorldSheet& ws, double t, int sign) -> py::object {
                 const auto v = detect_conical_momentary_curve(ws, t, sign);
                 if (!v) return py::none();
                 return py::cast(from_vec(*v));
             })
        .def("verify", [](const WorldSheet& ws) {
            std::vector<py::tuple> out;
            for (const auto& r : run_verification(ws))
                out.push_back(py::make_tuple(r.name, r.pass, r.worst, r.tolerance));
            return out;
        });

    // --- normal forms -------------------------------------------------------
    m.def("normal_form_surface",
          [](const std::string& kind, int nu, int nv, double extent) {
              const auto surf = normal_form_surface(surface_kind_from_name(kind), nu, nv,
                                                    extent);
              std::vector<std::vector<double>> pts;
              for (const auto& p : surf.points)
                  pts.emplace_back(p.begin(), p.begin() + surf.point_dim);
              return pts;
          },
          py::arg("kind"), py::arg("nu") = 41, py::arg("nv") = 41, py::arg("extent") = 1.0);
    m.def("family_front",
          [](int form, int n, double extent) {
              GeneratingFamily fam;
              fam.form_id = form;
              return family_front(fam, n, n, 9, extent);
          },
          py::arg("form"), py::arg("n") = 21, py::arg("extent") = 1.0);
    m.def("family_caustic",
          [](int form, int n, double extent) {
              GeneratingFamily fam;
              fam.form_id = form;
              return family_caustic(fam, n, n, extent);
          },
          py::arg("form"), py::arg("n") = 21, py::arg("extent") = 1.0);
    m.def("germ_type",
          [](const std::vector<double>& derivs, double tol) {
              return to_string(germ_type(derivs, tol));
          },
          py::arg("derivs"), py::arg("tol") = 1e-9);
}
