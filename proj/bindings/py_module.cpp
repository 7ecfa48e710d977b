#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvsim/algorithm.hpp"
#include "mvsim/engine.hpp"
#include "mvsim/render.hpp"
#include "mvsim/scenario.hpp"
#include "mvsim/trace_io.hpp"
#include "mvsim/verify.hpp"

namespace py = pybind11;
using namespace mvsim;

namespace {

DiskSet disks_from(const std::vector<std::pair<double, double>>& centers) {
    DiskSet d;
    for (auto& [x, y] : centers) d.centers.push_back({x, y});
    return d;
}

Snapshot snapshot_from(Light self_light,
                       const std::vector<std::tuple<double, double, Light>>& others) {
    Snapshot s;
    s.self_light = self_light;
    for (auto& [x, y, l] : others) s.others.push_back({{x, y}, l});
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "core simulator for the two-color mutual visibility algorithm";

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__repr__", [](const Point& p) {
            return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::enum_<Light>(m, "Light").value("Off", Light::Off).value("Red", Light::Red);
    py::enum_<Role>(m, "Role")
        .value("Corner", Role::Corner)
        .value("Side", Role::Side)
        .value("Interior", Role::Interior)
        .value("LineCase", Role::LineCase)
        .value("Alone", Role::Alone);
    py::enum_<FramePolicy>(m, "FramePolicy")
        .value("Aligned", FramePolicy::Aligned)
        .value("Rotated", FramePolicy::Rotated)
        .value("RotatedReflected", FramePolicy::RotatedReflected);
    py::enum_<Outcome>(m, "Outcome")
        .value("Solved", Outcome::Solved)
        .value("MaxRoundsExceeded", Outcome::MaxRoundsExceeded)
        .value("Violation", Outcome::Violation);

    py::class_<HullView>(m, "HullView")
        .def_readonly("vertices", &HullView::vertices)
        .def_readonly("on_edge", &HullView::on_edge)
        .def_readonly("interior", &HullView::interior)
        .def_readonly("degenerate_line", &HullView::degenerate_line)
        .def_readonly("extremes", &HullView::extremes);

    py::class_<Decision>(m, "Decision")
        .def_readonly("destination", &Decision::destination)
        .def_readonly("new_light", &Decision::new_light)
        .def_readonly("terminate", &Decision::terminate);

    m.def("orient", &orient, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("angle_cw", &angle_cw, py::arg("a"), py::arg("b"), py::arg("d"));
    m.def("convex_hull", &convex_hull, py::arg("points"));
    m.def("dist_point_segment", &dist_point_segment);
    m.def("min_dist_moving", &min_dist_moving);
    m.def("exterior_bisector", &exterior_bisector);

    m.def(
        "visible",
        [](int i, int j, const std::vector<std::pair<double, double>>& centers, int k) {
            return visible(i, j, disks_from(centers), k);
        },
        py::arg("i"), py::arg("j"), py::arg("centers"), py::arg("k_samples") = 64);
    m.def(
        "visible_set",
        [](int i, const std::vector<std::pair<double, double>>& centers, int k) {
            return visible_set(i, disks_from(centers), k);
        },
        py::arg("i"), py::arg("centers"), py::arg("k_samples") = 64);
    m.def(
        "visibility_oracle",
        [](int i, int j, const std::vector<std::pair<double, double>>& centers, int k) {
            return visibility_oracle(i, j, disks_from(centers), k);
        },
        py::arg("i"), py::arg("j"), py::arg("centers"), py::arg("k_samples") = 4096);

    m.def(
        "classify",
        [](Light self_light, const std::vector<std::tuple<double, double, Light>>& others) {
            return classify(snapshot_from(self_light, others));
        },
        py::arg("self_light"), py::arg("others"));
    m.def(
        "compute",
        [](Light self_light, const std::vector<std::tuple<double, double, Light>>& others,
           bool predict) {
            return compute(snapshot_from(self_light, others), ComputeOptions{predict});
        },
        py::arg("self_light"), py::arg("others"), py::arg("predict") = true);

    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("positions",
                               [](const Scenario& sc) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const Point& p : sc.positions) out.emplace_back(p.x, p.y);
                                   return out;
                               })
        .def_property_readonly("seed", [](const Scenario& sc) { return sc.params.seed; })
        .def("to_text", &scenario_to_text);

    m.def("generate_scenario", &generate_scenario, py::arg("n"), py::arg("seed"),
          py::arg("spread"), py::arg("collinear") = false);
    m.def("scenario_from_text", &scenario_from_text);

    py::class_<Trace>(m, "Trace")
        .def_readonly("outcome", &Trace::outcome)
        .def_property_readonly("rounds", &Trace::total_rounds)
        .def_property_readonly("final",
                               [](const Trace& t) {
                                   std::vector<std::tuple<double, double, Light, bool>> out;
                                   for (const Robot& r : t.final_config().robots)
                                       out.emplace_back(r.center.x, r.center.y, r.light,
                                                        r.terminated);
                                   return out;
                               })
        .def("to_text", &trace_to_text);

    m.def("run", [](const Scenario& sc) { return run(sc); }, py::arg("scenario"));
    m.def(
        "verify_trace_text",
        [](const std::string& text, int oracle_k) {
            const VerifyReport rep = verify_trace(trace_from_text(text), oracle_k);
            std::vector<std::pair<std::string, bool>> out;
            for (const CheckResult& c : rep.checks) out.emplace_back(c.name, c.pass);
            return out;
        },
        py::arg("trace_text"), py::arg("oracle_k") = 4096);
}
