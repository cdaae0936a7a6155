// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include <pdsort/association.hpp>
#include <pdsort/geometry.hpp>
#include <pdsort/metrics.hpp>
#include <pdsort/synth.hpp>
#include <pdsort/tracker.hpp>

namespace py = pybind11;

namespace {

using BoxTuple = std::array<double, 4>;  // x1, y1, x2, y2
using Row = std::tuple<int, int, double, double, double, double>;  // frame, id, box

pdsort::BBox to_bbox(const BoxTuple& b) { return pdsort::BBox{b[0], b[1], b[2], b[3]}; }

pdsort::CostMatrix to_cost_matrix(const std::vector<std::vector<double>>& values) {
    const int rows = static_cast<int>(values.size());
    const int cols = rows > 0 ? static_cast<int>(values[0].size()) : 0;
    pdsort::CostMatrix c(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(values[i].size()) != cols) {
            throw std::invalid_argument("cost rows must have equal length");
        }
        for (int j = 0; j < cols; ++j) c.at(i, j) = values[i][j];
    }
    return c;
}

std::vector<pdsort::FrameResult> to_frame_results(const std::vector<Row>& rows) {
    std::map<int, pdsort::FrameResult> by_frame;
    for (const auto& [frame, id, x1, y1, x2, y2] : rows) {
        auto& fr = by_frame[frame];
        fr.frame = frame;
        fr.entries.push_back({id, pdsort::BBox{x1, y1, x2, y2}, 1.0});
    }
    std::vector<pdsort::FrameResult> out;
    for (auto& [f, fr] : by_frame) out.push_back(std::move(fr));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pseudo-depth multi-object tracking core";

    m.def(
        "pseudo_depth",
        [](const BoxTuple& box, double img_height) {
            return pdsort::pseudo_depth(to_bbox(box), pdsort::ViewGeometry{img_height, 0.0});
        },
        py::arg("box"), py::arg("img_height"),
        "Pseudo-depth of a (x1, y1, x2, y2) box under the complementary view.");

    m.def(
        "iou",
        [](const BoxTuple& a, const BoxTuple& b) {
            return pdsort::iou(to_bbox(a), to_bbox(b));
        },
        py::arg("a"), py::arg("b"), "2D intersection over union of two boxes.");

    m.def(
        "dviou",
        [](const BoxTuple& a, double pd_a, const BoxTuple& b, double pd_b) {
            return pdsort::dviou(pdsort::DepthBox{to_bbox(a), pd_a},
                                 pdsort::DepthBox{to_bbox(b), pd_b});
        },
        py::arg("a"), py::arg("pd_a"), py::arg("b"), py::arg("pd_b"),
        "Depth-volume IoU of two boxes with pseudo-depths.");

    m.def(
        "interval_depths",
        [](const std::vector<double>& pds, int interval_num) {
            return pdsort::interval_depths(pds, {interval_num});
        },
        py::arg("pds"), py::arg("interval_num") = 8,
        "Quantized interval depth of each pseudo-depth after min-max normalization.");

    m.def(
        "qpdm_cost",
        [](const std::vector<double>& track_pds, const std::vector<double>& det_pds,
           int interval_num) {
            const auto c = pdsort::qpdm_cost(track_pds, det_pds, {interval_num});
            std::vector<std::vector<double>> out(c.rows(), std::vector<double>(c.cols()));
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) out[i][j] = c.at(i, j);
            return out;
        },
        py::arg("track_pds"), py::arg("det_pds"), py::arg("interval_num") = 8,
        "Quantized pseudo-depth cost matrix between tracklets and detections.");

    m.def(
        "solve_assignment",
        [](const std::vector<std::vector<double>>& cost, std::optional<double> gate) {
            const auto res = pdsort::solve_assignment(
                to_cost_matrix(cost), gate.value_or(pdsort::CostMatrix::kForbidden));
            return std::make_tuple(res.matches, res.unmatched_rows, res.unmatched_cols);
        },
        py::arg("cost"), py::arg("gate") = std::nullopt,
        "Minimum-cost assignment: (matches, unmatched_rows, unmatched_cols). "
        "Use float('inf') entries for forbidden pairs.");

    py::class_<pdsort::TrackerConfig>(m, "TrackerConfig")
        .def(py::init<>())
        .def_static("preset", &pdsort::TrackerConfig::preset, py::arg("name"))
        .def("set", &pdsort::TrackerConfig::set, py::arg("key"), py::arg("value"))
        .def_readwrite("det_thresh", &pdsort::TrackerConfig::det_thresh)
        .def_readwrite("iou_threshold", &pdsort::TrackerConfig::iou_threshold)
        .def_readwrite("lambda1", &pdsort::TrackerConfig::lambda1)
        .def_readwrite("lambda2", &pdsort::TrackerConfig::lambda2)
        .def_readwrite("interval_num", &pdsort::TrackerConfig::interval_num)
        .def_readwrite("ocm_dt", &pdsort::TrackerConfig::ocm_dt)
        .def_readwrite("t_expire", &pdsort::TrackerConfig::t_expire)
        .def_readwrite("min_hits", &pdsort::TrackerConfig::min_hits)
        .def_readwrite("img_height", &pdsort::TrackerConfig::img_height)
        .def_readwrite("img_width", &pdsort::TrackerConfig::img_width)
        .def_readwrite("cmc_enabled", &pdsort::TrackerConfig::cmc_enabled)
        .def_readwrite("cmc_translate_velocity",
                       &pdsort::TrackerConfig::cmc_translate_velocity)
        .def_readwrite("use_dviou", &pdsort::TrackerConfig::use_dviou);

    py::class_<pdsort::Tracker>(m, "Tracker")
        .def(py::init<pdsort::TrackerConfig>(), py::arg("config"))
        .def(
            "step",
            [](pdsort::Tracker& tracker, int frame,
               const std::vector<std::array<double, 5>>& detections,
               std::optional<std::array<double, 6>> warp) {
                const pdsort::ViewGeometry view{tracker.config().img_height,
                                                tracker.config().img_width};
                std::vector<pdsort::Detection> dets;
                dets.reserve(detections.size());
                for (const auto& d : detections) {
                    const pdsort::BBox box{d[0], d[1], d[2], d[3]};
                    dets.push_back({pdsort::make_depth_box(box, view), d[4]});
                }
                pdsort::AffineTransform w;
                if (warp) {
                    w.M << (*warp)[0], (*warp)[1], (*warp)[3], (*warp)[4];
                    w.T << (*warp)[2], (*warp)[5];
                }
                const pdsort::FrameResult fr = tracker.step(frame, dets, w);
                std::vector<std::tuple<int, double, double, double, double, double>> out;
                out.reserve(fr.entries.size());
                for (const auto& e : fr.entries) {
                    out.emplace_back(e.id, e.box.x1, e.box.y1, e.box.x2, e.box.y2, e.score);
                }
                return out;
            },
            py::arg("frame"), py::arg("detections"), py::arg("warp") = std::nullopt,
            "Advance one frame. Detections are (x1, y1, x2, y2, score) tuples, the "
            "optional warp is (a11, a12, a13, a21, a22, a23). Returns confirmed "
            "tracks as (id, x1, y1, x2, y2, score).");

    py::class_<pdsort::MetricsReport>(m, "MetricsReport")
        .def_readonly("mota", &pdsort::MetricsReport::mota)
        .def_readonly("idf1", &pdsort::MetricsReport::idf1)
        .def_readonly("id_switches", &pdsort::MetricsReport::id_switches)
        .def_readonly("fp", &pdsort::MetricsReport::fp)
        .def_readonly("fn", &pdsort::MetricsReport::fn)
        .def_readonly("gt", &pdsort::MetricsReport::gt)
        .def("__repr__", [](const pdsort::MetricsReport& r) {
            return "MetricsReport(mota=" + std::to_string(r.mota) +
                   ", idf1=" + std::to_string(r.idf1) +
                   ", id_switches=" + std::to_string(r.id_switches) + ")";
        });

    m.def(
        "evaluate",
        [](const std::vector<Row>& gt, const std::vector<Row>& results,
           double iou_match_thresh) {
            return pdsort::evaluate(to_frame_results(gt), to_frame_results(results),
                                    iou_match_thresh);
        },
        py::arg("gt"), py::arg("results"), py::arg("iou_match_thresh") = 0.5,
        "CLEAR-style metrics from (frame, id, x1, y1, x2, y2) rows.");
}
