// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <pdsort/geometry.hpp>
#include <pdsort/kalman_filter.hpp>

namespace pdsort {

/// Dense tracklet-by-detection cost table. Entries are finite except for
/// kForbidden, which marks pairs that must never be matched.
class CostMatrix {
public:
    static constexpr double kForbidden = std::numeric_limits<double>::infinity();

    CostMatrix() = default;
    CostMatrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          values_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& at(int r, int c) { return values_[static_cast<size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return values_[static_cast<size_t>(r) * cols_ + c]; }

    static bool forbidden(double v) { return std::isinf(v); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> values_;
};

/// Pseudo-depth quantization settings.
struct QpdmParams {
    int interval_num = 8;  // >= 1
};

/// Min-max normalizes the pseudo-depths and maps each to the upper limit of
/// its sub-interval: value i of n quantizes to (i+1)/n in (0, 1]. A list with
/// equal entries (including a singleton) maps everything to 1/n.
std::vector<double> interval_depths(std::span<const double> pds, QpdmParams params);

/// Quantized pseudo-depth cost: absolute difference between interval depths,
/// each side normalized independently. Values lie in [0, 1 - 1/n].
CostMatrix qpdm_cost(std::span<const double> track_pds,
                     std::span<const double> det_pds, QpdmParams params);

/// Velocity-direction consistency. For each tracklet the motion direction is
/// taken between its observations at the last frame and frame_gap frames
/// earlier (falling back to the oldest stored observation); the cost against
/// a detection is the angle between that direction and the direction from the
/// last observation to the detection, scaled to [0, 1]. Tracklets with fewer
/// than two observations, or zero-length direction vectors, contribute 0.
CostMatrix ocm_cost(const std::vector<std::span<const Observation>>& track_histories,
                    std::span<const Observation> detections, int frame_gap);

/// Negated DVIoU with gating: pairs whose DVIoU falls below gate_threshold
/// are set to the forbidden sentinel.
CostMatrix dviou_cost(std::span<const DepthBox> tracks,
                      std::span<const DepthBox> detections, double gate_threshold);

/// Plain 2D-IoU variant of dviou_cost (the depth-free ablation).
CostMatrix iou_cost(std::span<const DepthBox> tracks,
                    std::span<const DepthBox> detections, double gate_threshold);

/// Elementwise c_dviou + lambda1*c_qpd + lambda2*c_ocm. Forbidden entries in
/// any component stay forbidden. Throws std::invalid_argument on shape
/// mismatch.
CostMatrix compose_cost(const CostMatrix& c_dviou, const CostMatrix& c_qpd,
                        const CostMatrix& c_ocm, double lambda1, double lambda2);

struct AssignmentResult {
    std::vector<std::pair<int, int>> matches;  // (row, col), ascending rows
    std::vector<int> unmatched_rows;
    std::vector<int> unmatched_cols;
};

/// Minimum-total-cost one-to-one assignment over the admissible (finite)
/// entries; forbidden pairs are never matched. Matches whose cost exceeds
/// gate are discarded into the unmatched sets. Deterministic tie-breaking:
/// rows are resolved in ascending order, equal alternatives prefer the
/// lowest column index.
AssignmentResult solve_assignment(const CostMatrix& cost,
                                  double gate = CostMatrix::kForbidden);

}  // namespace pdsort
