// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <cstdint>
#include <vector>

#include <pdsort/tracker.hpp>

namespace pdsort {

/// Desk-scale tracking metrics. mota always satisfies
/// mota = 1 - (fn + fp + id_switches) / gt.
struct MetricsReport {
    double mota = 0.0;
    double idf1 = 0.0;
    std::int64_t id_switches = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t gt = 0;  // total ground-truth boxes
};

/// CLEAR-style evaluation: per-frame Hungarian matching on IoU (admissible
/// at or above iou_match_thresh), FP/FN from the unmatched sets, an identity
/// switch whenever a ground-truth identity re-matches under a different
/// result id, and IDF1 from the optimal global identity mapping.
MetricsReport evaluate(const std::vector<FrameResult>& gt,
                       const std::vector<FrameResult>& results,
                       double iou_match_thresh = 0.5);

}  // namespace pdsort
