// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/geometry.hpp>

#include <algorithm>
#include <string>

namespace pdsort {

double pseudo_depth(const BBox& box, const ViewGeometry& view) {
    const double limit = 2.0 * view.img_height;
    if (!(box.y2 < limit)) {
        throw InvalidGeometryError(
            "box bottom y2=" + std::to_string(box.y2) +
            " at or below the complementary view bottom (" + std::to_string(limit) + ")");
    }
    return limit - box.y2;
}

DepthBox make_depth_box(const BBox& box, const ViewGeometry& view) {
    return DepthBox{box, pseudo_depth(box, view)};
}

double iou(const BBox& a, const BBox& b) {
    const double iw = std::max(0.0, std::min(a.x2, b.x2) - std::max(a.x1, b.x1));
    const double ih = std::max(0.0, std::min(a.y2, b.y2) - std::max(a.y1, b.y1));
    const double inter = iw * ih;
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;
    return inter / uni;
}

double dviou(const DepthBox& a, const DepthBox& b) {
    const double iw = std::max(0.0, std::min(a.box.x2, b.box.x2) - std::max(a.box.x1, b.box.x1));
    const double ih = std::max(0.0, std::min(a.box.y2, b.box.y2) - std::max(a.box.y1, b.box.y1));
    const double pd_inter = std::min(a.pd, b.pd);
    const double v_inter = iw * ih * pd_inter;
    const double v_a = a.box.area() * a.pd;
    const double v_b = b.box.area() * b.pd;
    const double uni = v_a + v_b - v_inter;
    if (uni <= 0.0) return 0.0;
    return v_inter / uni;
}

}  // namespace pdsort
