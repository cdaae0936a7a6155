// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <pdsort/errors.hpp>

namespace pdsort {

/// Axis-aligned box in pixel coordinates, corner form (x2 >= x1, y2 >= y1).
struct BBox {
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;

    double width() const { return x2 - x1; }
    double height() const { return y2 - y1; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (x1 + x2); }
    double center_y() const { return 0.5 * (y1 + y2); }
};

/// A box together with its pseudo-depth (always > 0).
struct DepthBox {
    BBox box;
    double pd = 0.0;
};

/// Pixel dimensions of the real camera view.
struct ViewGeometry {
    double img_height = 0.0;
    double img_width = 0.0;
};

/// Distance from the box bottom to the bottom of a complementary view of
/// equal height appended below the image. Positive for any box whose bottom
/// lies above the complementary view's bottom edge.
///
/// Throws InvalidGeometryError when box.y2 >= 2 * view.img_height.
double pseudo_depth(const BBox& box, const ViewGeometry& view);

/// Builds a DepthBox whose pd is derived from the view via pseudo_depth().
DepthBox make_depth_box(const BBox& box, const ViewGeometry& view);

/// Standard 2D intersection over union. Degenerate or disjoint boxes give 0.
double iou(const BBox& a, const BBox& b);

/// Depth volume IoU: each box spans a volume of area * pseudo-depth, the
/// intersection uses the smaller pseudo-depth, and the result is the volume
/// ratio V_inter / (V1 + V2 - V_inter). Degenerate inputs give 0.
double dviou(const DepthBox& a, const DepthBox& b);

}  // namespace pdsort
