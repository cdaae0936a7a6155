// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors
//
// Test-only oracles. These deliberately avoid the library's own code paths:
// the assignment oracle enumerates permutations, the overlap oracles count
// unit grid cells.

#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include <pdsort/association.hpp>
#include <pdsort/geometry.hpp>

namespace pdsort::testing {

// Minimum total cost over all maximal one-to-one assignments, by exhaustive
// permutation. Usable up to about 7x7.
inline double brute_force_min_cost(const CostMatrix& c) {
    const bool transposed = c.rows() > c.cols();
    const int n = transposed ? c.cols() : c.rows();
    const int m = transposed ? c.rows() : c.cols();
    auto cost = [&](int i, int j) { return transposed ? c.at(j, i) : c.at(i, j); };

    std::vector<int> cols(m);
    std::iota(cols.begin(), cols.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += cost(i, cols[i]);
        best = std::min(best, total);
    } while (std::next_permutation(cols.begin(), cols.end()));
    return best;
}

// Overlap statistics counted over integer unit cells; exact for boxes with
// integer corners.
inline long long grid_intersection_cells(const BBox& a, const BBox& b) {
    long long cells = 0;
    const int x_lo = static_cast<int>(std::max(a.x1, b.x1));
    const int x_hi = static_cast<int>(std::min(a.x2, b.x2));
    const int y_lo = static_cast<int>(std::max(a.y1, b.y1));
    const int y_hi = static_cast<int>(std::min(a.y2, b.y2));
    for (int x = x_lo; x < x_hi; ++x) {
        for (int y = y_lo; y < y_hi; ++y) ++cells;
    }
    return cells;
}

inline double grid_iou(const BBox& a, const BBox& b) {
    const long long inter = grid_intersection_cells(a, b);
    const long long area_a = static_cast<long long>(a.area());
    const long long area_b = static_cast<long long>(b.area());
    const long long uni = area_a + area_b - inter;
    return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

inline double grid_dviou(const DepthBox& a, const DepthBox& b) {
    const double v_inter =
        static_cast<double>(grid_intersection_cells(a.box, b.box)) * std::min(a.pd, b.pd);
    const double v_a = a.box.area() * a.pd;
    const double v_b = b.box.area() * b.pd;
    const double uni = v_a + v_b - v_inter;
    return uni > 0.0 ? v_inter / uni : 0.0;
}

}  // namespace pdsort::testing
