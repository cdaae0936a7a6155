// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/association.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdsort {

namespace {

// Shortest-augmenting-path assignment with potentials; requires n <= m.
// Returns row -> column (0-based). Deterministic: rows are inserted in
// ascending order and delta ties resolve to the lowest column.
std::vector<int> min_cost_assignment(const std::vector<double>& a, int n, int m) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> p(m + 1, 0), way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = a[static_cast<size_t>(i0 - 1) * m + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= m; ++j) {
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    }
    return row_to_col;
}

}  // namespace

std::vector<double> interval_depths(std::span<const double> pds, QpdmParams params) {
    if (params.interval_num < 1) {
        throw std::invalid_argument("interval_num must be >= 1");
    }
    std::vector<double> out;
    out.reserve(pds.size());
    if (pds.empty()) return out;

    const auto [mn_it, mx_it] = std::minmax_element(pds.begin(), pds.end());
    const double mn = *mn_it;
    const double len = *mx_it - mn;
    const double n = static_cast<double>(params.interval_num);

    for (const double pd : pds) {
        const double norm = len > 0.0 ? (pd - mn) / len : 0.0;
        const int idx = std::min(static_cast<int>(std::floor(norm * n)),
                                 params.interval_num - 1);
        out.push_back(static_cast<double>(idx + 1) / n);
    }
    return out;
}

CostMatrix qpdm_cost(std::span<const double> track_pds,
                     std::span<const double> det_pds, QpdmParams params) {
    const auto track_depths = interval_depths(track_pds, params);
    const auto det_depths = interval_depths(det_pds, params);

    CostMatrix c(static_cast<int>(track_depths.size()),
                 static_cast<int>(det_depths.size()));
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) {
            c.at(i, j) = std::abs(track_depths[i] - det_depths[j]);
        }
    }
    return c;
}

CostMatrix ocm_cost(const std::vector<std::span<const Observation>>& track_histories,
                    std::span<const Observation> detections, int frame_gap) {
    CostMatrix c(static_cast<int>(track_histories.size()),
                 static_cast<int>(detections.size()));

    for (int i = 0; i < c.rows(); ++i) {
        const auto history = track_histories[i];
        if (history.size() < 2) continue;  // row stays 0

        const Observation& last = history.back();
        const int target = last.frame - std::max(frame_gap, 1);

        // Latest observation at or before the target frame, or the oldest one
        // when the history does not reach back that far.
        const Observation* prev = &history.front();
        for (const Observation& obs : history) {
            if (obs.frame > target) break;
            prev = &obs;
        }

        const double ux = last.center_x() - prev->center_x();
        const double uy = last.center_y() - prev->center_y();
        const double un = std::hypot(ux, uy);
        if (un == 0.0) continue;

        for (int j = 0; j < c.cols(); ++j) {
            const double vx = detections[j].center_x() - last.center_x();
            const double vy = detections[j].center_y() - last.center_y();
            const double vn = std::hypot(vx, vy);
            if (vn == 0.0) continue;
            const double cosang = std::clamp((ux * vx + uy * vy) / (un * vn), -1.0, 1.0);
            c.at(i, j) = std::acos(cosang) / std::numbers::pi;
        }
    }
    return c;
}

CostMatrix dviou_cost(std::span<const DepthBox> tracks,
                      std::span<const DepthBox> detections, double gate_threshold) {
    CostMatrix c(static_cast<int>(tracks.size()), static_cast<int>(detections.size()));
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) {
            const double sim = dviou(tracks[i], detections[j]);
            c.at(i, j) = sim < gate_threshold ? CostMatrix::kForbidden : -sim;
        }
    }
    return c;
}

CostMatrix iou_cost(std::span<const DepthBox> tracks,
                    std::span<const DepthBox> detections, double gate_threshold) {
    CostMatrix c(static_cast<int>(tracks.size()), static_cast<int>(detections.size()));
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) {
            const double sim = iou(tracks[i].box, detections[j].box);
            c.at(i, j) = sim < gate_threshold ? CostMatrix::kForbidden : -sim;
        }
    }
    return c;
}

CostMatrix compose_cost(const CostMatrix& c_dviou, const CostMatrix& c_qpd,
                        const CostMatrix& c_ocm, double lambda1, double lambda2) {
    if (c_qpd.rows() != c_dviou.rows() || c_qpd.cols() != c_dviou.cols() ||
        c_ocm.rows() != c_dviou.rows() || c_ocm.cols() != c_dviou.cols()) {
        throw std::invalid_argument("cost component shapes differ");
    }
    CostMatrix c(c_dviou.rows(), c_dviou.cols());
    for (int i = 0; i < c.rows(); ++i) {
        for (int j = 0; j < c.cols(); ++j) {
            const double a = c_dviou.at(i, j);
            const double b = c_qpd.at(i, j);
            const double d = c_ocm.at(i, j);
            if (CostMatrix::forbidden(a) || CostMatrix::forbidden(b) ||
                CostMatrix::forbidden(d)) {
                c.at(i, j) = CostMatrix::kForbidden;
            } else {
                c.at(i, j) = a + lambda1 * b + lambda2 * d;
            }
        }
    }
    return c;
}

AssignmentResult solve_assignment(const CostMatrix& cost, double gate) {
    AssignmentResult result;
    if (cost.empty()) {
        for (int i = 0; i < cost.rows(); ++i) result.unmatched_rows.push_back(i);
        for (int j = 0; j < cost.cols(); ++j) result.unmatched_cols.push_back(j);
        return result;
    }

    const bool transposed = cost.rows() > cost.cols();
    const int n = transposed ? cost.cols() : cost.rows();
    const int m = transposed ? cost.rows() : cost.cols();

    // Forbidden entries get a finite surrogate large enough that the solver
    // only uses them when no admissible completion exists; such matches are
    // filtered out below.
    double lo = 0.0, hi = 0.0;
    bool any_finite = false;
    for (int i = 0; i < cost.rows(); ++i) {
        for (int j = 0; j < cost.cols(); ++j) {
            const double v = cost.at(i, j);
            if (CostMatrix::forbidden(v)) continue;
            if (!any_finite) {
                lo = hi = v;
                any_finite = true;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    const double big = hi + (hi - lo + 1.0) * (n + 1);

    std::vector<double> a(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const double v = transposed ? cost.at(j, i) : cost.at(i, j);
            a[static_cast<size_t>(i) * m + j] = CostMatrix::forbidden(v) ? big : v;
        }
    }

    const auto row_to_col = min_cost_assignment(a, n, m);

    std::vector<char> row_matched(cost.rows(), 0), col_matched(cost.cols(), 0);
    for (int i = 0; i < n; ++i) {
        const int j = row_to_col[i];
        if (j < 0) continue;
        const int r = transposed ? j : i;
        const int cidx = transposed ? i : j;
        const double v = cost.at(r, cidx);
        if (CostMatrix::forbidden(v) || v > gate) continue;
        row_matched[r] = 1;
        col_matched[cidx] = 1;
        result.matches.emplace_back(r, cidx);
    }
    std::sort(result.matches.begin(), result.matches.end());

    for (int r = 0; r < cost.rows(); ++r) {
        if (!row_matched[r]) result.unmatched_rows.push_back(r);
    }
    for (int j = 0; j < cost.cols(); ++j) {
        if (!col_matched[j]) result.unmatched_cols.push_back(j);
    }
    return result;
}

}  // namespace pdsort
