// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <Eigen/Dense>

#include <pdsort/config.hpp>
#include <pdsort/errors.hpp>
#include <pdsort/geometry.hpp>

namespace pdsort {

inline constexpr int kStateDim = 9;
inline constexpr int kMeasDim = 5;

using StateVector = Eigen::Matrix<double, kStateDim, 1>;
using StateMatrix = Eigen::Matrix<double, kStateDim, kStateDim>;
using MeasVector = Eigen::Matrix<double, kMeasDim, 1>;

/// Constant-velocity motion state extended with pseudo-depth:
/// x = [x_c, y_c, pd, s, r, v_x, v_y, v_pd, v_s], with s the box area and
/// r the aspect ratio. P is the 9x9 covariance.
struct KalmanState {
    StateVector x = StateVector::Zero();
    StateMatrix P = StateMatrix::Zero();
};

/// One measurement in state space: z = [x_c, y_c, pd, s, r].
struct Observation {
    MeasVector z = MeasVector::Zero();
    int frame = 0;
    double score = 0.0;

    double center_x() const { return z(0); }
    double center_y() const { return z(1); }
    double pd() const { return z(2); }
};

/// Per-frame camera-motion correction p' = M p + T with a 2x2 scale/rotation
/// matrix and a 2-vector translation.
struct AffineTransform {
    Eigen::Matrix2d M = Eigen::Matrix2d::Identity();
    Eigen::Vector2d T = Eigen::Vector2d::Zero();

    bool is_identity() const {
        return M.isIdentity(0.0) && T.isZero(0.0);
    }
};

/// New state from a first observation: positions from z, velocities zero,
/// covariance from the configured P0 diagonal.
KalmanState kf_init(const Observation& obs, const TrackerConfig& cfg);

/// One constant-velocity prediction step. If the predicted area would become
/// non-positive the area velocity is zeroed first.
KalmanState kf_predict(const KalmanState& state, const TrackerConfig& cfg);

/// Standard Kalman measurement update over the first five states.
/// Throws FilterDivergenceError when the innovation covariance is not
/// invertible; the caller drops the tracklet.
KalmanState kf_update(const KalmanState& state, const Observation& obs,
                      const TrackerConfig& cfg);

/// Camera-motion correction of the state mean and covariance. Position and
/// velocity xy-slices are rotated; the translation is applied to the position
/// slice always and to the velocity slice when translate_velocity is set.
/// Pseudo-depth, area, ratio and their velocities are untouched.
KalmanState apply_cmc_state(const KalmanState& state, const AffineTransform& warp,
                            bool translate_velocity = true);

/// DepthBox -> measurement vector [x_c, y_c, pd, s, r].
Observation to_observation(const DepthBox& dbox, int frame, double score);

/// Inverse of to_observation: w = sqrt(s*r), h = sqrt(s/r).
DepthBox to_depth_box(const Observation& obs);

/// DepthBox read off a (possibly degenerate) state mean. Non-positive area,
/// ratio, or pseudo-depth collapse to a zero-size box so downstream overlap
/// kernels report zero similarity instead of failing.
DepthBox predicted_depth_box(const KalmanState& state);

}  // namespace pdsort
