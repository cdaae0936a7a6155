// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/kalman_filter.hpp>

#include <cmath>

namespace pdsort {

namespace {

using MeasModel = Eigen::Matrix<double, kMeasDim, kStateDim>;

StateMatrix transition_matrix() {
    StateMatrix f = StateMatrix::Identity();
    f(0, 5) = 1.0;  // x_c += v_x
    f(1, 6) = 1.0;  // y_c += v_y
    f(2, 7) = 1.0;  // pd += v_pd
    f(3, 8) = 1.0;  // s += v_s
    return f;
}

MeasModel measurement_matrix() {
    MeasModel h = MeasModel::Zero();
    for (int i = 0; i < kMeasDim; ++i) h(i, i) = 1.0;
    return h;
}

void symmetrize(StateMatrix& p) {
    p = 0.5 * (p + p.transpose()).eval();
}

}  // namespace

KalmanState kf_init(const Observation& obs, const TrackerConfig& cfg) {
    KalmanState s;
    s.x.head<kMeasDim>() = obs.z;
    s.P = cfg.p0_diag.asDiagonal();
    return s;
}

KalmanState kf_predict(const KalmanState& state, const TrackerConfig& cfg) {
    KalmanState out = state;
    if (out.x(3) + out.x(8) <= 0.0) out.x(8) = 0.0;  // keep the area positive

    const StateMatrix f = transition_matrix();
    out.x = f * out.x;
    out.P = f * out.P * f.transpose();
    out.P += StateMatrix(cfg.q_diag.asDiagonal());
    symmetrize(out.P);
    return out;
}

KalmanState kf_update(const KalmanState& state, const Observation& obs,
                      const TrackerConfig& cfg) {
    const MeasModel h = measurement_matrix();
    const Eigen::Matrix<double, kMeasDim, kMeasDim> r = cfg.r_diag.asDiagonal();

    const MeasVector innovation = obs.z - h * state.x;
    const Eigen::Matrix<double, kMeasDim, kMeasDim> s_cov =
        h * state.P * h.transpose() + r;

    const Eigen::LLT<Eigen::Matrix<double, kMeasDim, kMeasDim>> llt(s_cov);
    if (llt.info() != Eigen::Success) {
        throw FilterDivergenceError("innovation covariance is not positive definite");
    }

    const Eigen::Matrix<double, kStateDim, kMeasDim> gain =
        llt.solve((h * state.P.transpose())).transpose();

    KalmanState out;
    out.x = state.x + gain * innovation;

    // Joseph form keeps the posterior covariance symmetric PSD.
    const StateMatrix ikh = StateMatrix::Identity() - gain * h;
    out.P = ikh * state.P * ikh.transpose() + gain * r * gain.transpose();
    symmetrize(out.P);
    return out;
}

KalmanState apply_cmc_state(const KalmanState& state, const AffineTransform& warp,
                            bool translate_velocity) {
    KalmanState out = state;
    out.x.segment<2>(0) = warp.M * state.x.segment<2>(0) + warp.T;
    out.x.segment<2>(5) = warp.M * state.x.segment<2>(5);
    if (translate_velocity) out.x.segment<2>(5) += warp.T;

    out.P.block<2, 2>(0, 0) = warp.M * state.P.block<2, 2>(0, 0) * warp.M.transpose();
    out.P.block<2, 2>(5, 5) = warp.M * state.P.block<2, 2>(5, 5) * warp.M.transpose();
    return out;
}

Observation to_observation(const DepthBox& dbox, int frame, double score) {
    Observation obs;
    const double w = dbox.box.width();
    const double h = dbox.box.height();
    obs.z << dbox.box.center_x(), dbox.box.center_y(), dbox.pd, w * h,
        h > 0.0 ? w / h : 0.0;
    obs.frame = frame;
    obs.score = score;
    return obs;
}

DepthBox to_depth_box(const Observation& obs) {
    const double s = obs.z(3);
    const double r = obs.z(4);
    const double cx = obs.z(0);
    const double cy = obs.z(1);
    double w = 0.0, h = 0.0;
    if (s > 0.0 && r > 0.0) {
        w = std::sqrt(s * r);
        h = std::sqrt(s / r);
    }
    return DepthBox{BBox{cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h},
                    obs.z(2)};
}

DepthBox predicted_depth_box(const KalmanState& state) {
    Observation obs;
    obs.z = state.x.head<kMeasDim>();
    DepthBox d = to_depth_box(obs);
    // A non-positive predicted depth carries no volume information; collapse
    // the box so overlap kernels yield zero similarity.
    if (d.pd <= 0.0) {
        d.box.x2 = d.box.x1;
        d.box.y2 = d.box.y1;
        d.pd = 1.0;
    }
    return d;
}

}  // namespace pdsort
