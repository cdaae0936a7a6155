// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace pdsort {

/// All tracker thresholds, cost weights, and Kalman noise settings.
///
/// Defaults correspond to the "dancetrack" preset; preset() loads the
/// per-dataset values and set() applies a single key=value override.
struct TrackerConfig {
    // Detection ingestion and association gating.
    double det_thresh = 0.6;     // minimum detection confidence
    double iou_threshold = 0.3;  // minimum (DV)IoU for an admissible pair

    // Cost composition weights: C = C_DVIoU + lambda1*C_QPD + lambda2*C_OCM.
    double lambda1 = 0.2;
    double lambda2 = 0.2;

    int interval_num = 8;  // pseudo-depth quantization sub-intervals
    int ocm_dt = 3;        // frame gap for velocity-direction estimation
    int t_expire = 30;     // frames unmatched before a tracklet is removed
    int min_hits = 3;      // consecutive matches before a tracklet is output

    double img_height = 1080.0;
    double img_width = 1920.0;

    bool cmc_enabled = true;
    bool cmc_translate_velocity = true;  // add T to the velocity slice too
    bool use_dviou = true;               // false: plain 2D IoU in both stages

    // Kalman noise. Diagonals of the initial covariance P0 (9), the process
    // noise Q (9), and the measurement noise R (5).
    Eigen::Matrix<double, 9, 1> p0_diag;
    Eigen::Matrix<double, 9, 1> q_diag;
    Eigen::Matrix<double, 5, 1> r_diag;

    TrackerConfig();

    /// Loads one of the named presets: "dancetrack", "mot17", "mot20".
    /// Throws std::invalid_argument on an unknown name.
    static TrackerConfig preset(const std::string& name);

    /// Applies a "key=value" override (e.g. "lambda1=0.36" or
    /// "kf_r_diag=1,1,1,10,10"). Throws std::invalid_argument on unknown
    /// keys or unparsable values.
    void set(const std::string& key, const std::string& value);

    /// Loads key=value lines from a config file; '#' starts a comment.
    /// A "preset=<name>" line resets all fields to that preset first.
    static TrackerConfig load(const std::string& path);
};

}  // namespace pdsort
