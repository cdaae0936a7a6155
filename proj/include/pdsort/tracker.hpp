// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <vector>

#include <pdsort/association.hpp>
#include <pdsort/config.hpp>
#include <pdsort/geometry.hpp>
#include <pdsort/kalman_filter.hpp>

namespace pdsort {

/// One confidence-filtered detection with its derived pseudo-depth.
struct Detection {
    DepthBox dbox;
    double score = 0.0;
};

enum class TrackStatus { kTentative, kConfirmed, kRemoved };

/// A maintained track hypothesis: identity, motion filter, and the history
/// of real observations (strictly increasing frame indices).
struct Tracklet {
    int id = 0;
    KalmanState kf;           // live filter, predicted every frame
    KalmanState kf_anchor;    // filter as of the last real update; re-update
                              // over observation gaps replays from here
    std::vector<Observation> history;
    int untracked = 0;  // frames since last match
    int hits = 0;       // consecutive matches
    int age = 0;        // frames since init
    TrackStatus status = TrackStatus::kTentative;

    const Observation& last_observation() const { return history.back(); }
};

struct FrameEntry {
    int id = 0;
    BBox box;
    double score = 0.0;
};

/// Emitted tracks for one frame; ids are unique within the frame.
struct FrameResult {
    int frame = 0;
    std::vector<FrameEntry> entries;
};

/// Camera-motion correction of every stored observation: centers are warped,
/// sizes and pseudo-depths are kept.
void apply_cmc_history(Tracklet& tracklet, const AffineTransform& warp);

/// Re-update after a gap: virtual observations are linearly interpolated
/// across the missed frames and the filter is replayed from the last real
/// update through the gap and onto new_obs. Virtual observations are not
/// stored; new_obs is appended to the history. A gap of one frame reduces to
/// a single predict+update.
void oru_reupdate(Tracklet& tracklet, const Observation& new_obs,
                  const TrackerConfig& cfg);

/// Second-stage recovery: assignment on the negated DVIoU (or IoU, per
/// config) between each leftover tracklet's last observation and the leftover
/// detections, gated like the regular stage. Indices in the result refer to
/// the argument vectors.
AssignmentResult ocr_recover(const std::vector<const Tracklet*>& tracklets,
                             const std::vector<Detection>& detections,
                             const TrackerConfig& cfg);

/// PD-SORT per-sequence state machine. step() consumes one frame of
/// confidence-filtered detections and an optional camera warp; calls must be
/// serialized per instance.
class Tracker {
public:
    explicit Tracker(TrackerConfig cfg);

    /// Runs the full two-stage pipeline for one frame and returns the
    /// confirmed, matched tracks. Frame indices must be strictly increasing
    /// across calls.
    FrameResult step(int frame, const std::vector<Detection>& detections,
                     const AffineTransform& warp);
    FrameResult step(int frame, const std::vector<Detection>& detections);

    const std::vector<Tracklet>& tracklets() const { return tracklets_; }
    const TrackerConfig& config() const { return cfg_; }

private:
    TrackerConfig cfg_;
    std::vector<Tracklet> tracklets_;
    int next_id_ = 1;
    int last_frame_ = 0;
};

/// Runs a fresh tracker over a whole sequence; per_frame[i] holds frame i+1
/// and warps may be empty for a static camera. Frames without emitted
/// entries are omitted from the result.
std::vector<FrameResult> track_sequence(
    const TrackerConfig& cfg, const std::vector<std::vector<Detection>>& per_frame,
    const std::vector<AffineTransform>& warps = {});

}  // namespace pdsort
