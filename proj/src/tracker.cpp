// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/tracker.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pdsort {

void apply_cmc_history(Tracklet& tracklet, const AffineTransform& warp) {
    for (Observation& obs : tracklet.history) {
        const Eigen::Vector2d p = warp.M * Eigen::Vector2d(obs.z(0), obs.z(1)) + warp.T;
        obs.z(0) = p(0);
        obs.z(1) = p(1);
    }
}

void oru_reupdate(Tracklet& tracklet, const Observation& new_obs,
                  const TrackerConfig& cfg) {
    const Observation& last = tracklet.last_observation();
    const int gap = new_obs.frame - last.frame;
    if (gap < 1) {
        throw std::invalid_argument("re-update requires a later observation");
    }

    // Replay from the state at the last real update so the filter sees a
    // gap-free predict/update sequence; a gap of 1 is a plain update.
    KalmanState state = tracklet.kf_anchor;
    if (gap > 1) {
        const MeasVector step = (new_obs.z - last.z) / static_cast<double>(gap);
        for (int k = 1; k < gap; ++k) {
            Observation virtual_obs;
            virtual_obs.z = last.z + static_cast<double>(k) * step;
            virtual_obs.frame = last.frame + k;
            virtual_obs.score = new_obs.score;
            state = kf_predict(state, cfg);
            state = kf_update(state, virtual_obs, cfg);
        }
    }
    state = kf_predict(state, cfg);
    state = kf_update(state, new_obs, cfg);

    tracklet.kf = state;
    tracklet.kf_anchor = state;
    tracklet.history.push_back(new_obs);
}

AssignmentResult ocr_recover(const std::vector<const Tracklet*>& tracklets,
                             const std::vector<Detection>& detections,
                             const TrackerConfig& cfg) {
    std::vector<DepthBox> last_boxes;
    last_boxes.reserve(tracklets.size());
    for (const Tracklet* t : tracklets) {
        last_boxes.push_back(to_depth_box(t->last_observation()));
    }
    std::vector<DepthBox> det_boxes;
    det_boxes.reserve(detections.size());
    for (const Detection& d : detections) det_boxes.push_back(d.dbox);

    const CostMatrix c = cfg.use_dviou
                             ? dviou_cost(last_boxes, det_boxes, cfg.iou_threshold)
                             : iou_cost(last_boxes, det_boxes, cfg.iou_threshold);
    return solve_assignment(c);
}

Tracker::Tracker(TrackerConfig cfg) : cfg_(std::move(cfg)) {}

FrameResult Tracker::step(int frame, const std::vector<Detection>& detections) {
    return step(frame, detections, AffineTransform{});
}

FrameResult Tracker::step(int frame, const std::vector<Detection>& detections,
                          const AffineTransform& warp) {
    if (frame <= last_frame_) {
        throw std::invalid_argument("frame indices must be strictly increasing");
    }
    last_frame_ = frame;

    if (cfg_.cmc_enabled) {
        for (Tracklet& t : tracklets_) {
            t.kf = apply_cmc_state(t.kf, warp, cfg_.cmc_translate_velocity);
            t.kf_anchor = apply_cmc_state(t.kf_anchor, warp, cfg_.cmc_translate_velocity);
            apply_cmc_history(t, warp);
        }
    }

    for (Tracklet& t : tracklets_) {
        t.kf = kf_predict(t.kf, cfg_);
        t.age += 1;
    }

    const size_t n_tracks = tracklets_.size();
    std::vector<char> track_matched(n_tracks, 0);
    std::vector<char> det_matched(detections.size(), 0);
    std::vector<std::pair<size_t, size_t>> matches;  // (tracklet, detection)

    // Regular association: DVIoU plus quantized-depth and velocity terms.
    if (!tracklets_.empty() && !detections.empty()) {
        std::vector<DepthBox> preds;
        std::vector<double> track_pds;
        std::vector<std::span<const Observation>> histories;
        preds.reserve(n_tracks);
        track_pds.reserve(n_tracks);
        histories.reserve(n_tracks);
        for (const Tracklet& t : tracklets_) {
            preds.push_back(predicted_depth_box(t.kf));
            track_pds.push_back(t.last_observation().pd());
            histories.emplace_back(t.history);
        }

        std::vector<DepthBox> det_boxes;
        std::vector<double> det_pds;
        std::vector<Observation> det_obs;
        det_boxes.reserve(detections.size());
        det_pds.reserve(detections.size());
        det_obs.reserve(detections.size());
        for (const Detection& d : detections) {
            det_boxes.push_back(d.dbox);
            det_pds.push_back(d.dbox.pd);
            det_obs.push_back(to_observation(d.dbox, frame, d.score));
        }

        const CostMatrix c_sim =
            cfg_.use_dviou ? dviou_cost(preds, det_boxes, cfg_.iou_threshold)
                           : iou_cost(preds, det_boxes, cfg_.iou_threshold);
        const CostMatrix c_qpd = qpdm_cost(track_pds, det_pds, {cfg_.interval_num});
        const CostMatrix c_ocm = ocm_cost(histories, det_obs, cfg_.ocm_dt);
        const CostMatrix c = compose_cost(c_sim, c_qpd, c_ocm, cfg_.lambda1, cfg_.lambda2);

        for (const auto& [r, col] : solve_assignment(c).matches) {
            matches.emplace_back(r, col);
            track_matched[r] = 1;
            det_matched[col] = 1;
        }
    }

    // Recovery stage on the leftovers, matching against last observations.
    {
        std::vector<size_t> rem_tracks, rem_dets;
        for (size_t i = 0; i < n_tracks; ++i) {
            if (!track_matched[i]) rem_tracks.push_back(i);
        }
        for (size_t j = 0; j < detections.size(); ++j) {
            if (!det_matched[j]) rem_dets.push_back(j);
        }
        if (!rem_tracks.empty() && !rem_dets.empty()) {
            std::vector<const Tracklet*> rem_ptrs;
            rem_ptrs.reserve(rem_tracks.size());
            for (const size_t i : rem_tracks) rem_ptrs.push_back(&tracklets_[i]);
            std::vector<Detection> rem_detections;
            rem_detections.reserve(rem_dets.size());
            for (const size_t j : rem_dets) rem_detections.push_back(detections[j]);

            for (const auto& [r, col] : ocr_recover(rem_ptrs, rem_detections, cfg_).matches) {
                const size_t ti = rem_tracks[r];
                const size_t dj = rem_dets[col];
                matches.emplace_back(ti, dj);
                track_matched[ti] = 1;
                det_matched[dj] = 1;
            }
        }
    }

    FrameResult out;
    out.frame = frame;

    for (const auto& [ti, dj] : matches) {
        Tracklet& t = tracklets_[ti];
        const Detection& det = detections[dj];
        const Observation obs = to_observation(det.dbox, frame, det.score);
        try {
            oru_reupdate(t, obs, cfg_);
        } catch (const FilterDivergenceError&) {
            t.status = TrackStatus::kRemoved;
            continue;
        }
        t.untracked = 0;
        t.hits += 1;
        if (t.status == TrackStatus::kTentative && t.hits >= cfg_.min_hits) {
            t.status = TrackStatus::kConfirmed;
        }
        if (t.status == TrackStatus::kConfirmed) {
            out.entries.push_back({t.id, det.dbox.box, det.score});
        }
    }

    for (size_t j = 0; j < detections.size(); ++j) {
        if (det_matched[j]) continue;
        const Detection& det = detections[j];
        Tracklet t;
        t.id = next_id_++;
        const Observation obs = to_observation(det.dbox, frame, det.score);
        t.kf = kf_init(obs, cfg_);
        t.kf_anchor = t.kf;
        t.history.push_back(obs);
        t.hits = 1;
        t.age = 1;
        t.status = t.hits >= cfg_.min_hits ? TrackStatus::kConfirmed
                                           : TrackStatus::kTentative;
        if (t.status == TrackStatus::kConfirmed) {
            out.entries.push_back({t.id, det.dbox.box, det.score});
        }
        tracklets_.push_back(std::move(t));
    }

    for (size_t i = 0; i < n_tracks; ++i) {
        if (track_matched[i]) continue;
        Tracklet& t = tracklets_[i];
        t.untracked += 1;
        t.hits = 0;
        if (t.untracked >= cfg_.t_expire) t.status = TrackStatus::kRemoved;
    }
    std::erase_if(tracklets_,
                  [](const Tracklet& t) { return t.status == TrackStatus::kRemoved; });

    std::sort(out.entries.begin(), out.entries.end(),
              [](const FrameEntry& a, const FrameEntry& b) { return a.id < b.id; });
    return out;
}

std::vector<FrameResult> track_sequence(
    const TrackerConfig& cfg, const std::vector<std::vector<Detection>>& per_frame,
    const std::vector<AffineTransform>& warps) {
    Tracker tracker(cfg);
    std::vector<FrameResult> results;
    for (size_t i = 0; i < per_frame.size(); ++i) {
        const AffineTransform warp = i < warps.size() ? warps[i] : AffineTransform{};
        FrameResult fr = tracker.step(static_cast<int>(i) + 1, per_frame[i], warp);
        if (!fr.entries.empty()) results.push_back(std::move(fr));
    }
    return results;
}

}  // namespace pdsort
