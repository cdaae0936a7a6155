// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <string>
#include <vector>

#include <pdsort/errors.hpp>
#include <pdsort/geometry.hpp>
#include <pdsort/kalman_filter.hpp>
#include <pdsort/tracker.hpp>

namespace pdsort {

/// One line of a MOT det/result file: "frame,id,x,y,w,h,score,-1,-1,-1"
/// with top-left + width/height box coordinates. Detections carry id = -1.
struct MotRecord {
    int frame = 0;
    int id = -1;
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;
    double score = 0.0;
};

BBox to_corner_box(const MotRecord& rec);
MotRecord to_mot_record(int frame, int id, const BBox& box, double score);

/// Raw record parsing. Throws ParseError with the offending line number.
std::vector<MotRecord> read_mot_records(const std::string& path);

/// Detections grouped by frame: per_frame[f - 1] holds frame f. The vector
/// spans frames 1..max frame seen; an empty file gives an empty sequence.
struct DetectionSequence {
    std::vector<std::vector<Detection>> per_frame;

    int frame_count() const { return static_cast<int>(per_frame.size()); }
};

/// Loads a MOT det file, drops records below det_thresh, computes each
/// box's pseudo-depth, and clamps boxes into [0, img_w] x [0, 2*img_h).
DetectionSequence load_detections(const std::string& path, const ViewGeometry& view,
                                  double det_thresh);

/// Loads per-frame affine warps from lines "frame a11 a12 a13 a21 a22 a23"
/// (whitespace separated). Frames not listed get the identity; a file that
/// does not exist yields all-identity warps plus a warning on stderr.
std::vector<AffineTransform> load_warps(const std::string& path, int frame_count);

/// Writes MOT result lines sorted by frame then id, box coordinates and
/// scores with fixed two decimals. Byte-deterministic for identical input.
void write_results(const std::string& path, const std::vector<FrameResult>& results);

/// Writes per-frame detections as MOT det lines (id = -1), same formatting
/// as write_results. per_frame[i] holds frame i+1.
void write_detections(const std::string& path,
                      const std::vector<std::vector<Detection>>& per_frame);

/// Reads a result (or ground-truth) file back into per-frame entries.
std::vector<FrameResult> read_results(const std::string& path);

/// Fills per-identity frame gaps of length <= max_gap by linear interpolation
/// of the box coordinates; the score of a filled frame is the mean of the
/// endpoint scores. Frames that had entries are never altered.
std::vector<FrameResult> interpolate_gaps(const std::vector<FrameResult>& results,
                                          int max_gap = 20);

/// Reads a seqinfo-style key file ("imWidth=1920", "imHeight=1080"; an
/// optional "[Sequence]" section header and '#' or ';' comments are skipped).
ViewGeometry load_seqinfo(const std::string& path);

}  // namespace pdsort
