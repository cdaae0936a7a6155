// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <pdsort/geometry.hpp>
#include <pdsort/tracker.hpp>

namespace pdsort {

/// One synthetic constant-velocity agent. Smaller depth_rank means closer to
/// the camera; ranks are unique within a scenario. The deeper of two
/// sufficiently overlapping agents loses (or down-weights) its detection.
struct AgentSpec {
    BBox initial_box;
    double vx = 0.0;  // pixels per frame
    double vy = 0.0;
    int depth_rank = 0;
};

enum class OcclusionMode { kDrop, kDownweight };

struct OcclusionRule {
    double overlap_threshold = 0.3;  // IoU above which the deeper agent is occluded
    OcclusionMode mode = OcclusionMode::kDrop;
    double downweight_factor = 0.5;
};

/// Deterministic synthetic scene: constant-velocity ground truth plus
/// jittered detections with occlusion-induced drops.
struct Scenario {
    std::uint64_t seed = 0;
    std::vector<AgentSpec> agents;
    int frames = 60;
    OcclusionRule occlusion;
    double noise_sigma = 0.0;  // box jitter in pixels
    ViewGeometry view{1080.0, 1920.0};
};

struct SynthOutput {
    std::vector<FrameResult> gt;                     // one entry per frame
    std::vector<std::vector<Detection>> detections;  // per frame, 0-based
};

/// Generates ground truth and detections for a scenario. Identical seeds
/// give identical output.
SynthOutput generate(const Scenario& scenario);

/// Parses a scenario from a key=value text file. Agents are given as
/// repeated "agent=x1,y1,x2,y2,vx,vy,rank" lines.
Scenario load_scenario(const std::string& path);

/// The built-in seeded suite: two agents at different depths whose paths
/// cross while the deeper one's detections drop out. Scenario i uses seed
/// base_seed + i with varied speeds, separations, and jitter.
std::vector<Scenario> crossing_suite(int count, std::uint64_t base_seed);

}  // namespace pdsort
