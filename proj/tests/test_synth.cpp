// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/synth.hpp>

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

namespace pdsort {
namespace {

Scenario two_agent_scenario() {
    Scenario sc;
    sc.seed = 5;
    sc.frames = 40;
    sc.noise_sigma = 0.0;
    sc.occlusion.overlap_threshold = 0.3;
    AgentSpec a;
    a.initial_box = BBox{100, 500, 180, 660};
    a.vx = 6.0;
    a.depth_rank = 0;
    AgentSpec b;
    b.initial_box = BBox{500, 460, 570, 600};
    b.vx = -6.0;
    b.depth_rank = 1;
    sc.agents = {a, b};
    return sc;
}

TEST(Generate, NoNoiseNoOverlapReproducesGroundTruth) {
    Scenario sc = two_agent_scenario();
    sc.agents[1].initial_box = BBox{1000, 460, 1070, 600};
    sc.agents[1].vx = 0.0;
    sc.agents[0].vx = 0.0;
    const SynthOutput out = generate(sc);
    ASSERT_EQ(out.gt.size(), 40u);
    for (int f = 0; f < sc.frames; ++f) {
        ASSERT_EQ(out.detections[f].size(), 2u);
        for (size_t a = 0; a < 2; ++a) {
            EXPECT_DOUBLE_EQ(out.detections[f][a].dbox.box.x1,
                             out.gt[f].entries[a].box.x1);
            EXPECT_DOUBLE_EQ(out.detections[f][a].dbox.box.y2,
                             out.gt[f].entries[a].box.y2);
        }
    }
}

TEST(Generate, CrossingDropsDeeperAgentDuringOverlap) {
    const SynthOutput out = generate(two_agent_scenario());
    int dropped_frames = 0;
    for (const auto& dets : out.detections) {
        ASSERT_GE(dets.size(), 1u);
        if (dets.size() == 1u) ++dropped_frames;
    }
    EXPECT_GT(dropped_frames, 0) << "agents never overlapped enough to occlude";

    // The gap belongs to the deeper agent: during dropped frames the sole
    // detection matches the shallow agent's ground truth.
    for (size_t f = 0; f < out.detections.size(); ++f) {
        if (out.detections[f].size() == 1u) {
            const BBox& det = out.detections[f][0].dbox.box;
            const BBox& shallow = out.gt[f].entries[0].box;
            EXPECT_GT(iou(det, shallow), 0.9);
        }
    }
}

TEST(Generate, DownweightModeKeepsDetectionWithLowerScore) {
    Scenario sc = two_agent_scenario();
    sc.occlusion.mode = OcclusionMode::kDownweight;
    sc.occlusion.downweight_factor = 0.5;
    const SynthOutput out = generate(sc);
    bool saw_downweighted = false;
    for (const auto& dets : out.detections) {
        ASSERT_EQ(dets.size(), 2u);
        for (const auto& det : dets) {
            if (det.score < 0.9) saw_downweighted = true;
        }
    }
    EXPECT_TRUE(saw_downweighted);
}

TEST(Generate, DeterministicPerSeed) {
    Scenario sc = two_agent_scenario();
    sc.noise_sigma = 2.0;
    const SynthOutput a = generate(sc);
    const SynthOutput b = generate(sc);
    ASSERT_EQ(a.detections.size(), b.detections.size());
    for (size_t f = 0; f < a.detections.size(); ++f) {
        ASSERT_EQ(a.detections[f].size(), b.detections[f].size());
        for (size_t i = 0; i < a.detections[f].size(); ++i) {
            EXPECT_EQ(a.detections[f][i].dbox.box.x1, b.detections[f][i].dbox.box.x1);
            EXPECT_EQ(a.detections[f][i].dbox.pd, b.detections[f][i].dbox.pd);
        }
    }

    sc.seed += 1;
    const SynthOutput c = generate(sc);
    bool any_difference = false;
    for (size_t f = 0; f < a.detections.size() && !any_difference; ++f) {
        for (size_t i = 0; i < a.detections[f].size(); ++i) {
            if (a.detections[f][i].dbox.box.x1 != c.detections[f][i].dbox.box.x1) {
                any_difference = true;
                break;
            }
        }
    }
    EXPECT_TRUE(any_difference);
}

TEST(Generate, DuplicateDepthRanksRejected) {
    Scenario sc = two_agent_scenario();
    sc.agents[1].depth_rank = sc.agents[0].depth_rank;
    EXPECT_THROW(generate(sc), std::invalid_argument);
}

TEST(CrossingSuite, ProducesRequestedScenarios) {
    const auto suite = crossing_suite(10, 42);
    ASSERT_EQ(suite.size(), 10u);
    for (const auto& sc : suite) {
        ASSERT_EQ(sc.agents.size(), 2u);
        EXPECT_NE(sc.agents[0].depth_rank, sc.agents[1].depth_rank);
        // Deeper agent sits higher in the image (smaller y2).
        EXPECT_LT(sc.agents[1].initial_box.y2, sc.agents[0].initial_box.y2);
        const SynthOutput out = generate(sc);
        EXPECT_EQ(out.gt.size(), static_cast<size_t>(sc.frames));
    }
    // Distinct seeds across the suite.
    EXPECT_NE(suite[0].seed, suite[1].seed);
}

TEST(LoadScenario, ParsesKeyValueFile) {
    const auto path =
        (std::filesystem::path(::testing::TempDir()) / "scenario.cfg").string();
    std::ofstream out(path);
    out << "seed=9\n"
        << "frames=25\n"
        << "noise=1.5\n"
        << "occlusion_threshold=0.4\n"
        << "occlusion_mode=downweight\n"
        << "agent=100,500,180,660,6,0,0\n"
        << "agent=500,460,570,600,-6,0.5,1\n";
    out.close();

    const Scenario sc = load_scenario(path);
    EXPECT_EQ(sc.seed, 9u);
    EXPECT_EQ(sc.frames, 25);
    EXPECT_DOUBLE_EQ(sc.noise_sigma, 1.5);
    EXPECT_EQ(sc.occlusion.mode, OcclusionMode::kDownweight);
    ASSERT_EQ(sc.agents.size(), 2u);
    EXPECT_DOUBLE_EQ(sc.agents[1].vy, 0.5);
    EXPECT_EQ(sc.agents[1].depth_rank, 1);
}

TEST(LoadScenario, BadAgentLineThrows) {
    const auto path =
        (std::filesystem::path(::testing::TempDir()) / "scenario_bad.cfg").string();
    std::ofstream out(path);
    out << "agent=1,2,3\n";
    out.close();
    EXPECT_THROW(load_scenario(path), ParseError);
}

}  // namespace
}  // namespace pdsort
