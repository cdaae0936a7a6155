// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/config.hpp>

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <pdsort/errors.hpp>

namespace pdsort {
namespace {

TEST(Presets, DancetrackValues) {
    const TrackerConfig cfg = TrackerConfig::preset("dancetrack");
    EXPECT_DOUBLE_EQ(cfg.lambda1, 0.2);
    EXPECT_DOUBLE_EQ(cfg.lambda2, 0.2);
    EXPECT_EQ(cfg.interval_num, 8);
    EXPECT_DOUBLE_EQ(cfg.iou_threshold, 0.3);
    EXPECT_DOUBLE_EQ(cfg.det_thresh, 0.6);
}

TEST(Presets, Mot17Values) {
    const TrackerConfig cfg = TrackerConfig::preset("mot17");
    EXPECT_DOUBLE_EQ(cfg.lambda1, 0.2);
    EXPECT_DOUBLE_EQ(cfg.lambda2, 0.2);
    EXPECT_EQ(cfg.interval_num, 8);
    EXPECT_DOUBLE_EQ(cfg.iou_threshold, 0.3);
    EXPECT_DOUBLE_EQ(cfg.det_thresh, 0.6);
}

TEST(Presets, Mot20Values) {
    const TrackerConfig cfg = TrackerConfig::preset("mot20");
    EXPECT_DOUBLE_EQ(cfg.lambda1, 0.36);
    EXPECT_DOUBLE_EQ(cfg.lambda2, 0.04);
    EXPECT_EQ(cfg.interval_num, 8);
    EXPECT_DOUBLE_EQ(cfg.iou_threshold, 0.35);
    EXPECT_DOUBLE_EQ(cfg.det_thresh, 0.4);
}

TEST(Presets, UnknownNameThrows) {
    EXPECT_THROW(TrackerConfig::preset("kitti"), std::invalid_argument);
}

TEST(ConfigSet, OverridesFields) {
    TrackerConfig cfg;
    cfg.set("lambda1", "0.36");
    cfg.set("t_expire", "12");
    cfg.set("cmc_enabled", "false");
    cfg.set("kf_r_diag", "2,2,2,20,20");
    EXPECT_DOUBLE_EQ(cfg.lambda1, 0.36);
    EXPECT_EQ(cfg.t_expire, 12);
    EXPECT_FALSE(cfg.cmc_enabled);
    EXPECT_DOUBLE_EQ(cfg.r_diag(3), 20.0);
}

TEST(ConfigSet, RejectsBadInput) {
    TrackerConfig cfg;
    EXPECT_THROW(cfg.set("unknown_key", "1"), std::invalid_argument);
    EXPECT_THROW(cfg.set("interval_num", "0"), std::invalid_argument);
    EXPECT_THROW(cfg.set("lambda1", "-0.5"), std::invalid_argument);
    EXPECT_THROW(cfg.set("det_thresh", "1.5"), std::invalid_argument);
    EXPECT_THROW(cfg.set("kf_r_diag", "1,2,3"), std::invalid_argument);
}

TEST(ConfigLoad, ReadsPresetAndOverrides) {
    const auto path =
        (std::filesystem::path(::testing::TempDir()) / "tracker.cfg").string();
    std::ofstream out(path);
    out << "# synthetic run\n"
        << "preset=mot20\n"
        << "lambda1=0.5\n"
        << "min_hits=2\n";
    out.close();

    const TrackerConfig cfg = TrackerConfig::load(path);
    EXPECT_DOUBLE_EQ(cfg.lambda1, 0.5);       // override wins
    EXPECT_DOUBLE_EQ(cfg.lambda2, 0.04);      // from preset
    EXPECT_EQ(cfg.min_hits, 2);
}

TEST(ConfigLoad, ReportsBadLine) {
    const auto path =
        (std::filesystem::path(::testing::TempDir()) / "tracker_bad.cfg").string();
    std::ofstream out(path);
    out << "lambda1=0.2\nnot a key value line\n";
    out.close();
    try {
        TrackerConfig::load(path);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
}

}  // namespace
}  // namespace pdsort
