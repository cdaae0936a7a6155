// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/geometry.hpp>

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace pdsort {
namespace {

TEST(PseudoDepth, BottomOfRealViewLeavesOneViewHeight) {
    const ViewGeometry view{1080.0, 1920.0};
    EXPECT_DOUBLE_EQ(pseudo_depth(BBox{0, 0, 10, 1080}, view), 1080.0);
}

TEST(PseudoDepth, TopOfViewGivesTwoHeights) {
    const ViewGeometry view{1080.0, 1920.0};
    EXPECT_DOUBLE_EQ(pseudo_depth(BBox{0, 0, 10, 0}, view), 2160.0);
}

TEST(PseudoDepth, MidView) {
    const ViewGeometry view{1080.0, 1920.0};
    EXPECT_DOUBLE_EQ(pseudo_depth(BBox{0, 0, 10, 540}, view), 1620.0);
}

TEST(PseudoDepth, BelowComplementaryViewThrows) {
    const ViewGeometry view{1080.0, 1920.0};
    EXPECT_THROW(pseudo_depth(BBox{0, 0, 10, 2160}, view), InvalidGeometryError);
    EXPECT_THROW(pseudo_depth(BBox{0, 0, 10, 2500}, view), InvalidGeometryError);
}

TEST(PseudoDepth, StrictlyDecreasingInBoxBottomWithUnitSlope) {
    const ViewGeometry view{720.0, 1280.0};
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> y2(0.0, 1439.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = y2(rng);
        const double d = pseudo_depth(BBox{0, 0, 1, a}, view);
        const double d_next = pseudo_depth(BBox{0, 0, 1, a + 0.5}, view);
        EXPECT_DOUBLE_EQ(d - d_next, 0.5);
        EXPECT_GT(d, 0.0);
    }
}

TEST(MakeDepthBox, StoresViewDerivedDepth) {
    const ViewGeometry view{1080.0, 1920.0};
    const DepthBox d = make_depth_box(BBox{5, 10, 50, 700}, view);
    EXPECT_DOUBLE_EQ(d.pd, 2.0 * view.img_height - 700.0);
}

TEST(Iou, IdenticalBoxes) {
    const BBox b{0, 0, 10, 10};
    EXPECT_DOUBLE_EQ(iou(b, b), 1.0);
}

TEST(Iou, DisjointBoxes) {
    EXPECT_DOUBLE_EQ(iou(BBox{0, 0, 10, 10}, BBox{20, 20, 30, 30}), 0.0);
}

TEST(Iou, HalfOverlap) {
    // inter = 50, union = 150
    EXPECT_DOUBLE_EQ(iou(BBox{0, 0, 10, 10}, BBox{5, 0, 15, 10}), 1.0 / 3.0);
}

TEST(Iou, ZeroAreaBoxGivesZero) {
    EXPECT_DOUBLE_EQ(iou(BBox{5, 5, 5, 5}, BBox{0, 0, 10, 10}), 0.0);
    EXPECT_DOUBLE_EQ(iou(BBox{5, 5, 5, 5}, BBox{5, 5, 5, 5}), 0.0);
}

TEST(Dviou, IdenticalBoxesEqualDepth) {
    const DepthBox d{BBox{0, 0, 10, 10}, 100.0};
    EXPECT_DOUBLE_EQ(dviou(d, d), 1.0);
}

TEST(Dviou, HandValue) {
    // V_inter = 10000, V1 = 10000, V2 = 20000
    const DepthBox a{BBox{0, 0, 10, 10}, 100.0};
    const DepthBox b{BBox{0, 0, 10, 10}, 200.0};
    EXPECT_DOUBLE_EQ(dviou(a, b), 0.5);
}

BBox random_box(std::mt19937& rng) {
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    double x1 = coord(rng), x2 = coord(rng);
    double y1 = coord(rng), y2 = coord(rng);
    if (x2 < x1) std::swap(x1, x2);
    if (y2 < y1) std::swap(y1, y2);
    return BBox{x1, y1, x2, y2};
}

TEST(Dviou, EqualDepthReducesToIou) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> depth(1.0, 2000.0);
    for (int i = 0; i < 10000; ++i) {
        const double pd = depth(rng);
        const DepthBox a{random_box(rng), pd};
        const DepthBox b{random_box(rng), pd};
        EXPECT_NEAR(dviou(a, b), iou(a.box, b.box), 1e-12);
    }
}

TEST(Dviou, SymmetricAndBoundedByIou) {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> depth(1.0, 2000.0);
    for (int i = 0; i < 10000; ++i) {
        const DepthBox a{random_box(rng), depth(rng)};
        const DepthBox b{random_box(rng), depth(rng)};
        const double d = dviou(a, b);
        EXPECT_DOUBLE_EQ(d, dviou(b, a));
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, iou(a.box, b.box) + 1e-12);
        EXPECT_LE(d, 1.0);
    }
}

TEST(Dviou, ScalingOneDepthUpNeverIncreasesSimilarity) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> depth(1.0, 500.0);
    std::uniform_real_distribution<double> scale(1.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const BBox box_a = random_box(rng);
        const BBox box_b = random_box(rng);
        const double pd = depth(rng);
        const DepthBox a{box_a, pd};
        const DepthBox b{box_b, pd};
        const DepthBox b_deeper{box_b, pd * scale(rng)};
        EXPECT_LE(dviou(a, b_deeper), dviou(a, b) + 1e-12);
    }
}

TEST(GeometryGrid, MatchesPixelGridOracleOnIntegerBoxes) {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coord(0, 50);
    std::uniform_int_distribution<int> depth(1, 300);
    for (int i = 0; i < 300; ++i) {
        int ax1 = coord(rng), ax2 = coord(rng), ay1 = coord(rng), ay2 = coord(rng);
        int bx1 = coord(rng), bx2 = coord(rng), by1 = coord(rng), by2 = coord(rng);
        if (ax2 < ax1) std::swap(ax1, ax2);
        if (ay2 < ay1) std::swap(ay1, ay2);
        if (bx2 < bx1) std::swap(bx1, bx2);
        if (by2 < by1) std::swap(by1, by2);
        const BBox a{double(ax1), double(ay1), double(ax2), double(ay2)};
        const BBox b{double(bx1), double(by1), double(bx2), double(by2)};
        const double min_area = std::max(1.0, std::min(a.area(), b.area()));
        EXPECT_NEAR(iou(a, b), pdsort::testing::grid_iou(a, b), 2.0 / min_area);

        const DepthBox da{a, double(depth(rng))};
        const DepthBox db{b, double(depth(rng))};
        EXPECT_NEAR(dviou(da, db), pdsort::testing::grid_dviou(da, db), 2.0 / min_area);
    }
}

}  // namespace
}  // namespace pdsort
