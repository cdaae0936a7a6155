"""Smoke tests for the pdsort extension module."""

import math

import pytest

import pdsort


def test_pseudo_depth():
    assert pdsort.pseudo_depth((0, 0, 10, 1080), 1080) == 1080
    assert pdsort.pseudo_depth((0, 0, 10, 540), 1080) == 1620


def test_iou_and_dviou():
    assert pdsort.iou((0, 0, 10, 10), (5, 0, 15, 10)) == pytest.approx(1 / 3)
    assert pdsort.dviou((0, 0, 10, 10), 100.0, (0, 0, 10, 10), 200.0) == pytest.approx(0.5)
    # Equal depths cancel out.
    a, b = (0, 0, 10, 10), (3, 2, 12, 9)
    assert pdsort.dviou(a, 70.0, b, 70.0) == pytest.approx(pdsort.iou(a, b), abs=1e-12)


def test_interval_depths_and_qpdm():
    assert pdsort.interval_depths([0, 35, 70], 8) == pytest.approx([0.125, 0.625, 1.0])
    cost = pdsort.qpdm_cost([0, 35, 70], [0, 35, 70], 8)
    assert cost[0][0] == pytest.approx(0.0)
    assert cost[0][2] == pytest.approx(0.875)


def test_solve_assignment():
    matches, rows, cols = pdsort.solve_assignment([[1.0, 2.0], [2.0, 1.0]])
    assert matches == [(0, 0), (1, 1)]
    assert rows == [] and cols == []

    matches, rows, cols = pdsort.solve_assignment(
        [[math.inf, math.inf], [0.5, 0.25]]
    )
    assert matches == [(1, 0)]
    assert rows == [0] and cols == [1]


def test_preset_values():
    dance = pdsort.TrackerConfig.preset("dancetrack")
    assert (dance.lambda1, dance.lambda2) == (0.2, 0.2)
    assert dance.interval_num == 8
    mot20 = pdsort.TrackerConfig.preset("mot20")
    assert (mot20.lambda1, mot20.lambda2) == (0.36, 0.04)
    assert (mot20.iou_threshold, mot20.det_thresh) == (0.35, 0.4)


def test_tracker_keeps_identity():
    tracker = pdsort.Tracker(pdsort.TrackerConfig.preset("dancetrack"))
    ids = []
    for frame in range(1, 11):
        cx = 100 + 5 * frame
        tracks = tracker.step(frame, [(cx - 30, 340, cx + 30, 460, 0.9)])
        if frame < 3:
            assert tracks == []
        else:
            assert len(tracks) == 1
            ids.append(tracks[0][0])
    assert len(set(ids)) == 1


def test_evaluate_perfect_result():
    rows = [(f, 1, 10.0 + f, 10.0, 40.0 + f, 60.0) for f in range(1, 6)]
    report = pdsort.evaluate(rows, rows)
    assert report.mota == pytest.approx(1.0)
    assert report.idf1 == pytest.approx(1.0)
    assert report.id_switches == 0
