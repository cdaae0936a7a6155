// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/metrics.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <pdsort/association.hpp>

namespace pdsort {

MetricsReport evaluate(const std::vector<FrameResult>& gt,
                       const std::vector<FrameResult>& results,
                       double iou_match_thresh) {
    std::map<int, const FrameResult*> gt_by_frame, res_by_frame;
    for (const auto& fr : gt) gt_by_frame[fr.frame] = &fr;
    for (const auto& fr : results) res_by_frame[fr.frame] = &fr;

    std::set<int> frames;
    for (const auto& [f, p] : gt_by_frame) frames.insert(f);
    for (const auto& [f, p] : res_by_frame) frames.insert(f);

    MetricsReport report;
    std::int64_t res_total = 0;

    std::map<int, int> last_matched;                  // gt id -> last result id
    std::map<std::pair<int, int>, std::int64_t> overlap;  // (gt id, res id) -> frames

    static const std::vector<FrameEntry> kNoEntries;
    for (const int frame : frames) {
        const auto git = gt_by_frame.find(frame);
        const auto rit = res_by_frame.find(frame);
        const auto& gt_entries = git != gt_by_frame.end() ? git->second->entries : kNoEntries;
        const auto& res_entries = rit != res_by_frame.end() ? rit->second->entries : kNoEntries;

        report.gt += static_cast<std::int64_t>(gt_entries.size());
        res_total += static_cast<std::int64_t>(res_entries.size());

        CostMatrix c(static_cast<int>(gt_entries.size()),
                     static_cast<int>(res_entries.size()));
        for (int i = 0; i < c.rows(); ++i) {
            for (int j = 0; j < c.cols(); ++j) {
                const double sim = iou(gt_entries[i].box, res_entries[j].box);
                c.at(i, j) = sim < iou_match_thresh ? CostMatrix::kForbidden : -sim;
                if (sim >= iou_match_thresh) {
                    overlap[{gt_entries[i].id, res_entries[j].id}] += 1;
                }
            }
        }

        const AssignmentResult assignment = solve_assignment(c);
        for (const auto& [i, j] : assignment.matches) {
            const int gid = gt_entries[i].id;
            const int rid = res_entries[j].id;
            const auto prev = last_matched.find(gid);
            if (prev != last_matched.end() && prev->second != rid) {
                report.id_switches += 1;
            }
            last_matched[gid] = rid;
        }
        report.fn += static_cast<std::int64_t>(assignment.unmatched_rows.size());
        report.fp += static_cast<std::int64_t>(assignment.unmatched_cols.size());
    }

    if (report.gt > 0) {
        report.mota = 1.0 - static_cast<double>(report.fn + report.fp + report.id_switches) /
                                static_cast<double>(report.gt);
    } else {
        report.mota = (report.fp + report.id_switches) == 0 ? 1.0 : 0.0;
    }

    // IDF1 via the optimal bijective identity mapping over per-pair overlap
    // frame counts.
    std::set<int> gt_ids, res_ids;
    for (const auto& [key, count] : overlap) {
        gt_ids.insert(key.first);
        res_ids.insert(key.second);
    }
    std::map<int, int> gt_index, res_index;
    int gi = 0, ri = 0;
    for (const int id : gt_ids) gt_index[id] = gi++;
    for (const int id : res_ids) res_index[id] = ri++;

    std::int64_t idtp = 0;
    if (gi > 0 && ri > 0) {
        CostMatrix counts(gi, ri, 0.0);
        for (const auto& [key, count] : overlap) {
            counts.at(gt_index[key.first], res_index[key.second]) =
                -static_cast<double>(count);
        }
        for (const auto& [i, j] : solve_assignment(counts).matches) {
            idtp += static_cast<std::int64_t>(-counts.at(i, j));
        }
    }
    const std::int64_t denom = report.gt + res_total;
    report.idf1 = denom > 0 ? 2.0 * static_cast<double>(idtp) / static_cast<double>(denom)
                            : 1.0;
    return report;
}

}  // namespace pdsort
