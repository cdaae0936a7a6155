// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <pdsort/errors.hpp>
#include <pdsort/metrics.hpp>
#include <pdsort/mot_io.hpp>
#include <pdsort/synth.hpp>
#include <pdsort/tracker.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct TrackArgs {
    std::string det_path;
    std::string out_path;
    std::string warp_path;
    std::string seqinfo_path;
    std::string preset = "dancetrack";
    std::string sequence;
    double img_height = 0.0;
    double img_width = 0.0;
    bool no_cmc = false;
    std::vector<std::string> overrides;
};

void apply_override(pdsort::TrackerConfig& cfg, const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument("override '" + kv + "' is not key=value");
    }
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
}

int cmd_track(const TrackArgs& args) {
    pdsort::TrackerConfig cfg = pdsort::TrackerConfig::preset(args.preset);
    std::vector<std::string> applied;
    for (const auto& kv : args.overrides) {
        apply_override(cfg, kv);
        applied.push_back(kv);
    }
    if (!args.seqinfo_path.empty()) {
        const pdsort::ViewGeometry v = pdsort::load_seqinfo(args.seqinfo_path);
        cfg.img_height = v.img_height;
        cfg.img_width = v.img_width;
    }
    if (args.img_height > 0.0) {
        cfg.img_height = args.img_height;
        applied.push_back("img_height=" + std::to_string(args.img_height));
    }
    if (args.img_width > 0.0) {
        cfg.img_width = args.img_width;
        applied.push_back("img_width=" + std::to_string(args.img_width));
    }
    if (args.no_cmc) {
        cfg.cmc_enabled = false;
        applied.push_back("cmc_enabled=false");
    }

    const pdsort::ViewGeometry view{cfg.img_height, cfg.img_width};
    const pdsort::DetectionSequence seq =
        pdsort::load_detections(args.det_path, view, cfg.det_thresh);

    std::vector<pdsort::AffineTransform> warps;
    if (!args.warp_path.empty()) {
        warps = pdsort::load_warps(args.warp_path, seq.frame_count());
    }

    const auto start = std::chrono::steady_clock::now();
    const std::vector<pdsort::FrameResult> results =
        pdsort::track_sequence(cfg, seq.per_frame, warps);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;

    pdsort::write_results(args.out_path, results);

    const double fps =
        elapsed.count() > 0.0 ? seq.frame_count() / elapsed.count() : 0.0;

    nlohmann::json manifest;
    manifest["sequence"] = args.sequence.empty()
                               ? std::filesystem::path(args.det_path).stem().string()
                               : args.sequence;
    manifest["preset"] = args.preset;
    manifest["overrides"] = applied;
    manifest["inputs"] = {{"detections", args.det_path}, {"warps", args.warp_path}};
    manifest["output"] = args.out_path;
    manifest["frames"] = seq.frame_count();
    manifest["wall_clock_seconds"] = elapsed.count();
    manifest["fps"] = fps;
    manifest["lambda1"] = cfg.lambda1;
    manifest["lambda2"] = cfg.lambda2;

    std::ofstream mf(args.out_path + ".manifest.json");
    if (!mf) throw pdsort::IoError("cannot write manifest for '" + args.out_path + "'");
    mf << manifest.dump(2) << "\n";

    std::printf("processed %d frames in %.3f s (%.1f fps)\n", seq.frame_count(),
                elapsed.count(), fps);
    return kExitOk;
}

void print_report(const pdsort::MetricsReport& report) {
    std::printf("%-14s %s\n", "metric", "value");
    std::printf("%-14s %.4f\n", "MOTA", report.mota);
    std::printf("%-14s %.4f\n", "IDF1", report.idf1);
    std::printf("%-14s %lld\n", "ID switches", static_cast<long long>(report.id_switches));
    std::printf("%-14s %lld\n", "FP", static_cast<long long>(report.fp));
    std::printf("%-14s %lld\n", "FN", static_cast<long long>(report.fn));
    std::printf("%-14s %lld\n", "GT", static_cast<long long>(report.gt));
    std::printf("\n");
    std::printf("mota=%.6f\n", report.mota);
    std::printf("idf1=%.6f\n", report.idf1);
    std::printf("id_switches=%lld\n", static_cast<long long>(report.id_switches));
    std::printf("fp=%lld\n", static_cast<long long>(report.fp));
    std::printf("fn=%lld\n", static_cast<long long>(report.fn));
    std::printf("gt=%lld\n", static_cast<long long>(report.gt));
}

int cmd_eval(const std::string& gt_path, const std::string& res_path, double thresh) {
    const auto gt = pdsort::read_results(gt_path);
    const auto res = pdsort::read_results(res_path);
    if (gt.empty()) {
        throw pdsort::IoError("ground truth '" + gt_path + "' has no records");
    }
    print_report(pdsort::evaluate(gt, res, thresh));
    return kExitOk;
}

struct AblationVariant {
    const char* name;
    pdsort::TrackerConfig cfg;
};

std::vector<AblationVariant> ablation_variants(const pdsort::TrackerConfig& base) {
    pdsort::TrackerConfig iou_only = base;
    iou_only.use_dviou = false;
    iou_only.lambda1 = 0.0;
    iou_only.lambda2 = 0.0;

    pdsort::TrackerConfig no_qpdm = base;
    no_qpdm.lambda1 = 0.0;

    pdsort::TrackerConfig no_cmc = base;
    no_cmc.cmc_enabled = false;

    return {{"full", base},
            {"iou-only", iou_only},
            {"no-qpdm", no_qpdm},
            {"no-cmc", no_cmc}};
}

std::vector<std::vector<pdsort::Detection>> filter_by_score(
    const std::vector<std::vector<pdsort::Detection>>& per_frame, double thresh) {
    std::vector<std::vector<pdsort::Detection>> out(per_frame.size());
    for (size_t i = 0; i < per_frame.size(); ++i) {
        for (const auto& det : per_frame[i]) {
            if (det.score >= thresh) out[i].push_back(det);
        }
    }
    return out;
}

struct SynthArgs {
    std::string out_dir;
    std::string suite = "crossing";
    std::string scenario_path;
    std::string preset = "dancetrack";
    int count = 50;
    std::uint64_t seed = 1;
    bool ablate = false;
    std::vector<std::string> overrides;
};

int cmd_synth(const SynthArgs& args) {
    std::vector<pdsort::Scenario> scenarios;
    std::string stem = args.suite;
    if (!args.scenario_path.empty()) {
        scenarios.push_back(pdsort::load_scenario(args.scenario_path));
        stem = std::filesystem::path(args.scenario_path).stem().string();
    } else if (args.suite == "crossing") {
        scenarios = pdsort::crossing_suite(args.count, args.seed);
    } else {
        throw std::invalid_argument("unknown suite '" + args.suite + "'");
    }

    std::filesystem::create_directories(args.out_dir);

    std::vector<pdsort::SynthOutput> outputs;
    outputs.reserve(scenarios.size());
    char name[64];
    for (size_t i = 0; i < scenarios.size(); ++i) {
        outputs.push_back(pdsort::generate(scenarios[i]));
        std::snprintf(name, sizeof(name), "%s_%03zu", stem.c_str(), i);
        const auto base = std::filesystem::path(args.out_dir) / name;
        pdsort::write_results(base.string() + "_gt.txt", outputs.back().gt);
        pdsort::write_detections(base.string() + "_det.txt", outputs.back().detections);
    }
    std::printf("wrote %zu scenario(s) to %s\n", scenarios.size(), args.out_dir.c_str());

    if (!args.ablate) return kExitOk;

    pdsort::TrackerConfig base_cfg = pdsort::TrackerConfig::preset(args.preset);
    for (const auto& kv : args.overrides) apply_override(base_cfg, kv);

    std::printf("\n%-10s %8s %8s %6s %6s %6s\n", "variant", "MOTA", "IDF1", "IDsw",
                "FP", "FN");
    for (const auto& variant : ablation_variants(base_cfg)) {
        std::int64_t idsw = 0, fp = 0, fn = 0, gt = 0;
        double idf1_sum = 0.0;
        for (size_t i = 0; i < scenarios.size(); ++i) {
            const auto dets =
                filter_by_score(outputs[i].detections, variant.cfg.det_thresh);
            const auto results = pdsort::track_sequence(variant.cfg, dets);
            const auto report = pdsort::evaluate(outputs[i].gt, results);
            idsw += report.id_switches;
            fp += report.fp;
            fn += report.fn;
            gt += report.gt;
            idf1_sum += report.idf1;
        }
        const double mota =
            gt > 0 ? 1.0 - static_cast<double>(fn + fp + idsw) / static_cast<double>(gt)
                   : 1.0;
        std::printf("%-10s %8.4f %8.4f %6lld %6lld %6lld\n", variant.name, mota,
                    idf1_sum / static_cast<double>(scenarios.size()),
                    static_cast<long long>(idsw), static_cast<long long>(fp),
                    static_cast<long long>(fn));
    }
    return kExitOk;
}

int cmd_interp(const std::string& in_path, const std::string& out_path, int max_gap) {
    const auto results = pdsort::read_results(in_path);
    pdsort::write_results(out_path, pdsort::interpolate_gaps(results, max_gap));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdsort: pseudo-depth multi-object tracking"};
    app.require_subcommand(1);

    TrackArgs track_args;
    auto* track = app.add_subcommand("track", "run the tracker over a detection file");
    track->add_option("--det", track_args.det_path, "MOT det file")->required();
    track->add_option("--out", track_args.out_path, "output result file")->required();
    track->add_option("--warps", track_args.warp_path, "camera warp file");
    track->add_option("--seqinfo", track_args.seqinfo_path, "seqinfo key file");
    track->add_option("--preset", track_args.preset, "config preset (dancetrack|mot17|mot20)");
    track->add_option("--seq", track_args.sequence, "sequence name for the manifest");
    track->add_option("--img-height", track_args.img_height, "view height in pixels");
    track->add_option("--img-width", track_args.img_width, "view width in pixels");
    track->add_flag("--no-cmc", track_args.no_cmc, "disable camera motion compensation");
    track->add_option("--set", track_args.overrides, "config override key=value");

    std::string gt_path, res_path;
    double eval_thresh = 0.5;
    auto* eval = app.add_subcommand("eval", "evaluate a result file against ground truth");
    eval->add_option("--gt", gt_path, "ground truth file")->required();
    eval->add_option("--res", res_path, "result file")->required();
    eval->add_option("--iou-thresh", eval_thresh, "match IoU threshold");

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "generate synthetic scenarios");
    synth->add_option("--out", synth_args.out_dir, "output directory")->required();
    synth->add_option("--suite", synth_args.suite, "built-in suite name");
    synth->add_option("--scenario", synth_args.scenario_path, "scenario config file");
    synth->add_option("--count", synth_args.count, "number of scenarios");
    synth->add_option("--seed", synth_args.seed, "base seed");
    synth->add_option("--preset", synth_args.preset, "config preset for --ablate");
    synth->add_flag("--ablate", synth_args.ablate, "run tracker variants and print a table");
    synth->add_option("--set", synth_args.overrides, "config override key=value");

    std::string interp_in, interp_out;
    int max_gap = 20;
    auto* interp = app.add_subcommand("interp", "fill track gaps by linear interpolation");
    interp->add_option("--in", interp_in, "input result file")->required();
    interp->add_option("--out", interp_out, "output result file")->required();
    interp->add_option("--max-gap", max_gap, "largest gap (frames) to fill");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (track->parsed()) return cmd_track(track_args);
        if (eval->parsed()) return cmd_eval(gt_path, res_path, eval_thresh);
        if (synth->parsed()) return cmd_synth(synth_args);
        if (interp->parsed()) return cmd_interp(interp_in, interp_out, max_gap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
