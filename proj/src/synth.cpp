// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/synth.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <pdsort/errors.hpp>

namespace pdsort {

namespace {

// Box-Muller on top of mt19937_64 so scenario output is reproducible across
// standard library implementations.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next(double sigma) {
        if (sigma <= 0.0) return 0.0;
        if (has_spare_) {
            has_spare_ = false;
            return spare_ * sigma;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle) * sigma;
    }

private:
    double uniform_open() {
        // in (0, 1]: never 0, so log() stays finite
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
    }

    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SynthOutput generate(const Scenario& scenario) {
    if (scenario.agents.empty() || scenario.frames < 1) {
        throw std::invalid_argument("scenario needs at least one agent and one frame");
    }
    for (size_t i = 0; i < scenario.agents.size(); ++i) {
        for (size_t j = i + 1; j < scenario.agents.size(); ++j) {
            if (scenario.agents[i].depth_rank == scenario.agents[j].depth_rank) {
                throw std::invalid_argument("agent depth ranks must be unique");
            }
        }
    }

    GaussianSampler noise(scenario.seed);
    const double y_limit = std::nextafter(2.0 * scenario.view.img_height, 0.0);

    SynthOutput out;
    out.gt.reserve(scenario.frames);
    out.detections.resize(scenario.frames);

    for (int frame = 1; frame <= scenario.frames; ++frame) {
        const double t = static_cast<double>(frame - 1);

        std::vector<BBox> boxes;
        boxes.reserve(scenario.agents.size());
        for (const AgentSpec& agent : scenario.agents) {
            BBox box = agent.initial_box;
            box.x1 += t * agent.vx;
            box.x2 += t * agent.vx;
            box.y1 += t * agent.vy;
            box.y2 += t * agent.vy;
            boxes.push_back(box);
        }

        FrameResult gt_frame;
        gt_frame.frame = frame;
        for (size_t i = 0; i < boxes.size(); ++i) {
            gt_frame.entries.push_back({static_cast<int>(i) + 1, boxes[i], 1.0});
        }
        out.gt.push_back(std::move(gt_frame));

        // An agent is occluded when it overlaps a shallower (smaller rank)
        // agent beyond the rule's threshold.
        std::vector<char> occluded(boxes.size(), 0);
        for (size_t i = 0; i < boxes.size(); ++i) {
            for (size_t j = 0; j < boxes.size(); ++j) {
                if (i == j) continue;
                if (scenario.agents[i].depth_rank <= scenario.agents[j].depth_rank) continue;
                if (iou(boxes[i], boxes[j]) > scenario.occlusion.overlap_threshold) {
                    occluded[i] = 1;
                }
            }
        }

        for (size_t i = 0; i < boxes.size(); ++i) {
            double score = 0.95;
            if (occluded[i]) {
                if (scenario.occlusion.mode == OcclusionMode::kDrop) continue;
                score *= scenario.occlusion.downweight_factor;
            }

            double cx = boxes[i].center_x() + noise.next(scenario.noise_sigma);
            double cy = boxes[i].center_y() + noise.next(scenario.noise_sigma);
            double w = std::max(2.0, boxes[i].width() + noise.next(scenario.noise_sigma));
            double h = std::max(2.0, boxes[i].height() + noise.next(scenario.noise_sigma));

            BBox box{cx - 0.5 * w, cy - 0.5 * h, cx + 0.5 * w, cy + 0.5 * h};
            box.x1 = std::clamp(box.x1, 0.0, scenario.view.img_width);
            box.x2 = std::clamp(box.x2, 0.0, scenario.view.img_width);
            box.y1 = std::clamp(box.y1, 0.0, y_limit);
            box.y2 = std::clamp(box.y2, 0.0, y_limit);
            out.detections[frame - 1].push_back(
                {make_depth_box(box, scenario.view), score});
        }
    }
    return out;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");

    Scenario sc;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(path, lineno, "expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        try {
            if (key == "seed") {
                sc.seed = std::stoull(value);
            } else if (key == "frames") {
                sc.frames = std::stoi(value);
            } else if (key == "noise") {
                sc.noise_sigma = std::stod(value);
            } else if (key == "occlusion_threshold") {
                sc.occlusion.overlap_threshold = std::stod(value);
            } else if (key == "occlusion_mode") {
                if (value == "drop") sc.occlusion.mode = OcclusionMode::kDrop;
                else if (value == "downweight") sc.occlusion.mode = OcclusionMode::kDownweight;
                else throw std::invalid_argument("unknown occlusion mode '" + value + "'");
            } else if (key == "downweight_factor") {
                sc.occlusion.downweight_factor = std::stod(value);
            } else if (key == "img_height") {
                sc.view.img_height = std::stod(value);
            } else if (key == "img_width") {
                sc.view.img_width = std::stod(value);
            } else if (key == "agent") {
                std::stringstream ss(value);
                std::string item;
                std::vector<double> fields;
                while (std::getline(ss, item, ',')) fields.push_back(std::stod(trim(item)));
                if (fields.size() != 7) {
                    throw std::invalid_argument("agent needs x1,y1,x2,y2,vx,vy,rank");
                }
                AgentSpec agent;
                agent.initial_box = BBox{fields[0], fields[1], fields[2], fields[3]};
                agent.vx = fields[4];
                agent.vy = fields[5];
                agent.depth_rank = static_cast<int>(fields[6]);
                sc.agents.push_back(agent);
            } else {
                throw std::invalid_argument("unknown scenario key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(path, lineno, e.what());
        }
    }
    return sc;
}

std::vector<Scenario> crossing_suite(int count, std::uint64_t base_seed) {
    std::vector<Scenario> suite;
    suite.reserve(count);

    for (int i = 0; i < count; ++i) {
        // Deterministic per-scenario parameter spread, independent of the
        // jitter stream.
        std::mt19937_64 rng(base_seed * 7919 + static_cast<std::uint64_t>(i));
        auto pick = [&rng](double lo, double hi) {
            const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
            return lo + u * (hi - lo);
        };

        Scenario sc;
        sc.seed = base_seed + static_cast<std::uint64_t>(i);
        sc.frames = 70;
        sc.noise_sigma = pick(0.8, 2.0);
        sc.occlusion.overlap_threshold = pick(0.25, 0.4);
        sc.occlusion.mode = OcclusionMode::kDrop;

        // Near agent walks right, far agent (smaller y2, hence larger
        // pseudo-depth) walks left through it.
        const double speed_a = pick(5.0, 8.0);
        const double speed_b = pick(5.0, 8.0);
        const double ya = 700.0 + pick(-40.0, 40.0);
        const double depth_sep = pick(35.0, 80.0);
        const double wa = pick(70.0, 90.0);
        const double ha = 2.0 * wa;
        const double wb = wa * pick(0.85, 1.0);
        const double hb = 2.0 * wb;
        const double xa = 420.0 + pick(-60.0, 60.0);
        const double xb = 1460.0 + pick(-60.0, 60.0);

        AgentSpec near;
        near.initial_box = BBox{xa - 0.5 * wa, ya - ha, xa + 0.5 * wa, ya};
        near.vx = speed_a;
        near.vy = pick(-0.4, 0.4);
        near.depth_rank = 0;

        AgentSpec far;
        const double yb = ya - depth_sep;
        far.initial_box = BBox{xb - 0.5 * wb, yb - hb, xb + 0.5 * wb, yb};
        far.vx = -speed_b;
        far.vy = pick(-0.4, 0.4);
        far.depth_rank = 1;

        sc.agents = {near, far};
        suite.push_back(std::move(sc));
    }
    return suite;
}

}  // namespace pdsort
