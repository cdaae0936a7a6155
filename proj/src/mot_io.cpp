// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/mot_io.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace pdsort {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) fields.push_back(item);
    return fields;
}

double parse_field(const std::string& path, int lineno, const std::string& field) {
    try {
        size_t pos = 0;
        const double v = std::stod(field, &pos);
        if (pos != field.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(path, lineno, "bad numeric field '" + field + "'");
    }
}

}  // namespace

BBox to_corner_box(const MotRecord& rec) {
    return BBox{rec.x, rec.y, rec.x + rec.w, rec.y + rec.h};
}

MotRecord to_mot_record(int frame, int id, const BBox& box, double score) {
    return MotRecord{frame, id, box.x1, box.y1, box.width(), box.height(), score};
}

std::vector<MotRecord> read_mot_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    std::vector<MotRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto fields = split(stripped, ',');
        if (fields.size() < 7) {
            throw ParseError(path, lineno, "expected at least 7 comma-separated fields");
        }
        MotRecord rec;
        rec.frame = static_cast<int>(parse_field(path, lineno, trim(fields[0])));
        rec.id = static_cast<int>(parse_field(path, lineno, trim(fields[1])));
        rec.x = parse_field(path, lineno, trim(fields[2]));
        rec.y = parse_field(path, lineno, trim(fields[3]));
        rec.w = parse_field(path, lineno, trim(fields[4]));
        rec.h = parse_field(path, lineno, trim(fields[5]));
        rec.score = parse_field(path, lineno, trim(fields[6]));
        if (rec.frame < 1) throw ParseError(path, lineno, "frame index must be >= 1");
        if (rec.w <= 0.0 || rec.h <= 0.0) {
            throw ParseError(path, lineno, "box width and height must be positive");
        }
        records.push_back(rec);
    }
    return records;
}

DetectionSequence load_detections(const std::string& path, const ViewGeometry& view,
                                  double det_thresh) {
    const auto records = read_mot_records(path);

    DetectionSequence seq;
    int max_frame = 0;
    for (const auto& rec : records) max_frame = std::max(max_frame, rec.frame);
    seq.per_frame.resize(max_frame);

    const double y_limit = std::nextafter(2.0 * view.img_height, 0.0);
    for (const auto& rec : records) {
        if (rec.score < det_thresh) continue;
        BBox box = to_corner_box(rec);
        box.x1 = std::clamp(box.x1, 0.0, view.img_width);
        box.x2 = std::clamp(box.x2, 0.0, view.img_width);
        box.y1 = std::clamp(box.y1, 0.0, y_limit);
        box.y2 = std::clamp(box.y2, 0.0, y_limit);
        seq.per_frame[rec.frame - 1].push_back({make_depth_box(box, view), rec.score});
    }
    return seq;
}

std::vector<AffineTransform> load_warps(const std::string& path, int frame_count) {
    std::vector<AffineTransform> warps(std::max(frame_count, 0));

    std::ifstream in(path);
    if (!in) {
        std::cerr << "warning: warp file '" << path
                  << "' not found; using identity transforms\n";
        return warps;
    }

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::stringstream ss(stripped);
        int frame = 0;
        double a11, a12, a13, a21, a22, a23;
        if (!(ss >> frame >> a11 >> a12 >> a13 >> a21 >> a22 >> a23)) {
            throw ParseError(path, lineno, "expected 'frame a11 a12 a13 a21 a22 a23'");
        }
        std::string rest;
        if (ss >> rest) throw ParseError(path, lineno, "unexpected trailing field");
        if (frame < 1) throw ParseError(path, lineno, "frame index must be >= 1");
        if (frame > frame_count) continue;

        AffineTransform warp;
        warp.M << a11, a12, a21, a22;
        warp.T << a13, a23;
        if (std::abs(warp.M.determinant()) < 1e-6) {
            std::cerr << "warning: " << path << ":" << lineno
                      << ": near-singular warp matrix (det="
                      << warp.M.determinant() << ")\n";
        }
        warps[frame - 1] = warp;
    }
    return warps;
}

void write_results(const std::string& path, const std::vector<FrameResult>& results) {
    std::vector<const FrameResult*> ordered;
    ordered.reserve(results.size());
    for (const auto& fr : results) ordered.push_back(&fr);
    std::sort(ordered.begin(), ordered.end(),
              [](const FrameResult* a, const FrameResult* b) { return a->frame < b->frame; });

    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");

    char buf[160];
    for (const FrameResult* fr : ordered) {
        std::vector<const FrameEntry*> entries;
        entries.reserve(fr->entries.size());
        for (const auto& e : fr->entries) entries.push_back(&e);
        std::sort(entries.begin(), entries.end(),
                  [](const FrameEntry* a, const FrameEntry* b) { return a->id < b->id; });
        for (const FrameEntry* e : entries) {
            std::snprintf(buf, sizeof(buf), "%d,%d,%.2f,%.2f,%.2f,%.2f,%.2f,-1,-1,-1\n",
                          fr->frame, e->id, e->box.x1, e->box.y1, e->box.width(),
                          e->box.height(), e->score);
            out << buf;
        }
    }
}

void write_detections(const std::string& path,
                      const std::vector<std::vector<Detection>>& per_frame) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");

    char buf[160];
    for (size_t i = 0; i < per_frame.size(); ++i) {
        for (const Detection& det : per_frame[i]) {
            const BBox& box = det.dbox.box;
            std::snprintf(buf, sizeof(buf), "%d,-1,%.2f,%.2f,%.2f,%.2f,%.2f,-1,-1,-1\n",
                          static_cast<int>(i) + 1, box.x1, box.y1, box.width(),
                          box.height(), det.score);
            out << buf;
        }
    }
}

std::vector<FrameResult> read_results(const std::string& path) {
    const auto records = read_mot_records(path);

    std::map<int, FrameResult> by_frame;
    for (const auto& rec : records) {
        FrameResult& fr = by_frame[rec.frame];
        fr.frame = rec.frame;
        fr.entries.push_back({rec.id, to_corner_box(rec), rec.score});
    }
    std::vector<FrameResult> out;
    out.reserve(by_frame.size());
    for (auto& [frame, fr] : by_frame) out.push_back(std::move(fr));
    return out;
}

std::vector<FrameResult> interpolate_gaps(const std::vector<FrameResult>& results,
                                          int max_gap) {
    struct Entry {
        BBox box;
        double score;
    };
    std::map<int, std::map<int, Entry>> tracks;  // id -> frame -> entry
    for (const auto& fr : results) {
        for (const auto& e : fr.entries) {
            tracks[e.id][fr.frame] = Entry{e.box, e.score};
        }
    }

    std::map<int, FrameResult> by_frame;
    for (const auto& fr : results) {
        by_frame[fr.frame].frame = fr.frame;
    }

    for (auto& [id, frames] : tracks) {
        auto it = frames.begin();
        auto prev = it++;
        for (; it != frames.end(); ++prev, ++it) {
            const int f1 = prev->first;
            const int f2 = it->first;
            const int gap = f2 - f1 - 1;
            if (gap < 1 || gap > max_gap) continue;
            const Entry& a = prev->second;
            const Entry& b = it->second;
            for (int f = f1 + 1; f < f2; ++f) {
                const double t = static_cast<double>(f - f1) / (f2 - f1);
                BBox box;
                box.x1 = a.box.x1 + t * (b.box.x1 - a.box.x1);
                box.y1 = a.box.y1 + t * (b.box.y1 - a.box.y1);
                box.x2 = a.box.x2 + t * (b.box.x2 - a.box.x2);
                box.y2 = a.box.y2 + t * (b.box.y2 - a.box.y2);
                FrameResult& fr = by_frame[f];
                fr.frame = f;
                fr.entries.push_back({id, box, 0.5 * (a.score + b.score)});
            }
        }
    }

    for (const auto& fr : results) {
        FrameResult& target = by_frame[fr.frame];
        target.entries.insert(target.entries.end(), fr.entries.begin(), fr.entries.end());
    }

    std::vector<FrameResult> out;
    out.reserve(by_frame.size());
    for (auto& [frame, fr] : by_frame) {
        std::sort(fr.entries.begin(), fr.entries.end(),
                  [](const FrameEntry& a, const FrameEntry& b) { return a.id < b.id; });
        out.push_back(std::move(fr));
    }
    return out;
}

ViewGeometry load_seqinfo(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");

    ViewGeometry view{0.0, 0.0};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '[' || stripped[0] == '#' ||
            stripped[0] == ';') {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "imHeight") view.img_height = parse_field(path, lineno, value);
        if (key == "imWidth") view.img_width = parse_field(path, lineno, value);
    }
    if (view.img_height <= 0.0 || view.img_width <= 0.0) {
        throw IoError("seqinfo '" + path + "' lacks positive imWidth/imHeight");
    }
    return view;
}

}  // namespace pdsort
