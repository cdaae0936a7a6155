// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#include <pdsort/config.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <pdsort/errors.hpp>

namespace pdsort {

namespace {

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "off" || v == "no") return false;
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

double parse_double(const std::string& v) {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters in '" + v + "'");
    return d;
}

int parse_int(const std::string& v) {
    size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing characters in '" + v + "'");
    return i;
}

template <int N>
Eigen::Matrix<double, N, 1> parse_diag(const std::string& v) {
    Eigen::Matrix<double, N, 1> out;
    std::stringstream ss(v);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= N) throw std::invalid_argument("expected " + std::to_string(N) + " values");
        out(i++) = parse_double(item);
    }
    if (i != N) throw std::invalid_argument("expected " + std::to_string(N) + " values");
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

TrackerConfig::TrackerConfig() {
    p0_diag << 10, 10, 10, 10, 10, 1e4, 1e4, 1e4, 1e4;
    q_diag << 1, 1, 1, 1, 1, 0.01, 0.01, 0.01, 1e-4;
    r_diag << 1, 1, 1, 10, 10;
}

TrackerConfig TrackerConfig::preset(const std::string& name) {
    TrackerConfig cfg;
    if (name == "dancetrack" || name == "mot17") {
        cfg.lambda1 = 0.2;
        cfg.lambda2 = 0.2;
        cfg.iou_threshold = 0.3;
        cfg.det_thresh = 0.6;
    } else if (name == "mot20") {
        cfg.lambda1 = 0.36;
        cfg.lambda2 = 0.04;
        cfg.iou_threshold = 0.35;
        cfg.det_thresh = 0.4;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    cfg.interval_num = 8;
    return cfg;
}

void TrackerConfig::set(const std::string& key, const std::string& value) {
    if (key == "det_thresh") det_thresh = parse_double(value);
    else if (key == "iou_threshold") iou_threshold = parse_double(value);
    else if (key == "lambda1") lambda1 = parse_double(value);
    else if (key == "lambda2") lambda2 = parse_double(value);
    else if (key == "interval_num") interval_num = parse_int(value);
    else if (key == "ocm_dt") ocm_dt = parse_int(value);
    else if (key == "t_expire") t_expire = parse_int(value);
    else if (key == "min_hits") min_hits = parse_int(value);
    else if (key == "img_height") img_height = parse_double(value);
    else if (key == "img_width") img_width = parse_double(value);
    else if (key == "cmc_enabled") cmc_enabled = parse_bool(value);
    else if (key == "cmc_translate_velocity") cmc_translate_velocity = parse_bool(value);
    else if (key == "use_dviou") use_dviou = parse_bool(value);
    else if (key == "kf_p0_diag") p0_diag = parse_diag<9>(value);
    else if (key == "kf_q_diag") q_diag = parse_diag<9>(value);
    else if (key == "kf_r_diag") r_diag = parse_diag<5>(value);
    else throw std::invalid_argument("unknown config key '" + key + "'");

    if (interval_num < 1) throw std::invalid_argument("interval_num must be >= 1");
    if (lambda1 < 0 || lambda2 < 0) throw std::invalid_argument("lambda weights must be >= 0");
    if (det_thresh < 0 || det_thresh > 1) throw std::invalid_argument("det_thresh must be in [0,1]");
    if (iou_threshold < 0 || iou_threshold > 1)
        throw std::invalid_argument("iou_threshold must be in [0,1]");
}

TrackerConfig TrackerConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");

    TrackerConfig cfg;
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
            if (key == "preset") {
                cfg = TrackerConfig::preset(value);
            } else {
                cfg.set(key, value);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(path, lineno, e.what());
        }
    }
    return cfg;
}

}  // namespace pdsort
