// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 pdsort contributors

#pragma once

#include <stdexcept>
#include <string>

namespace pdsort {

/// A bounding box or view that violates the geometric preconditions.
struct InvalidGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Kalman innovation covariance could not be inverted; the caller
/// is expected to drop the affected tracklet and continue.
struct FilterDivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file that cannot be opened, written, or is structurally unusable.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed line in an input file. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, int line, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace pdsort
