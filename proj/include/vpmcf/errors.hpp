#pragma once

#include <stdexcept>
#include <string>

namespace vpmcf {

/// Geometry has touched the rotation axis (some rho <= rho_floor);
/// the continuum model is no longer meaningful at that node.
struct AxisContact : std::runtime_error {
    explicit AxisContact(const std::string& what) : std::runtime_error(what) {}
};

/// Simpson quadrature needs an even interval count.
struct OddIntervalCount : std::runtime_error {
    explicit OddIntervalCount(const std::string& what) : std::runtime_error(what) {}
};

/// Fewer than 3 consecutive states available for a time derivative.
struct InsufficientHistory : std::runtime_error {
    explicit InsufficientHistory(const std::string& what) : std::runtime_error(what) {}
};

/// Blow-up fit window holds fewer than the required number of states.
struct InsufficientBlowupData : std::runtime_error {
    explicit InsufficientBlowupData(const std::string& what) : std::runtime_error(what) {}
};

/// Rescale window covers too little of the source data to resample.
struct EmptyWindow : std::runtime_error {
    explicit EmptyWindow(const std::string& what) : std::runtime_error(what) {}
};

/// Catenoid template fit requires a strict interior minimum.
struct NoInteriorMinimum : std::runtime_error {
    explicit NoInteriorMinimum(const std::string& what) : std::runtime_error(what) {}
};

/// Config file rejected; line is 1-based, 0 when not line-specific.
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& what) : std::runtime_error(what), line(line_) {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vpmcf
