#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace graspsyn {

// Base class for recoverable domain errors raised by the toolkit.
class GraspError : public std::runtime_error {
public:
    explicit GraspError(const std::string& what) : std::runtime_error(what) {}
};

// A decomposed joint angle exceeded its anatomical range of motion.
class RomExceededError : public GraspError {
public:
    RomExceededError(int finger, std::string joint, double angle_deg, double limit_deg);

    int finger;
    std::string joint;
    double angle_deg;
    double limit_deg;
};

// Requested force would fully close the capacitive sensor gap.
class GapClosureError : public GraspError {
public:
    GapClosureError(double force_n, double limit_n);

    double force_n;
    double limit_n;
};

// Calibration samples rejected (too few, duplicate or non-monotone).
class CalibrationError : public GraspError {
public:
    using GraspError::GraspError;
};

// Reading falls outside the calibrated range plus the tolerated
// extrapolation band.
class OutOfRangeError : public GraspError {
public:
    OutOfRangeError(double value, double lo, double hi);

    double value;
    double lo;
    double hi;
};

// Pearson correlation of a constant series.
class UndefinedCorrelationError : public GraspError {
public:
    using GraspError::GraspError;
};

// PCA input with no variance at all (all observations identical).
class DegenerateDataError : public GraspError {
public:
    using GraspError::GraspError;
};

// No force channel ever crossed the contact threshold.
class NoContactError : public GraspError {
public:
    explicit NoContactError(double max_force_n);

    double max_force_n;
};

// Force channels never stabilised; carries the most stable candidate
// sample and the worst channel deviation observed there.
class UnstableHoldError : public GraspError {
public:
    UnstableHoldError(std::size_t best_candidate, double best_std);

    std::size_t best_candidate;
    double best_std;
};

// Malformed file contents; row is 1-based and counts the header.
class ParseError : public GraspError {
public:
    ParseError(std::string file, std::size_t row, const std::string& what);

    std::string file;
    std::size_t row;
};

// Aggregated dataset loading failure.
class DatasetError : public GraspError {
public:
    explicit DatasetError(std::vector<std::string> problems);

    std::vector<std::string> problems;
};

// Not enough observations for a fit (e.g. force-mass with < 2 masses).
class InsufficientDataError : public GraspError {
public:
    using GraspError::GraspError;
};

}  // namespace graspsyn
