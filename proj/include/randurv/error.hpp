#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace randurv {

// Thrown when a triangular factor (or an inverted chain factor) is numerically
// singular.  `index` identifies the offending diagonal entry or chain factor.
class SingularError : public std::runtime_error {
public:
    SingularError(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Thrown when an iteration fails to reach its tolerance within the sweep or
// term cap.  `measure` is the residual quantity at the point of failure.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double measure)
        : std::runtime_error(what), measure_(measure) {}

    double measure() const noexcept { return measure_; }

private:
    double measure_;
};

// Thrown on file read/write failures and malformed on-disk data.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace randurv
