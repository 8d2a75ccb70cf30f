#pragma once

#include <stdexcept>
#include <string>

namespace rsd {

// Error taxonomy: config/usage problems exit 2 at the CLI, everything else 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct data_error : std::runtime_error {
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    bool contains(double x) const { return x >= lower && x <= upper; }
    double width() const { return upper - lower; }
};

}  // namespace rsd
