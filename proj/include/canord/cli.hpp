#pragma once

#include "canord/ramdata.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace canord::cli {

struct Range {
    int lo = 0, hi = 0;
};

// "4" or "1..4"; throws std::invalid_argument on anything else or an empty range
Range parse_range(const std::string& s);

// "E6", "D4", "A3"; throws std::invalid_argument for unknown groups
CanonicalType parse_group(const std::string& s);

struct SweepConfig {
    std::vector<Family> families;  // empty means all
    Range n{1, 6};
    Range e{1, 4};
    std::string format = "text";  // text | json | dot
    std::string output;            // empty means stdout
};

// Rows of the sweep, clamped to each family's validity range and sorted.
std::vector<CanonicalType> expand(const SweepConfig& cfg);

// Exit codes: 0 all rows agree, 1 a disagreement, 2 usage or parameter error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace canord::cli
