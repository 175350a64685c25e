#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hitkernel/gf2.hpp"
#include "hitkernel/hitspace.hpp"

namespace hk::checks {

struct Result {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

enum class Level { Quick, Full, Deep };

struct Options {
    gf2::Budget budget;
    bool parallel = true;
    std::string fixture_dir;  // empty = default
    Level level = Level::Full;
};

/// Runs the verification suite at the given level; on_result fires once per
/// check as it completes. Quick covers the desk-scale examples and degree 8;
/// Full adds degrees 21 and 22, invariants, the lambda algebra and the
/// transfer witness; Deep adds the degree-47 computation.
std::vector<Result> run_suite(const Options& opts,
                              const std::function<void(const Result&)>& on_result);

bool all_passed(const std::vector<Result>& rs);

}  // namespace hk::checks
