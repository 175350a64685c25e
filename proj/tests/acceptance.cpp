// Integration suite: one pass/fail line per criterion. Exits nonzero when
// any check fails. `acceptance --deep` adds the long degree-47 run, which
// needs a much larger budget and several hours.

#include <cstdio>
#include <cstring>

#include "hitkernel/checks.hpp"

int main(int argc, char** argv) {
    bool deep = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--deep") == 0) deep = true;

    hk::checks::Options opts;
    opts.level = deep ? hk::checks::Level::Deep : hk::checks::Level::Full;
    opts.budget.max_bytes = (deep ? std::size_t(24) : std::size_t(6)) * 1024 * 1024 * 1024;

    auto results = hk::checks::run_suite(opts, [](const hk::checks::Result& r) {
        std::printf("%s %s (%.2fs)%s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : " [", r.detail.c_str(), r.detail.empty() ? "" : "]");
        std::fflush(stdout);
    });
    return hk::checks::all_passed(results) ? 0 : 1;
}
