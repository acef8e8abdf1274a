// Compares the serial search against the OpenMP work-split search on a few
// counting workloads and reports speedups. Counts must agree; a mismatch is
// a hard failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "latin/enumeration.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double timedCount(const latin::CuboidShape& shape, int workers, mpz_class* out) {
    latin::SearchOptions opts;
    opts.workers = workers;
    const auto start = Clock::now();
    const auto res = latin::countSemiReduced(shape, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    *out = res.semiReduced;
    return ms;
}

} // namespace

int main(int argc, char** argv) {
    int workers = 8;
    if (argc > 1) workers = std::atoi(argv[1]);

    std::vector<std::pair<std::vector<int>, int>> workloads = {
        {{4, 3, 3}, 2},
        {{5, 3, 2}, 1},
        {{4, 3, 2, 2}, 1},
        {{4, 2, 2, 2}, 2},
    };
    if (argc > 2 && std::string(argv[2]) == "--heavy")
        workloads.push_back({{5, 3, 2}, 2});

    std::printf("%-16s %-6s %12s %12s %10s\n", "shape", "class", "serial ms",
                "parallel ms", "speedup");
    bool ok = true;
    for (const auto& [sizes, cls] : workloads) {
        latin::CuboidShape shape(sizes, cls);
        mpz_class serialCount, parallelCount;
        const double serialMs = timedCount(shape, 1, &serialCount);
        const double parallelMs = timedCount(shape, workers, &parallelCount);
        ok = ok && serialCount == parallelCount;

        std::string label;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            label += (i ? "x" : "") + std::to_string(sizes[i]);
        std::printf("%-16s %-6d %12.2f %12.2f %9.2fx  h=%s%s\n", label.c_str(), cls,
                    serialMs, parallelMs, serialMs / parallelMs,
                    serialCount.get_str().c_str(),
                    serialCount == parallelCount ? "" : "  COUNT MISMATCH");
    }
    return ok ? 0 : 1;
}
