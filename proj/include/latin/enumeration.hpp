#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <gmpxx.h>

#include "latin/cuboid.hpp"

namespace latin {

struct SearchOptions {
    bool countOnly = true;
    std::optional<std::int64_t> limit;   // stop after this many solutions
    int splitDepth = -1;                 // -1: pick automatically
    int workers = 1;
    std::uint64_t nodeBudget = std::uint64_t{1} << 62;
};

struct CountResult {
    mpz_class semiReduced;   // h
    mpz_class totalFactor;   // c = (prod_{i<=r} n_i)!
    mpz_class total;         // h * c
    std::uint64_t nodesVisited = 0;
    double millis = 0.0;
};

using CuboidSink = std::function<void(const Hypercuboid&)>;

/// Counts full valid hypercuboids whose first r-subarray is pinned to the
/// natural order. Violated existence bound (class >= 2) short-circuits to 0
/// with zero nodes. Deterministic for any worker count.
CountResult countSemiReduced(const CuboidShape& shape, const SearchOptions& opts);

/// Same search, materialising every solution through the sink. Emission is
/// lexicographic for workers == 1; sinks must tolerate concurrent calls
/// otherwise.
CountResult enumerateSemiReduced(const CuboidShape& shape, const SearchOptions& opts,
                                 const CuboidSink& sink);

/// h * c, the count without the symmetry break.
CountResult totalCount(const CuboidShape& shape, const SearchOptions& opts);

/// First completion of a valid partial hypercuboid, or nullopt when none
/// exists. Exceeding the node budget raises resource_error instead.
std::optional<Hypercuboid> completePartial(const Hypercuboid& p,
                                           const SearchOptions& opts);

/// Unrestricted search (no pinned prefix); the serial reference used to
/// certify the symmetry break and by the benchmark.
std::uint64_t countAllValid(const CuboidShape& shape, const SearchOptions& opts);

} // namespace latin
