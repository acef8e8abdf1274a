#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latin/cuboid.hpp"

namespace latin {

/// Outcome of the necessary existence condition
/// sum(n_i) - prod_{i<=r}(n_i) <= d-1 for class r >= 2 hypercuboids.
/// Class 1 is always satisfied (the modular construction is a witness).
struct ExistenceVerdict {
    std::int64_t lhs;
    std::int64_t rhs;
    bool satisfied;
    std::optional<std::int64_t> ethierMax; // max d for cubic shapes: (n-1)^(r-1)+r
};

ExistenceVerdict existenceBound(const CuboidShape& shape);

/// All non-increasing types with n_1 <= 5, 2 <= d <= 6 violating the class-2
/// existence condition, in (d, lexicographic) order.
std::vector<std::vector<int>> table1Check();

/// Generalised Singleton bound: product of the d-delta+1 smallest alphabets.
std::int64_t singletonBound(const std::vector<int>& alphabets, int delta);

/// Number of words within Hamming distance t of any fixed centre.
std::int64_t sphereSize(const std::vector<int>& alphabets, int t);

/// Generalised Hamming bound for 2t-error-detecting codes, floored.
std::int64_t hammingBound(const std::vector<int>& alphabets, int t);

/// Generalised Plotkin bound; absent when the hypothesis rho*d < delta fails
/// (including the tie case). Exact rational arithmetic throughout.
std::optional<std::int64_t> plotkinBound(const std::vector<int>& alphabets, int delta);

struct BoundReport {
    std::vector<int> alphabets;
    int delta;
    std::int64_t singleton;
    std::optional<std::int64_t> hamming;   // present iff delta even
    std::optional<std::int64_t> plotkin;   // present iff rho*d < delta
    std::int64_t plotkinRhoNum;            // rho = 1 - sum 1/(d*n_i), as a fraction
    std::int64_t plotkinRhoDen;
    std::int64_t trivialFullSpace;         // A(d,1) = prod n_i
    std::int64_t trivialRepetition;        // A(d,d) = n_d
};

BoundReport boundReport(const std::vector<int>& alphabets, int delta);

} // namespace latin
