#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "latin/cuboid.hpp"

namespace latin {

/// Code over a cuboidal Hamming space with per-coordinate alphabets.
struct MixedCode {
    std::vector<int> alphabets;
    std::vector<std::vector<int>> words;
};

/// Raises data_error on duplicate words or out-of-range coordinates.
void checkWellFormed(const MixedCode& c);

int hammingDistance(std::span<const int> u, std::span<const int> v);

struct CodeMetrics {
    std::size_t size;
    std::set<int> distanceSet;
    std::optional<int> minDistance;   // absent when |C| < 2
    bool isAdditive;
    std::optional<int> minWeight;     // reported only for additive codes
};

CodeMetrics codeMetrics(const MixedCode& c);

/// True iff |C| equals the generalised Singleton bound at delta(C).
bool isMds(const MixedCode& c);

/// Exact A_n(d, delta) over tiny spaces (product of alphabets <= 18) by
/// branch-and-bound clique search, with one optimal code as witness.
std::pair<std::int64_t, MixedCode> maxCodeBruteforce(const std::vector<int>& alphabets,
                                                     int delta);

/// Words (symbol, position) of length d+1, or with the symbol unranked into
/// its r-tuple (length d+r) when expandSymbols is set. The compact form is a
/// mixed MDS code of minimum distance 2; the expanded form keeps distance
/// exactly r+1 between same-symbol words, but its overall minimum distance
/// is 2 for r >= 2 (adjacent cells may carry symbols whose tuples differ in
/// a single component).
MixedCode cuboidToCode(const Hypercuboid& c, bool expandSymbols);

/// Inverse of the expanded conversion: the last d coordinates are the
/// position, the first r the (ranked) symbol. Verifies the size and layout,
/// that every position is covered exactly once, and that the induced array
/// is a valid hypercuboid (equivalently, same-symbol words are at distance
/// >= r+1).
Hypercuboid codeToCuboid(const MixedCode& c, int r);

struct CliqueReport {
    bool clique;    // all pairwise distances in {lowDist, ..., d}
    bool maximal;   // no single word of the space extends it
};

CliqueReport codeIsClique(const MixedCode& c, int lowDist);

/// Vertex self-map of the cuboidal Hamming graph H(shape, S).
struct Endomorphism {
    CuboidShape shape;
    std::vector<int> distanceSet;        // S
    std::vector<std::int64_t> map;       // per vertex index
    std::int64_t rank;                   // image size
};

/// Sends every vertex to the cell of the first r-subarray holding the same
/// symbol; rank equals the order, kernel classes are the symbol classes.
Endomorphism buildEndomorphism(const Hypercuboid& c);

/// Exhaustive edge-preservation check over all vertex pairs (at most 10^4
/// vertices; resource_error beyond).
bool verifyEndomorphism(const Endomorphism& e);

/// Sizes of the kernel classes (preimage sizes of the image vertices).
std::vector<std::int64_t> kernelClassSizes(const Endomorphism& e);

} // namespace latin
