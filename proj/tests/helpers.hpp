#pragma once

// Shared fixtures and independent oracles used across the test suites.
//
// The oracles here are deliberately naive (pairwise distance rules,
// generate-and-test over all symbol assignments) so that they share no code
// with the library implementations they certify.

#include <cstdint>
#include <random>
#include <vector>

#include "latin/codes.hpp"
#include "latin/cuboid.hpp"

namespace testutil {

/// The worked (3,2,2) class-2 example cuboid, 0-based. Its two layers read
///   0 1 2 | 4 5 3
///   3 4 5 | 1 2 0
/// (rows = axis 1, columns = axis 0, layers = axis 2).
inline latin::Hypercuboid exampleCuboid() {
    return latin::Hypercuboid(latin::CuboidShape({3, 2, 2}, 2), 6,
                              {0, 1, 2, 3, 4, 5, 4, 5, 3, 1, 2, 0});
}

/// The partial (2,2,2) class-2 example over 6 symbols with one empty cell.
inline latin::Hypercuboid examplePartial() {
    return latin::Hypercuboid(latin::CuboidShape({2, 2, 2}, 2), 6,
                              {latin::kEmpty, 2, 4, 5, 5, 3, 2, 0});
}

/// The six-word mixed MDS code over HS(3,3,2), 0-based.
inline latin::MixedCode exampleCode() {
    return latin::MixedCode{
        {3, 3, 2},
        {{0, 0, 0}, {1, 2, 0}, {2, 1, 0}, {0, 1, 1}, {1, 0, 1}, {2, 2, 1}}};
}

/// Distance-rule validity oracle for FULL arrays of natural order: valid iff
/// every pair of distinct cells holding the same symbol differs in at least
/// r+1 coordinate positions.
inline bool distanceRuleValid(const latin::Hypercuboid& c) {
    const auto cells = c.shape.cellCount();
    for (std::int64_t a = 0; a < cells; ++a) {
        const auto ca = c.coordsOf(a);
        for (std::int64_t b = a + 1; b < cells; ++b) {
            if (c.cells[static_cast<std::size_t>(a)] !=
                c.cells[static_cast<std::size_t>(b)])
                continue;
            const auto cb = c.coordsOf(b);
            int diff = 0;
            for (std::size_t i = 0; i < ca.size(); ++i) diff += ca[i] != cb[i];
            if (diff <= c.shape.cls()) return false;
        }
    }
    return true;
}

/// Generate-and-test count of semi-reduced hypercuboids: pins the first
/// `order` cells to 0..order-1 and tries every symbol assignment of the rest.
/// Only sensible for shapes with very few free cells.
inline std::uint64_t naiveSemiReducedCount(const latin::CuboidShape& shape) {
    const auto order = shape.order();
    const auto cells = shape.cellCount();
    latin::Hypercuboid c(shape, static_cast<int>(order),
                         std::vector<latin::Symbol>(
                             static_cast<std::size_t>(cells), 0));
    for (std::int64_t i = 0; i < order; ++i)
        c.cells[static_cast<std::size_t>(i)] = static_cast<int>(i);

    const std::int64_t free = cells - order;
    std::uint64_t total = 1;
    for (std::int64_t i = 0; i < free; ++i)
        total *= static_cast<std::uint64_t>(order);

    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t v = code;
        for (std::int64_t i = 0; i < free; ++i) {
            c.cells[static_cast<std::size_t>(order + i)] =
                static_cast<int>(v % static_cast<std::uint64_t>(order));
            v /= static_cast<std::uint64_t>(order);
        }
        if (latin::validate(c).valid) ++count;
    }
    return count;
}

/// Unrestricted generate-and-test count (no pinned prefix).
inline std::uint64_t naiveTotalCount(const latin::CuboidShape& shape) {
    const auto order = shape.order();
    const auto cells = shape.cellCount();
    latin::Hypercuboid c(shape, static_cast<int>(order),
                         std::vector<latin::Symbol>(
                             static_cast<std::size_t>(cells), 0));
    std::uint64_t total = 1;
    for (std::int64_t i = 0; i < cells; ++i)
        total *= static_cast<std::uint64_t>(order);

    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t v = code;
        for (std::int64_t i = 0; i < cells; ++i) {
            c.cells[static_cast<std::size_t>(i)] =
                static_cast<int>(v % static_cast<std::uint64_t>(order));
            v /= static_cast<std::uint64_t>(order);
        }
        if (latin::validate(c).valid) ++count;
    }
    return count;
}

/// All non-increasing size tuples (entries in [2, maxSize], 2 <= d <= maxDim)
/// whose cell count is at most maxCells.
inline std::vector<std::vector<int>> smallShapes(int maxDim, int maxSize,
                                                 std::int64_t maxCells) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int bound, std::int64_t prod) -> void {
        if (cur.size() >= 2) out.push_back(cur);
        if (static_cast<int>(cur.size()) == maxDim) return;
        for (int s = bound; s >= 2; --s) {
            if (prod * s > maxCells) continue;
            cur.push_back(s);
            self(self, s, prod * s);
            cur.pop_back();
        }
    };
    rec(rec, maxSize, 1);
    return out;
}

/// Uniformly random full array of the shape's natural order.
inline latin::Hypercuboid randomFullArray(const latin::CuboidShape& shape,
                                          std::mt19937& rng) {
    const auto order = shape.order();
    std::uniform_int_distribution<int> dist(0, static_cast<int>(order) - 1);
    std::vector<latin::Symbol> cells(
        static_cast<std::size_t>(shape.cellCount()));
    for (auto& v : cells) v = dist(rng);
    return latin::Hypercuboid(shape, static_cast<int>(order), std::move(cells));
}

} // namespace testutil
