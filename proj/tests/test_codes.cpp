#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "latin/bounds.hpp"
#include "latin/codes.hpp"
#include "latin/constructions.hpp"
#include "latin/enumeration.hpp"
#include "helpers.hpp"

using namespace latin;
using namespace testutil;

TEST_CASE("hamming distance is a metric") {
    CHECK(hammingDistance(std::vector<int>{0, 0, 0},
                          std::vector<int>{0, 0, 0}) == 0);
    CHECK(hammingDistance(std::vector<int>{0, 0, 0},
                          std::vector<int>{1, 2, 0}) == 2);
    CHECK(hammingDistance(std::vector<int>{0, 0},
                          std::vector<int>{1, 1}) == 2);
    CHECK_THROWS_AS(hammingDistance(std::vector<int>{0},
                                    std::vector<int>{0, 1}),
                    parameter_error);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(0, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> u(5), v(5), w(5);
        for (int i = 0; i < 5; ++i) { u[i] = dist(rng); v[i] = dist(rng); w[i] = dist(rng); }
        const int duv = hammingDistance(u, v);
        CHECK(duv == hammingDistance(v, u));
        CHECK((duv == 0) == (u == v));
        CHECK(duv <= hammingDistance(u, w) + hammingDistance(w, v));
    }
}

TEST_CASE("well-formedness gate") {
    CHECK_NOTHROW(checkWellFormed(exampleCode()));
    CHECK_THROWS_AS(checkWellFormed(MixedCode{{2, 2}, {{0, 0}, {0, 0}}}),
                    data_error);
    CHECK_THROWS_AS(checkWellFormed(MixedCode{{2, 2}, {{0, 2}}}), data_error);
}

TEST_CASE("metrics of the six-word code over HS(3,3,2)") {
    const auto m = codeMetrics(exampleCode());
    CHECK(m.size == 6);
    REQUIRE(m.minDistance.has_value());
    CHECK(*m.minDistance == 2);
    CHECK(m.distanceSet == std::set<int>{2, 3});
}

TEST_CASE("metrics of trivial codes") {
    const auto rep = codeMetrics(MixedCode{{2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}});
    CHECK(rep.size == 2);
    CHECK(*rep.minDistance == 3);   // 1-error-correcting: delta > 2

    const auto single = codeMetrics(MixedCode{{2, 2}, {{0, 0}}});
    CHECK_FALSE(single.minDistance.has_value());
}

TEST_CASE("additive codes report their minimum weight") {
    // The linear code from the GF(2) matrix rows (1,0),(0,1),(1,1), taken as
    // (position, image) words of length d + r = 5.
    const MatrixSpec spec{2, {{1, 0}, {0, 1}, {1, 1}}};
    const auto cube = matrixCube(spec);
    const auto code = cuboidToCode(cube, true);
    // Reorder to (positions, symbols) so componentwise closure is additive.
    MixedCode linear{{2, 2, 2, 2, 2}, {}};
    for (const auto& w : code.words)
        linear.words.push_back({w[2], w[3], w[4], w[0], w[1]});
    const auto m = codeMetrics(linear);
    CHECK(m.size == 8);
    CHECK(m.isAdditive);
    REQUIRE(m.minWeight.has_value());
    CHECK(*m.minWeight == *m.minDistance);
}

TEST_CASE("MDS predicate") {
    CHECK(isMds(exampleCode()));
    CHECK(isMds(MixedCode{{2, 2, 2}, {{0, 0, 0}, {1, 1, 1}}}));
    CHECK_FALSE(isMds(MixedCode{{2, 2}, {{0, 0}, {0, 1}, {1, 0}}}));
}

TEST_CASE("exact optimum on tiny spaces") {
    const auto [m22, c22] = maxCodeBruteforce({2, 2}, 2);
    CHECK(m22 == 2);
    CHECK(codeMetrics(c22).minDistance == 2);

    const auto [m222, c222] = maxCodeBruteforce({2, 2, 2}, 2);
    CHECK(m222 == 4);
    CHECK(*codeMetrics(c222).minDistance >= 2);

    const auto [m332, c332] = maxCodeBruteforce({3, 3, 2}, 2);
    CHECK(m332 == 6);
    CHECK(isMds(c332));

    CHECK_THROWS_AS(maxCodeBruteforce({3, 3, 2}, 17), parameter_error);
    CHECK_THROWS_AS(maxCodeBruteforce({5, 4}, 2), resource_error);
}

TEST_CASE("cuboid to code: compact and expanded forms") {
    const auto c = exampleCuboid();

    const auto compact = cuboidToCode(c, false);
    CHECK(compact.alphabets == std::vector<int>{6, 3, 2, 2});
    CHECK(compact.words.size() == 12);
    CHECK(*codeMetrics(compact).minDistance == 2);
    CHECK(isMds(compact));

    const auto expanded = cuboidToCode(c, true);
    CHECK(expanded.alphabets == std::vector<int>{3, 2, 3, 2, 2});
    CHECK(expanded.words.size() == 12);
    // Same-symbol words sit at distance exactly r+1 ...
    for (std::size_t i = 0; i < expanded.words.size(); ++i)
        for (std::size_t j = i + 1; j < expanded.words.size(); ++j) {
            const auto& u = expanded.words[i];
            const auto& v = expanded.words[j];
            if (std::equal(u.begin(), u.begin() + 2, v.begin()))
                CHECK(hammingDistance(u, v) == 3);
        }
    // ... but adjacent cells whose symbol tuples differ in one component
    // bring the overall minimum distance down to 2 (no symbol encoding can
    // avoid this on a mixed shape: a 3-cell line cannot carry three tuples
    // that pairwise differ in a binary component).
    CHECK(*codeMetrics(expanded).minDistance == 2);

    CHECK_THROWS_AS(cuboidToCode(examplePartial(), false), parameter_error);
}

TEST_CASE("a Latin square becomes the classical triple MDS code") {
    const auto square = cyclicSquare(3);
    const auto code = cuboidToCode(square, false);
    CHECK(code.alphabets == std::vector<int>{3, 3, 3});
    CHECK(code.words.size() == 9);
    CHECK(*codeMetrics(code).minDistance == 2);
    CHECK(isMds(code));

    // For r = 1 the expanded form coincides and delta = r+1 = 2 holds.
    const auto expanded = cuboidToCode(square, true);
    CHECK(*codeMetrics(expanded).minDistance == 2);
    CHECK(isMds(expanded));
}

TEST_CASE("the cells of each symbol form a maximal clique") {
    // H(shape, {r+1, ..., d}): the positions holding one fixed symbol are a
    // maximal clique of size (prod n_i) / order.
    const auto c = exampleCuboid();
    const int d = c.shape.dims();
    const int r = c.shape.cls();
    for (Symbol s = 0; s < c.order; ++s) {
        MixedCode cellCode{c.shape.sizes(), {}};
        for (std::int64_t i = 0; i < c.shape.cellCount(); ++i)
            if (c.cells[static_cast<std::size_t>(i)] == s)
                cellCode.words.push_back(c.coordsOf(i));
        CHECK(static_cast<std::int64_t>(cellCode.words.size()) ==
              c.shape.cellCount() / c.order);
        const auto rep = codeIsClique(cellCode, r + 1);
        CHECK(rep.clique);
        CHECK(rep.maximal);
        (void)d;
    }
}

TEST_CASE("code to cuboid inverts the expanded conversion") {
    const auto c = exampleCuboid();
    CHECK(codeToCuboid(cuboidToCode(c, true), 2) == c);

    // The six-word code with r = 1 is the stated 2x3 Latin rectangle.
    const auto rect = codeToCuboid(exampleCode(), 1);
    CHECK(rect.shape.sizes() == std::vector<int>{3, 2});
    CHECK(rect.shape.cls() == 1);
    CHECK(rect.cells == std::vector<Symbol>{0, 2, 1, 1, 0, 2});
    CHECK(validate(rect).valid);

    // A code violating delta = r+1 is rejected.
    CHECK_THROWS_AS(codeToCuboid(MixedCode{{2, 2, 2},
                                           {{0, 0, 0}, {0, 0, 1},
                                            {1, 1, 0}, {1, 1, 1}}},
                                 1),
                    data_error);
}

TEST_CASE("clique report for the six-word code") {
    const auto rep = codeIsClique(exampleCode(), 2);
    CHECK(rep.clique);
    CHECK(rep.maximal);

    const auto lone = codeIsClique(MixedCode{{3, 3, 2}, {{0, 0, 0}}}, 2);
    CHECK(lone.clique);
    CHECK_FALSE(lone.maximal);

    MixedCode full{{2, 2}, {}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) full.words.push_back({a, b});
    CHECK_FALSE(codeIsClique(full, 2).clique);
}

TEST_CASE("max clique never beats the bounds") {
    for (const auto& sizes : smallShapes(4, 4, 16)) {
        const int d = static_cast<int>(sizes.size());
        for (int delta = 1; delta <= d; ++delta) {
            const auto [m, witness] = maxCodeBruteforce(sizes, delta);
            CAPTURE(sizes);
            CAPTURE(delta);
            CHECK(m <= singletonBound(sizes, delta));
            // Sphere packing applies to t-error-correcting codes: delta > 2t.
            for (int t = 1; 2 * t < delta; ++t)
                CHECK(m <= hammingBound(sizes, t));
            if (const auto p = plotkinBound(sizes, delta)) CHECK(m <= *p);
            if (m == singletonBound(sizes, delta) && m >= 2)
                CHECK(isMds(witness));
        }
    }
}

TEST_CASE("endomorphism of the worked example") {
    const auto c = exampleCuboid();
    const auto e = buildEndomorphism(c);
    CHECK(e.rank == 6);
    CHECK(e.distanceSet == std::vector<int>{1, 2});
    CHECK(verifyEndomorphism(e));

    const auto classes = kernelClassSizes(e);
    CHECK(classes.size() == 6);
    for (auto s : classes) CHECK(s == 2);

    // The graph H(3,2,2,{1,2}) has 54 edges; count them directly.
    int edges = 0;
    for (std::int64_t u = 0; u < 12; ++u)
        for (std::int64_t v = u + 1; v < 12; ++v) {
            const int dist = hammingDistance(c.coordsOf(u), c.coordsOf(v));
            if (dist >= 1 && dist <= 2) ++edges;
        }
    CHECK(edges == 54);
}

TEST_CASE("a Latin square colours the rook's graph") {
    const auto e = buildEndomorphism(cyclicSquare(4));
    CHECK(e.rank == 4);
    CHECK(verifyEndomorphism(e));
    for (auto s : kernelClassSizes(e)) CHECK(s == 4);
}

TEST_CASE("degenerate maps are rejected by the verifier") {
    auto e = buildEndomorphism(cyclicSquare(2));
    REQUIRE(verifyEndomorphism(e));
    // Collapse everything onto vertex 0: an edge maps to a loopless vertex.
    std::fill(e.map.begin(), e.map.end(), 0);
    e.rank = 1;
    CHECK_FALSE(verifyEndomorphism(e));
}

TEST_CASE("every enumerated (3,2,2) class-2 cuboid satisfies the equivalences") {
    SearchOptions opts;
    opts.countOnly = false;
    int seen = 0;
    enumerateSemiReduced(CuboidShape({3, 2, 2}, 2), opts,
                         [&](const Hypercuboid& c) {
                             ++seen;
                             CHECK(isMds(cuboidToCode(c, false)));
                             CHECK(codeToCuboid(cuboidToCode(c, true), 2) == c);
                             const auto e = buildEndomorphism(c);
                             CHECK(e.rank == c.order);
                             CHECK(verifyEndomorphism(e));
                         });
    CHECK(seen == 4);
}
