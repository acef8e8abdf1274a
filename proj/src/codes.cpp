#include "latin/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "latin/bounds.hpp"
#include "latin/constructions.hpp"

namespace latin {

void checkWellFormed(const MixedCode& c) {
    const std::size_t d = c.alphabets.size();
    if (d < 1) throw data_error("code needs at least one coordinate");
    for (int n : c.alphabets)
        if (n < 2) throw data_error("alphabet sizes must be >= 2");
    std::set<std::vector<int>> seen;
    for (const auto& w : c.words) {
        if (w.size() != d) throw data_error("word length mismatch");
        for (std::size_t i = 0; i < d; ++i)
            if (w[i] < 0 || w[i] >= c.alphabets[i])
                throw data_error("coordinate out of its alphabet");
        if (!seen.insert(w).second) throw data_error("duplicate codeword");
    }
}

int hammingDistance(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size())
        throw parameter_error("words of unequal length");
    int dist = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != v[i]) ++dist;
    return dist;
}

CodeMetrics codeMetrics(const MixedCode& c) {
    checkWellFormed(c);
    CodeMetrics m;
    m.size = c.words.size();
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            m.distanceSet.insert(hammingDistance(c.words[i], c.words[j]));
    m.minDistance = m.distanceSet.empty()
                        ? std::nullopt
                        : std::optional(*m.distanceSet.begin());

    std::set<std::vector<int>> wordSet(c.words.begin(), c.words.end());
    m.isAdditive = !c.words.empty();
    for (const auto& v : c.words) {
        for (const auto& w : c.words) {
            std::vector<int> sum(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                sum[i] = (v[i] + w[i]) % c.alphabets[i];
            if (!wordSet.count(sum)) {
                m.isAdditive = false;
                break;
            }
        }
        if (!m.isAdditive) break;
    }
    if (m.isAdditive) {
        std::optional<int> minW;
        for (const auto& w : c.words) {
            int weight = 0;
            for (int x : w)
                if (x != 0) ++weight;
            if (weight > 0 && (!minW || weight < *minW)) minW = weight;
        }
        m.minWeight = minW;
    }
    return m;
}

bool isMds(const MixedCode& c) {
    const auto m = codeMetrics(c);
    if (!m.minDistance) return false;
    return static_cast<std::int64_t>(m.size) ==
           singletonBound(c.alphabets, *m.minDistance);
}

namespace {

std::vector<std::vector<int>> allWords(const std::vector<int>& alphabets) {
    std::int64_t total = 1;
    for (int n : alphabets) total *= n;
    std::vector<std::vector<int>> words;
    words.reserve(static_cast<std::size_t>(total));
    for (std::int64_t s = 0; s < total; ++s)
        words.push_back(tupleUnrank(s, alphabets));
    return words;
}

// Branch-and-bound maximum clique on <= 64 vertices given adjacency masks.
struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::uint64_t best = 0;
    int bestSize = 0;

    void expand(std::uint64_t cur, int curSize, std::uint64_t cand) {
        if (curSize + std::popcount(cand) <= bestSize) return;
        if (!cand) {
            if (curSize > bestSize) {
                bestSize = curSize;
                best = cur;
            }
            return;
        }
        while (cand) {
            if (curSize + std::popcount(cand) <= bestSize) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            expand(cur | (std::uint64_t{1} << v), curSize + 1,
                   cand & adj[static_cast<std::size_t>(v)]);
        }
    }
};

} // namespace

std::pair<std::int64_t, MixedCode> maxCodeBruteforce(const std::vector<int>& alphabets,
                                                     int delta) {
    if (delta < 1 || delta > static_cast<int>(alphabets.size()))
        throw parameter_error("minimum distance out of range");
    std::int64_t total = 1;
    for (int n : alphabets) total *= n;
    if (total > 18)
        throw resource_error("brute-force oracle is limited to 18-word spaces");

    const auto words = allWords(alphabets);
    const int m = static_cast<int>(words.size());
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && hammingDistance(words[static_cast<std::size_t>(i)],
                                          words[static_cast<std::size_t>(j)]) >= delta)
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;

    CliqueSearch search{adj};
    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    search.expand(0, 0, all);

    MixedCode witness;
    witness.alphabets = alphabets;
    for (int i = 0; i < m; ++i)
        if (search.best & (std::uint64_t{1} << i))
            witness.words.push_back(words[static_cast<std::size_t>(i)]);
    return {search.bestSize, witness};
}

MixedCode cuboidToCode(const Hypercuboid& c, bool expandSymbols) {
    if (!c.full())
        throw parameter_error("code conversion needs a full hypercuboid");
    if (!validate(c).valid)
        throw data_error("hypercuboid is not valid");
    const int d = c.shape.dims();
    const int r = c.shape.cls();
    if (expandSymbols && c.order != c.shape.order())
        throw parameter_error("symbol expansion needs the natural order");

    MixedCode code;
    if (expandSymbols) {
        for (int i = 0; i < r; ++i) code.alphabets.push_back(c.shape.size(i));
    } else {
        code.alphabets.push_back(c.order);
    }
    for (int i = 0; i < d; ++i) code.alphabets.push_back(c.shape.size(i));

    const std::vector<int> symAlpha(c.shape.sizes().begin(),
                                    c.shape.sizes().begin() + r);
    for (std::int64_t idx = 0; idx < c.shape.cellCount(); ++idx) {
        const auto x = c.coordsOf(idx);
        std::vector<int> w;
        if (expandSymbols) {
            auto t = tupleUnrank(c.cells[static_cast<std::size_t>(idx)], symAlpha);
            w = std::move(t);
        } else {
            w.push_back(c.cells[static_cast<std::size_t>(idx)]);
        }
        w.insert(w.end(), x.begin(), x.end());
        code.words.push_back(std::move(w));
    }
    return code;
}

Hypercuboid codeToCuboid(const MixedCode& c, int r) {
    checkWellFormed(c);
    const int len = static_cast<int>(c.alphabets.size());
    if (r < 1 || r >= len)
        throw parameter_error("class out of range for the code length");
    const int d = len - r;
    if (r > d)
        throw data_error("alphabet layout too short for the class");
    for (int i = 0; i < r; ++i)
        if (c.alphabets[static_cast<std::size_t>(i)] !=
            c.alphabets[static_cast<std::size_t>(r + i)])
            throw data_error("symbol alphabets do not repeat the leading position alphabets");

    const std::vector<int> positions(c.alphabets.begin() + r, c.alphabets.end());
    CuboidShape shape = [&] {
        try {
            return CuboidShape(positions, r);
        } catch (const parameter_error& e) {
            throw data_error(std::string("position block is not a shape: ") + e.what());
        }
    }();

    std::int64_t expectSize = shape.cellCount();
    if (static_cast<std::int64_t>(c.words.size()) != expectSize)
        throw data_error("code size does not cover the position array");

    // The conversion enforces the proof obligations directly: every position
    // occupied exactly once (checked while filling) and same-symbol words at
    // position distance >= r+1 (the validity check of the induced array).
    // Requiring delta(C) = r+1 outright would reject the codes produced by
    // the expanded conversion itself: for r >= 2 two adjacent cells with
    // symbols whose r-tuples differ in one component yield words at distance
    // 2, so the overall minimum distance of an expanded code is 2 whenever
    // such a pair exists (and for genuinely mixed shapes no symbol encoding
    // can avoid it).
    const std::vector<int> symAlpha(c.alphabets.begin(), c.alphabets.begin() + r);
    Hypercuboid out = Hypercuboid::emptyFrame(shape, static_cast<int>(shape.order()));
    for (const auto& w : c.words) {
        const std::vector<int> pos(w.begin() + r, w.end());
        const std::int64_t idx = out.index(pos);
        if (out.cells[static_cast<std::size_t>(idx)] != kEmpty)
            throw data_error("two codewords share the same position");
        out.cells[static_cast<std::size_t>(idx)] = static_cast<Symbol>(
            tupleRank(std::span<const int>(w.data(), static_cast<std::size_t>(r)),
                      symAlpha));
    }
    if (!validate(out).valid)
        throw data_error("induced array is not a valid hypercuboid");
    return out;
}

CliqueReport codeIsClique(const MixedCode& c, int lowDist) {
    checkWellFormed(c);
    CliqueReport rep{true, true};
    for (std::size_t i = 0; i < c.words.size() && rep.clique; ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            if (hammingDistance(c.words[i], c.words[j]) < lowDist) {
                rep.clique = false;
                break;
            }
    if (!rep.clique) return {false, false};

    std::set<std::vector<int>> wordSet(c.words.begin(), c.words.end());
    for (const auto& w : allWords(c.alphabets)) {
        if (wordSet.count(w)) continue;
        bool extends = true;
        for (const auto& v : c.words)
            if (hammingDistance(w, v) < lowDist) {
                extends = false;
                break;
            }
        if (extends) {
            rep.maximal = false;
            break;
        }
    }
    return rep;
}

Endomorphism buildEndomorphism(const Hypercuboid& c) {
    if (!c.full() || c.order != c.shape.order())
        throw data_error("endomorphism needs a full hypercuboid of natural order");
    if (!validate(c).valid)
        throw data_error("hypercuboid is not valid");
    const int r = c.shape.cls();

    Endomorphism e{c.shape, {}, {}, 0};
    for (int s = 1; s <= r; ++s) e.distanceSet.push_back(s);

    // First-subarray cells occupy indices [0, order) in this layout.
    std::vector<std::int64_t> symToCell(static_cast<std::size_t>(c.order), -1);
    for (int i = 0; i < c.order; ++i)
        symToCell[static_cast<std::size_t>(c.cells[static_cast<std::size_t>(i)])] = i;

    e.map.resize(static_cast<std::size_t>(c.shape.cellCount()));
    for (std::int64_t v = 0; v < c.shape.cellCount(); ++v)
        e.map[static_cast<std::size_t>(v)] =
            symToCell[static_cast<std::size_t>(c.cells[static_cast<std::size_t>(v)])];
    e.rank = static_cast<std::int64_t>(
        std::set<std::int64_t>(e.map.begin(), e.map.end()).size());
    return e;
}

bool verifyEndomorphism(const Endomorphism& e) {
    const std::int64_t nv = e.shape.cellCount();
    if (nv > 10000)
        throw resource_error("pairwise verification is limited to 10^4 vertices");
    if (static_cast<std::int64_t>(e.map.size()) != nv)
        throw parameter_error("map is not total on the vertex set");

    Hypercuboid frame = Hypercuboid::emptyFrame(e.shape, 2);
    std::vector<std::vector<int>> coords;
    coords.reserve(static_cast<std::size_t>(nv));
    for (std::int64_t v = 0; v < nv; ++v) coords.push_back(frame.coordsOf(v));

    const auto inS = [&](int dist) {
        return std::find(e.distanceSet.begin(), e.distanceSet.end(), dist) !=
               e.distanceSet.end();
    };
    for (std::int64_t u = 0; u < nv; ++u)
        for (std::int64_t v = u + 1; v < nv; ++v) {
            if (!inS(hammingDistance(coords[static_cast<std::size_t>(u)],
                                     coords[static_cast<std::size_t>(v)])))
                continue;
            const std::int64_t fu = e.map[static_cast<std::size_t>(u)];
            const std::int64_t fv = e.map[static_cast<std::size_t>(v)];
            if (fu == fv) return false;
            if (!inS(hammingDistance(coords[static_cast<std::size_t>(fu)],
                                     coords[static_cast<std::size_t>(fv)])))
                return false;
        }
    return true;
}

std::vector<std::int64_t> kernelClassSizes(const Endomorphism& e) {
    std::map<std::int64_t, std::int64_t> byImage;
    for (std::int64_t img : e.map) ++byImage[img];
    std::vector<std::int64_t> sizes;
    sizes.reserve(byImage.size());
    for (const auto& [img, count] : byImage) sizes.push_back(count);
    return sizes;
}

} // namespace latin
