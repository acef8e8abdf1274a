#include "latin/bounds.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace latin {

ExistenceVerdict existenceBound(const CuboidShape& shape) {
    const int d = shape.dims();
    const int r = shape.cls();
    std::int64_t sum = 0;
    for (int s : shape.sizes()) sum += s;
    ExistenceVerdict v;
    v.lhs = sum - shape.order();
    v.rhs = d - 1;
    // Class 1 always admits the modular hypercuboid, so the condition only
    // bites for r >= 2.
    v.satisfied = r == 1 || v.lhs <= v.rhs;
    if (shape.cubic()) {
        const std::int64_t n = shape.size(0);
        std::int64_t pow = 1;
        for (int i = 0; i < r - 1; ++i) pow *= n - 1;
        v.ethierMax = pow + r;
    }
    return v;
}

std::vector<std::vector<int>> table1Check() {
    std::vector<std::vector<int>> out;
    for (int d = 3; d <= 6; ++d) {
        std::vector<std::vector<int>> found;
        std::vector<int> type(static_cast<std::size_t>(d), 2);
        // Odometer over non-increasing tuples with entries in [2, 5].
        std::function<void(int, int)> rec = [&](int pos, int maxVal) {
            if (pos == d) {
                std::int64_t sum = std::accumulate(type.begin(), type.end(), std::int64_t{0});
                std::int64_t prod = static_cast<std::int64_t>(type[0]) * type[1];
                if (sum - prod > d - 1) found.push_back(type);
                return;
            }
            for (int v = 2; v <= maxVal; ++v) {
                type[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, 5);
        std::sort(found.begin(), found.end());
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

std::int64_t singletonBound(const std::vector<int>& alphabets, int delta) {
    const int d = static_cast<int>(alphabets.size());
    if (delta < 1 || delta > d)
        throw parameter_error("minimum distance out of range");
    std::vector<int> sorted = alphabets;
    std::sort(sorted.begin(), sorted.end());
    std::int64_t prod = 1;
    for (int i = 0; i < d - delta + 1; ++i) prod *= sorted[static_cast<std::size_t>(i)];
    return prod;
}

std::int64_t sphereSize(const std::vector<int>& alphabets, int t) {
    const int d = static_cast<int>(alphabets.size());
    if (t < 0 || t > d)
        throw parameter_error("radius out of range");
    // e[k] = elementary symmetric polynomial of degree k in the (n_i - 1).
    std::vector<std::int64_t> e(static_cast<std::size_t>(t) + 1, 0);
    e[0] = 1;
    for (int n : alphabets)
        for (int k = std::min(t, d); k >= 1; --k)
            e[static_cast<std::size_t>(k)] +=
                e[static_cast<std::size_t>(k - 1)] * (n - 1);
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::int64_t hammingBound(const std::vector<int>& alphabets, int t) {
    if (t < 1)
        throw parameter_error("hamming bound needs t >= 1");
    std::int64_t space = 1;
    for (int n : alphabets) space *= n;
    return space / sphereSize(alphabets, t);
}

namespace {

// rho*d = d - sum 1/n_i as num/den with den = lcm(n_i).
std::pair<std::int64_t, std::int64_t> rhoTimesD(const std::vector<int>& alphabets) {
    std::int64_t lcm = 1;
    for (int n : alphabets) lcm = std::lcm(lcm, static_cast<std::int64_t>(n));
    std::int64_t num = static_cast<std::int64_t>(alphabets.size()) * lcm;
    for (int n : alphabets) num -= lcm / n;
    return {num, lcm};
}

} // namespace

std::optional<std::int64_t> plotkinBound(const std::vector<int>& alphabets, int delta) {
    const auto [num, den] = rhoTimesD(alphabets);
    // Hypothesis rho*d < delta, strictly; the tie would divide by zero.
    if (num >= static_cast<std::int64_t>(delta) * den) return std::nullopt;
    return static_cast<std::int64_t>(delta) * den /
           (static_cast<std::int64_t>(delta) * den - num);
}

BoundReport boundReport(const std::vector<int>& alphabets, int delta) {
    BoundReport rep;
    rep.alphabets = alphabets;
    rep.delta = delta;
    rep.singleton = singletonBound(alphabets, delta);
    rep.hamming = delta % 2 == 0 ? std::optional(hammingBound(alphabets, delta / 2))
                                 : std::nullopt;
    rep.plotkin = plotkinBound(alphabets, delta);
    const auto [num, den] = rhoTimesD(alphabets);
    const std::int64_t d = static_cast<std::int64_t>(alphabets.size());
    const std::int64_t g = std::gcd(num, d * den);
    rep.plotkinRhoNum = num / g;
    rep.plotkinRhoDen = d * den / g;
    std::int64_t space = 1;
    for (int n : alphabets) space *= n;
    rep.trivialFullSpace = space;
    rep.trivialRepetition = *std::min_element(alphabets.begin(), alphabets.end());
    return rep;
}

} // namespace latin
