#include "latin/cuboid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latin {

CuboidShape::CuboidShape(std::vector<int> sizes, int cls)
    : sizes_(std::move(sizes)), cls_(cls) {
    if (sizes_.size() < 2)
        throw parameter_error("shape needs at least 2 axes");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] < 2)
            throw parameter_error("axis sizes must be >= 2");
        if (i > 0 && sizes_[i] > sizes_[i - 1])
            throw parameter_error("axis sizes must be non-increasing");
    }
    if (cls_ < 1 || cls_ > dims())
        throw parameter_error("class must satisfy 1 <= r <= d");
}

std::int64_t CuboidShape::order() const {
    std::int64_t n = 1;
    for (int i = 0; i < cls_; ++i) n *= sizes_[static_cast<std::size_t>(i)];
    return n;
}

std::int64_t CuboidShape::cellCount() const {
    std::int64_t n = 1;
    for (int s : sizes_) n *= s;
    return n;
}

bool CuboidShape::cubic() const {
    return std::all_of(sizes_.begin(), sizes_.end(),
                       [&](int s) { return s == sizes_[0]; });
}

CuboidShape normalizedShape(std::vector<int> sizes, int cls,
                            std::vector<int>* axisOrigin) {
    std::vector<int> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sizes[static_cast<std::size_t>(a)] >
                                                sizes[static_cast<std::size_t>(b)]; });
    std::vector<int> sorted(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
        sorted[i] = sizes[static_cast<std::size_t>(order[i])];
    if (axisOrigin) *axisOrigin = order;
    return CuboidShape(std::move(sorted), cls);
}

Hypercuboid::Hypercuboid(CuboidShape s, int ord, std::vector<Symbol> c)
    : shape(std::move(s)), order(ord), cells(std::move(c)) {
    if (order < 1) throw data_error("order must be positive");
    if (static_cast<std::int64_t>(cells.size()) != shape.cellCount())
        throw data_error("cell count does not match shape");
    for (Symbol v : cells)
        if (v != kEmpty && (v < 0 || v >= order))
            throw data_error("symbol out of range");
}

Hypercuboid Hypercuboid::emptyFrame(CuboidShape s, int ord) {
    std::vector<Symbol> cells(static_cast<std::size_t>(s.cellCount()), kEmpty);
    return Hypercuboid(std::move(s), ord, std::move(cells));
}

std::int64_t Hypercuboid::index(std::span<const int> coords) const {
    assert(static_cast<int>(coords.size()) == shape.dims());
    std::int64_t idx = 0;
    for (int i = shape.dims() - 1; i >= 0; --i)
        idx = idx * shape.size(i) + coords[static_cast<std::size_t>(i)];
    return idx;
}

std::vector<int> Hypercuboid::coordsOf(std::int64_t index) const {
    std::vector<int> x(static_cast<std::size_t>(shape.dims()));
    for (int i = 0; i < shape.dims(); ++i) {
        x[static_cast<std::size_t>(i)] = static_cast<int>(index % shape.size(i));
        index /= shape.size(i);
    }
    return x;
}

bool Hypercuboid::full() const {
    return std::none_of(cells.begin(), cells.end(),
                        [](Symbol v) { return v == kEmpty; });
}

std::int64_t SubarraySelector::cellCount(const CuboidShape& shape) const {
    std::int64_t n = 1;
    for (int a : varying) n *= shape.size(a);
    return n;
}

void SubarraySelector::forEachCell(
    const CuboidShape& shape,
    const std::function<void(std::int64_t)>& fn) const {
    const int d = shape.dims();
    // Strides of the axis-0-fastest layout.
    std::vector<std::int64_t> stride(static_cast<std::size_t>(d));
    std::int64_t s = 1;
    for (int i = 0; i < d; ++i) {
        stride[static_cast<std::size_t>(i)] = s;
        s *= shape.size(i);
    }
    std::int64_t base = 0;
    for (int i = 0; i < d; ++i)
        if (fixed[static_cast<std::size_t>(i)] >= 0)
            base += fixed[static_cast<std::size_t>(i)] * stride[static_cast<std::size_t>(i)];

    std::vector<int> pos(varying.size(), 0);
    for (;;) {
        std::int64_t idx = base;
        for (std::size_t j = 0; j < varying.size(); ++j)
            idx += pos[j] * stride[static_cast<std::size_t>(varying[j])];
        fn(idx);
        std::size_t j = 0;
        for (; j < varying.size(); ++j) {
            if (++pos[j] < shape.size(varying[j])) break;
            pos[j] = 0;
        }
        if (j == varying.size()) break;
    }
}

std::vector<std::int64_t> SubarraySelector::cellIndices(const CuboidShape& shape) const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(cellCount(shape)));
    forEachCell(shape, [&](std::int64_t i) { out.push_back(i); });
    return out;
}

void forEachSubarray(const CuboidShape& shape, int k,
                     const std::function<void(const SubarraySelector&)>& fn) {
    const int d = shape.dims();
    if (k < 1 || k > d)
        throw parameter_error("subarray dimension out of range");

    // Lexicographically first k-combination of {0,...,d-1}.
    std::vector<int> comb(static_cast<std::size_t>(k));
    std::iota(comb.begin(), comb.end(), 0);

    for (;;) {
        SubarraySelector sel;
        sel.varying = comb;
        sel.fixed.assign(static_cast<std::size_t>(d), -1);
        std::vector<int> fixedAxes;
        for (int i = 0; i < d; ++i)
            if (!std::binary_search(comb.begin(), comb.end(), i)) {
                sel.fixed[static_cast<std::size_t>(i)] = 0;
                fixedAxes.push_back(i);
            }
        // Odometer over the pinned axes, first fixed axis most significant.
        for (;;) {
            fn(sel);
            int j = static_cast<int>(fixedAxes.size()) - 1;
            for (; j >= 0; --j) {
                int axis = fixedAxes[static_cast<std::size_t>(j)];
                if (++sel.fixed[static_cast<std::size_t>(axis)] < shape.size(axis)) break;
                sel.fixed[static_cast<std::size_t>(axis)] = 0;
            }
            if (j < 0) break;
        }
        // Next combination.
        int i = k - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == d - k + i) --i;
        if (i < 0) break;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<SubarraySelector> subarrays(const CuboidShape& shape, int k) {
    std::vector<SubarraySelector> out;
    forEachSubarray(shape, k, [&](const SubarraySelector& s) { out.push_back(s); });
    return out;
}

ValidationReport validate(const Hypercuboid& c) {
    const int r = c.shape.cls();
    // Stamp array: seenIn[s] == current subarray stamp iff symbol s already
    // occurred there; seenAt[s] remembers where.
    std::vector<std::int64_t> seenIn(static_cast<std::size_t>(c.order), -1);
    std::vector<std::int64_t> seenAt(static_cast<std::size_t>(c.order), -1);
    std::int64_t stamp = 0;

    std::optional<Violation> violation;
    const bool fullNatural = c.full() && c.order == c.shape.order();

    forEachSubarray(c.shape, r, [&](const SubarraySelector& sel) {
        if (violation) return;
        const std::int64_t sStamp = stamp++;
        std::int64_t filled = 0;
        sel.forEachCell(c.shape, [&](std::int64_t idx) {
            if (violation) return;
            Symbol v = c.cells[static_cast<std::size_t>(idx)];
            if (v == kEmpty) return;
            ++filled;
            if (seenIn[static_cast<std::size_t>(v)] == sStamp) {
                violation = Violation{sel, v, seenAt[static_cast<std::size_t>(v)], idx};
                return;
            }
            seenIn[static_cast<std::size_t>(v)] = sStamp;
            seenAt[static_cast<std::size_t>(v)] = idx;
        });
        if (!violation && fullNatural && sel.cellCount(c.shape) == c.order) {
            // Exactly-once on order-sized subarrays is implied by the
            // at-most-once rule plus pigeonhole; keep it as a self-check.
            assert(filled == c.order);
        }
        (void)filled;
    });

    return ValidationReport{!violation.has_value(), violation};
}

namespace {

std::vector<std::int64_t> firstSubarrayCells(const Hypercuboid& c) {
    SubarraySelector sel;
    const int d = c.shape.dims();
    sel.fixed.assign(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < c.shape.cls(); ++i) {
        sel.varying.push_back(i);
        sel.fixed[static_cast<std::size_t>(i)] = -1;
    }
    return sel.cellIndices(c.shape);
}

} // namespace

bool isSemiReduced(const Hypercuboid& c) {
    if (!c.full())
        throw parameter_error("semi-reduced check needs a full hypercuboid");
    if (c.order != c.shape.order())
        throw parameter_error("semi-reduced check needs the natural order");
    const auto cellsIdx = firstSubarrayCells(c);
    for (std::size_t i = 0; i < cellsIdx.size(); ++i)
        if (c.cells[static_cast<std::size_t>(cellsIdx[i])] != static_cast<Symbol>(i))
            return false;
    return true;
}

std::pair<Hypercuboid, std::vector<int>> semiReduce(const Hypercuboid& c) {
    if (!c.full())
        throw parameter_error("semi-reduce needs a full hypercuboid");
    if (c.order != c.shape.order())
        throw parameter_error("semi-reduce needs the natural order");
    const auto cellsIdx = firstSubarrayCells(c);
    std::vector<int> perm(static_cast<std::size_t>(c.order), -1);
    for (std::size_t i = 0; i < cellsIdx.size(); ++i) {
        Symbol old = c.cells[static_cast<std::size_t>(cellsIdx[i])];
        if (perm[static_cast<std::size_t>(old)] != -1)
            throw data_error("first subarray repeats a symbol; input is invalid");
        perm[static_cast<std::size_t>(old)] = static_cast<int>(i);
    }
    std::vector<Symbol> out(c.cells.size());
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        out[i] = perm[static_cast<std::size_t>(c.cells[i])];
    return {Hypercuboid(c.shape, c.order, std::move(out)), perm};
}

IsotopyTransform IsotopyTransform::identity(const Hypercuboid& c) {
    IsotopyTransform t;
    t.symbolPerm.resize(static_cast<std::size_t>(c.order));
    std::iota(t.symbolPerm.begin(), t.symbolPerm.end(), 0);
    for (int i = 0; i < c.shape.dims(); ++i) {
        std::vector<int> p(static_cast<std::size_t>(c.shape.size(i)));
        std::iota(p.begin(), p.end(), 0);
        t.axisPerms.push_back(std::move(p));
    }
    t.coordPerm.resize(static_cast<std::size_t>(c.shape.dims()));
    std::iota(t.coordPerm.begin(), t.coordPerm.end(), 0);
    return t;
}

Hypercuboid applyTransform(const Hypercuboid& c, const IsotopyTransform& t) {
    const int d = c.shape.dims();
    if (static_cast<int>(t.coordPerm.size()) != d ||
        static_cast<int>(t.axisPerms.size()) != d ||
        static_cast<int>(t.symbolPerm.size()) != c.order)
        throw parameter_error("transform does not fit the hypercuboid");
    for (int i = 0; i < d; ++i) {
        if (c.shape.size(t.coordPerm[static_cast<std::size_t>(i)]) != c.shape.size(i))
            throw parameter_error("coordinate permutation mixes unequal axis sizes");
        if (static_cast<int>(t.axisPerms[static_cast<std::size_t>(i)].size()) !=
            c.shape.size(i))
            throw parameter_error("axis permutation has the wrong length");
    }

    Hypercuboid out = Hypercuboid::emptyFrame(c.shape, c.order);
    const std::int64_t total = c.shape.cellCount();
    std::vector<int> y(static_cast<std::size_t>(d));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const auto x = c.coordsOf(idx);
        for (int i = 0; i < d; ++i)
            y[static_cast<std::size_t>(t.coordPerm[static_cast<std::size_t>(i)])] =
                t.axisPerms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    x[static_cast<std::size_t>(i)])];
        Symbol v = c.cells[static_cast<std::size_t>(idx)];
        out.cells[static_cast<std::size_t>(out.index(y))] =
            v == kEmpty ? kEmpty : t.symbolPerm[static_cast<std::size_t>(v)];
    }
    return out;
}

namespace {

// Applies fn to every permutation of [0, n).
template <typename Fn>
void forEachPerm(int n, Fn&& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// Axis permutations allowed to act on the shape: identity only for isotopy,
// all size-preserving ones for paratopy.
std::vector<std::vector<int>> coordPerms(const CuboidShape& shape, bool paratopy) {
    std::vector<std::vector<int>> out;
    const int d = shape.dims();
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    if (!paratopy) return {p};
    do {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            ok = shape.size(p[static_cast<std::size_t>(i)]) == shape.size(i);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::set<Hypercuboid> orbit(const Hypercuboid& c, bool paratopy, std::size_t cap) {
    std::set<Hypercuboid> out;
    const auto cps = coordPerms(c.shape, paratopy);

    // Enumerate the full group as symbol perm x axis perms x coord perm.
    IsotopyTransform t = IsotopyTransform::identity(c);
    std::function<void(int)> axisRec = [&](int axis) {
        if (axis == c.shape.dims()) {
            forEachPerm(c.order, [&](const std::vector<int>& sp) {
                t.symbolPerm = sp;
                for (const auto& cp : cps) {
                    t.coordPerm = cp;
                    out.insert(applyTransform(c, t));
                    if (out.size() > cap)
                        throw resource_error("orbit exceeds the supplied cap");
                }
            });
            return;
        }
        forEachPerm(c.shape.size(axis), [&](const std::vector<int>& ap) {
            t.axisPerms[static_cast<std::size_t>(axis)] = ap;
            axisRec(axis + 1);
        });
    };
    axisRec(0);
    return out;
}

Hypercuboid canonicalForm(const Hypercuboid& c, bool paratopy, std::size_t cap) {
    const auto orb = orbit(c, paratopy, cap);
    return *orb.begin();
}

} // namespace latin
