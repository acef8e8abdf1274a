#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "latin/errors.hpp"

namespace latin {

using Symbol = int;

/// Sentinel for an unfilled cell of a partial hypercuboid.
inline constexpr Symbol kEmpty = -1;

/// Parameter record: type (n_1 >= n_2 >= ... >= n_d >= 2) plus class r.
///
/// Axes and symbols are 0-based throughout. r = d is admitted so that
/// fully-distinct seed arrays (every cell its own symbol) can be passed to
/// the extension construction; the enumeration and bounds entry points
/// reject it where the theory requires r <= d-1.
class CuboidShape {
public:
    CuboidShape(std::vector<int> sizes, int cls);

    int dims() const { return static_cast<int>(sizes_.size()); }
    int size(int axis) const { return sizes_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& sizes() const { return sizes_; }
    int cls() const { return cls_; }

    /// Product of the first cls() sizes: the natural symbol count.
    std::int64_t order() const;
    std::int64_t cellCount() const;
    bool cubic() const;

    friend bool operator==(const CuboidShape&, const CuboidShape&) = default;

private:
    std::vector<int> sizes_;
    int cls_;
};

/// Sorts sizes non-increasing and reports the axis permutation applied
/// (newAxis[i] is the original position of axis i).
CuboidShape normalizedShape(std::vector<int> sizes, int cls,
                            std::vector<int>* axisOrigin = nullptr);

/// A (possibly partial) filled array. Cell layout: axis 0 varies fastest,
/// i.e. index(x) = x_0 + n_0*(x_1 + n_1*(x_2 + ...)). Layer displays in the
/// usual matrix form (rows = axis 1, columns = axis 0) read off in index
/// order row by row.
struct Hypercuboid {
    CuboidShape shape;
    int order;                    // number of distinct symbols available
    std::vector<Symbol> cells;    // length shape.cellCount()

    Hypercuboid(CuboidShape s, int ord, std::vector<Symbol> c);

    /// Empty (all-kEmpty) frame of the shape's natural order.
    static Hypercuboid emptyFrame(CuboidShape s, int ord);

    std::int64_t index(std::span<const int> coords) const;
    std::vector<int> coordsOf(std::int64_t index) const;
    bool full() const;

    friend bool operator==(const Hypercuboid&, const Hypercuboid&) = default;
    friend auto operator<=>(const Hypercuboid& a, const Hypercuboid& b) {
        return a.cells <=> b.cells;
    }
};

/// One k-subarray: the axes left varying plus the pinned values of the rest.
struct SubarraySelector {
    std::vector<int> varying;   // sorted axis list, |varying| = k
    std::vector<int> fixed;     // per axis: pinned value, or -1 when varying

    std::int64_t cellCount(const CuboidShape& shape) const;

    /// Visits the cell indices in increasing index order (lowest varying
    /// axis fastest).
    void forEachCell(const CuboidShape& shape,
                     const std::function<void(std::int64_t)>& fn) const;

    std::vector<std::int64_t> cellIndices(const CuboidShape& shape) const;
};

/// Streams every k-subarray exactly once, deterministically: varying sets in
/// lexicographic combination order, fixings odometer-style (first fixed axis
/// most significant). Throws parameter_error for k out of [1, d].
void forEachSubarray(const CuboidShape& shape, int k,
                     const std::function<void(const SubarraySelector&)>& fn);

std::vector<SubarraySelector> subarrays(const CuboidShape& shape, int k);

struct Violation {
    SubarraySelector selector;
    Symbol symbol;
    std::int64_t cellA;
    std::int64_t cellB;
};

struct ValidationReport {
    bool valid;
    std::optional<Violation> firstViolation;
};

/// Class-r validity: no symbol twice within any r-subarray (non-empty cells);
/// for full arrays of natural order the exactly-once rule on order-sized
/// subarrays follows by pigeonhole and is asserted in debug builds.
/// Structural malformation (bad lengths, out-of-range symbols) raises
/// data_error, which is distinct from an invalid-but-well-formed cuboid.
ValidationReport validate(const Hypercuboid& c);

/// True iff the first r-subarray (axes 0..r-1 varying, the rest pinned at 0),
/// read in cell-index order, holds 0,1,...,n-1. Requires a full input.
bool isSemiReduced(const Hypercuboid& c);

/// Relabels symbols so the cuboid becomes semi-reduced; returns the new
/// cuboid and the permutation applied (perm[old] = new).
std::pair<Hypercuboid, std::vector<int>> semiReduce(const Hypercuboid& c);

/// Element of the isotopy/paratopy group acting on hypercuboids.
struct IsotopyTransform {
    std::vector<int> symbolPerm;            // permutation of [0, order)
    std::vector<std::vector<int>> axisPerms; // one permutation of [0, n_i) per axis
    std::vector<int> coordPerm;             // axis i of the input becomes axis coordPerm[i]

    static IsotopyTransform identity(const Hypercuboid& c);
};

/// coordPerm may only exchange axes of equal size (parameter_error otherwise).
Hypercuboid applyTransform(const Hypercuboid& c, const IsotopyTransform& t);

/// Full orbit under the isotopy group (paratopy group when flagged), by
/// applying every group element. Intended for tiny shapes; exceeding the cap
/// raises resource_error.
std::set<Hypercuboid> orbit(const Hypercuboid& c, bool paratopy,
                            std::size_t cap = 1u << 20);

/// Lexicographically least cell sequence in the orbit.
Hypercuboid canonicalForm(const Hypercuboid& c, bool paratopy,
                          std::size_t cap = 1u << 20);

} // namespace latin
