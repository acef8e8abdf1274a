#include "latin/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latin {

std::int64_t tupleRank(std::span<const int> tuple, std::span<const int> alphabets) {
    std::int64_t rank = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j)
        rank = rank * alphabets[j] + tuple[j];
    return rank;
}

std::vector<int> tupleUnrank(std::int64_t rank, std::span<const int> alphabets) {
    std::vector<int> t(alphabets.size());
    for (std::size_t j = alphabets.size(); j-- > 0;) {
        t[j] = static_cast<int>(rank % alphabets[j]);
        rank /= alphabets[j];
    }
    return t;
}

Hypercuboid modularClass1(const CuboidShape& shape) {
    if (shape.cls() != 1)
        throw parameter_error("modular construction is class 1 only");
    const int n = shape.size(0);
    Hypercuboid out = Hypercuboid::emptyFrame(shape, n);
    for (std::int64_t idx = 0; idx < shape.cellCount(); ++idx) {
        const auto x = out.coordsOf(idx);
        int sum = 0;
        for (int v : x) sum += v;
        out.cells[static_cast<std::size_t>(idx)] = sum % n;
    }
    return out;
}

Hypercuboid cyclicSquare(int n) {
    return modularClass1(CuboidShape({n, n}, 1));
}

namespace {

// Row i of a Latin square as a permutation: phi_i(v) = square(v, i)
// (column v, row i in the display convention).
std::vector<std::vector<int>> squareRows(const Hypercuboid& square) {
    const int n = square.shape.size(0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < n; ++v)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] =
                square.cells[static_cast<std::size_t>(v + n * i)];
    return rows;
}

void requireLatinSquare(const Hypercuboid& square) {
    if (square.shape.dims() != 2 || square.shape.size(0) != square.shape.size(1) ||
        square.order != square.shape.size(0) || !square.full())
        throw data_error("seed must be an n x n Latin square");
    if (!validate(square).valid)
        throw data_error("seed square is not Latin");
}

} // namespace

Hypercuboid seedCube(int n, int r, const Hypercuboid& square) {
    if (n < 2 || r < 1)
        throw parameter_error("seed cube needs n >= 2 and r >= 1");
    requireLatinSquare(square);
    if (square.shape.size(0) != n)
        throw parameter_error("square order does not match n");

    const auto phi = squareRows(square);
    std::vector<int> sizes(static_cast<std::size_t>(r) + 1, n);
    CuboidShape shape(sizes, r);
    std::int64_t order = 1;
    for (int i = 0; i < r; ++i) order *= n;
    const std::vector<int> tupleAlpha(static_cast<std::size_t>(r), n);

    Hypercuboid out = Hypercuboid::emptyFrame(shape, static_cast<int>(order));
    std::vector<int> t(static_cast<std::size_t>(r));
    for (std::int64_t idx = 0; idx < shape.cellCount(); ++idx) {
        const auto x = out.coordsOf(idx);
        const int layer = x[static_cast<std::size_t>(r)];
        for (int j = 0; j < r; ++j)
            t[static_cast<std::size_t>(j)] =
                phi[static_cast<std::size_t>(layer)]
                   [static_cast<std::size_t>(x[static_cast<std::size_t>(j)])];
        out.cells[static_cast<std::size_t>(idx)] =
            static_cast<Symbol>(tupleRank(t, tupleAlpha));
    }
    if (auto rep = validate(out); !rep.valid)
        throw construction_error("seed cube construction produced an invalid array");
    return out;
}

Hypercuboid extendByPermutations(const Hypercuboid& L,
                                 const std::vector<std::vector<int>>& layerPerms) {
    if (!L.full() || !validate(L).valid)
        throw data_error("base array must be a full valid hypercuboid");
    const int m = static_cast<int>(layerPerms.size());
    if (m < 2)
        throw parameter_error("need at least two layers");
    const int d = L.shape.dims();
    if (m > L.shape.size(d - 1))
        throw parameter_error("layer count would break the non-increasing shape");
    for (const auto& p : layerPerms)
        if (static_cast<int>(p.size()) != L.order)
            throw parameter_error("layer permutation has the wrong degree");

    std::vector<int> sizes = L.shape.sizes();
    sizes.push_back(m);
    CuboidShape shape(sizes, L.shape.cls());
    Hypercuboid out = Hypercuboid::emptyFrame(shape, L.order);
    const std::int64_t baseCells = L.shape.cellCount();
    for (int i = 0; i < m; ++i)
        for (std::int64_t idx = 0; idx < baseCells; ++idx)
            out.cells[static_cast<std::size_t>(i * baseCells + idx)] =
                layerPerms[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    L.cells[static_cast<std::size_t>(idx)])];

    if (auto rep = validate(out); !rep.valid) {
        std::ostringstream msg;
        msg << "extension violates the layer condition";
        if (rep.firstViolation) {
            const auto layerOf = [&](std::int64_t cell) {
                return static_cast<int>(cell / baseCells);
            };
            msg << ": symbol " << rep.firstViolation->symbol << " repeats across layers "
                << layerOf(rep.firstViolation->cellA) << " and "
                << layerOf(rep.firstViolation->cellB);
        }
        throw construction_error(msg.str());
    }
    return out;
}

Hypercuboid extendCube(const Hypercuboid& L, const Hypercuboid& S) {
    if (!L.shape.cubic())
        throw parameter_error("base of the cubic extension must be cubic");
    const int n = L.shape.size(0);
    const int r = L.shape.cls();
    if (S.shape.dims() != r + 1 || !S.shape.cubic() || S.shape.size(0) != n ||
        S.shape.cls() != r || S.order != L.order)
        throw parameter_error("seed does not match the base's order and class");
    if (!S.full() || !validate(S).valid)
        throw data_error("seed is not a valid hypercuboid");

    // phi_i: symbol s (identified with its r-tuple) -> entry of S's layer i.
    const std::vector<int> tupleAlpha(static_cast<std::size_t>(r), n);
    std::vector<std::vector<int>> phi(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(S.order)));
    std::vector<int> coords(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i < n; ++i) {
        coords[static_cast<std::size_t>(r)] = i;
        for (int s = 0; s < S.order; ++s) {
            const auto t = tupleUnrank(s, tupleAlpha);
            std::copy(t.begin(), t.end(), coords.begin());
            phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] =
                S.cells[static_cast<std::size_t>(S.index(coords))];
        }
    }
    // Normalise so the first layer is the identity, per the lemma.
    std::vector<int> inv0(static_cast<std::size_t>(S.order));
    for (int s = 0; s < S.order; ++s)
        inv0[static_cast<std::size_t>(phi[0][static_cast<std::size_t>(s)])] = s;
    std::vector<std::vector<int>> layers;
    layers.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> p(static_cast<std::size_t>(S.order));
        for (int s = 0; s < S.order; ++s)
            p[static_cast<std::size_t>(s)] =
                phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    inv0[static_cast<std::size_t>(s)])];
        layers.push_back(std::move(p));
    }
    return extendByPermutations(L, layers);
}

std::vector<int> componentwisePerm(const std::vector<int>& alphabets,
                                   const std::vector<std::vector<int>>& componentPerms) {
    if (componentPerms.size() != alphabets.size())
        throw parameter_error("one permutation per tuple component required");
    std::int64_t total = 1;
    for (int a : alphabets) total *= a;
    std::vector<int> perm(static_cast<std::size_t>(total));
    for (std::int64_t s = 0; s < total; ++s) {
        auto t = tupleUnrank(s, alphabets);
        for (std::size_t j = 0; j < t.size(); ++j)
            t[j] = componentPerms[j][static_cast<std::size_t>(t[j])];
        perm[static_cast<std::size_t>(s)] = static_cast<int>(tupleRank(t, alphabets));
    }
    return perm;
}

namespace {

bool isPrime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Determinant over GF(p) by elimination; returns 0 for singular.
int detModP(std::vector<std::vector<int>> m, int p) {
    const int k = static_cast<int>(m.size());
    std::int64_t det = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] % p != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = (p - det % p) % p;
        }
        const int pv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] % p;
        det = det * pv % p;
        // Modular inverse by Fermat.
        std::int64_t inv = 1, base = pv, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int row = col + 1; row < k; ++row) {
            const std::int64_t factor =
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * inv % p;
            for (int c = col; c < k; ++c)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
                    static_cast<int>(((m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] -
                                       factor * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)]) %
                                          p +
                                      p) %
                                     p);
        }
    }
    return static_cast<int>(det % p);
}

// Visits every r-subset of the d rows; returns the first singular choice.
std::optional<std::vector<int>> findSingularRows(const MatrixSpec& spec) {
    const int d = spec.rows();
    const int r = spec.cols();
    std::vector<int> pick(static_cast<std::size_t>(r));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        std::vector<std::vector<int>> sub;
        for (int row : pick) sub.push_back(spec.entries[static_cast<std::size_t>(row)]);
        if (detModP(std::move(sub), spec.prime) == 0) return pick;
        int i = r - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == d - r + i) --i;
        if (i < 0) return std::nullopt;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void checkMatrixSpec(const MatrixSpec& spec) {
    if (!isPrime(spec.prime))
        throw parameter_error("field size must be prime");
    if (spec.rows() < 2 || spec.cols() < 1 || spec.cols() > spec.rows())
        throw parameter_error("matrix must be d x r with 1 <= r <= d");
    for (const auto& row : spec.entries) {
        if (static_cast<int>(row.size()) != spec.cols())
            throw parameter_error("ragged matrix");
        for (int v : row)
            if (v < 0 || v >= spec.prime)
                throw parameter_error("matrix entry outside the field");
    }
}

} // namespace

bool checkMatrixQuasigroup(const MatrixSpec& spec) {
    checkMatrixSpec(spec);
    return !findSingularRows(spec).has_value();
}

Hypercuboid matrixCube(const MatrixSpec& spec) {
    checkMatrixSpec(spec);
    if (auto bad = findSingularRows(spec)) {
        std::ostringstream msg;
        msg << "singular r-row submatrix at rows";
        for (int row : *bad) msg << ' ' << row;
        throw construction_error(msg.str());
    }
    const int d = spec.rows();
    const int r = spec.cols();
    const int p = spec.prime;
    CuboidShape shape(std::vector<int>(static_cast<std::size_t>(d), p), r);
    const std::vector<int> tupleAlpha(static_cast<std::size_t>(r), p);
    Hypercuboid out = Hypercuboid::emptyFrame(shape, static_cast<int>(shape.order()));
    std::vector<int> y(static_cast<std::size_t>(r));
    for (std::int64_t idx = 0; idx < shape.cellCount(); ++idx) {
        const auto x = out.coordsOf(idx);
        for (int j = 0; j < r; ++j) {
            int acc = 0;
            for (int i = 0; i < d; ++i)
                acc = (acc + x[static_cast<std::size_t>(i)] *
                                 spec.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) %
                      p;
            y[static_cast<std::size_t>(j)] = acc;
        }
        out.cells[static_cast<std::size_t>(idx)] =
            static_cast<Symbol>(tupleRank(y, tupleAlpha));
    }
    if (auto rep = validate(out); !rep.valid)
        throw construction_error("matrix construction produced an invalid array");
    return out;
}

} // namespace latin
