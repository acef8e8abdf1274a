#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latin/cuboid.hpp"

namespace latin {

/// d x r matrix over GF(p) defining a d-ary quasigroup of class r when every
/// r-row submatrix is invertible.
struct MatrixSpec {
    int prime;
    std::vector<std::vector<int>> entries; // d rows, r columns, values in [0, p)

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

/// Global tuple <-> symbol encoding shared with the codes module:
/// lexicographic rank with the first component most significant.
std::int64_t tupleRank(std::span<const int> tuple, std::span<const int> alphabets);
std::vector<int> tupleUnrank(std::int64_t rank, std::span<const int> alphabets);

/// Class-1 hypercuboid: cell x holds (x_1 + ... + x_d) mod n_1.
Hypercuboid modularClass1(const CuboidShape& shape);

/// The cyclic-group Latin square of order n, as a class-1 (n, n) cuboid.
Hypercuboid cyclicSquare(int n);

/// Lifts an n x n Latin square to an LHC(r+1, n, r): the base r-cube holds
/// the tuple (x_1, ..., x_r) at each cell; layer i applies row i of the
/// square to every tuple component, and tuples are ranked into symbols.
Hypercuboid seedCube(int n, int r, const Hypercuboid& square);

/// Stacks layerPerms.size() symbol-permuted copies of L along a new last
/// axis. The resulting array is validated; an invalid result raises
/// construction_error naming the first violating layer.
Hypercuboid extendByPermutations(const Hypercuboid& L,
                                 const std::vector<std::vector<int>>& layerPerms);

/// Embeds a cubic LHC(d, n, r) into an LHC(d+1, n, r) using the r-layers of
/// the seed S as symbol permutations (normalised so layer 0 is L itself).
Hypercuboid extendCube(const Hypercuboid& L, const Hypercuboid& S);

/// Permutation of the ranked tuples over the given alphabets acting
/// componentwise: component j is mapped through componentPerms[j].
std::vector<int> componentwisePerm(const std::vector<int>& alphabets,
                                   const std::vector<std::vector<int>>& componentPerms);

/// True iff every r x r submatrix formed from r of the d rows is invertible
/// over GF(p). parameter_error when p is not prime.
bool checkMatrixQuasigroup(const MatrixSpec& spec);

/// Cubic hypercuboid of shape (p, ..., p), class r, order p^r; cell x holds
/// the rank of x * f. construction_error (listing a singular row choice)
/// when the matrix check fails.
Hypercuboid matrixCube(const MatrixSpec& spec);

} // namespace latin
