#pragma once

#include "qportrait/states.hpp"

namespace qportrait {

// Split of dimension N into a leading (N-m) block A and trailing m block D.
struct BlockPartition {
    int n_top;  // size of block A
    int m;      // size of block D

    static BlockPartition for_dim(int dim, int m) {
        if (m < 1 || m > dim - m)
            throw std::invalid_argument("block partition requires 1 <= m <= N-m");
        return BlockPartition{dim - m, m};
    }
    int dim() const { return n_top + m; }
};

enum class PortraitKind { FoldDiagonalBlocks, TraceBlocks };

// rho = [[A,B],[C,D]] -> compact (N-m)x(N-m) matrix A with D added into its
// top-left m x m corner. Trace-preserving positive map.
DensityMatrix fold_map(const DensityMatrix& rho, const BlockPartition& p);

// rho -> 2x2 [[TrA, TrB],[TrC, TrD]]; Tr of a non-square off-diagonal block
// is the sum of its min(n_top, m) main-diagonal entries.
DensityMatrix trace_block_map(const DensityMatrix& rho, const BlockPartition& p);

// Zero-pad a small state into the top-left corner of an N x N matrix.
DensityMatrix embed_padded(const DensityMatrix& small, int target_dim);

// perm is a bijection on {0,...,N-1}; result(j,k) = rho(perm(j), perm(k)).
using IndexPermutation = std::vector<int>;
DensityMatrix permute(const DensityMatrix& rho, const IndexPermutation& perm);

// [rho, fold(rho, m=1), fold(fold(rho)), ...] down to dimension 2.
std::vector<DensityMatrix> chain(const DensityMatrix& rho);

// All N! permutations with the 2x2 state reached by repeated m=1 folds of the
// permuted matrix.
std::vector<std::pair<IndexPermutation, DensityMatrix>> qubit_portraits(const DensityMatrix& rho);

std::vector<IndexPermutation> all_permutations(int dim);

}  // namespace qportrait
