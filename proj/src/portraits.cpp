#include "qportrait/portraits.hpp"

#include <algorithm>
#include <numeric>

namespace qportrait {

DensityMatrix fold_map(const DensityMatrix& rho, const BlockPartition& p) {
    const ComplexMatrix& m = rho.matrix();
    if (p.dim() != m.dim()) throw std::invalid_argument("fold_map: partition does not fit matrix");
    ComplexMatrix r(p.n_top);
    for (int i = 0; i < p.n_top; ++i)
        for (int j = 0; j < p.n_top; ++j) r(i, j) = m(i, j);
    for (int i = 0; i < p.m; ++i)
        for (int j = 0; j < p.m; ++j) r(i, j) += m(p.n_top + i, p.n_top + j);
    return DensityMatrix::trusted(std::move(r));
}

DensityMatrix trace_block_map(const DensityMatrix& rho, const BlockPartition& p) {
    const ComplexMatrix& m = rho.matrix();
    if (p.dim() != m.dim())
        throw std::invalid_argument("trace_block_map: partition does not fit matrix");
    const int d = std::min(p.n_top, p.m);
    ComplexMatrix r(2);
    for (int k = 0; k < p.n_top; ++k) r(0, 0) += m(k, k);
    for (int k = 0; k < p.m; ++k) r(1, 1) += m(p.n_top + k, p.n_top + k);
    for (int k = 0; k < d; ++k) {
        r(0, 1) += m(k, p.n_top + k);
        r(1, 0) += m(p.n_top + k, k);
    }
    return DensityMatrix::trusted(std::move(r));
}

DensityMatrix embed_padded(const DensityMatrix& small, int target_dim) {
    const ComplexMatrix& s = small.matrix();
    if (target_dim < s.dim())
        throw std::invalid_argument("embed_padded: target smaller than input");
    ComplexMatrix r(target_dim);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < s.dim(); ++j) r(i, j) = s(i, j);
    return DensityMatrix::trusted(std::move(r));
}

DensityMatrix permute(const DensityMatrix& rho, const IndexPermutation& perm) {
    const ComplexMatrix& m = rho.matrix();
    const int n = m.dim();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute: permutation size mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int x : perm) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)])
            throw std::invalid_argument("permute: not a permutation");
        seen[static_cast<size_t>(x)] = true;
    }
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) = m(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    return DensityMatrix::trusted(std::move(r));
}

std::vector<DensityMatrix> chain(const DensityMatrix& rho) {
    std::vector<DensityMatrix> out;
    out.push_back(rho);
    while (out.back().dim() > 2)
        out.push_back(fold_map(out.back(), BlockPartition::for_dim(out.back().dim(), 1)));
    return out;
}

std::vector<IndexPermutation> all_permutations(int dim) {
    IndexPermutation p(static_cast<size_t>(dim));
    std::iota(p.begin(), p.end(), 0);
    std::vector<IndexPermutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::pair<IndexPermutation, DensityMatrix>> qubit_portraits(const DensityMatrix& rho) {
    if (rho.dim() < 3) throw std::invalid_argument("qubit_portraits: dim must be >= 3");
    std::vector<std::pair<IndexPermutation, DensityMatrix>> out;
    for (const IndexPermutation& perm : all_permutations(rho.dim()))
        out.emplace_back(perm, chain(permute(rho, perm)).back());
    return out;
}

}  // namespace qportrait
