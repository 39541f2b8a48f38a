#include "qportrait/entropy.hpp"

#include <cmath>
#include <limits>

#include "qportrait/eigh.hpp"

namespace qportrait {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

InequalityReport make_report(std::string label, double lhs, double rhs) {
    InequalityReport r;
    r.label = std::move(label);
    r.lhs = lhs;
    r.rhs = rhs;
    r.gap_tol = tolerances().gap;
    if (std::isinf(lhs) && std::isinf(rhs)) {
        r.gap = 0.0;
        r.holds = true;
        r.indeterminate = true;
    } else {
        r.gap = lhs - rhs;
        r.holds = r.gap >= -r.gap_tol;
    }
    return r;
}

double von_neumann(const DensityMatrix& rho) {
    const Spectrum spec = eigh(rho.matrix());
    double s = 0.0;
    for (double p : spec.eigenvalues)
        if (p > tolerances().eig_zero) s -= p * std::log(p);
    return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("relative_entropy: dimension mismatch");
    const int n = rho.dim();
    const Spectrum sr = eigh(rho.matrix());
    const Spectrum ss = eigh(sigma.matrix());

    // overlap(j,k) = |<u_j|v_k>|^2 with u from rho, v from sigma
    std::vector<double> overlap(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            cplx ov = 0.0;
            for (int i = 0; i < n; ++i)
                ov += std::conj(sr.vectors(i, j)) * ss.vectors(i, k);
            overlap[static_cast<size_t>(j) * n + k] = std::norm(ov);
        }

    // A zero eigenvalue of sigma carrying rho-weight above support_tol is a
    // genuine support violation. Below support_tol the weight is dropped,
    // and the matching share of the p ln p sum must go with it, otherwise
    // the estimate picks up a negative bias of order support_tol*|ln q|.
    std::vector<bool> kept(static_cast<size_t>(n), true);
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        const double q = ss.eigenvalues[static_cast<size_t>(k)];
        if (q > tolerances().eig_zero) continue;
        kept[static_cast<size_t>(k)] = false;
        double weight = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p = sr.eigenvalues[static_cast<size_t>(j)];
            if (p > tolerances().eig_zero) weight += p * overlap[static_cast<size_t>(j) * n + k];
        }
        if (weight > tolerances().support) return kInf;
    }
    for (int j = 0; j < n; ++j) {
        const double p = sr.eigenvalues[static_cast<size_t>(j)];
        if (p <= tolerances().eig_zero) continue;
        double kept_frac = 0.0;
        for (int k = 0; k < n; ++k) {
            if (!kept[static_cast<size_t>(k)]) continue;
            const double c = overlap[static_cast<size_t>(j) * n + k];
            kept_frac += c;
            s -= p * c * std::log(ss.eigenvalues[static_cast<size_t>(k)]);
        }
        s += p * std::log(p) * kept_frac;
    }
    return s;
}

DensityMatrix apply_portrait(const DensityMatrix& rho, PortraitKind kind,
                             const BlockPartition& p) {
    return kind == PortraitKind::FoldDiagonalBlocks ? fold_map(rho, p) : trace_block_map(rho, p);
}

InequalityReport monotonicity_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  PortraitKind kind, const BlockPartition& p) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("monotonicity_gap: dimension mismatch");
    const double lhs = relative_entropy(rho, sigma);
    const double rhs =
        relative_entropy(apply_portrait(rho, kind, p), apply_portrait(sigma, kind, p));
    return make_report("monotonicity", lhs, rhs);
}

InequalityReport portrait_nonneg_gap(const DensityMatrix& rho, PortraitKind kind,
                                     const BlockPartition& p) {
    const DensityMatrix portrait = embed_padded(apply_portrait(rho, kind, p), rho.dim());
    return make_report("portrait-nonneg", relative_entropy(portrait, rho), 0.0);
}

std::vector<double> chain_gaps(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("chain_gaps: dimension mismatch");
    const std::vector<DensityMatrix> cr = chain(rho);
    const std::vector<DensityMatrix> cs = chain(sigma);
    std::vector<double> out;
    out.reserve(cr.size());
    for (size_t i = 0; i < cr.size(); ++i) out.push_back(relative_entropy(cr[i], cs[i]));
    return out;
}

InequalityReport max_permutation_bound(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("max_permutation_bound: dimension mismatch");
    if (rho.dim() < 3)
        throw std::invalid_argument("max_permutation_bound: dim must be >= 3");
    double best = -kInf;
    for (const IndexPermutation& perm : all_permutations(rho.dim())) {
        const DensityMatrix pr = chain(permute(rho, perm)).back();
        const DensityMatrix ps = chain(permute(sigma, perm)).back();
        best = std::max(best, relative_entropy(pr, ps));
    }
    return make_report("permutation-bound", relative_entropy(rho, sigma), best);
}

}  // namespace qportrait
