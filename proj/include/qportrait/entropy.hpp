#pragma once

#include <string>

#include "qportrait/portraits.hpp"

namespace qportrait {

// Evaluated inequality instance: lhs >= rhs up to gap_tol. Infinities come
// from relative-entropy support violations; an inequality with infinite lhs
// holds by convention, and a doubly infinite one is flagged indeterminate.
struct InequalityReport {
    std::string label;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;  // lhs - rhs, +inf when lhs infinite and rhs finite
    bool holds = false;
    bool indeterminate = false;
    double gap_tol = 0.0;
};

InequalityReport make_report(std::string label, double lhs, double rhs);

double von_neumann(const DensityMatrix& rho);

// Tr(rho ln rho - rho ln sigma), +inf when rho's support leaks outside
// sigma's. Computed from both eigendecompositions and overlap weights so the
// 0*ln0 convention is exact.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

DensityMatrix apply_portrait(const DensityMatrix& rho, PortraitKind kind, const BlockPartition& p);

// S(rho||sigma) >= S(M(rho)||M(sigma)) for the chosen portrait map M.
InequalityReport monotonicity_gap(const DensityMatrix& rho, const DensityMatrix& sigma,
                                  PortraitKind kind, const BlockPartition& p);

// S(embed(M(rho)) || rho) >= 0.
InequalityReport portrait_nonneg_gap(const DensityMatrix& rho, PortraitKind kind,
                                     const BlockPartition& p);

// S(chain(rho)[i] || chain(sigma)[i]) for every chain step; nonincreasing.
std::vector<double> chain_gaps(const DensityMatrix& rho, const DensityMatrix& sigma);

// S(rho||sigma) >= max over permutations pi of the qubit-portrait relative
// entropy, with the same pi applied to both states.
InequalityReport max_permutation_bound(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qportrait
