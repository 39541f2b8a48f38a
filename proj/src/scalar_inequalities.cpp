#include "qportrait/scalar_inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "qportrait/eigh.hpp"

namespace qportrait {

double log_sum_exp(const std::vector<double>& x) {
    if (x.empty()) throw std::invalid_argument("log_sum_exp: empty input");
    const double m = *std::max_element(x.begin(), x.end());
    double s = 0.0;
    for (double v : x) s += std::exp(v - m);
    return m + std::log(s);
}

InequalityReport entropy_exp_bound(const DensityMatrix& rho, const ComplexMatrix& b) {
    if (rho.dim() != b.dim())
        throw std::invalid_argument("entropy_exp_bound: dimension mismatch");
    require_hermitian(b);
    const Spectrum spec = eigh(b);
    std::vector<double> neg(spec.eigenvalues);
    for (double& v : neg) v = -v;
    // sqrt((Tr e^{-B})(Tr e^{B})) in log space
    const double log_bound = 0.5 * (log_sum_exp(neg) + log_sum_exp(spec.eigenvalues));
    // this one reads lhs <= rhs, so the slack is rhs - lhs
    InequalityReport r;
    r.label = "entropy-exp-bound";
    r.lhs = std::exp(von_neumann(rho));
    r.rhs = std::exp(log_bound);
    r.gap_tol = tolerances().gap;
    r.gap = r.rhs - r.lhs;
    r.holds = r.gap >= -r.gap_tol;
    return r;
}

InequalityReport pairwise_exp_sum(const std::vector<double>& b) {
    if (b.empty()) throw std::invalid_argument("pairwise_exp_sum: empty input");
    const size_t n = b.size();
    const double lo = *std::min_element(b.begin(), b.end());
    const double hi = *std::max_element(b.begin(), b.end());
    // sum_{k,j} e^{b_k-b_j} = (sum e^{b_k-mid})(sum e^{mid-b_j}); centering
    // keeps every exponent within half the spread (overflow only past ~1400)
    const double mid = 0.5 * (lo + hi);
    double up = 0.0, down = 0.0;
    for (double v : b) {
        up += std::exp(v - mid);
        down += std::exp(mid - v);
    }
    InequalityReport r = make_report("pairwise-exp-sum", up * down,
                                     static_cast<double>(n) * static_cast<double>(n));
    return r;
}

InequalityReport gibbs_gap(const std::vector<double>& b, const ProbabilityVector& w) {
    if (b.size() != w.size()) throw std::invalid_argument("gibbs_gap: length mismatch");
    std::vector<double> neg(b);
    for (double& v : neg) v = -v;
    double lhs = log_sum_exp(neg);
    for (size_t k = 0; k < b.size(); ++k) {
        const double wk = w[k];
        if (wk > 0.0) lhs += wk * std::log(wk);
        lhs += wk * b[k];
    }
    return make_report("gibbs", lhs, 0.0);
}

InequalityReport tomogram_uncertainty(const ProbabilityVector& w) {
    std::vector<double> b(w.weights());
    for (double& v : b) v = -v;
    InequalityReport r = gibbs_gap(b, w);
    r.label = "tomogram";
    return r;
}

}  // namespace qportrait
