#pragma once

#include "qportrait/entropy.hpp"

namespace qportrait {

// log(sum exp(x_k)) with max-subtraction.
double log_sum_exp(const std::vector<double>& x);

// exp[-Tr(rho ln rho)] <= sqrt(Tr e^{-B} * Tr e^{B}) for Hermitian B of the
// same dimension.
InequalityReport entropy_exp_bound(const DensityMatrix& rho, const ComplexMatrix& b);

// sum_{k,j} exp(b_k - b_j) >= N^2, saturated at constant b.
InequalityReport pairwise_exp_sum(const std::vector<double>& b);

// ln sum_k e^{-b_k} + sum_k (w_k ln w_k + w_k b_k) >= 0; the lhs equals
// KL(w || Gibbs(b)).
InequalityReport gibbs_gap(const std::vector<double>& b, const ProbabilityVector& w);

// gibbs_gap with b_k = -w_k.
InequalityReport tomogram_uncertainty(const ProbabilityVector& w);

}  // namespace qportrait
