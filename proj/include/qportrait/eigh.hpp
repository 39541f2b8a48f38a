#pragma once

#include <functional>

#include "qportrait/matrix.hpp"

namespace qportrait {

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, columns of
// `vectors` are the matching eigenvectors, each with its first nonzero
// component made real-positive so the decomposition is deterministic.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;
};

// Cyclic Jacobi for complex Hermitian matrices. Converges when the
// off-diagonal Frobenius norm drops below 1e-13 relative to the matrix norm,
// at most 100 sweeps.
Spectrum eigh(const ComplexMatrix& h);

// U f(Lambda) U^dagger. With zero_clamp, eigenvalues <= eig_zero_tol are
// mapped to f-value 0 (the 0*ln0 = 0 convention for rho ln rho).
ComplexMatrix matrix_fn(const ComplexMatrix& h, const std::function<double(double)>& f,
                        bool zero_clamp = false);

ComplexMatrix matrix_log(const ComplexMatrix& h);
ComplexMatrix matrix_exp(const ComplexMatrix& h);

// rho ln rho with the 0*ln0 = 0 convention on the null space.
ComplexMatrix rho_log_rho(const ComplexMatrix& rho);

}  // namespace qportrait
