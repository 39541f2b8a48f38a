#include "qportrait/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qportrait {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One rotation zeroing a(p,q). U has u(p,p)=c, u(q,p)=-s*e^{-i phi},
// u(p,q)=s, u(q,q)=c*e^{-i phi}; applied as A <- U^dagger A U, V <- V U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;  // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    const cplx upp = c;
    const cplx uqp = -s * std::conj(phase);
    const cplx upq = s;
    const cplx uqq = c * std::conj(phase);

    const int n = a.dim();
    for (int i = 0; i < n; ++i) {  // columns: A <- A U
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = aip * upp + aiq * uqp;
        a(i, q) = aip * upq + aiq * uqq;
    }
    for (int j = 0; j < n; ++j) {  // rows: A <- U^dagger A
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = std::conj(upp) * apj + std::conj(uqp) * aqj;
        a(q, j) = std::conj(upq) * apj + std::conj(uqq) * aqj;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = vip * upp + viq * uqp;
        v(i, q) = vip * upq + viq * uqq;
    }
}

}  // namespace

Spectrum eigh(const ComplexMatrix& h) {
    require_hermitian(h);
    const int n = h.dim();

    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, a.frobenius_norm());
    const double threshold = 1e-13 * scale;
    constexpr int max_sweeps = 100;

    bool converged = (n == 1) || off_diagonal_norm(a) < threshold;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
        converged = off_diagonal_norm(a) < threshold;
    }
    if (!converged) throw ConvergenceError("Jacobi eigensolver did not converge in 100 sweeps");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.resize(static_cast<size_t>(n));
    spec.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        spec.eigenvalues[static_cast<size_t>(k)] = a(src, src).real();
        // phase fix: first component with non-negligible magnitude made real-positive
        cplx phase = 1.0;
        for (int i = 0; i < n; ++i) {
            const cplx z = v(i, src);
            if (std::abs(z) > 1e-12) {
                phase = std::conj(z) / std::abs(z);
                break;
            }
        }
        for (int i = 0; i < n; ++i) spec.vectors(i, k) = v(i, src) * phase;
    }
    return spec;
}

ComplexMatrix matrix_fn(const ComplexMatrix& h, const std::function<double(double)>& f,
                        bool zero_clamp) {
    const Spectrum spec = eigh(h);
    const int n = h.dim();
    std::vector<double> fl(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double lam = spec.eigenvalues[static_cast<size_t>(k)];
        if (zero_clamp && lam <= tolerances().eig_zero)
            fl[static_cast<size_t>(k)] = 0.0;
        else
            fl[static_cast<size_t>(k)] = f(lam);
    }
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < n; ++k)
                s += spec.vectors(i, k) * fl[static_cast<size_t>(k)] *
                     std::conj(spec.vectors(j, k));
            r(i, j) = s;
        }
    return r;
}

ComplexMatrix matrix_log(const ComplexMatrix& h) {
    return matrix_fn(h, [](double x) {
        if (x <= tolerances().eig_zero)
            throw std::domain_error("matrix_log: eigenvalue not positive");
        return std::log(x);
    });
}

ComplexMatrix matrix_exp(const ComplexMatrix& h) {
    return matrix_fn(h, [](double x) { return std::exp(x); });
}

ComplexMatrix rho_log_rho(const ComplexMatrix& rho) {
    return matrix_fn(
        rho,
        [](double x) {
            if (x < -tolerances().eig_zero)
                throw std::domain_error("rho_log_rho: negative eigenvalue");
            return x * std::log(x);
        },
        /*zero_clamp=*/true);
}

}  // namespace qportrait
