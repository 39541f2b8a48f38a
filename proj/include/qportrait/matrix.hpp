#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qportrait {

using cplx = std::complex<double>;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All tolerances in one place, overridable at runtime (the CLI reads
// QPORTRAIT_TOL into gap_tol).
struct Tolerances {
    double hermiticity = 1e-10;
    double eig_residual = 1e-10;
    double eig_zero = 1e-12;
    double psd = 1e-10;
    double trace = 1e-10;
    double support = 1e-10;
    double gap = 1e-9;
};

Tolerances& tolerances();

// Dense complex square matrix, row-major. Hermiticity is a property of the
// values, checked where the contract requires it, not enforced by the type.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : n_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    }

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<double>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch in matrix product");
        ComplexMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const cplx xik = x(i, k);
                if (xik == cplx{}) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch in matrix sum");
        ComplexMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch in matrix difference");
        ComplexMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend ComplexMatrix operator*(double s, const ComplexMatrix& x) {
        ComplexMatrix r(x.n_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = s * x.a_[i];
        return r;
    }

    bool operator==(const ComplexMatrix& other) const { return n_ == other.n_ && a_ == other.a_; }

    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool all_finite() const {
        for (const cplx& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::vector<cplx> a_;
};

double trace(const ComplexMatrix& m);

// Max deviation from H == H^dagger.
double hermiticity_defect(const ComplexMatrix& m);

void require_hermitian(const ComplexMatrix& m, double tol = tolerances().hermiticity);

}  // namespace qportrait
