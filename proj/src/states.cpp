#include "qportrait/states.hpp"

#include <cmath>
#include <numeric>

#include "qportrait/eigh.hpp"

namespace qportrait {

DensityCheck check_density(const ComplexMatrix& m) {
    DensityCheck c;
    if (!m.all_finite() || hermiticity_defect(m) > tolerances().hermiticity) {
        c.defect = DensityDefect::NotHermitian;
        c.value = m.all_finite() ? hermiticity_defect(m) : std::nan("");
        return c;
    }
    const double tr = trace(m);
    if (std::abs(tr - 1.0) > tolerances().trace) {
        c.defect = DensityDefect::TraceNotOne;
        c.value = tr;
        return c;
    }
    const Spectrum spec = eigh(m);
    if (spec.eigenvalues.front() < -tolerances().psd) {
        c.defect = DensityDefect::NegativeEigenvalue;
        c.value = spec.eigenvalues.front();
        return c;
    }
    return c;
}

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m) {
    const DensityCheck c = check_density(m);
    switch (c.defect) {
        case DensityDefect::None:
            return DensityMatrix(m);
        case DensityDefect::NotHermitian:
            throw ValidationError("not a density matrix: not Hermitian (defect " +
                                  std::to_string(c.value) + ")");
        case DensityDefect::TraceNotOne:
            throw ValidationError("not a density matrix: trace is " + std::to_string(c.value));
        case DensityDefect::NegativeEigenvalue:
            throw ValidationError("not a density matrix: eigenvalue " + std::to_string(c.value));
    }
    throw std::logic_error("unreachable");
}

ProbabilityVector::ProbabilityVector(std::vector<double> w) : w_(std::move(w)) {
    double sum = 0.0;
    for (double x : w_) {
        if (!(x >= 0.0)) throw ValidationError("probability vector has a negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > tolerances().trace)
        throw ValidationError("probability vector sums to " + std::to_string(sum));
}

double Rng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    return r * std::cos(2.0 * M_PI * u2);
}

cplx Rng::complex_gaussian() { return {gaussian(), gaussian()}; }

uint64_t Rng::substream_seed(uint64_t seed, uint64_t index) {
    // splitmix64 over (seed, index)
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

DensityMatrix random_mixed_hs(int dim, Rng& rng) {
    if (dim < 2) throw std::invalid_argument("random_mixed_hs: dim must be >= 2");
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix rho = g * g.adjoint();
    const double tr = trace(rho);
    rho = (1.0 / tr) * rho;
    return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix random_pure(int dim, Rng& rng) {
    if (dim < 2) throw std::invalid_argument("random_pure: dim must be >= 2");
    std::vector<cplx> psi(static_cast<size_t>(dim));
    double norm2 = 0.0;
    for (auto& z : psi) {
        z = rng.complex_gaussian();
        norm2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix rho(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            rho(i, j) = psi[static_cast<size_t>(i)] * std::conj(psi[static_cast<size_t>(j)]) *
                        inv * inv;
    return DensityMatrix::trusted(std::move(rho));
}

std::vector<double> random_probability(int dim, Rng& rng) {
    // Dirichlet(1,...,1) via normalized unit-rate exponentials
    std::vector<double> w(static_cast<size_t>(dim));
    double sum = 0.0;
    for (auto& x : w) {
        double u = rng.uniform();
        while (u == 0.0) u = rng.uniform();
        x = -std::log(u);
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

DensityMatrix random_diagonal(int dim, Rng& rng) {
    if (dim < 2) throw std::invalid_argument("random_diagonal: dim must be >= 2");
    return DensityMatrix::trusted(ComplexMatrix::diagonal(random_probability(dim, rng)));
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int d1, int d2, int trace_out) {
    const ComplexMatrix& m = rho.matrix();
    if (d1 < 1 || d2 < 1 || d1 * d2 != m.dim())
        throw std::invalid_argument("partial_trace: dims do not factor the matrix");
    if (trace_out != 1 && trace_out != 2)
        throw std::invalid_argument("partial_trace: subsystem must be 1 or 2");

    if (trace_out == 2) {
        ComplexMatrix r(d1);
        for (int j1 = 0; j1 < d1; ++j1)
            for (int k1 = 0; k1 < d1; ++k1) {
                cplx s = 0.0;
                for (int j2 = 0; j2 < d2; ++j2) s += m(j1 * d2 + j2, k1 * d2 + j2);
                r(j1, k1) = s;
            }
        return DensityMatrix::trusted(std::move(r));
    }
    ComplexMatrix r(d2);
    for (int j2 = 0; j2 < d2; ++j2)
        for (int k2 = 0; k2 < d2; ++k2) {
            cplx s = 0.0;
            for (int j1 = 0; j1 < d1; ++j1) s += m(j1 * d2 + j2, j1 * d2 + k2);
            r(j2, k2) = s;
        }
    return DensityMatrix::trusted(std::move(r));
}

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
    const int nx = x.dim(), ny = y.dim();
    ComplexMatrix r(nx * ny);
    for (int i1 = 0; i1 < nx; ++i1)
        for (int j1 = 0; j1 < nx; ++j1)
            for (int i2 = 0; i2 < ny; ++i2)
                for (int j2 = 0; j2 < ny; ++j2)
                    r(i1 * ny + i2, j1 * ny + j2) = x(i1, j1) * y(i2, j2);
    return r;
}

}  // namespace qportrait
