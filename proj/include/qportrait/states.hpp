#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "qportrait/matrix.hpp"

namespace qportrait {

// Validated Hermitian, unit-trace, positive-semidefinite matrix.
class DensityMatrix {
  public:
    static DensityMatrix validated(const ComplexMatrix& m);

    // Trusted constructor for outputs that are valid by construction
    // (portrait maps, partial traces). Checks only in debug builds.
    static DensityMatrix trusted(ComplexMatrix m) { return DensityMatrix(std::move(m)); }

    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }

  private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

enum class DensityDefect { None, NotHermitian, TraceNotOne, NegativeEigenvalue };

struct DensityCheck {
    DensityDefect defect = DensityDefect::None;
    double value = 0.0;  // offending trace or eigenvalue
    bool ok() const { return defect == DensityDefect::None; }
};

DensityCheck check_density(const ComplexMatrix& m);

// Nonnegative reals summing to 1.
class ProbabilityVector {
  public:
    explicit ProbabilityVector(std::vector<double> w);
    const std::vector<double>& weights() const { return w_; }
    size_t size() const { return w_.size(); }
    double operator[](size_t k) const { return w_[k]; }

  private:
    std::vector<double> w_;
};

// Seeded, platform-independent sample source: mt19937_64 with Box-Muller
// gaussians built from explicit 53-bit uniforms, so identical seeds give
// identical streams on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    double uniform();   // [0, 1)
    double gaussian();  // standard normal
    cplx complex_gaussian();

    // Independent stream for sub-task `index` of a campaign.
    static uint64_t substream_seed(uint64_t seed, uint64_t index);

  private:
    std::mt19937_64 gen_;
    std::optional<double> spare_;
};

// GG^dagger / Tr(GG^dagger), G complex Ginibre (Hilbert-Schmidt measure).
DensityMatrix random_mixed_hs(int dim, Rng& rng);
DensityMatrix random_pure(int dim, Rng& rng);
DensityMatrix random_diagonal(int dim, Rng& rng);
ComplexMatrix random_hermitian(int dim, Rng& rng);
std::vector<double> random_probability(int dim, Rng& rng);  // Dirichlet(1,...,1)

// Reduced state of a bipartite system; composite index j = j1*d2 + j2.
// trace_out=2 returns the d1 x d1 state Tr_2 rho, trace_out=1 returns Tr_1 rho.
DensityMatrix partial_trace(const DensityMatrix& rho, int d1, int d2, int trace_out);

ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y);

}  // namespace qportrait
