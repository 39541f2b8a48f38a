#pragma once

#include <cstdint>

#include "qportrait/scalar_inequalities.hpp"

namespace qportrait {

enum class Target {
    Klein,          // S(rho||sigma) >= 0
    Monotonicity,   // portrait monotonicity gap
    Nonneg,         // portrait nonnegativity gap
    Pairwise,       // sum exp(b_k - b_j) >= N^2
    Gibbs,          // KL(w || Gibbs(b)) >= 0
    Tomogram,       // gibbs with b = -w
    ExpBound        // exp(S) <= sqrt(Tr e^-B Tr e^B)
};

Target parse_target(const std::string& name);
std::string target_name(Target t);

struct FuzzConfig {
    Target target = Target::Klein;
    int dim = 2;
    int samples = 1;
    uint64_t seed = 0;
    PortraitKind kind = PortraitKind::FoldDiagonalBlocks;
    int fold_m = 1;  // block-partition m for portrait targets
};

// The concrete inputs behind one evaluated gap, for witness reporting.
struct SampleInputs {
    std::vector<std::pair<std::string, ComplexMatrix>> matrices;
    std::vector<std::pair<std::string, std::vector<double>>> vectors;
};

struct GapHistogram {
    std::vector<double> edges;   // 51 edges over [0, max gap]
    std::vector<long> counts;    // 50 bins
    long underflow = 0;          // gaps < 0
};

struct FuzzReport {
    double min_gap = 0.0;
    SampleInputs argmin;
    GapHistogram histogram;
    long violations = 0;  // gaps < -gap_tol
    int samples = 0;
};

// Draw one set of inputs for `target` and evaluate the gap. Filling `inputs`
// is optional and costs nothing extra.
double sample_gap(const FuzzConfig& cfg, Rng& rng, SampleInputs* inputs = nullptr);

// Seeded fuzz campaign; per-sample substreams make the result independent of
// scheduling, so the parallel and serial paths agree bit for bit.
FuzzReport fuzz(const FuzzConfig& cfg);         // OpenMP when available
FuzzReport fuzz_serial(const FuzzConfig& cfg);  // reference implementation

// Nelder-Mead descent (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5) on a Cholesky-style parameterization of the target's inputs;
// `iters` counts objective evaluations per restart.
FuzzReport minimize_gap(const FuzzConfig& cfg, int restarts, int iters);
FuzzReport minimize_gap_serial(const FuzzConfig& cfg, int restarts, int iters);

}  // namespace qportrait
