#include "qportrait/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qportrait {

Target parse_target(const std::string& name) {
    if (name == "klein") return Target::Klein;
    if (name == "monotonicity") return Target::Monotonicity;
    if (name == "nonneg") return Target::Nonneg;
    if (name == "pairwise") return Target::Pairwise;
    if (name == "gibbs") return Target::Gibbs;
    if (name == "tomogram") return Target::Tomogram;
    if (name == "expbound") return Target::ExpBound;
    throw std::invalid_argument("unknown target: " + name);
}

std::string target_name(Target t) {
    switch (t) {
        case Target::Klein: return "klein";
        case Target::Monotonicity: return "monotonicity";
        case Target::Nonneg: return "nonneg";
        case Target::Pairwise: return "pairwise";
        case Target::Gibbs: return "gibbs";
        case Target::Tomogram: return "tomogram";
        case Target::ExpBound: return "expbound";
    }
    throw std::logic_error("unreachable");
}

namespace {

BlockPartition partition_for(const FuzzConfig& cfg) {
    return BlockPartition::for_dim(cfg.dim, cfg.fold_m);
}

void record_matrix(SampleInputs* in, const char* name, const ComplexMatrix& m) {
    if (in) in->matrices.emplace_back(name, m);
}

void record_vector(SampleInputs* in, const char* name, const std::vector<double>& v) {
    if (in) in->vectors.emplace_back(name, v);
}

}  // namespace

double sample_gap(const FuzzConfig& cfg, Rng& rng, SampleInputs* inputs) {
    switch (cfg.target) {
        case Target::Klein: {
            const DensityMatrix rho = random_mixed_hs(cfg.dim, rng);
            const DensityMatrix sigma = random_mixed_hs(cfg.dim, rng);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "sigma", sigma.matrix());
            return relative_entropy(rho, sigma);
        }
        case Target::Monotonicity: {
            const DensityMatrix rho = random_mixed_hs(cfg.dim, rng);
            const DensityMatrix sigma = random_mixed_hs(cfg.dim, rng);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "sigma", sigma.matrix());
            return monotonicity_gap(rho, sigma, cfg.kind, partition_for(cfg)).gap;
        }
        case Target::Nonneg: {
            const DensityMatrix rho = random_mixed_hs(cfg.dim, rng);
            record_matrix(inputs, "rho", rho.matrix());
            return portrait_nonneg_gap(rho, cfg.kind, partition_for(cfg)).gap;
        }
        case Target::Pairwise: {
            std::vector<double> b(static_cast<size_t>(cfg.dim));
            for (double& v : b) v = 2.0 * rng.gaussian();
            record_vector(inputs, "b", b);
            return pairwise_exp_sum(b).gap;
        }
        case Target::Gibbs: {
            std::vector<double> b(static_cast<size_t>(cfg.dim));
            for (double& v : b) v = 2.0 * rng.gaussian();
            const ProbabilityVector w(random_probability(cfg.dim, rng));
            record_vector(inputs, "b", b);
            record_vector(inputs, "w", w.weights());
            return gibbs_gap(b, w).gap;
        }
        case Target::Tomogram: {
            const ProbabilityVector w(random_probability(cfg.dim, rng));
            record_vector(inputs, "w", w.weights());
            return tomogram_uncertainty(w).gap;
        }
        case Target::ExpBound: {
            const DensityMatrix rho = random_mixed_hs(cfg.dim, rng);
            const ComplexMatrix b = random_hermitian(cfg.dim, rng);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "B", b);
            return entropy_exp_bound(rho, b).gap;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void validate_config(const FuzzConfig& cfg) {
    if (cfg.dim < 2) throw std::invalid_argument("fuzz: dim must be >= 2");
    if (cfg.samples < 1) throw std::invalid_argument("fuzz: samples must be >= 1");
    if (cfg.target == Target::Monotonicity || cfg.target == Target::Nonneg)
        partition_for(cfg);  // throws on a bad partition
}

GapHistogram build_histogram(const std::vector<double>& gaps) {
    GapHistogram h;
    double hi = 0.0;
    for (double g : gaps)
        if (std::isfinite(g)) hi = std::max(hi, g);
    if (hi == 0.0) hi = 1.0;
    constexpr int bins = 50;
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i) h.edges[static_cast<size_t>(i)] = hi * i / bins;
    h.counts.assign(bins, 0);
    for (double g : gaps) {
        if (g < 0.0) {
            ++h.underflow;
        } else {
            int b = std::isfinite(g) ? static_cast<int>(g / hi * bins) : bins - 1;
            b = std::clamp(b, 0, bins - 1);
            ++h.counts[static_cast<size_t>(b)];
        }
    }
    return h;
}

FuzzReport aggregate(const FuzzConfig& cfg, const std::vector<double>& gaps) {
    FuzzReport rep;
    rep.samples = cfg.samples;
    size_t argmin = 0;
    for (size_t i = 1; i < gaps.size(); ++i)
        if (gaps[i] < gaps[argmin]) argmin = i;
    rep.min_gap = gaps[argmin];
    for (double g : gaps)
        if (g < -tolerances().gap) ++rep.violations;
    rep.histogram = build_histogram(gaps);
    // re-draw the argmin inputs from their substream
    Rng rng(Rng::substream_seed(cfg.seed, argmin));
    sample_gap(cfg, rng, &rep.argmin);
    return rep;
}

}  // namespace

FuzzReport fuzz_serial(const FuzzConfig& cfg) {
    validate_config(cfg);
    std::vector<double> gaps(static_cast<size_t>(cfg.samples));
    for (int i = 0; i < cfg.samples; ++i) {
        Rng rng(Rng::substream_seed(cfg.seed, static_cast<uint64_t>(i)));
        gaps[static_cast<size_t>(i)] = sample_gap(cfg, rng);
    }
    return aggregate(cfg, gaps);
}

FuzzReport fuzz(const FuzzConfig& cfg) {
    validate_config(cfg);
    std::vector<double> gaps(static_cast<size_t>(cfg.samples));
#pragma omp parallel for schedule(dynamic, 64)
    for (int i = 0; i < cfg.samples; ++i) {
        Rng rng(Rng::substream_seed(cfg.seed, static_cast<uint64_t>(i)));
        gaps[static_cast<size_t>(i)] = sample_gap(cfg, rng);
    }
    return aggregate(cfg, gaps);
}

// ---------------------------------------------------------------------------
// Gap minimization over explicit parameterizations.

namespace {

// N^2 reals -> lower-triangular complex factor L -> (LL^+ + eps I)/Tr.
DensityMatrix density_from_params(const double* x, int n) {
    ComplexMatrix l(n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            l(i, j) = cplx{x[idx], x[idx + 1]};
            idx += 2;
        }
        l(i, i) = x[idx++];
    }
    ComplexMatrix rho = l * l.adjoint();
    for (int i = 0; i < n; ++i) rho(i, i) += 1e-12;
    rho = (1.0 / trace(rho)) * rho;
    return DensityMatrix::trusted(std::move(rho));
}

// N^2 reals -> Hermitian matrix (diag + lower triangle re/im).
ComplexMatrix hermitian_from_params(const double* x, int n) {
    ComplexMatrix h(n);
    int idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            h(i, j) = cplx{x[idx], x[idx + 1]};
            h(j, i) = std::conj(h(i, j));
            idx += 2;
        }
        h(i, i) = x[idx++];
    }
    return h;
}

std::vector<double> probability_from_params(const double* x, int n) {
    std::vector<double> w(static_cast<size_t>(n));
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        w[static_cast<size_t>(k)] = x[k] * x[k] + 1e-12;
        sum += w[static_cast<size_t>(k)];
    }
    for (double& v : w) v /= sum;
    return w;
}

int param_count(const FuzzConfig& cfg) {
    const int n = cfg.dim;
    switch (cfg.target) {
        case Target::Klein:
        case Target::Monotonicity: return 2 * n * n;
        case Target::Nonneg: return n * n;
        case Target::ExpBound: return 2 * n * n;
        case Target::Pairwise: return n;
        case Target::Gibbs: return 2 * n;
        case Target::Tomogram: return n;
    }
    throw std::logic_error("unreachable");
}

double objective(const FuzzConfig& cfg, const std::vector<double>& x, SampleInputs* inputs) {
    const int n = cfg.dim;
    switch (cfg.target) {
        case Target::Klein: {
            const DensityMatrix rho = density_from_params(x.data(), n);
            const DensityMatrix sigma = density_from_params(x.data() + n * n, n);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "sigma", sigma.matrix());
            return relative_entropy(rho, sigma);
        }
        case Target::Monotonicity: {
            const DensityMatrix rho = density_from_params(x.data(), n);
            const DensityMatrix sigma = density_from_params(x.data() + n * n, n);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "sigma", sigma.matrix());
            return monotonicity_gap(rho, sigma, cfg.kind, partition_for(cfg)).gap;
        }
        case Target::Nonneg: {
            const DensityMatrix rho = density_from_params(x.data(), n);
            record_matrix(inputs, "rho", rho.matrix());
            return portrait_nonneg_gap(rho, cfg.kind, partition_for(cfg)).gap;
        }
        case Target::ExpBound: {
            const DensityMatrix rho = density_from_params(x.data(), n);
            const ComplexMatrix b = hermitian_from_params(x.data() + n * n, n);
            record_matrix(inputs, "rho", rho.matrix());
            record_matrix(inputs, "B", b);
            return entropy_exp_bound(rho, b).gap;
        }
        case Target::Pairwise: {
            std::vector<double> b(x.begin(), x.begin() + n);
            record_vector(inputs, "b", b);
            return pairwise_exp_sum(b).gap;
        }
        case Target::Gibbs: {
            std::vector<double> b(x.begin(), x.begin() + n);
            const ProbabilityVector w(probability_from_params(x.data() + n, n));
            record_vector(inputs, "b", b);
            record_vector(inputs, "w", w.weights());
            return gibbs_gap(b, w).gap;
        }
        case Target::Tomogram: {
            const ProbabilityVector w(probability_from_params(x.data(), n));
            record_vector(inputs, "w", w.weights());
            return tomogram_uncertainty(w).gap;
        }
    }
    throw std::logic_error("unreachable");
}

struct RestartResult {
    double best = 0.0;
    std::vector<double> params;
};

// Nelder-Mead with the standard coefficient set; budget counts objective
// evaluations. Infinite objective values (support violations) are ordered
// worst and get replaced by reflection/contraction like any other vertex.
RestartResult nelder_mead(const FuzzConfig& cfg, Rng& rng, int iters) {
    const int n = param_count(cfg);
    int evals = 0;
    const auto f = [&](const std::vector<double>& x) {
        ++evals;
        return objective(cfg, x, nullptr);
    };

    std::vector<std::vector<double>> simplex;
    std::vector<double> fv;
    std::vector<double> x0(static_cast<size_t>(n));
    for (double& v : x0) v = rng.gaussian();
    simplex.push_back(x0);
    for (int i = 0; i < n; ++i) {
        std::vector<double> xi = x0;
        xi[static_cast<size_t>(i)] += 0.5;
        simplex.push_back(std::move(xi));
    }
    for (const auto& x : simplex) fv.push_back(f(x));

    const auto order = [&] {
        std::vector<size_t> idx(simplex.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            // NaN-safe: non-finite sorts last
            const double fa = std::isfinite(fv[a]) ? fv[a] : std::numeric_limits<double>::max();
            const double fb = std::isfinite(fv[b]) ? fv[b] : std::numeric_limits<double>::max();
            return fa < fb;
        });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (size_t i : idx) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex.swap(s2);
        fv.swap(f2);
    };
    order();

    constexpr double alpha = 1.0, gamma = 2.0, beta = 0.5, delta = 0.5;
    while (evals < iters) {
        const size_t worst = simplex.size() - 1;
        std::vector<double> centroid(static_cast<size_t>(n), 0.0);
        for (size_t v = 0; v < worst; ++v)
            for (int i = 0; i < n; ++i)
                centroid[static_cast<size_t>(i)] += simplex[v][static_cast<size_t>(i)];
        for (double& c : centroid) c /= static_cast<double>(worst);

        const auto blend = [&](double t) {
            std::vector<double> x(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                x[static_cast<size_t>(i)] =
                    centroid[static_cast<size_t>(i)] +
                    t * (centroid[static_cast<size_t>(i)] - simplex[worst][static_cast<size_t>(i)]);
            return x;
        };

        const std::vector<double> xr = blend(alpha);
        const double fr = f(xr);
        if (fr < fv[0]) {
            const std::vector<double> xe = blend(gamma);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[worst - 1]) {
            simplex[worst] = xr;
            fv[worst] = fr;
        } else {
            const std::vector<double> xc = blend(fr < fv[worst] ? beta : -beta);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[worst])) {
                simplex[worst] = xc;
                fv[worst] = fc;
            } else {
                for (size_t v = 1; v < simplex.size(); ++v) {
                    for (int i = 0; i < n; ++i)
                        simplex[v][static_cast<size_t>(i)] =
                            simplex[0][static_cast<size_t>(i)] +
                            delta * (simplex[v][static_cast<size_t>(i)] -
                                     simplex[0][static_cast<size_t>(i)]);
                    fv[v] = f(simplex[v]);
                }
            }
        }
        order();
    }
    return RestartResult{fv[0], simplex[0]};
}

FuzzReport minimize_common(const FuzzConfig& cfg, int restarts, int iters, bool parallel) {
    if (restarts < 1) throw std::invalid_argument("minimize_gap: restarts must be >= 1");
    if (cfg.dim < 2) throw std::invalid_argument("minimize_gap: dim must be >= 2");
    if (cfg.target == Target::Monotonicity || cfg.target == Target::Nonneg) partition_for(cfg);

    std::vector<RestartResult> results(static_cast<size_t>(restarts));
    const auto run_one = [&](int r) {
        Rng rng(Rng::substream_seed(cfg.seed, static_cast<uint64_t>(r)));
        if (iters <= 0) {
            // evaluate the initial point only
            std::vector<double> x(static_cast<size_t>(param_count(cfg)));
            for (double& v : x) v = rng.gaussian();
            results[static_cast<size_t>(r)] = RestartResult{objective(cfg, x, nullptr), x};
        } else {
            results[static_cast<size_t>(r)] = nelder_mead(cfg, rng, iters);
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < restarts; ++r) run_one(r);
    } else {
        for (int r = 0; r < restarts; ++r) run_one(r);
    }

    size_t best = 0;
    for (size_t r = 1; r < results.size(); ++r)
        if (results[r].best < results[best].best) best = r;

    FuzzReport rep;
    rep.samples = restarts;
    rep.min_gap = results[best].best;
    std::vector<double> gaps;
    gaps.reserve(results.size());
    for (const auto& r : results) gaps.push_back(r.best);
    for (double g : gaps)
        if (g < -tolerances().gap) ++rep.violations;
    rep.histogram = build_histogram(gaps);
    objective(cfg, results[best].params, &rep.argmin);
    return rep;
}

}  // namespace

FuzzReport minimize_gap(const FuzzConfig& cfg, int restarts, int iters) {
    return minimize_common(cfg, restarts, iters, true);
}

FuzzReport minimize_gap_serial(const FuzzConfig& cfg, int restarts, int iters) {
    return minimize_common(cfg, restarts, iters, false);
}

}  // namespace qportrait
