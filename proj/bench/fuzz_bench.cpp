// Throughput comparison of the serial and OpenMP fuzz kernels, and a sanity
// check that both produce identical reports.

#include <chrono>
#include <cstdio>

#include "qportrait/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace qportrait;

namespace {

template <typename F>
double time_it(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int samples = argc > 1 ? std::atoi(argv[1]) : 20000;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("%-14s %6s %12s %12s %9s %8s\n", "target", "dim", "serial[s]", "parallel[s]",
                "speedup", "match");

    for (Target t : {Target::Klein, Target::Monotonicity, Target::Pairwise, Target::Gibbs}) {
        for (int dim : {3, 6}) {
            FuzzConfig cfg;
            cfg.target = t;
            cfg.dim = dim;
            cfg.samples = samples;
            cfg.seed = 99;
            FuzzReport rs, rp;
            const double ts = time_it([&] { rs = fuzz_serial(cfg); });
            const double tp = time_it([&] { rp = fuzz(cfg); });
            const bool match = rs.min_gap == rp.min_gap &&
                               rs.histogram.counts == rp.histogram.counts &&
                               rs.violations == rp.violations;
            std::printf("%-14s %6d %12.3f %12.3f %8.2fx %8s\n", target_name(t).c_str(), dim, ts,
                        tp, ts / tp, match ? "yes" : "NO");
            if (!match) return 1;
        }
    }
    return 0;
}
