#pragma once

#include <cmath>
#include <vector>

#include "qportrait/entropy.hpp"

namespace qportrait::testing {

// Independent scalar oracle: KL divergence of two probability vectors with
// the 0*ln0 convention. Kept free of the matrix code paths it checks.
inline double scalar_kl(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] <= 0.0) continue;
        if (q[k] <= 0.0) return std::numeric_limits<double>::infinity();
        s += p[k] * std::log(p[k] / q[k]);
    }
    return s;
}

inline std::vector<double> diagonal_of(const ComplexMatrix& m) {
    std::vector<double> d(static_cast<size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) d[static_cast<size_t>(i)] = m(i, i).real();
    return d;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

}  // namespace qportrait::testing
