#include "qportrait/matrix.hpp"

#include <cmath>

namespace qportrait {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

double trace(const ComplexMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i) s += m(i, i).real();
    return s;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j)
            d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

void require_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.all_finite()) throw ValidationError("matrix contains NaN or Inf entries");
    const double d = hermiticity_defect(m);
    if (d > tol)
        throw ValidationError("matrix is not Hermitian: max deviation " + std::to_string(d));
}

}  // namespace qportrait
