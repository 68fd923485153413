#include "oft/tridiagonal.hpp"

#include <cmath>
#include <string>

#include "oft/errors.hpp"

namespace oft {

std::vector<std::complex<double>> thomas_solve(const TridiagonalSystem& sys) {
    const std::size_t m = sys.diag.size();
    if (m == 0 || sys.sub.size() != m || sys.sup.size() != m || sys.rhs.size() != m)
        throw ArgumentError("thomas_solve: band/rhs sizes disagree");

    std::vector<std::complex<double>> c(m), x(m);
    std::complex<double> piv = sys.diag[0];
    if (std::abs(piv) < 1e-300) throw SolverError("thomas_solve: singular pivot at row 0");
    c[0] = sys.sup[0] / piv;
    x[0] = sys.rhs[0] / piv;
    for (std::size_t j = 1; j < m; ++j) {
        piv = sys.diag[j] - sys.sub[j] * c[j - 1];
        if (std::abs(piv) < 1e-300)
            throw SolverError("thomas_solve: singular pivot at row " + std::to_string(j));
        c[j] = sys.sup[j] / piv;
        x[j] = (sys.rhs[j] - sys.sub[j] * x[j - 1]) / piv;
    }
    for (std::size_t j = m - 1; j-- > 0;) x[j] -= c[j] * x[j + 1];
    return x;
}

} // namespace oft
