#pragma once

#include <complex>
#include <vector>

namespace oft {

/// Complex tridiagonal system; sub[0] and sup[m-1] are ignored.
struct TridiagonalSystem {
    std::vector<std::complex<double>> sub;
    std::vector<std::complex<double>> diag;
    std::vector<std::complex<double>> sup;
    std::vector<std::complex<double>> rhs;
};

/// Thomas elimination without pivoting. Throws SolverError when a pivot
/// magnitude falls below 1e-300.
std::vector<std::complex<double>> thomas_solve(const TridiagonalSystem& sys);

} // namespace oft
