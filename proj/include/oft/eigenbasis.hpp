#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "oft/grid.hpp"

namespace oft {

/// Characteristic function of the impedance eigenproblem
///   phi'' = -lambda^2 phi,  alpha phi - i phi' = 0 at 0,  alpha phi + i phi' = 0 at L:
///   f(lambda) = (alpha^2 + lambda^2) sin(L lambda) + 2 i alpha lambda cos(L lambda).
Complex characteristic(double alpha, double L, Complex lambda);
Complex characteristic_derivative(double alpha, double L, Complex lambda);

/// First K eigenvalues with positive real part, sorted by real part. Most
/// track n pi/L, but one extra root (descended from the zeros of
/// alpha^2 + lambda^2) sits between the sine-family bands near Re = alpha, so
/// indices shift by one past it. The basis is complete but not orthogonal;
/// expansions go through the Gram matrix.
struct EigenBasis {
    double alpha = 0.0;
    double L = 0.0;
    std::vector<Complex> lambdas;     // Re > 0 ascending, Im < 0
    std::vector<double> norm_consts;  // C_n = (1 + alpha^2/|lambda_n|^2)^{-1/2}

    std::size_t count() const { return lambdas.size(); }
    /// phi_n(xi) = C_n (cos(lambda_n xi) - i (alpha/lambda_n) sin(lambda_n xi)), xi in [0,L].
    Complex phi(std::size_t n, double xi) const;
};

EigenBasis find_eigenvalues(double alpha, double L, std::size_t K);

/// Zeros of the characteristic function inside |Re| < (n+1/2) pi/L, |Im| < Y,
/// by the argument principle on the rectangle boundary. Y <= 0 starts at
/// alpha + 1 and doubles until two successive counts agree.
int count_roots_in_rectangle(double alpha, double L, int n, double Y = 0.0);

/// Same count over the inset quarter {eps < Re < (2n+1/2) pi/L, -Y < Im < -eps},
/// which excludes the zero at the origin and everything with Re <= 0.
int count_roots_right_quadrant(double alpha, double L, int n, double Y = 0.0);

/// Gram entry (phi_m, phi_n) = int_0^L conj(phi_m) phi_n, in closed form
/// (products of trigonometric antiderivatives; series-stabilized when
/// conj(lambda_m)^2 is within 1e-6 relative of lambda_n^2).
Complex eigen_inner_product(const EigenBasis& basis, std::size_t m, std::size_t n);

struct ModalAxis {
    EigenBasis basis;
    double x_left = 0.0;
};

/// Coefficient tensor of an expansion g = sum c_{lmn} phi_l phi_m phi_n
/// (axis-0 index fastest). Virtual axes hold one unit coefficient.
struct ModalExpansion {
    std::vector<ModalAxis> axes;
    std::array<std::size_t, 3> K{{1, 1, 1}};
    std::vector<Complex> coeffs;
    bool ill_conditioned = false;      // Gram condition estimate above 1e12
    double expansion_residual = 0.0;   // max reconstruction error at the final quadrature nodes
};

/// Expands g over basis by solving the Gram system; right-hand sides are
/// Fejer-rule integrals with the node count doubled until they settle below
/// 1e-10.
ModalExpansion expand_function(const EigenBasis& basis, double x_left,
                               const std::function<Complex(double)>& g);

/// Tensor-product expansion of a separable function, one factor per axis.
ModalExpansion expand_separable(const std::vector<ModalAxis>& axes,
                                const std::vector<std::function<Complex(double)>>& factors);

/// u(x,t) = sum c e^{-i (lambda_l^2 + lambda_m^2 + lambda_n^2) t / kappa^2} Phi(x).
ComplexField exact_paraxial(const ModalExpansion& exp, const Grid& grid, double kappa, double t);

/// Reference fields for the two operator passes: modal multipliers
/// (1 - sum lambda^2/kappa^2)^{-1/2} and (1 - sum lambda^2/kappa^2)^{-1},
/// principal square root. Throws when a denominator is within 1e-8 of zero.
std::pair<ComplexField, ComplexField> exact_v1_v2(const ModalExpansion& exp, const Grid& grid,
                                                  double kappa);

/// Late-time envelope rates of the free paraxial evolution on a box:
/// u ~ t^{-d} e^{-(a_d + i b_d) t}, a_d = (4 pi^2/kappa^3) sum 1/L^3,
/// b_d = (pi^2/kappa^2) sum 1/L^2.
struct DecayRates {
    double a_d;
    double b_d;
};
DecayRates asymptotic_decay(double kappa, const std::vector<double>& edge_lengths);

/// Modes per axis that push modal truncation safely below grid error.
std::size_t default_mode_count(double kappa, double L);

namespace detail {
/// Fejer first-rule nodes and weights on [-1, 1] (open rule; nodes are
/// Chebyshev points, so doubling the count nests refinement checks cheaply).
void fejer_rule(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);
} // namespace detail

} // namespace oft
