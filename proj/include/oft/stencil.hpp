#pragma once

#include "oft/grid.hpp"

namespace oft {

/// Centered second difference along one axis: interior points carry
/// (f_{j+1} - 2 f_j + f_{j-1}) / dx^2; the two face points instead carry the
/// non-reflecting Robin closure in operator units,
///   f_j + (i/kappa) d_n f  with  d_n f  from the second-order one-sided
/// three-point stencil (-3 f_0 + 4 f_1 - f_2)/(2 dx) oriented inward.
/// Throws ArgumentError for axis >= grid dim.
ComplexField second_difference_axis(const ComplexField& f, int axis, double kappa);

/// One-sided three-point outward-normal first derivative at a face point.
/// face = 0 selects the low face, face = 1 the high face; idx is the full
/// multi-index of the point, which must lie on that face.
Complex one_sided_normal_derivative(const ComplexField& f, int axis, int face,
                                    const std::array<std::size_t, 3>& idx);

/// Discrete Helmholtz operator application: interior points evaluate
/// beta v + (Delta v)/kappa^2 with centered differences; boundary points carry
/// the Robin closure v + (i/kappa) dv/dn of the lowest axis whose face
/// contains the point, matching the rows the paraxial sweeps enforce.
ComplexField discrete_helmholtz_apply(const ComplexField& v, const RefractionField& beta,
                                      double kappa);

} // namespace oft
