#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "oft/grid.hpp"
#include "oft/schedule.hpp"

namespace oft {

/// Weights for the half-order oscillatory integral
///   sqrt(-i/pi) \int_0^{t_N} e^{i tau} tau^{-1/2} u(tau) d tau
/// with u approximated piecewise-linearly on the schedule panels. All square
/// roots are principal; sqrt(-i) = e^{-i pi/4}.
struct PanelWeights {
    std::complex<double> w1; // weight of the left node value
    std::complex<double> w2; // weight of the right node value
};

/// Closed-form weights over a single panel (ta, tb), 0 <= ta < tb:
///   w1 = sqrt(-i/pi)/(tb-ta) \int_ta^tb e^{i tau} tau^{-1/2} (tb - tau) d tau
///   w2 = sqrt(-i/pi)/(tb-ta) \int_ta^tb e^{i tau} tau^{-1/2} (tau - ta) d tau
/// evaluated via Fresnel integrals; when (tb-ta)/ta < 1e-4 the difference form
/// cancels, so a three-term Taylor expansion of the panel integrals in the
/// panel width is used instead.
PanelWeights panel_weights(double ta, double tb);

/// Composite node weights for a full schedule: omega_0 = w1 of the first
/// panel, omega_N = w2 of the last, interior nodes pick up w2 of the panel to
/// their left plus w1 of the panel to their right.
struct QuadratureWeights {
    TimeStepSchedule schedule;
    std::vector<std::complex<double>> omega; // size N+1
};

QuadratureWeights composite_weights(const TimeStepSchedule& schedule);

/// Streaming accumulator for sum_n omega_n u^n; holds only the running sum so
/// a single snapshot of the evolving field is alive at a time.
class OftAccumulator {
public:
    OftAccumulator(const QuadratureWeights& weights, const Grid& grid);

    /// Adds omega_{n_done} * u and advances. Throws StateError past the last
    /// node and ArgumentError on grid mismatch.
    void accumulate(const ComplexField& u);

    std::size_t nodes_done() const { return done_; }
    std::size_t nodes_total() const { return weights_->omega.size(); }
    const ComplexField& partial() const { return partial_; }
    ComplexField take() { return std::move(partial_); }

private:
    const QuadratureWeights* weights_;
    ComplexField partial_;
    std::size_t done_ = 0;
};

} // namespace oft
