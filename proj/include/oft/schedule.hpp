#pragma once

#include <cstddef>
#include <vector>

namespace oft {

/// Exponential pseudo-time grid t_n = a (b^n - 1), n = 0..N. Consecutive step
/// sizes grow by the fixed ratio b, so t_1 = dt0 while late steps approach the
/// target terminal step size.
struct TimeStepSchedule {
    double a = 0.0;
    double b = 1.0;
    double dt0 = 0.0;
    std::vector<double> nodes; // t_0 = 0 .. t_N, strictly increasing

    std::size_t step_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    double t_final() const { return nodes.back(); }

    /// Step sizes dt_n = t_{n+1} - t_n, n = 0..N-1.
    std::vector<double> step_sizes() const;

    /// Nodes from raw parameters (a, b, N); used by tests and by explicit-count
    /// construction.
    static TimeStepSchedule from_parameters(double a, double b, std::size_t count);
};

/// Builds the schedule from the first step size dt0, the terminal step size
/// dtT, and the target final time T:
///   R = dtT/dt0 - 1,  a = T/R,  b = 1 + R dt0 / T,
/// with N the smallest integer such that t_N >= T.
/// Throws ArgumentError when dtT <= dt0 (degenerate ratio) or T <= dtT.
TimeStepSchedule build_schedule(double dt0, double dtT, double T);

/// Same (a, b) parameters, but with an explicitly requested number of steps.
/// The final node may fall short of or overshoot T; callers that reproduce
/// published step counts use this form.
TimeStepSchedule build_schedule_with_count(double dt0, double dtT, double T, std::size_t count);

} // namespace oft
