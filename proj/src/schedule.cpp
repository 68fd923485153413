#include "oft/schedule.hpp"

#include <cmath>

#include "oft/errors.hpp"

namespace oft {

namespace {

// nodes via expm1/log1p so that t_1 == dt0 to relative 1e-12 even when b-1 is
// tiny.
std::vector<double> make_nodes(double a, double log_b, std::size_t count) {
    std::vector<double> t(count + 1);
    for (std::size_t n = 0; n <= count; ++n) t[n] = a * std::expm1(double(n) * log_b);
    return t;
}

} // namespace

std::vector<double> TimeStepSchedule::step_sizes() const {
    std::vector<double> dt(step_count());
    for (std::size_t n = 0; n < dt.size(); ++n) dt[n] = nodes[n + 1] - nodes[n];
    return dt;
}

TimeStepSchedule TimeStepSchedule::from_parameters(double a, double b, std::size_t count) {
    if (!(a > 0.0) || !(b > 1.0)) throw ArgumentError("schedule: need a > 0 and b > 1");
    if (count < 1) throw ArgumentError("schedule: need at least one step");
    TimeStepSchedule s;
    s.a = a;
    s.b = b;
    s.nodes = make_nodes(a, std::log(b), count);
    s.dt0 = s.nodes[1];
    return s;
}

TimeStepSchedule build_schedule(double dt0, double dtT, double T) {
    if (!(dt0 > 0.0)) throw ArgumentError("schedule: dt0 must be positive");
    if (!(dtT > dt0)) throw ArgumentError("schedule: degenerate ratio, need dtT > dt0");
    if (!(T > dtT)) throw ArgumentError("schedule: need T > dtT");

    double R = dtT / dt0 - 1.0;
    double a = T / R;
    double x = R * dt0 / T; // b  = 1 + x
    double log_b = std::log1p(x);

    // smallest N with t_N >= T, i.e. b^N >= R + 1
    auto node = [&](std::size_t n) { return a * std::expm1(double(n) * log_b); };
    auto N = static_cast<std::size_t>(std::ceil(std::log1p(R) / log_b - 1e-12));
    if (N < 1) N = 1;
    while (node(N) < T) ++N;
    while (N > 1 && node(N - 1) >= T) --N;

    TimeStepSchedule s;
    s.a = a;
    s.b = 1.0 + x;
    s.dt0 = dt0;
    s.nodes = make_nodes(a, log_b, N);
    return s;
}

TimeStepSchedule build_schedule_with_count(double dt0, double dtT, double T, std::size_t count) {
    if (!(dt0 > 0.0)) throw ArgumentError("schedule: dt0 must be positive");
    if (!(dtT > dt0)) throw ArgumentError("schedule: degenerate ratio, need dtT > dt0");
    if (!(T > dtT)) throw ArgumentError("schedule: need T > dtT");
    if (count < 1) throw ArgumentError("schedule: need at least one step");

    double R = dtT / dt0 - 1.0;
    double a = T / R;
    double x = R * dt0 / T;

    TimeStepSchedule s;
    s.a = a;
    s.b = 1.0 + x;
    s.dt0 = dt0;
    s.nodes = make_nodes(a, std::log1p(x), count);
    return s;
}

} // namespace oft
