#include "oft/quadrature.hpp"

#include <cmath>

#include "oft/errors.hpp"
#include "oft/fresnel.hpp"
#include "oft/parallel.hpp"

namespace oft {

namespace {

using Cd = std::complex<double>;
constexpr Cd kI{0.0, 1.0};

// sqrt(-i/pi) = e^{-i pi/4} / sqrt(pi)
const Cd kSqrtMinusIOverPi{0.39894228040143270, -0.39894228040143270};

struct NodeData {
    double sqrt_t;
    Cd F;   // C(sqrt t) + i S(sqrt t)
    Cd rot; // sqrt(t) e^{i t}
};

NodeData node_data(double t) {
    double r = std::sqrt(t);
    NodeData d;
    d.sqrt_t = r;
    d.F = fresnel_cs(r);
    d.rot = r * Cd(std::cos(t), std::sin(t));
    return d;
}

// Exact panel weights from cached node data:
//   w1 = (1+i)/(sqrt(2 pi) h) [ rot_b - rot_a - (1 + 2 i b)(F_b - F_a) ]
//   w2 = (1+i)/(sqrt(2 pi) h) [ rot_a - rot_b + (1 + 2 i a)(F_b - F_a) ]
PanelWeights panel_closed_form(double ta, double tb, const NodeData& na, const NodeData& nb) {
    double h = tb - ta;
    Cd pref = Cd(1.0, 1.0) / (std::sqrt(2.0 * M_PI) * h);
    Cd dF = nb.F - na.F;
    Cd drot = nb.rot - na.rot;
    PanelWeights w;
    w.w1 = pref * (drot - (1.0 + 2.0 * kI * tb) * dF);
    w.w2 = pref * (-drot + (1.0 + 2.0 * kI * ta) * dF);
    return w;
}

// Narrow-panel fallback. With tau = ta + s and psi(s) = e^{is}(1 + s/ta)^{-1/2},
//   w1 = sqrt(-i/pi) e^{i ta} ta^{-1/2} h (psi0/2 + psi1 h/6 + psi2 h^2/12)
//   w2 = sqrt(-i/pi) e^{i ta} ta^{-1/2} h (psi0/2 + psi1 h/3 + psi2 h^2/4)
PanelWeights panel_taylor(double ta, double tb) {
    double h = tb - ta;
    Cd psi1 = kI - Cd(1.0 / (2.0 * ta), 0.0);
    Cd psi2 = Cd(-0.5 + 3.0 / (8.0 * ta * ta), -1.0 / (2.0 * ta));
    Cd pref = kSqrtMinusIOverPi * Cd(std::cos(ta), std::sin(ta)) / std::sqrt(ta) * h;
    PanelWeights w;
    w.w1 = pref * (0.5 + psi1 * (h / 6.0) + psi2 * (h * h / 12.0));
    w.w2 = pref * (0.5 + psi1 * (h / 3.0) + psi2 * (h * h / 4.0));
    return w;
}

bool narrow(double ta, double tb) { return ta > 0.0 && (tb - ta) < 1e-4 * ta; }

} // namespace

PanelWeights panel_weights(double ta, double tb) {
    if (!(ta >= 0.0) || !(tb > ta)) throw ArgumentError("panel_weights: need 0 <= ta < tb");
    if (narrow(ta, tb)) return panel_taylor(ta, tb);
    return panel_closed_form(ta, tb, node_data(ta), node_data(tb));
}

QuadratureWeights composite_weights(const TimeStepSchedule& schedule) {
    std::size_t N = schedule.step_count();
    if (N < 1) throw ArgumentError("composite_weights: schedule has no steps");

    QuadratureWeights q;
    q.schedule = schedule;
    q.omega.assign(N + 1, Cd(0.0, 0.0));

    const auto& t = schedule.nodes;
    NodeData left{};
    bool left_valid = false;
    for (std::size_t n = 0; n < N; ++n) {
        PanelWeights w;
        if (narrow(t[n], t[n + 1])) {
            w = panel_taylor(t[n], t[n + 1]);
            left_valid = false;
        } else {
            if (!left_valid) left = node_data(t[n]);
            NodeData right = node_data(t[n + 1]);
            w = panel_closed_form(t[n], t[n + 1], left, right);
            left = right;
            left_valid = true;
        }
        q.omega[n] += w.w1;
        q.omega[n + 1] += w.w2;
    }
    return q;
}

OftAccumulator::OftAccumulator(const QuadratureWeights& weights, const Grid& grid)
    : weights_(&weights), partial_(grid) {
    if (weights.schedule.step_count() + 1 != weights.omega.size())
        throw ArgumentError("accumulator: weights inconsistent with schedule");
}

void OftAccumulator::accumulate(const ComplexField& u) {
    require_same_grid(u.grid, partial_.grid, "accumulate");
    if (done_ >= weights_->omega.size())
        throw StateError("accumulate: more snapshots than schedule nodes");
    const Cd w = weights_->omega[done_];
    Cd* p = partial_.values.data();
    const Cd* s = u.values.data();
    parallel_for(partial_.size(), [p, s, w](std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) p[i] += w * s[i];
    });
    ++done_;
}

} // namespace oft
