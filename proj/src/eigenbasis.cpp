#include "oft/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "oft/errors.hpp"
#include "oft/parallel.hpp"

namespace oft {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex sinc_c(Complex z) {
    // sin(z)/z, series below |z| = 1e-3 where the quotient loses digits
    if (std::abs(z) < 1e-3) {
        Complex z2 = z * z;
        return 1.0 - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
    }
    return std::sin(z) / z;
}

Complex versin_c(Complex z) {
    // (1 - cos(z))/z, odd in z
    if (std::abs(z) < 1e-3) {
        Complex z2 = z * z;
        return z * (0.5 - z2 / 24.0 + z2 * z2 / 720.0);
    }
    return (1.0 - std::cos(z)) / z;
}

struct NewtonOutcome {
    Complex root;
    bool converged = false;
};

NewtonOutcome newton_refine(double alpha, double L, Complex seed) {
    Complex lam = seed;
    for (int it = 0; it < 100; ++it) {
        Complex f = characteristic(alpha, L, lam);
        Complex fp = characteristic_derivative(alpha, L, lam);
        if (std::abs(fp) < 1e-300) return {lam, false};
        Complex step = f / fp;
        lam -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(lam))) return {lam, true};
    }
    return {lam, false};
}

// |f| at a converged root sits at the evaluation noise floor, which grows
// with the (alpha^2 + lambda^2) prefactor; 1e-10 alone is unreachable for
// high modes in double precision.
bool root_is_zero(double alpha, double L, Complex lam) {
    double floor_scale = (alpha * alpha + std::norm(lam)) * 2.0 * std::cosh(L * lam.imag());
    return std::abs(characteristic(alpha, L, lam)) <= 1e-10 + 1e-13 * floor_scale;
}

// --- winding count ------------------------------------------------------

struct ContourTooClose {};

double arg_change(double alpha, double L, Complex za, Complex zb, Complex fa, Complex fb,
                  int depth, double fscale) {
    double d = std::arg(fb / fa);
    if (std::abs(d) < 1.5 || depth >= 48) {
        if (depth >= 48) throw ContourTooClose{};
        return d;
    }
    Complex zm = 0.5 * (za + zb);
    Complex fm = characteristic(alpha, L, zm);
    if (std::abs(fm) < 1e-12 * fscale) throw ContourTooClose{};
    return arg_change(alpha, L, za, zm, fa, fm, depth + 1, fscale) +
           arg_change(alpha, L, zm, zb, fm, fb, depth + 1, fscale);
}

int winding_number(double alpha, double L, const std::array<Complex, 4>& corners) {
    double scale = 0.0;
    for (const Complex& c : corners) scale = std::max(scale, alpha * alpha + std::norm(c));
    double total = 0.0;
    const int kSamples = 32;
    for (int e = 0; e < 4; ++e) {
        Complex za = corners[e];
        Complex zb = corners[(e + 1) % 4];
        Complex prev_z = za;
        Complex prev_f = characteristic(alpha, L, za);
        if (std::abs(prev_f) < 1e-12 * scale) throw ContourTooClose{};
        for (int s = 1; s <= kSamples; ++s) {
            Complex z = za + (zb - za) * (double(s) / kSamples);
            Complex f = characteristic(alpha, L, z);
            if (std::abs(f) < 1e-12 * scale) throw ContourTooClose{};
            total += arg_change(alpha, L, prev_z, z, prev_f, f, 0, scale);
            prev_z = z;
            prev_f = f;
        }
    }
    double turns = total / (2.0 * kPi);
    int count = int(std::lround(turns));
    if (std::abs(turns - double(count)) > 1e-6) throw ContourTooClose{};
    return count;
}

int count_with_retries(double alpha, double L, double x0, double x1, double y0, double y1) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        double jitter = attempt * 7.3e-4 * (kPi / L);
        // a lower-half band must keep its top edge below the real axis, or
        // the jittered contour walks onto the trivial zero
        double top = y1 + jitter;
        if (y1 < 0.0) top = std::min(top, 0.5 * y1);
        std::array<Complex, 4> corners{Complex(x0 - jitter, y0 - jitter),
                                       Complex(x1 + jitter, y0 - jitter),
                                       Complex(x1 + jitter, top),
                                       Complex(x0 - jitter, top)};
        try {
            return winding_number(alpha, L, corners);
        } catch (const ContourTooClose&) {
            continue;
        }
    }
    throw SolverError("root-count contour keeps passing near a characteristic zero");
}

int stable_count(double alpha, double L, double x0, double x1) {
    double y = alpha + 1.0;
    int prev = count_with_retries(alpha, L, x0, x1, -y, y);
    for (int i = 0; i < 6; ++i) {
        y *= 2.0;
        int next = count_with_retries(alpha, L, x0, x1, -y, y);
        if (next == prev) return next;
        prev = next;
    }
    throw SolverError("root count did not stabilize while growing the window");
}

// roots in the open lower-half band x0 < Re < x1, Im < 0, grown downward
// until the tally stops changing; the top edge sits just below the real axis
// so the trivial zero and the real-axis limit points stay out
int stable_band_count(double alpha, double L, double x0, double x1) {
    double eps = 1e-3 * kPi / L;
    double y = alpha + 1.0;
    int prev = count_with_retries(alpha, L, x0, x1, -y, -eps);
    for (int i = 0; i < 6; ++i) {
        y *= 2.0;
        int next = count_with_retries(alpha, L, x0, x1, -y, -eps);
        if (next == prev) return next;
        prev = next;
    }
    throw SolverError("root count did not stabilize while growing the window");
}

// Newton sweep over a seed lattice inside one band that the winding count
// says still holds unfound roots
std::vector<Complex> hunt_band(double alpha, double L, double x0, double x1,
                               const std::vector<Complex>& known, int missing) {
    double depth_scale = std::max(1.0, alpha / 10.0);
    std::vector<Complex> found;
    for (double depth : {0.02, 0.06, 0.18, 0.55, 1.7, 5.0, 15.0}) {
        for (int i = 1; i <= 7 && int(found.size()) < missing; ++i) {
            Complex seed(x0 + (x1 - x0) * double(i) / 8.0, -depth * depth_scale);
            NewtonOutcome out = newton_refine(alpha, L, seed);
            if (!out.converged) continue;
            Complex r = out.root;
            if (!(r.imag() < 0.0) || r.real() <= x0 || r.real() >= x1) continue;
            if (!root_is_zero(alpha, L, r)) continue;
            bool dup = false;
            for (const Complex& q : known)
                if (std::abs(q - r) < 1e-7 * (1.0 + std::abs(q))) dup = true;
            for (const Complex& q : found)
                if (std::abs(q - r) < 1e-7 * (1.0 + std::abs(q))) dup = true;
            if (!dup) found.push_back(r);
        }
        if (int(found.size()) >= missing) break;
    }
    return found;
}

// --- synthesis ----------------------------------------------------------

// phi tables per axis: row k holds phi_k at every grid point of the axis;
// virtual axes collapse to the 1x1 identity.
std::vector<Complex> phi_table(const ModalExpansion& exp, const Grid& grid, int axis) {
    if (axis >= grid.dim) return {Complex(1.0, 0.0)};
    const ModalAxis& ax = exp.axes[axis];
    std::size_t K = ax.basis.count();
    std::size_t n = grid.n[axis];
    std::vector<Complex> table(K * n);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t i = 0; i < n; ++i)
            table[k * n + i] = ax.basis.phi(k, grid.coordinate(axis, i) - ax.x_left);
    return table;
}

Complex lambda_or_zero(const ModalExpansion& exp, int axis, std::size_t k) {
    if (axis >= int(exp.axes.size())) return Complex(0.0, 0.0);
    return exp.axes[axis].basis.lambdas[k];
}

ComplexField synthesize(const ModalExpansion& exp, const Grid& grid,
                        const std::vector<Complex>& scaled) {
    if (int(exp.axes.size()) != grid.dim)
        throw ArgumentError("expansion dimension differs from grid dimension");
    for (int a = 0; a < grid.dim; ++a) {
        const ModalAxis& ax = exp.axes[a];
        if (std::abs(ax.basis.L - grid.edge_length(a)) > 1e-9 * (1.0 + ax.basis.L) ||
            std::abs(ax.x_left - grid.lower[a]) > 1e-12 * (1.0 + std::abs(ax.x_left)))
            throw ArgumentError("expansion interval differs from grid axis " + std::to_string(a));
    }
    std::size_t K0 = exp.K[0], K1 = exp.K[1], K2 = exp.K[2];
    std::size_t n0 = grid.n[0], n1 = grid.n[1], n2 = grid.n[2];
    std::vector<Complex> P0 = phi_table(exp, grid, 0);
    std::vector<Complex> P1 = phi_table(exp, grid, 1);
    std::vector<Complex> P2 = phi_table(exp, grid, 2);

    // contract modes to grid points one axis at a time
    std::vector<Complex> t1(n0 * K1 * K2);
    parallel_for(K1 * K2, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c)
            for (std::size_t i0 = 0; i0 < n0; ++i0) {
                Complex acc(0.0, 0.0);
                for (std::size_t l = 0; l < K0; ++l) acc += P0[l * n0 + i0] * scaled[l + K0 * c];
                t1[i0 + n0 * c] = acc;
            }
    });
    std::vector<Complex> t2(n0 * n1 * K2);
    parallel_for(K2 * n1, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c) {
            std::size_t i1 = c % n1, nn = c / n1;
            for (std::size_t i0 = 0; i0 < n0; ++i0) {
                Complex acc(0.0, 0.0);
                for (std::size_t m = 0; m < K1; ++m)
                    acc += P1[m * n1 + i1] * t1[i0 + n0 * (m + K1 * nn)];
                t2[i0 + n0 * (i1 + n1 * nn)] = acc;
            }
        }
    });
    ComplexField out(grid);
    parallel_for(n2 * n1, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c) {
            std::size_t i1 = c % n1, i2 = c / n1;
            for (std::size_t i0 = 0; i0 < n0; ++i0) {
                Complex acc(0.0, 0.0);
                for (std::size_t nn = 0; nn < K2; ++nn)
                    acc += P2[nn * n2 + i2] * t2[i0 + n0 * (i1 + n1 * nn)];
                out.values[i0 + n0 * (i1 + n1 * i2)] = acc;
            }
        }
    });
    return out;
}

template <typename Mult>
std::vector<Complex> scaled_coeffs(const ModalExpansion& exp, const Mult& mult) {
    std::vector<Complex> scaled(exp.coeffs.size());
    std::size_t K0 = exp.K[0], K1 = exp.K[1];
    for (std::size_t idx = 0; idx < scaled.size(); ++idx) {
        std::size_t l = idx % K0, m = (idx / K0) % K1, nn = idx / (K0 * K1);
        Complex lam2 = lambda_or_zero(exp, 0, l) * lambda_or_zero(exp, 0, l) +
                       lambda_or_zero(exp, 1, m) * lambda_or_zero(exp, 1, m) +
                       lambda_or_zero(exp, 2, nn) * lambda_or_zero(exp, 2, nn);
        scaled[idx] = exp.coeffs[idx] * mult(lam2, l, m, nn);
    }
    return scaled;
}

} // namespace

Complex characteristic(double alpha, double L, Complex lambda) {
    return (alpha * alpha + lambda * lambda) * std::sin(L * lambda) +
           2.0 * Complex(0.0, 1.0) * alpha * lambda * std::cos(L * lambda);
}

Complex characteristic_derivative(double alpha, double L, Complex lambda) {
    Complex s = std::sin(L * lambda), c = std::cos(L * lambda);
    const Complex I(0.0, 1.0);
    return 2.0 * lambda * s + L * (alpha * alpha + lambda * lambda) * c + 2.0 * I * alpha * c -
           2.0 * I * alpha * lambda * L * s;
}

Complex EigenBasis::phi(std::size_t n, double xi) const {
    Complex lam = lambdas[n];
    return norm_consts[n] *
           (std::cos(lam * xi) - Complex(0.0, 1.0) * (alpha / lam) * std::sin(lam * xi));
}

EigenBasis find_eigenvalues(double alpha, double L, std::size_t K) {
    if (!(alpha > 0.0) || !(L > 0.0) || K < 1)
        throw ArgumentError("eigenbasis needs alpha > 0, L > 0, K >= 1");
    // pass 1: march the sin-asymptotic family, one root per unit band
    std::vector<Complex> roots;
    roots.reserve(K + 1);
    for (std::size_t n = 1; n <= K; ++n) {
        double k = double(n) * kPi / L;
        std::vector<Complex> seeds;
        // leading-order interior correction, then continuation from the
        // previous root, then a ladder of trial depths for the band where the
        // boundary absorption is strongest (Re lambda near alpha)
        seeds.push_back(Complex(k, -2.0 * k / (alpha * L)));
        if (!roots.empty()) {
            seeds.push_back(roots.back() + Complex(kPi / L, 0.0));
            seeds.push_back(Complex(k, roots.back().imag()));
        }
        seeds.push_back(Complex(k, -2.0 * alpha / (k * L)));
        for (double depth : {0.25, 0.5, 1.0, 2.0, 4.0}) seeds.push_back(Complex(k, -depth));
        bool found = false;
        for (const Complex& seed : seeds) {
            NewtonOutcome out = newton_refine(alpha, L, seed);
            if (out.converged && out.root.imag() < 0.0 &&
                std::abs(out.root.real() - k) < kPi / (2.0 * L) &&
                root_is_zero(alpha, L, out.root)) {
                roots.push_back(out.root);
                found = true;
                break;
            }
        }
        if (!found)
            throw SolverError("eigenvalue search failed for mode " + std::to_string(n));
    }
    // pass 2: the march only sees one root per band, but the spectrum also
    // carries a pair descended from the zeros of alpha^2 + lambda^2 that
    // settles between two family roots (near Re = alpha); certify every band
    // by winding count and hunt wherever the tally comes up short
    for (std::size_t j = 0; j <= K; ++j) {
        double x0 = (j == 0) ? 1e-3 * kPi / L : (double(j) - 0.5) * kPi / L;
        double x1 = (double(j) + 0.5) * kPi / L;
        int have = 0;
        for (const Complex& r : roots)
            if (r.real() > x0 && r.real() < x1) ++have;
        int want = stable_band_count(alpha, L, x0, x1);
        if (want < have)
            throw SolverError("root count disagrees with located eigenvalues near Re = " +
                              std::to_string(0.5 * (x0 + x1)));
        if (want > have) {
            std::vector<Complex> extra = hunt_band(alpha, L, x0, x1, roots, want - have);
            if (int(extra.size()) != want - have)
                throw SolverError("winding count reports an unfound eigenvalue near Re = " +
                                  std::to_string(0.5 * (x0 + x1)));
            roots.insert(roots.end(), extra.begin(), extra.end());
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
    roots.resize(K);

    EigenBasis basis;
    basis.alpha = alpha;
    basis.L = L;
    basis.lambdas = std::move(roots);
    basis.norm_consts.reserve(K);
    for (const Complex& lam : basis.lambdas)
        basis.norm_consts.push_back(1.0 / std::sqrt(1.0 + alpha * alpha / std::norm(lam)));
    return basis;
}

int count_roots_in_rectangle(double alpha, double L, int n, double Y) {
    if (!(alpha > 0.0) || !(L > 0.0) || n < 0) throw ArgumentError("bad root-count arguments");
    double X = (double(n) + 0.5) * kPi / L;
    if (Y > 0.0) return count_with_retries(alpha, L, -X, X, -Y, Y);
    return stable_count(alpha, L, -X, X);
}

int count_roots_right_quadrant(double alpha, double L, int n, double Y) {
    if (!(alpha > 0.0) || !(L > 0.0) || n < 0) throw ArgumentError("bad root-count arguments");
    double eps = 1e-3 * kPi / L;
    double X = (2.0 * double(n) + 0.5) * kPi / L;
    if (Y > 0.0) return count_with_retries(alpha, L, eps, X, -Y, -eps);
    double y = alpha + 1.0;
    int prev = count_with_retries(alpha, L, eps, X, -y, -eps);
    for (int i = 0; i < 6; ++i) {
        y *= 2.0;
        int next = count_with_retries(alpha, L, eps, X, -y, -eps);
        if (next == prev) return next;
        prev = next;
    }
    throw SolverError("root count did not stabilize while growing the window");
}

Complex eigen_inner_product(const EigenBasis& basis, std::size_t m, std::size_t n) {
    if (m >= basis.count() || n >= basis.count()) throw ArgumentError("mode index out of range");
    double a = basis.alpha, L = basis.L;
    Complex p = std::conj(basis.lambdas[m]);
    Complex q = basis.lambdas[n];
    Complex dz = (p - q) * L, sz = (p + q) * L;
    Complex Icc = 0.5 * L * (sinc_c(dz) + sinc_c(sz));
    Complex Iss = 0.5 * L * (sinc_c(dz) - sinc_c(sz));
    Complex Isc = 0.5 * L * (versin_c(sz) + versin_c(dz));
    Complex Ics = 0.5 * L * (versin_c(sz) - versin_c(dz));
    const Complex I(0.0, 1.0);
    double cc = basis.norm_consts[m] * basis.norm_consts[n];
    return cc * (Icc + I * (a / p) * Isc - I * (a / q) * Ics + (a * a / (p * q)) * Iss);
}

ModalExpansion expand_function(const EigenBasis& basis, double x_left,
                               const std::function<Complex(double)>& g) {
    std::size_t K = basis.count();
    if (K == 0) throw ArgumentError("empty basis");
    Eigen::MatrixXcd G(K, K);
    for (std::size_t m = 0; m < K; ++m)
        for (std::size_t n = 0; n < K; ++n) G(m, n) = eigen_inner_product(basis, m, n);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(G);
    double rc = lu.rcond();
    bool ill = !(rc > 0.0) || (1.0 / rc) > 1e12;

    double L = basis.L;
    Eigen::VectorXcd b(K), prev(K);
    std::vector<double> xs, ws;
    std::vector<Complex> gvals;
    std::size_t nq = 64;
    bool have_prev = false;
    for (;;) {
        detail::fejer_rule(nq, xs, ws);
        b.setZero();
        gvals.resize(nq);
        for (std::size_t kq = 0; kq < nq; ++kq) gvals[kq] = g(x_left + (xs[kq] + 1.0) * L / 2.0);
        for (std::size_t m = 0; m < K; ++m) {
            Complex acc(0.0, 0.0);
            for (std::size_t kq = 0; kq < nq; ++kq) {
                double xi = (xs[kq] + 1.0) * L / 2.0;
                acc += (ws[kq] * L / 2.0) * std::conj(basis.phi(m, xi)) * gvals[kq];
            }
            b(m) = acc;
        }
        if (have_prev) {
            double diff = 0.0;
            for (std::size_t m = 0; m < K; ++m) diff = std::max(diff, std::abs(b(m) - prev(m)));
            if (diff < 1e-10) break;
        }
        if (nq >= 8192) break;
        prev = b;
        have_prev = true;
        nq *= 2;
    }
    Eigen::VectorXcd c = lu.solve(b);

    double resid = 0.0;
    for (std::size_t kq = 0; kq < nq; ++kq) {
        double xi = (xs[kq] + 1.0) * L / 2.0;
        Complex recon(0.0, 0.0);
        for (std::size_t m = 0; m < K; ++m) recon += c(m) * basis.phi(m, xi);
        resid = std::max(resid, std::abs(recon - gvals[kq]));
    }

    ModalExpansion exp;
    exp.axes.push_back(ModalAxis{basis, x_left});
    exp.K = {K, 1, 1};
    exp.coeffs.assign(c.data(), c.data() + K);
    exp.ill_conditioned = ill;
    exp.expansion_residual = resid;
    return exp;
}

ModalExpansion expand_separable(const std::vector<ModalAxis>& axes,
                                const std::vector<std::function<Complex(double)>>& factors) {
    if (axes.empty() || axes.size() != factors.size() || axes.size() > 3)
        throw ArgumentError("separable expansion needs 1-3 matching axes and factors");
    std::vector<ModalExpansion> parts;
    for (std::size_t a = 0; a < axes.size(); ++a)
        parts.push_back(expand_function(axes[a].basis, axes[a].x_left, factors[a]));
    ModalExpansion exp;
    exp.K = {1, 1, 1};
    for (std::size_t a = 0; a < axes.size(); ++a) {
        exp.axes.push_back(axes[a]);
        exp.K[a] = parts[a].K[0];
        exp.ill_conditioned = exp.ill_conditioned || parts[a].ill_conditioned;
        exp.expansion_residual = std::max(exp.expansion_residual, parts[a].expansion_residual);
    }
    exp.coeffs.resize(exp.K[0] * exp.K[1] * exp.K[2]);
    for (std::size_t nn = 0; nn < exp.K[2]; ++nn)
        for (std::size_t m = 0; m < exp.K[1]; ++m)
            for (std::size_t l = 0; l < exp.K[0]; ++l) {
                Complex v = parts[0].coeffs[l];
                if (axes.size() > 1) v *= parts[1].coeffs[m];
                if (axes.size() > 2) v *= parts[2].coeffs[nn];
                exp.coeffs[l + exp.K[0] * (m + exp.K[1] * nn)] = v;
            }
    return exp;
}

ComplexField exact_paraxial(const ModalExpansion& exp, const Grid& grid, double kappa, double t) {
    if (!(kappa > 0.0) || t < 0.0) throw ArgumentError("exact_paraxial needs kappa > 0, t >= 0");
    const Complex I(0.0, 1.0);
    auto scaled = scaled_coeffs(exp, [&](Complex lam2, std::size_t, std::size_t, std::size_t) {
        return std::exp(-I * lam2 * t / (kappa * kappa));
    });
    return synthesize(exp, grid, scaled);
}

std::pair<ComplexField, ComplexField> exact_v1_v2(const ModalExpansion& exp, const Grid& grid,
                                                  double kappa) {
    if (!(kappa > 0.0)) throw ArgumentError("exact_v1_v2 needs kappa > 0");
    auto denom = [&](Complex lam2, std::size_t l, std::size_t m, std::size_t nn) {
        Complex z = 1.0 - lam2 / (kappa * kappa);
        if (std::abs(z) < 1e-8)
            throw SolverError("modal resonance at mode (" + std::to_string(l) + "," +
                              std::to_string(m) + "," + std::to_string(nn) + ")");
        return z;
    };
    auto s1 = scaled_coeffs(exp, [&](Complex lam2, std::size_t l, std::size_t m, std::size_t nn) {
        return 1.0 / std::sqrt(denom(lam2, l, m, nn));
    });
    auto s2 = scaled_coeffs(exp, [&](Complex lam2, std::size_t l, std::size_t m, std::size_t nn) {
        return 1.0 / denom(lam2, l, m, nn);
    });
    return {synthesize(exp, grid, s1), synthesize(exp, grid, s2)};
}

DecayRates asymptotic_decay(double kappa, const std::vector<double>& edge_lengths) {
    if (!(kappa > 0.0) || edge_lengths.empty()) throw ArgumentError("bad decay-rate arguments");
    double a = 0.0, b = 0.0;
    for (double L : edge_lengths) {
        if (!(L > 0.0)) throw ArgumentError("edge lengths must be positive");
        a += 1.0 / (L * L * L);
        b += 1.0 / (L * L);
    }
    double pi2 = kPi * kPi;
    return {4.0 * pi2 / (kappa * kappa * kappa) * a, pi2 / (kappa * kappa) * b};
}

std::size_t default_mode_count(double kappa, double L) {
    return std::size_t(std::ceil(3.0 * kappa * L / kPi));
}

namespace detail {

void fejer_rule(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        double theta = (2.0 * double(k) + 1.0) * kPi / (2.0 * double(n));
        nodes[k] = std::cos(theta);
        double s = 0.0;
        for (std::size_t m = 1; m <= n / 2; ++m)
            s += std::cos(2.0 * double(m) * theta) / (4.0 * double(m) * double(m) - 1.0);
        weights[k] = (2.0 / double(n)) * (1.0 - 2.0 * s);
    }
}

} // namespace detail

} // namespace oft
