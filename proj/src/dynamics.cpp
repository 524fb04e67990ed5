#include <curvosc/dynamics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace curvosc::dyn {

namespace {

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

mech::CartVel to_state(const State& s) { return {s[0], s[1], s[2], s[3]}; }

State from_state(const mech::CartVel& s) { return State{s.x, s.y, s.vx, s.vy}; }

double error_norm(const State& err, const State& y0, const State& y1, double tol) {
    double acc = 0;
    for (int i = 0; i < 4; ++i) {
        const double sc = tol + tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
        acc += (err[i] / sc) * (err[i] / sc);
    }
    return std::sqrt(acc / 4.0);
}

double initial_step(const State& y, const State& f, double kappa, double alpha,
                    double t_end, IntegratorStats& stats) {
    const double d0 = y.norm();
    const double d1 = f.norm();
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, t_end);
    State y1 = y + h0 * f;
    State f1;
    try {
        f1 = eom_rhs(y1, kappa, alpha);
        ++stats.rhs_evals;
    } catch (const std::domain_error&) {
        return h0 * 1e-3;
    }
    const double d2 = (f1 - f).norm() / h0;
    double h1;
    if (std::max(d1, d2) <= 1e-15)
        h1 = std::max(1e-6, h0 * 1e-3);
    else
        h1 = std::pow(0.01 / std::max(d1, d2), 0.2);
    return std::min({100 * h0, h1, t_end});
}

}  // namespace

State eom_rhs(const State& s, double kappa, double alpha) {
    const double r2 = s[0] * s[0] + s[1] * s[1];
    const double u = 1.0 - kappa * r2;
    if (u < kDomainMargin)
        throw std::domain_error("eom_rhs: reached the chart boundary 1 - kappa r^2 < margin");
    const double w = s[0] * s[3] - s[1] * s[2];
    const double v2 = s[2] * s[2] + s[3] * s[3];
    const double coef = (kappa * (v2 - kappa * w * w) + alpha * alpha) / u;
    return State{s[2], s[3], -coef * s[0], -coef * s[1]};
}

Trajectory integrate(const mech::CartVel& initial, double kappa, double alpha,
                     double t_end, double tol, double dt_sample) {
    if (!(tol >= 1e-13 && tol <= 1e-6))
        throw std::invalid_argument("integrate: tol outside [1e-13, 1e-6]");
    if (!(t_end > 0) || !(dt_sample > 0))
        throw std::invalid_argument("integrate: t_end and dt_sample must be positive");

    Trajectory traj;
    traj.kappa = kappa;
    traj.alpha = alpha;
    traj.stats.tol = tol;
    // the controller aims well below the requested bound so the accepted
    // per-step error stays under tol with margin
    const double tol_int = tol * 0.05;

    State y = from_state(initial);
    double t = 0.0;
    traj.t.push_back(t);
    traj.states.push_back(initial);

    State k1 = eom_rhs(y, kappa, alpha);
    ++traj.stats.rhs_evals;
    double h_ctrl = initial_step(y, k1, kappa, alpha, t_end, traj.stats);

    // PI controller constants as in classic embedded 5(4) implementations.
    constexpr double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
    constexpr double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
    double facold = 1e-4;

    double next_sample = dt_sample;
    const double uround = std::numeric_limits<double>::epsilon();

    while (t < t_end * (1.0 - 1e-14)) {
        if (h_ctrl < 64 * uround * std::max(1.0, std::abs(t))) {
            traj.domain_exit = true;  // step size collapsed at the boundary
            break;
        }
        const double target = std::min(next_sample, t_end);
        const bool clipped = t + h_ctrl >= target - 1e-14;
        const double h = clipped ? target - t : h_ctrl;

        State k2, k3, k4, k5, k6, k7, y1;
        try {
            k2 = eom_rhs(y + h * (a21 * k1), kappa, alpha);
            k3 = eom_rhs(y + h * (a31 * k1 + a32 * k2), kappa, alpha);
            k4 = eom_rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3), kappa, alpha);
            k5 = eom_rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4),
                         kappa, alpha);
            k6 = eom_rhs(
                y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5),
                kappa, alpha);
            y1 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
            k7 = eom_rhs(y1, kappa, alpha);
            traj.stats.rhs_evals += 6;
        } catch (const std::domain_error&) {
            ++traj.stats.rejected;
            h_ctrl = 0.25 * h;
            continue;
        }

        const State err_vec =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double err = error_norm(err_vec, y, y1, tol_int);

        const double fac11 = std::pow(std::max(err, 1e-30), expo1);
        if (err <= 1.0) {
            facold = std::max(err, 1e-4);
            t += h;
            y = y1;
            k1 = k7;  // FSAL
            ++traj.stats.accepted;
            if (clipped && t >= next_sample - 1e-12) {
                traj.t.push_back(t);
                traj.states.push_back(to_state(y));
                next_sample += dt_sample;
            }
            if (!clipped) {
                double fac = fac11 / std::pow(facold, beta);
                fac = std::max(facc2, std::min(facc1, fac / safe));
                h_ctrl = h / fac;
            }
            // a clipped step was shorter than the controller's choice, so
            // its error says nothing against h_ctrl; keep it
        } else {
            ++traj.stats.rejected;
            h_ctrl = h / std::min(facc1, fac11 / safe);
        }
    }
    traj.t_reached = t;
    return traj;
}

Trajectory rk4_integrate(const mech::CartVel& initial, double kappa,
                         double alpha, double t_end, double h,
                         double dt_sample) {
    Trajectory traj;
    traj.kappa = kappa;
    traj.alpha = alpha;
    traj.stats.tol = 0;

    State y = from_state(initial);
    double t = 0;
    traj.t.push_back(0);
    traj.states.push_back(initial);
    double next_sample = dt_sample;

    const long n = std::lround(t_end / h);
    for (long i = 0; i < n; ++i) {
        const State k1 = eom_rhs(y, kappa, alpha);
        const State k2 = eom_rhs(y + 0.5 * h * k1, kappa, alpha);
        const State k3 = eom_rhs(y + 0.5 * h * k2, kappa, alpha);
        const State k4 = eom_rhs(y + h * k3, kappa, alpha);
        y += (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
        t = (i + 1) * h;
        traj.stats.accepted++;
        traj.stats.rhs_evals += 4;
        if (t >= next_sample - 1e-12) {
            traj.t.push_back(t);
            traj.states.push_back(to_state(y));
            next_sample += dt_sample;
        }
    }
    traj.t_reached = t;
    return traj;
}

ConservationReport conservation_report(const Trajectory& traj) {
    if (traj.states.empty())
        throw std::invalid_argument("conservation_report: empty trajectory");
    const mech::PhysConstants consts{1.0, traj.alpha, 1.0};

    auto evaluate = [&](const mech::CartVel& s, double out[4]) {
        const mech::CartMom p = mech::momenta(s, traj.kappa, consts);
        const mech::NoetherMomenta nm = mech::noether(p, traj.kappa);
        out[0] = mech::hamiltonian(p, traj.kappa, consts);
        out[1] = nm.p1;
        out[2] = nm.p2;
        out[3] = nm.j;
    };

    double first[4];
    evaluate(traj.states.front(), first);
    QuantityDrift drift[4];
    for (int q = 0; q < 4; ++q) drift[q].initial = first[q];

    for (const auto& s : traj.states) {
        double cur[4];
        evaluate(s, cur);
        for (int q = 0; q < 4; ++q) {
            const double d = std::abs(cur[q] - first[q]);
            drift[q].max_abs = std::max(drift[q].max_abs, d);
        }
    }
    for (int q = 0; q < 4; ++q) {
        const double scale = std::abs(drift[q].initial);
        drift[q].max_rel = scale > 1e-12 ? drift[q].max_abs / scale : drift[q].max_abs;
    }
    return {drift[0], drift[1], drift[2], drift[3]};
}

SinusoidFit fit_sinusoid(std::span<const double> t, std::span<const double> x) {
    if (t.size() != x.size() || t.size() < 8)
        throw std::invalid_argument("fit_sinusoid: need matching samples");
    const std::size_t n = t.size();

    // profiled linear least squares at fixed omega
    auto rms_at = [&](double omega, double* amp = nullptr, double* phase = nullptr) {
        double ss = 0, sc = 0, cc = 0, sx = 0, cx = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = std::sin(omega * t[i]), c = std::cos(omega * t[i]);
            ss += s * s;
            sc += s * c;
            cc += c * c;
            sx += s * x[i];
            cx += c * x[i];
        }
        const double det = ss * cc - sc * sc;
        if (std::abs(det) < 1e-300) return std::numeric_limits<double>::max();
        const double a = (cx * (-sc) + sx * cc) / det;
        const double b = (ss * cx - sc * sx) / det;
        double acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = a * std::sin(omega * t[i]) + b * std::cos(omega * t[i]);
            acc += (x[i] - m) * (x[i] - m);
        }
        if (amp) *amp = std::hypot(a, b);
        if (phase) *phase = std::atan2(b, a);
        return std::sqrt(acc / n);
    };

    // frequency guess from sign changes
    long crossings = 0;
    for (std::size_t i = 1; i < n; ++i)
        if ((x[i] > 0) != (x[i - 1] > 0)) ++crossings;
    const double span_t = t.back() - t.front();
    double w0 = std::max(crossings, 1L) * M_PI / span_t;

    double best_w = w0, best = std::numeric_limits<double>::max();
    for (int i = 0; i <= 400; ++i) {
        const double w = w0 * (0.7 + 0.6 * i / 400.0);
        const double v = rms_at(w);
        if (v < best) {
            best = v;
            best_w = w;
        }
    }
    // golden-section refinement
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double lo = best_w * (1 - 0.6 / 400), hi = best_w * (1 + 0.6 / 400);
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = rms_at(c), fd = rms_at(d);
    for (int it = 0; it < 200 && (hi - lo) > 1e-14 * best_w; ++it) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = rms_at(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = rms_at(d);
        }
    }
    SinusoidFit fit;
    fit.omega = 0.5 * (lo + hi);
    fit.rms = rms_at(fit.omega, &fit.amplitude, &fit.phase);
    return fit;
}

LogLinearFit fit_log_linear_tail(std::span<const double> t,
                                 std::span<const double> x) {
    if (t.size() != x.size() || t.size() < 8)
        throw std::invalid_argument("fit_log_linear_tail: need matching samples");
    double xmax = 0;
    for (double v : x) xmax = std::max(xmax, std::abs(v));
    if (xmax == 0) throw std::invalid_argument("fit_log_linear_tail: zero signal");

    // keep the growing tail, skipping oscillatory early times
    std::vector<double> tt, yy;
    for (std::size_t i = t.size() / 2; i < t.size(); ++i) {
        if (std::abs(x[i]) > 1e-6 * xmax) {
            tt.push_back(t[i]);
            yy.push_back(std::log(std::abs(x[i])));
        }
    }
    LogLinearFit fit;
    fit.points = tt.size();
    if (tt.size() < 4) return fit;

    const double nn = static_cast<double>(tt.size());
    double st = 0, sy = 0, stt = 0, sty = 0, syy = 0;
    for (std::size_t i = 0; i < tt.size(); ++i) {
        st += tt[i];
        sy += yy[i];
        stt += tt[i] * tt[i];
        sty += tt[i] * yy[i];
        syy += yy[i] * yy[i];
    }
    const double cov = sty - st * sy / nn;
    const double var_t = stt - st * st / nn;
    const double var_y = syy - sy * sy / nn;
    fit.rate = cov / var_t;
    fit.intercept = (sy - fit.rate * st) / nn;
    fit.r_squared = var_y > 0 ? (cov * cov) / (var_t * var_y) : 1.0;
    return fit;
}

}  // namespace curvosc::dyn
