#pragma once

#include <curvosc/geometry.hpp>

#include <Eigen/Core>

#include <span>
#include <vector>

namespace curvosc::dyn {

// Integration state (x, y, vx, vy). The equations of motion are integrated
// on the Cartesian chart, which is regular at r = 0.
using State = Eigen::Vector4d;

// Steps are rejected before the kinetic denominator drops below this.
inline constexpr double kDomainMargin = 1e-10;

// Acceleration from the equations of motion, solved explicitly:
//   a = -x * (kappa (v^2 - kappa w^2) + alpha^2) / (1 - kappa r^2)
// componentwise in (x, y), with w = x vy - y vx. Throws std::domain_error
// within kDomainMargin of the boundary.
State eom_rhs(const State& s, double kappa, double alpha);

struct IntegratorStats {
    double tol = 0;
    long accepted = 0;
    long rejected = 0;
    long rhs_evals = 0;
};

struct Trajectory {
    std::vector<double> t;                 // strictly increasing sample times
    std::vector<mech::CartVel> states;
    double kappa = 0;
    double alpha = 1;
    IntegratorStats stats;
    bool domain_exit = false;              // stopped at the chart boundary
    double t_reached = 0;
};

// Adaptive Dormand-Prince 5(4) with PI step-size control, sampled on a
// uniform output grid (the controller lands exactly on sample times).
Trajectory integrate(const mech::CartVel& initial, double kappa, double alpha,
                     double t_end, double tol, double dt_sample);

// Fixed-step classical RK4, kept as an order cross-check.
Trajectory rk4_integrate(const mech::CartVel& initial, double kappa,
                         double alpha, double t_end, double h,
                         double dt_sample);

struct QuantityDrift {
    double initial = 0;
    double max_abs = 0;
    double max_rel = 0;
};

struct ConservationReport {
    QuantityDrift h, p1, p2, j;
};

// Drifts of the energy and the three Noether momenta along a trajectory,
// measured against their initial values.
ConservationReport conservation_report(const Trajectory& traj);

struct SinusoidFit {
    double amplitude = 0;
    double omega = 0;
    double phase = 0;
    double rms = 0;
};

// Least-squares fit of x(t) ~ A sin(omega t + phase); omega by golden-section
// refinement of the profiled linear fit.
SinusoidFit fit_sinusoid(std::span<const double> t, std::span<const double> x);

struct LogLinearFit {
    double rate = 0;        // slope of log|x| vs t
    double intercept = 0;
    double r_squared = 0;
    std::size_t points = 0;
};

// Linear regression of log|x(t)| on the growing tail of an unbounded
// trajectory; r_squared near 1 identifies hyperbolic-growth solutions.
LogLinearFit fit_log_linear_tail(std::span<const double> t,
                                 std::span<const double> x);

}  // namespace curvosc::dyn
