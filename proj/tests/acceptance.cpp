// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Documented discrepancies (printed-form relations the
// exact algebra refutes) are reported inline but never asserted true.

#include <curvosc/dynamics.hpp>
#include <curvosc/identities.hpp>
#include <curvosc/report.hpp>
#include <curvosc/spectrum.hpp>
#include <curvosc/sturm_liouville.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;
using curvosc::Rational;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::string num(double v) { return curvosc::report::fmt17(v); }

// ---------------------------------------------------------------- criterion 1
Outcome symbolic_zero_suite() {
    Outcome out;
    const auto t0 = Clock::now();
    const auto suite = curvosc::sym::run_identity_suite();
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(suite.size() == 12, "suite must contain 12 identities");
    for (const auto& c : suite)
        out.require(c.zero, "identity not zero: " + c.name);
    out.require(secs < 5.0, "runtime " + num(secs) + " s exceeds 5 s");
    out.note("12 identities ZERO in " + num(secs) + " s");
    for (const auto& d : curvosc::sym::known_discrepancies())
        out.note("documented discrepancy (expected nonzero): " + d.name +
                 " = " + d.residuals.front());
    return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome classical_conservation() {
    Outcome out;
    const curvosc::mech::CartVel initial{0.4, 0.1, -0.1, 0.35};
    const double kappas[] = {-0.5, -0.1, 0.0, 0.1, 0.5};

    for (double kappa : kappas) {
        const auto traj =
            curvosc::dyn::integrate(initial, kappa, 1.0, 100.0, 1e-10, 0.05);
        const auto rep = curvosc::dyn::conservation_report(traj);
        out.require(!traj.domain_exit,
                    "unexpected domain exit at kappa = " + num(kappa));
        out.require(rep.h.max_rel <= 1e-8,
                    "H drift " + num(rep.h.max_rel) + " at kappa = " + num(kappa));
        out.require(rep.j.max_rel <= 1e-8,
                    "J drift " + num(rep.j.max_rel) + " at kappa = " + num(kappa));
        if (kappa == 0.0)
            out.note("alpha=1, kappa=0: P1 varies by " + num(rep.p1.max_abs) +
                     " (documented: translations are not symmetries of the "
                     "potential; asserted on the free flow instead)");
    }
    // P1/P2 conservation holds on the free flow (alpha = 0). Free geodesics
    // are unbounded: spherical ones leave the chart (t ~ 13.7 at kappa = 0.1,
    // t ~ 6.1 at 0.5 for this launch) and hyperbolic ones grow exponentially
    // past double precision, so each curvature runs on a window where the
    // chart coordinates stay representable.
    const std::pair<double, double> free_runs[] = {
        {-0.5, 30.0}, {-0.1, 50.0}, {0.0, 100.0}, {0.1, 11.0}, {0.5, 5.0}};
    for (const auto& [kappa, t_end] : free_runs) {
        const auto traj =
            curvosc::dyn::integrate(initial, kappa, 0.0, t_end, 1e-10, 0.05);
        const auto rep = curvosc::dyn::conservation_report(traj);
        out.require(!traj.domain_exit,
                    "free-flow window left the chart at kappa = " + num(kappa));
        for (const auto& [name, drift] :
             {std::pair{"H", rep.h}, {"P1", rep.p1}, {"P2", rep.p2},
              {"J", rep.j}})
            out.require(drift.max_rel <= 1e-8,
                        std::string(name) + " free-flow drift " +
                            num(drift.max_rel) + " at kappa = " + num(kappa));
    }

    {  // bounded spherical trajectory is sinusoidal
        const auto traj = curvosc::dyn::integrate(initial, 0.5, 1.0, 60.0,
                                                  1e-11, 0.02);
        std::vector<double> x;
        for (const auto& s : traj.states) x.push_back(s.x);
        const auto fit = curvosc::dyn::fit_sinusoid(traj.t, x);
        out.require(fit.rms < 1e-6,
                    "sinusoid fit rms " + num(fit.rms) + " at kappa = 0.5");
        out.note("kappa=0.5 fit: A=" + num(fit.amplitude) +
                 " omega=" + num(fit.omega) + " rms=" + num(fit.rms));
    }
    {  // high-energy hyperbolic trajectory grows log-linearly
        const auto traj = curvosc::dyn::integrate(
            curvosc::mech::CartVel{0.0, 0.0, 2.4, 0.1}, -0.5, 1.0, 12.0, 1e-10,
            0.01);
        std::vector<double> x;
        for (const auto& s : traj.states) x.push_back(s.x);
        const auto fit = curvosc::dyn::fit_log_linear_tail(traj.t, x);
        out.require(fit.r_squared > 0.999, "hyperbolic-growth fit R^2 = " +
                                               num(fit.r_squared));
        out.note("kappa=-0.5 growth rate " + num(fit.rate) +
                 ", R^2 = " + num(fit.r_squared));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome euclidean_anchor() {
    Outcome out;
    const auto t0 = Clock::now();
    for (int mu = 0; mu <= 2; ++mu) {
        const auto sl = curvosc::qm::sl_eigensolve(mu, 0.0, 4);
        out.require(sl.converged, "grids disagree at mu = " + std::to_string(mu));
        for (int nr = 0; nr < 4; ++nr) {
            const double expected = 2 * nr + mu + 1;
            const double got = sl.values[static_cast<std::size_t>(nr)];
            out.require(std::abs(got - expected) < 1e-4,
                        "mu=" + std::to_string(mu) + " level " +
                            std::to_string(nr) + ": " + num(got) + " vs " +
                            num(expected));
        }
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 30.0, "runtime " + num(secs) + " s exceeds 30 s");
    out.note("3 angular sectors solved in " + num(secs) + " s");
    return out;
}

// ---------------------------------------------------------------- criterion 4
Outcome curved_oracle_agreement() {
    Outcome out;
    bool have_branch = false;
    curvosc::qm::Branch resolved = curvosc::qm::Branch::euclid;
    double worst = 0;
    for (double kappa : {-0.1, 0.1})
        for (int mu = 0; mu <= 2; ++mu) {
            const auto cmp = curvosc::qm::oracle_compare(mu, kappa, 4);
            out.require(cmp.converged, "oracle not converged at kappa = " +
                                           num(kappa) + ", mu = " +
                                           std::to_string(mu));
            out.require(cmp.max_delta_resolved < 1e-4,
                        "resolved-branch delta " + num(cmp.max_delta_resolved) +
                            " at kappa = " + num(kappa) +
                            ", mu = " + std::to_string(mu));
            if (!have_branch) {
                resolved = cmp.resolved;
                have_branch = true;
            } else {
                out.require(cmp.resolved == resolved,
                            "resolved branch flips across (mu, kappa)");
            }
            worst = std::max(worst, cmp.max_delta_resolved);
        }
    out.note("resolved branch: " + curvosc::qm::to_string(resolved) +
             " (E = (n+1)(1 + n kappa/2)), worst delta " + num(worst));
    return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome eigenpair_residuals() {
    Outcome out;
    std::vector<double> pts;
    for (int i = 1; i <= 100; ++i) pts.push_back(0.05 + 2.95 * i / 101.0);
    double worst = 0;
    for (double kappa : {-0.1, 0.1})
        for (int mu = 0; mu <= 2; ++mu)
            for (int nr = 0; nr <= 3; ++nr) {
                const curvosc::qm::QuantumNumbers qn{nr, mu};
                const double e = curvosc::qm::closed_form_energy(
                    qn.n(), kappa, curvosc::qm::Branch::euclid);
                const double res = curvosc::qm::schrodinger_residual(
                    qn, kappa, e, curvosc::qm::Branch::euclid, pts);
                worst = std::max(worst, res);
                out.require(res < 1e-8,
                            "residual " + num(res) + " at kappa = " + num(kappa) +
                                " N_r=" + std::to_string(nr) +
                                " mu=" + std::to_string(mu));
                const double res_bad = curvosc::qm::schrodinger_residual(
                    qn, kappa, e + 0.1, curvosc::qm::Branch::euclid, pts);
                out.require(res_bad > 1e-3,
                            "perturbed residual only " + num(res_bad));
            }
    out.note("worst eigenpair residual " + num(worst));
    return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome spectrum_structure() {
    Outcome out;
    using curvosc::qm::Branch;
    using curvosc::qm::closed_form_energy;

    // exact degeneracy in n for every (N_r, mu) split
    for (double kappa : {-0.1, 0.1, 0.5})
        for (auto branch : {Branch::paper, Branch::euclid})
            for (int n = 0; n <= 8; ++n) {
                const double ref = closed_form_energy(n, kappa, branch);
                for (int nr = 0; 2 * nr <= n; ++nr) {
                    curvosc::qm::QuantumNumbers qn{nr, n - 2 * nr};
                    const double e = closed_form_energy(qn.n(), kappa, branch);
                    out.require(std::abs(e - ref) <= 1e-12,
                                "degeneracy violated at n = " + std::to_string(n));
                }
            }

    // gap laws of the resolved family
    for (double kappa : {0.1, 0.5}) {
        double prev_gap = -1e300;
        for (int n = 0; n < 8; ++n) {
            const double gap = closed_form_energy(n + 1, kappa, Branch::euclid) -
                               closed_form_energy(n, kappa, Branch::euclid);
            out.require(gap > prev_gap, "gaps must increase for kappa > 0");
            prev_gap = gap;
        }
    }
    for (double kappa : {-0.1, -0.05}) {
        double prev_gap = 1e300;
        for (int n = 0; n < 8; ++n) {
            const double gap = closed_form_energy(n + 1, kappa, Branch::euclid) -
                               closed_form_energy(n, kappa, Branch::euclid);
            out.require(gap < prev_gap, "gaps must decrease for kappa < 0");
            prev_gap = gap;
        }
    }

    // hyperbolic energies sit below the flat ones at equal n; the ground
    // level is curvature independent (equality at n = 0)
    for (double kappa : {-0.1, -0.05}) {
        out.require(std::abs(closed_form_energy(0, kappa, Branch::euclid) -
                             closed_form_energy(0, 0.0, Branch::euclid)) <=
                        1e-12,
                    "ground level must be curvature independent");
        for (int n = 1; n <= 8; ++n)
            out.require(closed_form_energy(n, kappa, Branch::euclid) <
                            closed_form_energy(n, 0.0, Branch::euclid),
                        "hyperbolic level not below flat at n = " +
                            std::to_string(n));
    }
    out.note("degeneracy exact; gap laws and hyperbolic ordering hold on n <= 8");
    return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome series_machinery() {
    Outcome out;
    using curvosc::qm::Branch;

    // exact termination and exact agreement with the terminating
    // hypergeometric coefficients, rational arithmetic throughout
    const Rational kappas[] = {Rational(1, 10), Rational(-1, 10)};
    for (const auto& kappa : kappas)
        for (int mu = 0; mu <= 2; ++mu)
            for (int nr = 0; nr <= 3; ++nr) {
                const int n = 2 * nr + mu;
                const Rational e_paper =
                    Rational(n + 1) * (Rational(n + 2) * kappa / 2 - 1);
                const Rational e_euclid =
                    Rational(n + 1) * (1 + Rational(n) * kappa / 2);
                const struct {
                    Branch branch;
                    Rational e;
                } cases[] = {{Branch::paper, e_paper}, {Branch::euclid, e_euclid}};
                for (const auto& cs : cases) {
                    const auto a = curvosc::qm::frobenius_series(
                        cs.e, mu, kappa, 2 * nr + 10, cs.branch);
                    bool terminated = true;
                    for (int i = 2 * nr + 1; i <= 2 * nr + 10; ++i)
                        terminated = terminated &&
                                     a[static_cast<std::size_t>(i)] == 0;
                    out.require(terminated,
                                "series does not terminate (branch " +
                                    curvosc::qm::to_string(cs.branch) + ")");
                    const auto poly = curvosc::qm::terminating_poly(
                        nr, mu, kappa, cs.branch);
                    Rational kpow = 1;
                    bool match = true;
                    for (int k = 0; k <= nr; ++k) {
                        match = match &&
                                a[static_cast<std::size_t>(2 * k)] == poly[k] * kpow;
                        kpow *= kappa;
                    }
                    out.require(match, "series disagrees with the terminating "
                                       "hypergeometric polynomial");
                }
            }

    // coefficient ratio approaches |kappa| at a non-quantized energy; the
    // raw two-term ratio carries an O(1/n) transient, so the limit is read
    // off by Richardson extrapolation of the ratios at n = 100 and n = 200
    for (double kappa : {0.1, -0.1}) {
        const double raw = std::abs(
            curvosc::qm::frobenius_ratio(0.372, 1, kappa, 200, Branch::paper));
        const double limit = curvosc::qm::frobenius_ratio_limit(
            0.372, 1, kappa, 200, Branch::paper);
        out.require(std::abs(limit - std::abs(kappa)) <= 0.01 * std::abs(kappa),
                    "ratio limit " + num(limit) +
                        " not within 1% of |kappa| by n=200");
        out.note("kappa=" + num(kappa) + ": |a_202/a_200| = " + num(raw) +
                 ", extrapolated limit " + num(limit) +
                 ", radius of convergence " +
                 num(1.0 / std::sqrt(std::abs(kappa))));
    }
    return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome orthonormality() {
    Outcome out;
    const int mu = 1;
    const Eigen::MatrixXd G =
        curvosc::qm::gram_matrix(mu, 0.1, curvosc::qm::Branch::euclid, 6);
    const double dev =
        (G - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff();
    out.require(dev < 1e-8, "gram deviation " + num(dev));
    out.note("6x6 gram deviation from identity: " + num(dev));
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"symbolic zero suite", symbolic_zero_suite},
        {"classical conservation and solution structure", classical_conservation},
        {"euclidean quantum anchor", euclidean_anchor},
        {"curved-space oracle agreement", curved_oracle_agreement},
        {"eigenpair residuals", eigenpair_residuals},
        {"structure of the spectrum", spectrum_structure},
        {"series machinery", series_machinery},
        {"orthonormality", orthonormality},
    };

    int failures = 0;
    int id = 0;
    for (const auto& e : entries) {
        ++id;
        const auto t0 = Clock::now();
        const Outcome out = e.run();
        const double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.2f s)\n",
                    out.pass ? "PASS" : "FAIL", id, e.name, secs);
        for (const auto& n : out.notes) std::printf("        %s\n", n.c_str());
        if (!out.pass) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all %d criteria passed\n", id);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", failures, id);
    return failures;
}
