#include <curvosc/sturm_liouville.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace curvosc::qm {

namespace {

double sl_weight(double r, double kappa) {
    return r / std::sqrt(1.0 - kappa * r * r);
}

double sl_flux(double r, double kappa) {
    return r * std::sqrt(1.0 - kappa * r * r);
}

double sl_potential(double r, int mu, double kappa) {
    const double u = 1.0 - kappa * r * r;
    return static_cast<double>(mu) * mu / (r * r) + (1.0 - kappa) * r * r / u;
}

// Lowest eigenvalues of the symmetrized tridiagonal operator.
std::vector<double> tridiag_lowest(int mu, const RadialGrid& grid, int k) {
    const int M = static_cast<int>(grid.centers.size());
    const double kappa = grid.kappa;

    Eigen::VectorXd diag(M), sub(M - 1);
    // map derivative at faces/centers from the stored geometry
    auto gp = [&](double xi) {
        return grid.map_scale > 0 ? std::cosh(xi / grid.map_scale) : 1.0;
    };
    // xi spacing is uniform; reconstruct it from the face count
    const double xmax = grid.map_scale > 0
                            ? grid.map_scale * std::asinh(grid.rmax / grid.map_scale)
                            : grid.rmax;
    const double h = xmax / M;

    auto face_flux = [&](int i) {  // p / g' at face i
        const double xi = i * h;
        const double r = grid.faces[i];
        return sl_flux(r, kappa) / gp(xi);
    };

    std::vector<double> w(M);
    for (int i = 0; i < M; ++i) {
        const double xi = (i + 0.5) * h;
        const double r = grid.centers[i];
        w[i] = sl_weight(r, kappa) * gp(xi);
        diag[i] = (face_flux(i) + face_flux(i + 1)) / (h * h) +
                  sl_potential(r, mu, kappa) * w[i];
    }
    for (int i = 0; i + 1 < M; ++i) sub[i] = -face_flux(i + 1) / (h * h);

    // symmetrize the generalized problem with W^{-1/2}
    for (int i = 0; i < M; ++i) diag[i] /= w[i];
    for (int i = 0; i + 1 < M; ++i) sub[i] /= std::sqrt(w[i] * w[i + 1]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[i] = solver.eigenvalues()[i] / 2.0;
    return out;
}

}  // namespace

double default_rmax(double kappa, double delta) {
    if (kappa > 0) return (1.0 - delta) / std::sqrt(kappa);
    if (kappa == 0) return 12.0;
    return std::min(60.0 / -kappa, 2000.0);
}

double default_map_scale(double kappa) { return kappa > 0 ? 0.0 : 5.0; }

RadialGrid make_radial_grid(double kappa, int cells, double rmax,
                            double map_scale) {
    if (cells < 8) throw std::invalid_argument("make_radial_grid: too few cells");
    if (!(rmax > 0)) throw std::invalid_argument("make_radial_grid: rmax <= 0");
    RadialGrid g;
    g.kappa = kappa;
    g.rmax = rmax;
    g.map_scale = map_scale;
    const double xmax =
        map_scale > 0 ? map_scale * std::asinh(rmax / map_scale) : rmax;
    const double h = xmax / cells;
    auto map = [&](double xi) {
        return map_scale > 0 ? map_scale * std::sinh(xi / map_scale) : xi;
    };
    auto gp = [&](double xi) {
        return map_scale > 0 ? std::cosh(xi / map_scale) : 1.0;
    };
    g.centers.resize(cells);
    g.faces.resize(cells + 1);
    g.weights.resize(cells);
    for (int i = 0; i <= cells; ++i) g.faces[i] = map(i * h);
    for (int i = 0; i < cells; ++i) {
        const double xi = (i + 0.5) * h;
        g.centers[i] = map(xi);
        g.weights[i] = sl_weight(g.centers[i], kappa) * gp(xi) * h;
    }
    return g;
}

Eigen::MatrixXd sl_dense_matrix(int mu, const RadialGrid& grid) {
    const int M = static_cast<int>(grid.centers.size());
    const double xmax =
        grid.map_scale > 0
            ? grid.map_scale * std::asinh(grid.rmax / grid.map_scale)
            : grid.rmax;
    const double h = xmax / M;
    auto gp = [&](double xi) {
        return grid.map_scale > 0 ? std::cosh(xi / grid.map_scale) : 1.0;
    };
    auto face_flux = [&](int i) {
        return sl_flux(grid.faces[i], grid.kappa) / gp(i * h);
    };
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(M, M);
    Eigen::VectorXd w(M);
    for (int i = 0; i < M; ++i) {
        const double xi = (i + 0.5) * h;
        w[i] = sl_weight(grid.centers[i], grid.kappa) * gp(xi);
        A(i, i) = (face_flux(i) + face_flux(i + 1)) / (h * h) +
                  sl_potential(grid.centers[i], mu, grid.kappa) * w[i];
        if (i + 1 < M) {
            A(i, i + 1) = -face_flux(i + 1) / (h * h);
            A(i + 1, i) = A(i, i + 1);
        }
    }
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j) A(i, j) /= std::sqrt(w[i] * w[j]);
    return A;
}

SLResult sl_eigensolve(int mu, double kappa, int k_levels, const SLOptions& opts) {
    if (mu < 0 || k_levels < 1)
        throw std::invalid_argument("sl_eigensolve: bad mu or level count");
    const int coarse_cells = std::max(opts.cells, 50 * k_levels);
    const double map_scale =
        opts.map_scale >= 0 ? opts.map_scale : default_map_scale(kappa);
    const double rmax =
        opts.rmax > 0 ? opts.rmax : default_rmax(kappa, opts.delta);

    const RadialGrid coarse = make_radial_grid(kappa, coarse_cells, rmax, map_scale);
    const RadialGrid fine = make_radial_grid(kappa, 2 * coarse_cells, rmax, map_scale);

    SLResult res;
    res.coarse = tridiag_lowest(mu, coarse, k_levels);
    res.fine = tridiag_lowest(mu, fine, k_levels);
    res.values.resize(res.fine.size());
    for (std::size_t i = 0; i < res.fine.size(); ++i) {
        res.values[i] = (4.0 * res.fine[i] - res.coarse[i]) / 3.0;
        const double scale = std::max(1.0, std::abs(res.values[i]));
        res.grid_defect = std::max(res.grid_defect,
                                   std::abs(res.fine[i] - res.coarse[i]) / scale);
    }
    if (kappa > 0) {
        // boundary-margin consistency: shrink delta tenfold and compare
        const RadialGrid tighter = make_radial_grid(
            kappa, 2 * coarse_cells, default_rmax(kappa, opts.delta / 10.0),
            map_scale);
        const auto shifted = tridiag_lowest(mu, tighter, k_levels);
        for (std::size_t i = 0; i < shifted.size(); ++i) {
            const double scale = std::max(1.0, std::abs(res.values[i]));
            res.grid_defect = std::max(
                res.grid_defect, std::abs(shifted[i] - res.fine[i]) / scale);
        }
    }
    res.converged = res.grid_defect <= opts.consistency_tol;
    return res;
}

namespace {

// Composite Gauss-Legendre nodes on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            const double dp = n * (t * p0 - p1) / (t * t - 1.0);
            const double step = p0 / dp;
            t -= step;
            if (std::abs(step) < 1e-15) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
        }
        const double dp = n * (t * p0 - p1) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

double radial_integral(const RadialWavefunction& A, const RadialWavefunction& B,
                       double kappa, double rmax, int panels, int ppp,
                       double map_scale) {
    std::vector<double> gx, gw;
    gauss_legendre(ppp, gx, gw);
    const double xmax =
        map_scale > 0 ? map_scale * std::asinh(rmax / map_scale) : rmax;
    auto map = [&](double xi) {
        return map_scale > 0 ? map_scale * std::sinh(xi / map_scale) : xi;
    };
    auto gp = [&](double xi) {
        return map_scale > 0 ? std::cosh(xi / map_scale) : 1.0;
    };
    double acc = 0.0;
    const double hp = xmax / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = p * hp;
        for (int i = 0; i < ppp; ++i) {
            const double xi = lo + 0.5 * hp * (gx[i] + 1.0);
            const double r = map(xi);
            if (r <= 0.0 || r >= rmax) continue;
            acc += 0.5 * hp * gw[i] * A(r) * B(r) * sl_weight(r, kappa) * gp(xi);
        }
    }
    return acc;
}

}  // namespace

double quadrature_inner(const QuantumNumbers& qa, const QuantumNumbers& qb,
                        double kappa, Branch branch,
                        const QuadratureOptions& opts) {
    validate(qa);
    validate(qb);
    if (qa.sign * qa.mu != qb.sign * qb.mu) return 0.0;  // exact phi integral

    if (kappa < 0 && branch == Branch::euclid) {
        // hyperbolic tail ~ r^{n - 1/|kappa|}: square-integrability against
        // the measure needs n < 1/|kappa| - 1/2
        const double limit = 1.0 / -kappa - 0.5;
        if (qa.n() >= limit || qb.n() >= limit)
            throw NonNormalizableError(
                "hyperbolic state beyond the bound-state limit");
    }
    if (kappa <= 0 && branch == Branch::paper)
        throw NonNormalizableError(
            "printed-branch states grow at infinity for kappa <= 0");
    if (kappa > 0 && kappa < 2.0 / 3.0 && branch == Branch::paper)
        throw NonNormalizableError(
            "printed-branch boundary exponent 1/2 - 1/(2 kappa) is not "
            "square-integrable against the measure for kappa < 2/3");

    const double rmax = opts.rmax > 0 ? opts.rmax : default_rmax(kappa);
    const double map_scale = default_map_scale(kappa);
    const auto A = RadialWavefunction::closed_form(qa, kappa, branch);
    const auto B = RadialWavefunction::closed_form(qb, kappa, branch);
    const double full = radial_integral(A, B, kappa, rmax, opts.panels,
                                        opts.points_per_panel, map_scale);
    if (kappa < 0) {
        // doubled-domain consistency check on the power-law tail
        const double wide = radial_integral(A, B, kappa, 2.0 * rmax,
                                            opts.panels + opts.panels / 2,
                                            opts.points_per_panel, map_scale);
        const double scale = std::max({1.0, std::abs(full), std::abs(wide)});
        if (std::abs(wide - full) / scale > opts.tail_check_tol)
            throw NonNormalizableError("radial integral keeps growing with rmax");
    }
    return 2.0 * M_PI * full;
}

double normalization_constant(const QuantumNumbers& qn, double kappa,
                              Branch branch, const QuadratureOptions& opts) {
    const double nrm = quadrature_inner(qn, qn, kappa, branch, opts);
    if (!(nrm > 0)) throw NonNormalizableError("nonpositive norm");
    return 1.0 / std::sqrt(nrm);
}

Eigen::MatrixXd gram_matrix(int mu, double kappa, Branch branch, int count,
                            const QuadratureOptions& opts) {
    Eigen::MatrixXd G(count, count);
    std::vector<double> norms(count);
    for (int i = 0; i < count; ++i)
        norms[i] = normalization_constant({i, mu}, kappa, branch, opts);
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j) {
            const double v = norms[i] * norms[j] *
                             quadrature_inner({i, mu}, {j, mu}, kappa, branch, opts);
            G(i, j) = v;
            G(j, i) = v;
        }
    return G;
}

OracleComparison oracle_compare(int mu, double kappa, int k_levels,
                                const SLOptions& opts) {
    OracleComparison cmp;
    cmp.mu = mu;
    cmp.kappa = kappa;
    const SLResult sl = sl_eigensolve(mu, kappa, k_levels, opts);
    cmp.converged = sl.converged;
    double worst_paper = 0, worst_euclid = 0;
    for (int i = 0; i < k_levels; ++i) {
        OracleRow row;
        row.level = i;
        row.oracle = sl.values[static_cast<std::size_t>(i)];
        const int n = 2 * i + mu;
        row.paper = closed_form_energy(n, kappa, Branch::paper);
        row.euclid = closed_form_energy(n, kappa, Branch::euclid);
        worst_paper = std::max(worst_paper, std::abs(row.paper - row.oracle));
        worst_euclid = std::max(worst_euclid, std::abs(row.euclid - row.oracle));
        cmp.rows.push_back(row);
    }
    cmp.resolved = worst_euclid <= worst_paper ? Branch::euclid : Branch::paper;
    cmp.max_delta_resolved = std::min(worst_euclid, worst_paper);
    cmp.max_delta_other = std::max(worst_euclid, worst_paper);
    return cmp;
}

}  // namespace curvosc::qm
