#pragma once

#include <curvosc/spectrum.hpp>

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace curvosc::qm {

// Radial discretization of the scaled problem. Cells are centered between
// faces; for kappa <= 0 the nodes follow the stretched map r = a sinh(xi/a)
// so power-law tails are reachable without huge matrices. Weights integrate
// against the invariant measure r/sqrt(1 - kappa r^2).
struct RadialGrid {
    double kappa = 0;
    double rmax = 0;
    double map_scale = 0;  // 0: identity map; > 0: sinh stretching scale
    Eigen::VectorXd centers;
    Eigen::VectorXd faces;
    Eigen::VectorXd weights;  // measure-quadrature weights at the centers
};

// For kappa > 0 the chart ends at r = 1/sqrt(kappa); the grid stops a
// relative margin delta before it (Dirichlet wall in the eigensolver).
double default_rmax(double kappa, double delta = 1e-6);
double default_map_scale(double kappa);

RadialGrid make_radial_grid(double kappa, int cells, double rmax,
                            double map_scale);

struct SLOptions {
    int cells = 2000;          // coarse grid; the fine grid doubles it
    double rmax = 0;           // 0 = automatic
    double delta = 1e-6;       // kappa > 0 boundary margin
    double map_scale = -1;     // < 0 = automatic
    double consistency_tol = 1e-3;
};

struct SLResult {
    std::vector<double> values;   // Richardson-extrapolated scaled energies
    std::vector<double> coarse;
    std::vector<double> fine;
    double grid_defect = 0;       // max relative gap between the two grids
    bool converged = false;
};

// Lowest eigenvalues of the singular radial problem for angular index mu:
// self-adjoint three-point discretization in flux form, symmetrized by the
// measure weights, eigenvalues from the tridiagonal solver; two grids plus
// Richardson extrapolation. A kappa > 0 run also re-solves with delta/10
// and folds the difference into the defect.
SLResult sl_eigensolve(int mu, double kappa, int k_levels,
                       const SLOptions& opts = {});

// Dense symmetric form of the discrete operator (for structural checks).
Eigen::MatrixXd sl_dense_matrix(int mu, const RadialGrid& grid);

struct NonNormalizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
    double rmax = 0;       // 0 = automatic
    int panels = 64;
    int points_per_panel = 16;
    double tail_check_tol = 1e-6;
};

// L2(d mu_kappa) inner product of two closed-form states, exact in phi.
// Unnormalized radial factors are used; returns 0 for orthogonal angular
// parts. Throws NonNormalizableError when the hyperbolic tail diverges.
double quadrature_inner(const QuantumNumbers& qa, const QuantumNumbers& qb,
                        double kappa, Branch branch,
                        const QuadratureOptions& opts = {});

// 1/sqrt(<psi, psi>): the normalization constant of a closed-form state.
double normalization_constant(const QuantumNumbers& qn, double kappa,
                              Branch branch, const QuadratureOptions& opts = {});

// Gram matrix of the first `count` normalized radial states at fixed mu.
Eigen::MatrixXd gram_matrix(int mu, double kappa, Branch branch, int count,
                            const QuadratureOptions& opts = {});

struct OracleRow {
    int level = 0;  // radial index
    double oracle = 0;
    double paper = 0;
    double euclid = 0;
};

struct OracleComparison {
    int mu = 0;
    double kappa = 0;
    std::vector<OracleRow> rows;
    Branch resolved = Branch::euclid;
    double max_delta_resolved = 0;
    double max_delta_other = 0;
    bool converged = false;
};

// Runs the eigensolver and lines both closed-form families up against it;
// the branch with the smaller worst deviation is designated resolved.
OracleComparison oracle_compare(int mu, double kappa, int k_levels,
                                const SLOptions& opts = {});

}  // namespace curvosc::qm
