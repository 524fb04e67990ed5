#include "doctest.h"

#include <curvosc/sturm_liouville.hpp>

#include <stdexcept>

#include <Eigen/Dense>

using namespace curvosc::qm;

TEST_CASE("radial grids") {
    for (double kappa : {-0.1, 0.0, 0.1}) {
        const double rmax = default_rmax(kappa);
        const auto grid =
            make_radial_grid(kappa, 200, rmax, default_map_scale(kappa));
        REQUIRE(grid.centers.size() == 200);
        CHECK(grid.centers[0] > 0.0);
        CHECK(grid.centers[grid.centers.size() - 1] < rmax);
        for (int i = 1; i < grid.centers.size(); ++i)
            CHECK(grid.centers[i] > grid.centers[i - 1]);
        for (int i = 0; i < grid.weights.size(); ++i)
            CHECK(grid.weights[i] > 0.0);
    }
    SUBCASE("weights integrate the measure") {
        // integral of r/sqrt(1 - k r^2) dr from 0 to R is (1 - sqrt(1-kR^2))/k
        const double kappa = 0.1, rmax = 2.0;
        const auto grid = make_radial_grid(kappa, 4000, rmax, 0.0);
        const double exact =
            (1.0 - std::sqrt(1.0 - kappa * rmax * rmax)) / kappa;
        CHECK(grid.weights.sum() == doctest::Approx(exact).epsilon(1e-6));
    }
    SUBCASE("kappa > 0 stops short of the chart boundary") {
        CHECK(default_rmax(0.25, 1e-6) == doctest::Approx((1 - 1e-6) * 2.0));
    }
}

TEST_CASE("discrete operator is symmetric under the measure weighting") {
    for (double kappa : {-0.1, 0.1}) {
        const auto grid = make_radial_grid(kappa, 120, default_rmax(kappa),
                                           default_map_scale(kappa));
        const Eigen::MatrixXd A = sl_dense_matrix(1, grid);
        CHECK((A - A.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * A.norm());
    }
}

TEST_CASE("dense and tridiagonal paths agree") {
    const double kappa = 0.1;
    SLOptions opts;
    opts.cells = 100;
    const auto sl = sl_eigensolve(0, kappa, 2, opts);
    const auto grid =
        make_radial_grid(kappa, 100, default_rmax(kappa), default_map_scale(kappa));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> dense(sl_dense_matrix(0, grid));
    for (int i = 0; i < 2; ++i)
        CHECK(sl.coarse[static_cast<std::size_t>(i)] ==
              doctest::Approx(dense.eigenvalues()[i] / 2.0).epsilon(1e-11));
}

TEST_CASE("flat anchor: evenly spaced oscillator levels") {
    for (int mu = 0; mu <= 2; ++mu) {
        const auto sl = sl_eigensolve(mu, 0.0, 4);
        REQUIRE(sl.converged);
        for (int nr = 0; nr < 4; ++nr)
            CHECK(sl.values[static_cast<std::size_t>(nr)] ==
                  doctest::Approx(2 * nr + mu + 1).epsilon(1e-6));
    }
}

TEST_CASE("eigenvalues come out strictly ordered") {
    for (double kappa : {-0.1, 0.0, 0.1}) {
        const auto sl = sl_eigensolve(1, kappa, 5);
        for (std::size_t i = 1; i < sl.values.size(); ++i)
            CHECK(sl.values[i] > sl.values[i - 1]);
    }
}

TEST_CASE("oracle designates the mirrored family on both signs") {
    for (double kappa : {-0.1, 0.1}) {
        const auto cmp = oracle_compare(1, kappa, 3);
        CHECK(cmp.converged);
        CHECK(cmp.resolved == Branch::euclid);
        CHECK(cmp.max_delta_resolved < 1e-4);
        CHECK(cmp.max_delta_other > 0.5);
    }
}

TEST_CASE("quadrature inner products") {
    SUBCASE("angular orthogonality is exact") {
        CHECK(quadrature_inner({0, 0}, {0, 1}, 0.1, Branch::euclid) == 0.0);
        CHECK(quadrature_inner({1, 2, +1}, {1, 2, -1}, 0.1, Branch::euclid) ==
              0.0);
    }
    SUBCASE("normalization fixes the norm to one") {
        for (double kappa : {-0.05, 0.0, 0.1}) {
            const QuantumNumbers qn{1, 1};
            const double c = normalization_constant(qn, kappa, Branch::euclid);
            const double nrm =
                c * c * quadrature_inner(qn, qn, kappa, Branch::euclid);
            CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
    SUBCASE("radial orthogonality between levels") {
        const double kappa = 0.1;
        const double c0 = normalization_constant({0, 1}, kappa, Branch::euclid);
        const double c1 = normalization_constant({1, 1}, kappa, Branch::euclid);
        const double ip =
            c0 * c1 * quadrature_inner({0, 1}, {1, 1}, kappa, Branch::euclid);
        CHECK(std::abs(ip) < 1e-8);
    }
    SUBCASE("hyperbolic states beyond the bound-state limit are flagged") {
        // 1/|kappa| - 1/2 = 9.5 at kappa = -0.1; n = 10 crosses it
        CHECK_THROWS_AS(
            quadrature_inner({5, 0}, {5, 0}, -0.1, Branch::euclid),
            NonNormalizableError);
        // the printed branch grows at infinity for kappa <= 0
        CHECK_THROWS_AS(quadrature_inner({0, 0}, {0, 0}, -0.1, Branch::paper),
                        NonNormalizableError);
        // and its boundary exponent diverges for small positive curvature
        CHECK_THROWS_AS(quadrature_inner({0, 0}, {0, 0}, 0.1, Branch::paper),
                        NonNormalizableError);
    }
}

TEST_CASE("gram matrix of the first levels is the identity") {
    const Eigen::MatrixXd G = gram_matrix(1, 0.1, Branch::euclid, 4);
    const double dev =
        (G - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff();
    CHECK(dev < 1e-8);
}

TEST_CASE("solver rejects bad arguments and flags non-convergence") {
    CHECK_THROWS_AS(sl_eigensolve(-1, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(sl_eigensolve(0, 0.0, 0), std::invalid_argument);
    SUBCASE("a deliberately coarse grid fails the consistency check") {
        SLOptions opts;
        opts.cells = 60;
        opts.consistency_tol = 1e-9;
        const auto sl = sl_eigensolve(0, 0.1, 1, opts);
        CHECK_FALSE(sl.converged);
    }
}
