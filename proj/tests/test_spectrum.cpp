#include "doctest.h"

#include <curvosc/spectrum.hpp>

#include <stdexcept>

#include <random>

using namespace curvosc::qm;
using curvosc::Rational;

TEST_CASE("closed-form energies at zero curvature") {
    for (int n = 0; n < 4; ++n) {
        CHECK(closed_form_energy(n, 0.0, Branch::paper) ==
              doctest::Approx(-(n + 1.0)));
        CHECK(closed_form_energy(n, 0.0, Branch::euclid) ==
              doctest::Approx(n + 1.0));
    }
}

TEST_CASE("energy depends on the quantum numbers only through n") {
    for (double kappa : {-0.3, -0.1, 0.0, 0.1, 0.3})
        for (auto branch : {Branch::paper, Branch::euclid})
            for (int n = 0; n <= 8; ++n) {
                const double ref = closed_form_energy(n, kappa, branch);
                for (int nr = 0; 2 * nr <= n; ++nr) {
                    QuantumNumbers qn{nr, n - 2 * nr};
                    CHECK(qn.n() == n);
                    const double e = closed_form_energy(qn.n(), kappa, branch);
                    CHECK(std::abs(e - ref) <= 1e-12);
                }
            }
}

TEST_CASE("physical energies restore the hbar alpha / sqrt(m) scale") {
    const curvosc::mech::PhysConstants c{4.0, 2.0, 3.0};
    const auto line = closed_form_line({1, 2}, 0.2, Branch::euclid, c);
    // hbar alpha/sqrt(m) = 3*2/2 = 3
    CHECK(line.e_physical == doctest::Approx(3.0 * line.e_scaled).epsilon(1e-14));
    CHECK(line.qn.n() == 4);
    CHECK(line.source == "closed-form");
}

TEST_CASE("hypergeometric parameters") {
    SUBCASE("c and the kappa -> 0 limit of delta") {
        const auto p = hyp_params(2.0, 1, 0.3);
        CHECK(p.c == doctest::Approx(2.0));
        const auto tiny = hyp_params(2.0, 1, 1e-9);
        CHECK(tiny.delta == doctest::Approx(2.0).epsilon(1e-7));
    }
    SUBCASE("sum and product match the equation coefficients") {
        const double kappa = 0.3, e = 2.0;
        const int mu = 1;
        const auto p = hyp_params(e, mu, kappa);
        const double sum = ((2 * mu + 3) * kappa - 2) / (2 * kappa);
        const double prod =
            -(e + mu + 1) / (2 * kappa) + 0.25 * (mu + 1) * (mu + 2);
        CHECK(p.a + p.b == doctest::Approx(sum).epsilon(1e-12));
        CHECK(p.a * p.b == doctest::Approx(prod).epsilon(1e-12));
    }
    SUBCASE("kappa = 0 dispatches to the confluent path") {
        CHECK_THROWS_AS(hyp_params(1.0, 0, 0.0), std::domain_error);
    }
    SUBCASE("quantized energies terminate the series") {
        for (double kappa : {-0.1, 0.1, 0.4})
            for (int mu = 0; mu <= 2; ++mu)
                for (int nr = 0; nr <= 3; ++nr) {
                    const int n = 2 * nr + mu;
                    const auto pp = hyp_params(
                        closed_form_energy(n, kappa, Branch::paper), mu, kappa);
                    CHECK(is_terminating_at(pp, Branch::paper, nr));
                    auto idx = terminating_index(pp, Branch::paper);
                    REQUIRE(idx.has_value());
                    CHECK(*idx <= nr);  // energy collisions can terminate lower

                    const auto pe = hyp_params(
                        closed_form_energy(n, kappa, Branch::euclid), mu, kappa);
                    CHECK(is_terminating_at(pe, Branch::euclid, nr));
                    auto idx2 = terminating_index(pe, Branch::euclid);
                    REQUIRE(idx2.has_value());
                    CHECK(*idx2 <= nr);
                }
    }
    SUBCASE("generic energies do not terminate") {
        const auto p = hyp_params(0.372, 1, 0.1);
        CHECK_FALSE(terminating_index(p, Branch::paper).has_value());
        CHECK_FALSE(terminating_index(p, Branch::euclid).has_value());
    }
}

TEST_CASE("frobenius series: structure and exact termination") {
    SUBCASE("odd coefficients vanish, a0 = 1") {
        const auto a = frobenius_series(0.7, 2, 0.2, 11, Branch::paper);
        CHECK(a[0] == 1.0);
        for (std::size_t i = 1; i < a.size(); i += 2) CHECK(a[i] == 0.0);
    }
    SUBCASE("exact termination on the printed closed form") {
        const Rational kappa(1, 10);
        for (int mu = 0; mu <= 2; ++mu)
            for (int nr = 0; nr <= 3; ++nr) {
                const int n = 2 * nr + mu;
                // E = (n+1)((n+2) kappa/2 - 1) exactly
                const Rational e = Rational(n + 1) *
                                   (Rational(n + 2) * kappa / 2 - 1);
                const auto a = frobenius_series(e, mu, kappa, 2 * nr + 8,
                                                Branch::paper);
                for (int i = 2 * nr + 1; i <= 2 * nr + 8; ++i)
                    CHECK(a[static_cast<std::size_t>(i)] == 0);
                CHECK(a[static_cast<std::size_t>(2 * nr)] != 0);

                // and the surviving coefficients are the terminating
                // hypergeometric polynomial: a_{2k} = p_k kappa^k
                const auto p = terminating_poly(nr, mu, kappa, Branch::paper);
                Rational kpow = 1;
                for (int k = 0; k <= nr; ++k) {
                    CHECK(a[static_cast<std::size_t>(2 * k)] == p[k] * kpow);
                    kpow *= kappa;
                }
            }
    }
    SUBCASE("exact termination on the mirrored family") {
        const Rational kappa(-1, 7);
        for (int mu = 0; mu <= 2; ++mu)
            for (int nr = 0; nr <= 2; ++nr) {
                const int n = 2 * nr + mu;
                // E = (n+1)(1 + n kappa/2) exactly
                const Rational e =
                    Rational(n + 1) * (1 + Rational(n) * kappa / 2);
                const auto a = frobenius_series(e, mu, kappa, 2 * nr + 6,
                                                Branch::euclid);
                for (int i = 2 * nr + 1; i <= 2 * nr + 6; ++i)
                    CHECK(a[static_cast<std::size_t>(i)] == 0);
                const auto p = terminating_poly(nr, mu, kappa, Branch::euclid);
                Rational kpow = 1;
                for (int k = 0; k <= nr; ++k) {
                    CHECK(a[static_cast<std::size_t>(2 * k)] == p[k] * kpow);
                    kpow *= kappa;
                }
            }
    }
    SUBCASE("no termination away from the spectrum") {
        const auto a = frobenius_series(0.372, 0, 0.1, 60, Branch::paper);
        for (std::size_t i = 0; i < a.size(); i += 2) CHECK(a[i] != 0.0);
    }
}

TEST_CASE("flat-limit series against the confluent solution") {
    // at kappa = 0 the printed factorization solves
    // f = e^{-t} M(a, mu+1; t), t = r^2, a = (1 + mu - E)/2; compare the
    // series coefficients through the exact Cauchy product
    const Rational e(3, 7);
    for (int mu = 0; mu <= 2; ++mu) {
        const auto a =
            frobenius_series(e, mu, Rational(0), 30, Branch::paper);
        const Rational ka = (Rational(1 + mu) - e) / 2;
        // Kummer coefficients m_j = (a)_j / ((c)_j j!)
        std::vector<Rational> m(16), ex(16);
        m[0] = 1;
        ex[0] = 1;
        for (int j = 0; j + 1 < 16; ++j) {
            m[j + 1] = m[j] * (ka + j) / (Rational(mu + 1 + j) * (j + 1));
            ex[j + 1] = ex[j] * Rational(-1) / (j + 1);  // e^{-t}
        }
        for (int k = 0; k < 15; ++k) {
            Rational conv = 0;
            for (int i = 0; i <= k; ++i) conv += ex[i] * m[k - i];
            CHECK(a[static_cast<std::size_t>(2 * k)] == conv);
        }
    }
}

TEST_CASE("series ratio approaches the inverse square of the radius of convergence") {
    for (double kappa : {0.1, -0.1, 0.3})
        for (auto branch : {Branch::paper, Branch::euclid}) {
            // the raw ratio converges O(1/n); extrapolation reads the limit
            const double limit = frobenius_ratio_limit(0.372, 1, kappa, 200, branch);
            CHECK(limit == doctest::Approx(std::abs(kappa)).epsilon(0.01));
            // and the raw ratio itself settles at larger n
            const double raw =
                std::abs(frobenius_ratio(0.372, 1, kappa, 40000, branch));
            CHECK(raw == doctest::Approx(std::abs(kappa)).epsilon(0.001));
        }
}

TEST_CASE("wavefunctions") {
    SUBCASE("single valued in the angle") {
        const QuantumNumbers qn{1, 2, -1};
        const auto a = eval_wavefunction(qn, 0.1, 0.8, 0.37, Branch::euclid);
        const auto b =
            eval_wavefunction(qn, 0.1, 0.8, 0.37 + 2 * M_PI, Branch::euclid);
        CHECK(std::abs(a - b) < 1e-12);
    }
    SUBCASE("first-degree terminating polynomial") {
        // 2F1(-1, b; c; z) = 1 - (b/c) z
        const double kappa = 0.2;
        const QuantumNumbers qn{1, 1};
        const auto w = RadialWavefunction::closed_form(qn, kappa, Branch::paper);
        const double b = qn.n_r + qn.mu + 1.5 - 1.0 / kappa;
        const double r = 0.6;
        const double z = kappa * r * r;
        const double u = 1 - z;
        const double expected =
            r * std::pow(u, 0.5 - 0.5 / kappa) * (1.0 - (b / (qn.mu + 1)) * z);
        CHECK(w(r) == doctest::Approx(expected).epsilon(1e-13));
    }
    SUBCASE("flat ground state is the gaussian") {
        const QuantumNumbers qn{0, 0};
        const auto w = RadialWavefunction::closed_form(qn, 0.0, Branch::euclid);
        for (double r : {0.2, 0.9, 2.1})
            CHECK(w(r) == doctest::Approx(std::exp(-r * r / 2)).epsilon(1e-14));
        const auto wp = RadialWavefunction::closed_form(qn, 0.0, Branch::paper);
        CHECK(wp(1.3) == doctest::Approx(std::exp(1.3 * 1.3 / 2)).epsilon(1e-14));
    }
    SUBCASE("analytic derivatives match finite differences") {
        std::mt19937 rng(13);
        std::uniform_real_distribution<double> rad(0.3, 1.5);
        for (double kappa : {-0.2, 0.0, 0.15})
            for (int nr = 0; nr <= 2; ++nr)
                for (int mu = 0; mu <= 2; ++mu) {
                    const auto w = RadialWavefunction::closed_form(
                        {nr, mu}, kappa, Branch::euclid);
                    const double r = rad(rng);
                    const double h = 1e-5;
                    const auto jet = w.jet(r);
                    const double d1 = (w(r + h) - w(r - h)) / (2 * h);
                    const double d2 =
                        (w(r + h) - 2 * w(r) + w(r - h)) / (h * h);
                    CHECK(jet.d1 == doctest::Approx(d1).epsilon(1e-7));
                    CHECK(jet.d2 == doctest::Approx(d2).epsilon(1e-4));
                }
    }
}

TEST_CASE("eigenpair residuals") {
    std::vector<double> pts;
    for (int i = 1; i <= 100; ++i) pts.push_back(0.05 + 2.95 * i / 101.0);

    SUBCASE("true pairs annihilate the operator") {
        for (double kappa : {-0.1, 0.1})
            for (int mu = 0; mu <= 2; ++mu)
                for (int nr = 0; nr <= 3; ++nr) {
                    const QuantumNumbers qn{nr, mu};
                    for (auto branch : {Branch::paper, Branch::euclid}) {
                        const double e =
                            closed_form_energy(qn.n(), kappa, branch);
                        CHECK(schrodinger_residual(qn, kappa, e, branch, pts) <
                              1e-8);
                    }
                }
    }
    SUBCASE("perturbed energies are detected") {
        const QuantumNumbers qn{1, 1};
        const double e = closed_form_energy(qn.n(), 0.1, Branch::euclid);
        CHECK(schrodinger_residual(qn, 0.1, e + 0.1, Branch::euclid, pts) >
              1e-3);
    }
    SUBCASE("flat ground state with analytic derivatives") {
        const QuantumNumbers qn{0, 0};
        CHECK(schrodinger_residual(qn, 0.0, 1.0, Branch::euclid, pts) < 1e-10);
    }
}

TEST_CASE("quantum number validation") {
    CHECK_THROWS_AS(validate(QuantumNumbers{-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QuantumNumbers{0, -2}), std::invalid_argument);
    CHECK_THROWS_AS(validate(QuantumNumbers{0, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_energy(-1, 0.0, Branch::paper),
                    std::invalid_argument);
}
