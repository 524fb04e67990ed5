#include <curvosc/spectrum.hpp>

#include <cmath>
#include <stdexcept>

namespace curvosc::qm {

std::string to_string(Branch b) {
    return b == Branch::paper ? "paper" : "euclid";
}

void validate(const QuantumNumbers& qn) {
    if (qn.n_r < 0 || qn.mu < 0)
        throw std::invalid_argument("quantum numbers must be non-negative");
    if (qn.sign != 1 && qn.sign != -1)
        throw std::invalid_argument("angular sign branch must be +-1");
}

double closed_form_energy(int n, double kappa, Branch branch) {
    if (n < 0) throw std::invalid_argument("principal quantum number n < 0");
    const double np1 = n + 1;
    if (branch == Branch::paper) return np1 * (0.5 * (n + 2) * kappa - 1.0);
    return np1 * (1.0 + 0.5 * n * kappa);
}

SpectralLine closed_form_line(const QuantumNumbers& qn, double kappa,
                              Branch branch, const mech::PhysConstants& c) {
    validate(qn);
    SpectralLine line;
    line.qn = qn;
    line.kappa = kappa;
    line.branch = branch;
    line.e_scaled = closed_form_energy(qn.n(), kappa, branch);
    line.e_physical = mech::physical_energy(line.e_scaled, c);
    line.source = "closed-form";
    return line;
}

HypParams hyp_params(double scaled_e, int mu, double kappa) {
    if (kappa == 0.0)
        throw std::domain_error(
            "hyp_params: kappa = 0 belongs to the confluent (Kummer) path");
    HypParams p;
    p.c = mu + 1.0;
    p.delta = std::sqrt((kappa - 2.0) * (kappa - 2.0) + 8.0 * scaled_e * kappa);
    const double base = (2.0 * mu + 3.0) * kappa - 2.0;
    p.a = (base - p.delta) / (4.0 * kappa);
    p.b = (base + p.delta) / (4.0 * kappa);
    return p;
}

std::optional<int> terminating_index(const HypParams& p, Branch branch,
                                     double tol) {
    const double c1 = branch == Branch::paper ? p.a : p.c - p.a;
    const double c2 = branch == Branch::paper ? p.b : p.c - p.b;
    std::optional<int> best;
    for (double cand : {c1, c2}) {
        const double rounded = std::round(cand);
        if (rounded <= 0.0 && std::abs(cand - rounded) < tol) {
            const int n = static_cast<int>(-rounded);
            if (!best || n < *best) best = n;
        }
    }
    return best;
}

bool is_terminating_at(const HypParams& p, Branch branch, int n_r, double tol) {
    const double c1 = branch == Branch::paper ? p.a : p.c - p.a;
    const double c2 = branch == Branch::paper ? p.b : p.c - p.b;
    return std::abs(c1 + n_r) < tol || std::abs(c2 + n_r) < tol;
}

namespace {

// Two-step recursion multiplier a_{n+2}/a_n of the radial series. Both
// factorizations reduce to the same denominator; the numerators differ by
// the shift induced by the boundary exponent.
template <typename T>
T recursion_multiplier(const T& e, int mu, const T& kappa, int n,
                       Branch factorization) {
    T numer;
    if (factorization == Branch::paper)
        numer = kappa * T(n + mu + 1) * T(n + mu + 2) -
                T(2) * (e + T(mu) + T(n + 1));
    else
        numer = kappa * T(n + mu) * T(n + mu + 1) -
                T(2) * (e - T(mu) - T(n + 1));
    return numer / (T(n + 2) * T(n + 2 + 2 * mu));
}

template <typename T>
std::vector<T> frobenius_impl(const T& e, int mu, const T& kappa, int n_max,
                              Branch factorization) {
    if (mu < 0 || n_max < 2)
        throw std::invalid_argument("frobenius_series: mu >= 0, n_max >= 2");
    std::vector<T> a(static_cast<std::size_t>(n_max) + 1, T(0));
    a[0] = T(1);
    // a_1 = 0, so every odd coefficient vanishes
    for (int n = 0; n + 2 <= n_max; n += 2)
        a[n + 2] = a[n] * recursion_multiplier(e, mu, kappa, n, factorization);
    return a;
}

}  // namespace

std::vector<Rational> frobenius_series(const Rational& scaled_e, int mu,
                                       const Rational& kappa, int n_max,
                                       Branch factorization) {
    return frobenius_impl<Rational>(scaled_e, mu, kappa, n_max, factorization);
}

std::vector<double> frobenius_series(double scaled_e, int mu, double kappa,
                                     int n_max, Branch factorization) {
    return frobenius_impl<double>(scaled_e, mu, kappa, n_max, factorization);
}

double frobenius_ratio(double scaled_e, int mu, double kappa, int n,
                       Branch factorization) {
    return recursion_multiplier<double>(scaled_e, mu, kappa, n, factorization);
}

double frobenius_ratio_limit(double scaled_e, int mu, double kappa, int n,
                             Branch factorization) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("frobenius_ratio_limit: need even n >= 4");
    const double half = std::abs(
        frobenius_ratio(scaled_e, mu, kappa, n / 2, factorization));
    const double full =
        std::abs(frobenius_ratio(scaled_e, mu, kappa, n, factorization));
    return 2.0 * full - half;
}

std::vector<Rational> terminating_poly(int n_r, int mu, const Rational& kappa,
                                       Branch branch) {
    if (kappa == 0)
        throw std::domain_error("terminating_poly: kappa = 0 uses the Kummer path");
    // P(z) = 2F1(-N_r, B; mu+1; z) with
    //   B = N_r + mu + 3/2 - 1/kappa   (paper factorization)
    //   B = N_r + mu + 1/2 + 1/kappa   (mirrored factorization)
    const Rational inv_k = Rational(1) / kappa;
    Rational B = branch == Branch::paper
                     ? Rational(2 * n_r + 2 * mu + 3) / 2 - inv_k
                     : Rational(2 * n_r + 2 * mu + 1) / 2 + inv_k;
    std::vector<Rational> p(static_cast<std::size_t>(n_r) + 1);
    p[0] = 1;
    for (int k = 0; k < n_r; ++k)
        p[k + 1] = p[k] * Rational(-(n_r - k)) * (B + k) /
                   (Rational(mu + 1 + k) * Rational(k + 1));
    return p;
}

RadialWavefunction RadialWavefunction::closed_form(const QuantumNumbers& qn,
                                                   double kappa, Branch branch) {
    validate(qn);
    RadialWavefunction w;
    w.mu_ = qn.mu;
    w.kappa_ = kappa;
    w.poly_.assign(static_cast<std::size_t>(qn.n_r) + 1, 0.0);
    w.poly_[0] = 1.0;
    if (kappa != 0.0) {
        w.sigma_ = branch == Branch::paper ? 0.5 - 0.5 / kappa : 0.5 / kappa;
        const double B = branch == Branch::paper
                             ? qn.n_r + qn.mu + 1.5 - 1.0 / kappa
                             : qn.n_r + qn.mu + 0.5 + 1.0 / kappa;
        for (int k = 0; k < qn.n_r; ++k)
            w.poly_[k + 1] = w.poly_[k] * (-(qn.n_r - k)) * (B + k) /
                             ((qn.mu + 1.0 + k) * (k + 1.0));
    } else {
        // Kummer path: R = r^mu e^{g r^2/2} M(-N_r; mu+1; -g r^2)
        w.gauss_sign_ = branch == Branch::paper ? +1.0 : -1.0;
        for (int k = 0; k < qn.n_r; ++k)
            w.poly_[k + 1] = w.poly_[k] * (-(qn.n_r - k)) /
                             ((qn.mu + 1.0 + k) * (k + 1.0));
    }
    return w;
}

RadialWavefunction::Jet RadialWavefunction::jet(double r) const {
    // R = r^mu * E(r) * P(z(r));  z = kappa r^2 (or -g r^2 at kappa = 0)
    double p = 0, dp = 0, ddp = 0;  // P and z-derivatives, Horner
    for (std::size_t i = poly_.size(); i-- > 0;) {
        const double z = kappa_ != 0.0 ? kappa_ * r * r : -gauss_sign_ * r * r;
        ddp = ddp * z + 2 * dp;
        dp = dp * z + p;
        p = p * z + poly_[i];
    }
    double E, dE, ddE, dz, ddz;
    if (kappa_ != 0.0) {
        const double u = 1.0 - kappa_ * r * r;
        if (u <= 0.0)
            throw std::domain_error("RadialWavefunction: outside chart domain");
        E = std::pow(u, sigma_);
        dE = sigma_ * std::pow(u, sigma_ - 1.0) * (-2.0 * kappa_ * r);
        ddE = sigma_ * (sigma_ - 1.0) * std::pow(u, sigma_ - 2.0) * 4.0 *
                  kappa_ * kappa_ * r * r -
              2.0 * kappa_ * sigma_ * std::pow(u, sigma_ - 1.0);
        dz = 2.0 * kappa_ * r;
        ddz = 2.0 * kappa_;
    } else {
        const double g = gauss_sign_;
        E = std::exp(g * r * r / 2.0);
        dE = g * r * E;
        ddE = (g + g * g * r * r) * E;
        dz = -2.0 * g * r;
        ddz = -2.0 * g;
    }
    const double W = E * p;
    const double dW = dE * p + E * dp * dz;
    const double ddW = ddE * p + 2.0 * dE * dp * dz + E * (ddp * dz * dz + dp * ddz);

    const double rm = std::pow(r, mu_);
    const double rm1 = mu_ > 0 ? mu_ * std::pow(r, mu_ - 1) : 0.0;
    const double rm2 = mu_ > 1 ? mu_ * (mu_ - 1.0) * std::pow(r, mu_ - 2) : 0.0;

    Jet out;
    out.value = rm * W;
    out.d1 = rm1 * W + rm * dW;
    out.d2 = rm2 * W + 2.0 * rm1 * dW + rm * ddW;
    return out;
}

std::complex<double> eval_wavefunction(const QuantumNumbers& qn, double kappa,
                                       double r, double phi, Branch branch,
                                       double scale) {
    const auto radial = RadialWavefunction::closed_form(qn, kappa, branch);
    const double R = radial(r);
    const double arg = qn.sign * qn.mu * phi;
    return scale * R * std::complex<double>(std::cos(arg), std::sin(arg));
}

double schrodinger_residual(const QuantumNumbers& qn, double kappa,
                            double scaled_e, Branch branch,
                            std::span<const double> points) {
    if (points.empty())
        throw std::invalid_argument("schrodinger_residual: no sample points");
    const auto radial = RadialWavefunction::closed_form(qn, kappa, branch);
    double max_res = 0, max_ref = 0;
    for (double r : points) {
        if (r <= 0.0)
            throw std::domain_error("schrodinger_residual: points must have r > 0");
        const auto [R, dR, ddR] = radial.jet(r);
        const double u = 1.0 - kappa * r * r;
        const double hr = -0.5 * (u * ddR + (1.0 - 2.0 * kappa * r * r) * dR / r -
                                  qn.mu * qn.mu * R / (r * r)) +
                          0.5 * (1.0 - kappa) * r * r / u * R;
        max_res = std::max(max_res, std::abs(hr - scaled_e * R));
        max_ref = std::max(max_ref, std::abs(scaled_e * R));
    }
    if (max_ref == 0.0) return max_res;
    return max_res / max_ref;
}

}  // namespace curvosc::qm
