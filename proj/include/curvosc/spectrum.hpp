#pragma once

#include <curvosc/geometry.hpp>
#include <curvosc/rational.hpp>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvosc::qm {

// The two quantization families of the radial problem. "paper" is the
// printed closed form: boundary factor (1-k r^2)^{1/2 - 1/(2k)} and energies
// E = (n+1)((n+2)k/2 - 1). "euclid" is the family obtained from the mirrored
// boundary factor (1-k r^2)^{1/(2k)}, the one whose k -> 0 limit is the
// Gaussian/Kummer solution; its energies are E = (n+1)(1 + n k/2). The
// Sturm-Liouville oracle designates one of them as resolved.
enum class Branch { paper, euclid };

std::string to_string(Branch b);

struct QuantumNumbers {
    int n_r = 0;    // radial index, >= 0
    int mu = 0;     // angular index |mu|, >= 0
    int sign = +1;  // branch of e^{+-i mu phi}

    int n() const { return 2 * n_r + mu; }
};

void validate(const QuantumNumbers& qn);

// Scaled energy of principal quantum number n = 2 N_r + mu.
double closed_form_energy(int n, double kappa, Branch branch);

struct SpectralLine {
    QuantumNumbers qn;
    double kappa = 0;
    Branch branch = Branch::paper;
    double e_scaled = 0;
    double e_physical = 0;
    std::string source;  // "closed-form" or "oracle"
};

SpectralLine closed_form_line(const QuantumNumbers& qn, double kappa,
                              Branch branch, const mech::PhysConstants& c);

// Gauss hypergeometric data of the radial equation at fixed scaled energy.
// delta = sqrt((kappa-2)^2 + 8 E kappa) taken with the principal root;
// under the reflection delta -> -delta the roles of a and b swap.
struct HypParams {
    double a = 0;
    double b = 0;
    double c = 0;      // mu + 1
    double delta = 0;
};

HypParams hyp_params(double scaled_e, int mu, double kappa);

// Smallest N such that one of {a, b} (or {c-a, c-b} for the mirrored
// family) equals -N within tol; nullopt when the series does not terminate.
// At curvatures where two family members share an energy both parameters
// are integers; the smaller one is the polynomial degree.
std::optional<int> terminating_index(const HypParams& p, Branch branch,
                                     double tol = 1e-6);

// Whether the series terminates specifically at radial index n_r.
bool is_terminating_at(const HypParams& p, Branch branch, int n_r,
                       double tol = 1e-6);

// Richardson-extrapolated limit of |a_{m+2}/a_m| using m = n/2 and m = n;
// removes the O(1/n) transient of the raw ratio.
double frobenius_ratio_limit(double scaled_e, int mu, double kappa, int n,
                             Branch factorization);

// Coefficients a_0..a_nmax of the radial power series f(r) = sum a_n r^n in
// the chosen boundary factorization; a_0 = 1, odd coefficients vanish.
// Exact-rational and floating variants share the same recursion.
std::vector<Rational> frobenius_series(const Rational& scaled_e, int mu,
                                       const Rational& kappa, int n_max,
                                       Branch factorization);
std::vector<double> frobenius_series(double scaled_e, int mu, double kappa,
                                     int n_max, Branch factorization);

// Two-step ratio a_{n+2}/a_n of the series at index n; |ratio| -> |kappa|
// as n grows when the energy is not quantized.
double frobenius_ratio(double scaled_e, int mu, double kappa, int n,
                       Branch factorization);

// Exact coefficients of the terminating polynomial P(z), z = kappa r^2, so
// that R = r^mu u^sigma P(kappa r^2); index k runs 0..N_r.
std::vector<Rational> terminating_poly(int n_r, int mu, const Rational& kappa,
                                       Branch branch);

// Radial factor of a closed-form bound state, with analytic derivatives.
class RadialWavefunction {
public:
    static RadialWavefunction closed_form(const QuantumNumbers& qn, double kappa,
                                          Branch branch);

    struct Jet {
        double value = 0, d1 = 0, d2 = 0;
    };

    double operator()(double r) const { return jet(r).value; }
    Jet jet(double r) const;

    int mu() const { return mu_; }
    double kappa() const { return kappa_; }

private:
    int mu_ = 0;
    double kappa_ = 0;
    double sigma_ = 0;        // u-exponent (kappa != 0)
    double gauss_sign_ = 0;   // kappa == 0: exponent sign in e^{g r^2/2}
    std::vector<double> poly_;  // P(z), z = kappa r^2, or Kummer poly in -g r^2
};

// Full wavefunction  scale * R(r) e^{i sign mu phi}.
std::complex<double> eval_wavefunction(const QuantumNumbers& qn, double kappa,
                                       double r, double phi, Branch branch,
                                       double scale = 1.0);

// Scaled radial operator applied to a trial radial function minus E times
// it, evaluated pointwise from analytic derivatives; returns
// max |H R - E R| / max |E R| over the sample points.
double schrodinger_residual(const QuantumNumbers& qn, double kappa,
                            double scaled_e, Branch branch,
                            std::span<const double> points);

}  // namespace curvosc::qm
