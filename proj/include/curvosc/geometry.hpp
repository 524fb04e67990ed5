#pragma once

#include <cmath>

namespace curvosc::mech {

// Physical constants of the model. beta is the derived combination that
// the unit scaling removes: alpha = sqrt(m) * beta.
struct PhysConstants {
    double m = 1.0;
    double alpha = 1.0;
    double hbar = 1.0;

    double beta() const { return alpha / std::sqrt(m); }
};

struct CylVel {
    double r = 0, phi = 0, vr = 0, vphi = 0;
};
struct CylMom {
    double r = 0, phi = 0, pr = 0, pphi = 0;
};
struct CartVel {
    double x = 0, y = 0, vx = 0, vy = 0;
};
struct CartMom {
    double x = 0, y = 0, px = 0, py = 0;
};

// 1 - kappa r^2, the kinetic denominator; positive on the allowed domain.
double domain_factor(double kappa, double r2);
// Throws std::domain_error outside the chart domain.
void require_domain(double kappa, double r2);

// Chart transforms. Cylindrical -> Cartesian is defined everywhere;
// the inverse requires r > 0 and throws on the degenerate origin.
CartVel cart_from_cyl(const CylVel& s);
CylVel cyl_from_cart(const CartVel& s);
CartMom cart_from_cyl(const CylMom& s);
CylMom cyl_from_cart(const CartMom& s);

// Oscillator potential as printed: V(r) = -(alpha^2/2) r^2/(1 - kappa r^2).
// The Lagrangian below carries "+V" and the Hamiltonian "-V", so the
// effective well is +alpha^2 r^2 / (2(1-kappa r^2)).
double potential(double r2, double kappa, const PhysConstants& c);

// Lagrangians in the two charts; they agree on corresponding states.
double lagrangian(const CylVel& s, double kappa, const PhysConstants& c);
double lagrangian(const CartVel& s, double kappa, const PhysConstants& c);

// Legendre transform, both directions, both charts.
CylMom momenta(const CylVel& s, double kappa, const PhysConstants& c);
CylVel velocities(const CylMom& s, double kappa, const PhysConstants& c);
CartMom momenta(const CartVel& s, double kappa, const PhysConstants& c);
CartVel velocities(const CartMom& s, double kappa, const PhysConstants& c);

double hamiltonian(const CylMom& s, double kappa, const PhysConstants& c);
double hamiltonian(const CartMom& s, double kappa, const PhysConstants& c);

struct NoetherMomenta {
    double p1 = 0, p2 = 0, j = 0;
};

// Conserved generators of the isometry algebra evaluated on a momentum
// state. The cylindrical form has the explicit 1/r and requires r > 0; the
// Cartesian form reduces to P1 = s px, P2 = s py, J = x py - y px and is
// regular at the origin.
NoetherMomenta noether(const CylMom& s, double kappa);
NoetherMomenta noether(const CartMom& s, double kappa);

// Invariant measure density r / sqrt(1 - kappa r^2).
double measure_density(double r, double kappa);

// Unit scaling: r = sqrt(hbar/(m beta)) r_bar, kappa = (m beta/hbar) k_bar,
// E = hbar beta E_bar.
double scaled_length(double r, const PhysConstants& c);
double physical_length(double r_bar, const PhysConstants& c);
double scaled_curvature(double kappa, const PhysConstants& c);
double physical_curvature(double kappa_bar, const PhysConstants& c);
double scaled_energy(double e, const PhysConstants& c);
double physical_energy(double e_bar, const PhysConstants& c);

// Coefficient of r_bar^2/(1 - k_bar r_bar^2) in the scaled radial equation,
// obtained by routing the coupling replacement beta^2 -> beta^2 -
// kappa hbar beta / m through the scaling; equals 1 - k_bar.
double scaled_potential_coefficient(double kappa, const PhysConstants& c);

}  // namespace curvosc::mech
