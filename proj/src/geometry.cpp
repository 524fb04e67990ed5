#include <curvosc/geometry.hpp>

#include <stdexcept>

namespace curvosc::mech {

double domain_factor(double kappa, double r2) { return 1.0 - kappa * r2; }

void require_domain(double kappa, double r2) {
    if (!(domain_factor(kappa, r2) > 0.0))
        throw std::domain_error("state outside the chart domain: 1 - kappa r^2 <= 0");
}

CartVel cart_from_cyl(const CylVel& s) {
    const double c = std::cos(s.phi), n = std::sin(s.phi);
    CartVel out;
    out.x = s.r * c;
    out.y = s.r * n;
    out.vx = s.vr * c - s.r * n * s.vphi;
    out.vy = s.vr * n + s.r * c * s.vphi;
    return out;
}

CylVel cyl_from_cart(const CartVel& s) {
    const double r2 = s.x * s.x + s.y * s.y;
    if (r2 == 0.0)
        throw std::domain_error("cyl_from_cart: phi undefined at the origin");
    CylVel out;
    out.r = std::sqrt(r2);
    out.phi = std::atan2(s.y, s.x);
    out.vr = (s.x * s.vx + s.y * s.vy) / out.r;
    out.vphi = (s.x * s.vy - s.y * s.vx) / r2;
    return out;
}

CartMom cart_from_cyl(const CylMom& s) {
    if (s.r == 0.0)
        throw std::domain_error("cart_from_cyl: momentum transform needs r > 0");
    const double c = std::cos(s.phi), n = std::sin(s.phi);
    CartMom out;
    out.x = s.r * c;
    out.y = s.r * n;
    out.px = c * s.pr - n * s.pphi / s.r;
    out.py = n * s.pr + c * s.pphi / s.r;
    return out;
}

CylMom cyl_from_cart(const CartMom& s) {
    const double r2 = s.x * s.x + s.y * s.y;
    if (r2 == 0.0)
        throw std::domain_error("cyl_from_cart: phi undefined at the origin");
    CylMom out;
    out.r = std::sqrt(r2);
    out.phi = std::atan2(s.y, s.x);
    out.pr = (s.x * s.px + s.y * s.py) / out.r;
    out.pphi = s.x * s.py - s.y * s.px;
    return out;
}

double potential(double r2, double kappa, const PhysConstants& c) {
    require_domain(kappa, r2);
    return -0.5 * c.alpha * c.alpha * r2 / domain_factor(kappa, r2);
}

double lagrangian(const CylVel& s, double kappa, const PhysConstants& c) {
    const double r2 = s.r * s.r;
    require_domain(kappa, r2);
    const double u = domain_factor(kappa, r2);
    return 0.5 * c.m * (s.vr * s.vr / u + r2 * s.vphi * s.vphi) +
           potential(r2, kappa, c);
}

double lagrangian(const CartVel& s, double kappa, const PhysConstants& c) {
    const double r2 = s.x * s.x + s.y * s.y;
    require_domain(kappa, r2);
    const double u = domain_factor(kappa, r2);
    const double w = s.x * s.vy - s.y * s.vx;
    return 0.5 * c.m * (s.vx * s.vx + s.vy * s.vy - kappa * w * w) / u +
           potential(r2, kappa, c);
}

CylMom momenta(const CylVel& s, double kappa, const PhysConstants& c) {
    const double r2 = s.r * s.r;
    require_domain(kappa, r2);
    return {s.r, s.phi, c.m * s.vr / domain_factor(kappa, r2),
            c.m * r2 * s.vphi};
}

CylVel velocities(const CylMom& s, double kappa, const PhysConstants& c) {
    const double r2 = s.r * s.r;
    require_domain(kappa, r2);
    return {s.r, s.phi, domain_factor(kappa, r2) * s.pr / c.m,
            s.pphi / (c.m * r2)};
}

CartMom momenta(const CartVel& s, double kappa, const PhysConstants& c) {
    const double r2 = s.x * s.x + s.y * s.y;
    require_domain(kappa, r2);
    const double u = domain_factor(kappa, r2);
    const double w = s.x * s.vy - s.y * s.vx;
    return {s.x, s.y, c.m * (s.vx + kappa * w * s.y) / u,
            c.m * (s.vy - kappa * w * s.x) / u};
}

CartVel velocities(const CartMom& s, double kappa, const PhysConstants& c) {
    const double r2 = s.x * s.x + s.y * s.y;
    require_domain(kappa, r2);
    return {s.x, s.y,
            ((1.0 - kappa * s.x * s.x) * s.px - kappa * s.x * s.y * s.py) / c.m,
            ((1.0 - kappa * s.y * s.y) * s.py - kappa * s.x * s.y * s.px) / c.m};
}

double hamiltonian(const CylMom& s, double kappa, const PhysConstants& c) {
    const double r2 = s.r * s.r;
    require_domain(kappa, r2);
    const double u = domain_factor(kappa, r2);
    return 0.5 / c.m * (u * s.pr * s.pr + s.pphi * s.pphi / r2) -
           potential(r2, kappa, c);
}

double hamiltonian(const CartMom& s, double kappa, const PhysConstants& c) {
    const double r2 = s.x * s.x + s.y * s.y;
    require_domain(kappa, r2);
    const double radial = s.x * s.px + s.y * s.py;
    return 0.5 / c.m *
               (s.px * s.px + s.py * s.py - kappa * radial * radial) -
           potential(r2, kappa, c);
}

NoetherMomenta noether(const CylMom& s, double kappa) {
    if (s.r <= 0.0)
        throw std::domain_error("noether: 1/r factor degenerate at r = 0");
    const double r2 = s.r * s.r;
    require_domain(kappa, r2);
    const double root = std::sqrt(domain_factor(kappa, r2));
    const double c = std::cos(s.phi), n = std::sin(s.phi);
    return {root * (c * s.pr - n * s.pphi / s.r),
            root * (n * s.pr + c * s.pphi / s.r), s.pphi};
}

NoetherMomenta noether(const CartMom& s, double kappa) {
    const double r2 = s.x * s.x + s.y * s.y;
    require_domain(kappa, r2);
    const double root = std::sqrt(domain_factor(kappa, r2));
    return {root * s.px, root * s.py, s.x * s.py - s.y * s.px};
}

double measure_density(double r, double kappa) {
    if (r < 0.0) throw std::domain_error("measure_density: r < 0");
    require_domain(kappa, r * r);
    return r / std::sqrt(domain_factor(kappa, r * r));
}

double scaled_length(double r, const PhysConstants& c) {
    return r * std::sqrt(c.m * c.beta() / c.hbar);
}
double physical_length(double r_bar, const PhysConstants& c) {
    return r_bar * std::sqrt(c.hbar / (c.m * c.beta()));
}
double scaled_curvature(double kappa, const PhysConstants& c) {
    return kappa * c.hbar / (c.m * c.beta());
}
double physical_curvature(double kappa_bar, const PhysConstants& c) {
    return kappa_bar * c.m * c.beta() / c.hbar;
}
double scaled_energy(double e, const PhysConstants& c) {
    return e / (c.hbar * c.beta());
}
double physical_energy(double e_bar, const PhysConstants& c) {
    return e_bar * c.hbar * c.beta();
}

double scaled_potential_coefficient(double kappa, const PhysConstants& c) {
    const double beta = c.beta();
    // coupling alpha^2 = m beta^2 with beta^2 -> beta^2 - kappa hbar beta/m,
    // then r^2 -> (hbar/m beta) r_bar^2, all in units of hbar beta
    const double coupling = c.m * beta * beta - kappa * c.hbar * beta;
    return coupling * (c.hbar / (c.m * beta)) / (c.hbar * beta);
}

}  // namespace curvosc::mech
