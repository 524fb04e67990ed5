#pragma once

#include <curvosc/ring.hpp>

#include <array>

namespace curvosc::sym {

// Vector field f(r,phi) d/dr + h(r,phi) d/dphi on the cylindrical chart.
struct VectorField2 {
    RingElement f;  // d/dr component
    RingElement h;  // d/dphi component

    bool is_zero() const { return f.is_zero() && h.is_zero(); }
};

// Symmetric 2x2 metric tensor on (r, phi); the mixed slot is stored once.
struct SymMetric {
    RingElement rr;
    RingElement rphi;
    RingElement phiphi;

    bool is_zero() const {
        return rr.is_zero() && rphi.is_zero() && phiphi.is_zero();
    }
};

// The constant-curvature metric: g_rr = 1/(1 - k r^2), g_phiphi = r^2,
// normalized so the kinetic energy (1/2) g_ij v^i v^j matches the
// cylindrical Lagrangian exactly.
SymMetric surface_metric();

// (L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k
SymMetric lie_derivative_metric(const VectorField2& X, const SymMetric& g);

// The three Killing PDE residuals for this metric:
//   f_r + k r f/(1 - k r^2),   r^2 h_r + f_phi/(1 - k r^2),   r h_phi + f.
std::array<RingElement, 3> killing_residuals(const VectorField2& X);

// Canonical Poisson bracket {F, G} on (r, phi, p_r, p_phi).
RingElement poisson_bracket(const RingElement& F, const RingElement& G);

// Lie bracket [X, Y]^i = X^k d_k Y^i - Y^k d_k X^i.
VectorField2 vf_commutator(const VectorField2& X, const VectorField2& Y);

// The translational and rotational Killing fields.
VectorField2 field_x1();
VectorField2 field_x2();
VectorField2 field_rotation();

// Noether momenta and phase-space functions built from them.
RingElement noether_p1();
RingElement noether_p2();
RingElement noether_j();

// Kinetic part of the Hamiltonian (m = 1):  (1/2)[(1-k r^2) p_r^2 + p_phi^2/r^2].
RingElement hamiltonian_kinetic();

// Shape of the potential without its coupling:  r^2/(1 - k r^2).
RingElement potential_shape();

// Invariant measure density  r / sqrt(1 - k r^2)  =  r s / (1 - k r^2).
RingElement measure_density_symbolic();

// Divergence of the density along X: d_r(rho f) + d_phi(rho h). Vanishes
// exactly for each Killing field.
RingElement measure_divergence(const VectorField2& X);

}  // namespace curvosc::sym
