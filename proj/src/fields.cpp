#include <curvosc/fields.hpp>

namespace curvosc::sym {

namespace {
const Rational kHalf{1, 2};
}

SymMetric surface_metric() {
    SymMetric g;
    g.rr = RingElement::monomial(1, {}, 0, 1);       // 1/(1 - k r^2)
    g.rphi = RingElement{};
    g.phiphi = RingElement::monomial(1, {.r = 2});   // r^2
    return g;
}

SymMetric lie_derivative_metric(const VectorField2& X, const SymMetric& g) {
    const RingElement fr = X.f.derivative(Var::R);
    const RingElement fp = X.f.derivative(Var::Phi);
    const RingElement hr = X.h.derivative(Var::R);
    const RingElement hp = X.h.derivative(Var::Phi);

    SymMetric out;
    out.rr = X.f * g.rr.derivative(Var::R) + X.h * g.rr.derivative(Var::Phi) +
             (g.rr * fr) * Rational(2) + (g.rphi * hr) * Rational(2);
    out.rphi = X.f * g.rphi.derivative(Var::R) + X.h * g.rphi.derivative(Var::Phi) +
               g.rphi * fr + g.phiphi * hr + g.rr * fp + g.rphi * hp;
    out.phiphi = X.f * g.phiphi.derivative(Var::R) +
                 X.h * g.phiphi.derivative(Var::Phi) + (g.rphi * fp) * Rational(2) +
                 (g.phiphi * hp) * Rational(2);
    return out;
}

std::array<RingElement, 3> killing_residuals(const VectorField2& X) {
    const RingElement inv_u = RingElement::monomial(1, {}, 0, 1);
    const RingElement r2 = RingElement::monomial(1, {.r = 2});
    const RingElement kr = RingElement::monomial(1, {.k = 1, .r = 1});

    std::array<RingElement, 3> res;
    res[0] = X.f.derivative(Var::R) + kr * inv_u * X.f;
    res[1] = r2 * X.h.derivative(Var::R) + inv_u * X.f.derivative(Var::Phi);
    res[2] = RingElement::r() * X.h.derivative(Var::Phi) + X.f;
    return res;
}

RingElement poisson_bracket(const RingElement& F, const RingElement& G) {
    return F.derivative(Var::R) * G.derivative(Var::Pr) +
           F.derivative(Var::Phi) * G.derivative(Var::Pphi) -
           F.derivative(Var::Pr) * G.derivative(Var::R) -
           F.derivative(Var::Pphi) * G.derivative(Var::Phi);
}

VectorField2 vf_commutator(const VectorField2& X, const VectorField2& Y) {
    VectorField2 out;
    out.f = X.f * Y.f.derivative(Var::R) + X.h * Y.f.derivative(Var::Phi) -
            Y.f * X.f.derivative(Var::R) - Y.h * X.f.derivative(Var::Phi);
    out.h = X.f * Y.h.derivative(Var::R) + X.h * Y.h.derivative(Var::Phi) -
            Y.f * X.h.derivative(Var::R) - Y.h * X.h.derivative(Var::Phi);
    return out;
}

VectorField2 field_x1() {
    VectorField2 X;
    X.f = RingElement::monomial(1, {.s = 1, .c = 1});
    X.h = RingElement::monomial(-1, {.s = 1, .d = 1}, 1, 0);  // -(s/r) sin
    return X;
}

VectorField2 field_x2() {
    VectorField2 X;
    X.f = RingElement::monomial(1, {.s = 1, .d = 1});
    X.h = RingElement::monomial(1, {.s = 1, .c = 1}, 1, 0);
    return X;
}

VectorField2 field_rotation() {
    VectorField2 X;
    X.h = RingElement::one();
    return X;
}

RingElement noether_p1() {
    return RingElement::monomial(1, {.s = 1, .c = 1, .l = 1}) +
           RingElement::monomial(-1, {.s = 1, .d = 1, .m = 1}, 1, 0);
}

RingElement noether_p2() {
    return RingElement::monomial(1, {.s = 1, .d = 1, .l = 1}) +
           RingElement::monomial(1, {.s = 1, .c = 1, .m = 1}, 1, 0);
}

RingElement noether_j() { return RingElement::p_phi(); }

RingElement hamiltonian_kinetic() {
    RingElement t = RingElement::monomial(kHalf, {.l = 2}) -
                    RingElement::monomial(kHalf, {.k = 1, .r = 2, .l = 2}) +
                    RingElement::monomial(kHalf, {.m = 2}, 2, 0);
    return t;
}

RingElement potential_shape() { return RingElement::monomial(1, {.r = 2}, 0, 1); }

RingElement measure_density_symbolic() {
    return RingElement::monomial(1, {.r = 1, .s = 1}, 0, 1);  // r s / u = r/sqrt(u)
}

RingElement measure_divergence(const VectorField2& X) {
    const RingElement rho = measure_density_symbolic();
    return (rho * X.f).derivative(Var::R) + (rho * X.h).derivative(Var::Phi);
}

}  // namespace curvosc::sym
