#pragma once

#include <curvosc/rational.hpp>

#include <compare>
#include <map>
#include <string>

namespace curvosc::sym {

// One monomial  k^i * r^j * s^e * cos^c * sin^d * pr^l * pf^m  over the
// cylindrical phase-space variables, with s = sqrt(1 - k r^2) the radical.
// In reduced form e and d are 0 or 1 (s^2 and sin^2 have been rewritten)
// and only j may be negative; normalize() moves negative r powers into the
// denominator.
struct Monomial {
    int k = 0;   // curvature power, >= 0
    int r = 0;   // radial power, any integer before normalization
    int s = 0;   // radical power, 0 or 1 after reduction
    int c = 0;   // cos(phi) power, >= 0
    int d = 0;   // sin(phi) power, 0 or 1 after reduction
    int l = 0;   // p_r power, >= 0
    int m = 0;   // p_phi power, >= 0

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Var { R, Phi, Pr, Pphi };

// Element of the function field generated by k, r, s, cos(phi), sin(phi),
// p_r, p_phi with exact rational coefficients. Stored as a reduced monomial
// sum over the denominator r^a (1 - k r^2)^b. The representation is kept
// canonical at all times:
//   * s^2 -> 1 - k r^2 and sin^2 -> 1 - cos^2 applied in the numerator,
//   * all numerator r powers >= 0, with a zero r power present whenever a > 0,
//   * (1 - k r^2) cancelled against the denominator whenever it divides
//     the numerator exactly.
// An element is zero iff its numerator is the empty sum.
class RingElement {
public:
    using TermMap = std::map<Monomial, Rational>;

    RingElement() = default;

    static RingElement constant(const Rational& value);
    // Raw monomial sum; exponents may be unreduced (s^n, sin^n, negative r).
    static RingElement monomial(const Rational& coeff, const Monomial& mono,
                                int den_r = 0, int den_u = 0);

    // Generators.
    static RingElement kappa();
    static RingElement r();
    static RingElement s();        // sqrt(1 - k r^2)
    static RingElement cos_phi();
    static RingElement sin_phi();
    static RingElement p_r();
    static RingElement p_phi();
    static RingElement one() { return constant(1); }
    static RingElement one_minus_k_r2();   // the denominator generator u

    bool is_zero() const { return num_.empty(); }

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
    RingElement operator*(const Rational& scale) const;

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return (a - b).is_zero();
    }

    // Exact partial derivative with respect to one of the phase variables.
    // The radical differentiates through ds/dr = -k r s / (1 - k r^2).
    RingElement derivative(Var v) const;

    // Substitution kappa = 0 (then s = 1 and the u denominator drops out).
    RingElement at_kappa_zero() const;

    // Floating-point evaluation at a phase point; s is taken as the positive
    // root, so 1 - kappa r^2 > 0 is required.
    double eval(double kappa, double r, double phi, double pr, double pphi) const;

    // Fixed textual dump, one line, sorted monomials:
    //   c*k^i*r^j*s^e*cos^k*sin^d*pr^l*pf^m ... / r^a*(1-k*r^2)^b
    std::string str() const;

    const TermMap& terms() const { return num_; }
    int den_r_power() const { return den_r_; }
    int den_u_power() const { return den_u_; }

private:
    TermMap num_;
    int den_r_ = 0;
    int den_u_ = 0;

    static void add_reduced(TermMap& into, Monomial mono, Rational coeff);
    static TermMap mul_maps(const TermMap& a, const TermMap& b);
    void normalize();
};

inline RingElement operator*(const Rational& scale, const RingElement& x) {
    return x * scale;
}

RingElement pow(const RingElement& base, int exponent);

}  // namespace curvosc::sym
