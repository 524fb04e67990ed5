#include <curvosc/ring.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace curvosc::sym {

namespace {

// Numerator polynomials with the s/sin exponents frozen, viewed as
// polynomials in kappa with Laurent coefficients in r (cos, pr, pf inert).
// Used for exact division by u = 1 - k r^2.
using TermMap = RingElement::TermMap;

Monomial shift(Monomial m, int dk, int dr) {
    m.k += dk;
    m.r += dr;
    return m;
}

// Divides a numerator by u once. u has the single root kappa = r^-2, so a
// polynomial-in-kappa synthetic division decides divisibility exactly; the
// s/sin parts are untouched because u contains neither generator.
bool divide_by_u(const TermMap& num, TermMap& quotient) {
    TermMap rem = num;
    TermMap quot;
    while (!rem.empty()) {
        int kmax = 0;
        for (const auto& [mono, c] : rem) kmax = std::max(kmax, mono.k);
        if (kmax == 0) return false;  // nonzero remainder free of kappa
        // Peel the top kappa block: num = (kappa - r^-2) * quot  =>  the
        // k = kmax terms come from kappa * (quot terms at k = kmax - 1).
        TermMap top;
        for (const auto& [mono, c] : rem)
            if (mono.k == kmax) top.emplace(mono, c);
        for (const auto& [mono, c] : top) {
            Monomial q = shift(mono, -1, 0);
            quot[q] += c;
            rem.erase(mono);
            // rem -= q * (kappa - r^-2): the kappa part cancelled above.
            Monomial back = shift(q, 0, -2);
            Rational& slot = rem[back];
            slot += c;
            if (slot == 0) rem.erase(back);
        }
    }
    // num = (kappa - r^-2) * quot and u = -r^2 (kappa - r^-2), hence
    // num / u = -quot * r^-2.
    quotient.clear();
    for (const auto& [mono, c] : quot) quotient[shift(mono, 0, -2)] = -c;
    return true;
}

}  // namespace

void RingElement::add_reduced(TermMap& into, Monomial mono, Rational coeff) {
    if (coeff == 0) return;
    if (mono.s >= 2) {  // s^2 = 1 - k r^2
        Monomial base = mono;
        base.s -= 2;
        add_reduced(into, base, coeff);
        add_reduced(into, shift(base, 1, 2), -coeff);
        return;
    }
    if (mono.d >= 2) {  // sin^2 = 1 - cos^2
        Monomial base = mono;
        base.d -= 2;
        add_reduced(into, base, coeff);
        Monomial cos2 = base;
        cos2.c += 2;
        add_reduced(into, cos2, -coeff);
        return;
    }
    Rational& slot = into[mono];
    slot += coeff;
    if (slot == 0) into.erase(mono);
}

RingElement::TermMap RingElement::mul_maps(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Monomial m{ma.k + mb.k, ma.r + mb.r, ma.s + mb.s, ma.c + mb.c,
                       ma.d + mb.d, ma.l + mb.l, ma.m + mb.m};
            add_reduced(out, m, ca * cb);
        }
    return out;
}

void RingElement::normalize() {
    if (num_.empty()) {
        den_r_ = den_u_ = 0;
        return;
    }
    int jmin = num_.begin()->first.r;
    for (const auto& [mono, c] : num_) jmin = std::min(jmin, mono.r);
    int move = 0;
    if (jmin < 0)
        move = jmin;                       // push negatives into denominator
    else if (jmin > 0 && den_r_ > 0)
        move = std::min(jmin, den_r_);     // cancel common r factor
    if (move != 0) {
        TermMap shifted;
        for (const auto& [mono, c] : num_) shifted.emplace(shift(mono, 0, -move), c);
        num_ = std::move(shifted);
        den_r_ -= move;
    }
    while (den_u_ > 0) {
        TermMap quot;
        if (!divide_by_u(num_, quot)) break;
        num_ = std::move(quot);
        --den_u_;
        // the quotient picked up r^-2 factors; restore r >= 0
        int j2 = num_.begin()->first.r;
        for (const auto& [mono, c] : num_) j2 = std::min(j2, mono.r);
        if (j2 < 0) {
            TermMap shifted;
            for (const auto& [mono, c] : num_) shifted.emplace(shift(mono, 0, -j2), c);
            num_ = std::move(shifted);
            den_r_ -= j2;
        } else if (j2 > 0 && den_r_ > 0) {
            int t = std::min(j2, den_r_);
            TermMap shifted;
            for (const auto& [mono, c] : num_) shifted.emplace(shift(mono, 0, -t), c);
            num_ = std::move(shifted);
            den_r_ -= t;
        }
    }
}

RingElement RingElement::constant(const Rational& value) {
    RingElement x;
    add_reduced(x.num_, Monomial{}, value);
    return x;
}

RingElement RingElement::monomial(const Rational& coeff, const Monomial& mono,
                                  int den_r, int den_u) {
    if (mono.k < 0 || mono.s < 0 || mono.c < 0 || mono.d < 0 || mono.l < 0 ||
        mono.m < 0 || den_r < 0 || den_u < 0)
        throw std::invalid_argument("RingElement: negative exponent outside r slot");
    RingElement x;
    x.den_r_ = den_r;
    x.den_u_ = den_u;
    add_reduced(x.num_, mono, coeff);
    x.normalize();
    return x;
}

RingElement RingElement::kappa()   { return monomial(1, {.k = 1}); }
RingElement RingElement::r()       { return monomial(1, {.r = 1}); }
RingElement RingElement::s()       { return monomial(1, {.s = 1}); }
RingElement RingElement::cos_phi() { return monomial(1, {.c = 1}); }
RingElement RingElement::sin_phi() { return monomial(1, {.d = 1}); }
RingElement RingElement::p_r()     { return monomial(1, {.l = 1}); }
RingElement RingElement::p_phi()   { return monomial(1, {.m = 1}); }

RingElement RingElement::one_minus_k_r2() {
    RingElement x;
    add_reduced(x.num_, Monomial{}, 1);
    add_reduced(x.num_, Monomial{.k = 1, .r = 2}, -1);
    return x;
}

RingElement RingElement::operator-() const {
    RingElement x = *this;
    for (auto& [mono, c] : x.num_) c = -c;
    return x;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
    // Bring both sides over the common denominator r^a u^b.
    int a = std::max(den_r_, rhs.den_r_);
    int b = std::max(den_u_, rhs.den_u_);
    TermMap left = num_;
    {
        TermMap scale;
        add_reduced(scale, Monomial{.r = a - den_r_}, 1);
        left = mul_maps(left, scale);
        for (int i = 0; i < b - den_u_; ++i) {
            TermMap u;
            add_reduced(u, Monomial{}, 1);
            add_reduced(u, Monomial{.k = 1, .r = 2}, -1);
            left = mul_maps(left, u);
        }
    }
    TermMap right = rhs.num_;
    {
        TermMap scale;
        add_reduced(scale, Monomial{.r = a - rhs.den_r_}, 1);
        right = mul_maps(right, scale);
        for (int i = 0; i < b - rhs.den_u_; ++i) {
            TermMap u;
            add_reduced(u, Monomial{}, 1);
            add_reduced(u, Monomial{.k = 1, .r = 2}, -1);
            right = mul_maps(right, u);
        }
    }
    for (const auto& [mono, c] : right) add_reduced(left, mono, c);
    num_ = std::move(left);
    den_r_ = a;
    den_u_ = b;
    normalize();
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) { return *this += -rhs; }

RingElement& RingElement::operator*=(const RingElement& rhs) {
    num_ = mul_maps(num_, rhs.num_);
    den_r_ += rhs.den_r_;
    den_u_ += rhs.den_u_;
    normalize();
    return *this;
}

RingElement RingElement::operator*(const Rational& scale) const {
    RingElement x = *this;
    if (scale == 0) return RingElement{};
    for (auto& [mono, c] : x.num_) c *= scale;
    return x;
}

RingElement pow(const RingElement& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    RingElement out = RingElement::one();
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

RingElement RingElement::derivative(Var v) const {
    // d(N / r^a u^b) = [dN + N (-a/r + 2 b k r / u)] / (r^a u^b)
    RingElement dnum;  // dN, assembled as a full ring element
    for (const auto& [mono, c] : num_) {
        switch (v) {
            case Var::R: {
                if (mono.r != 0)
                    dnum += monomial(c * mono.r, shift(mono, 0, -1));
                if (mono.s == 1)  // ds/dr = -k r s / u
                    dnum += monomial(-c, shift(mono, 1, 1), 0, 1);
                break;
            }
            case Var::Phi: {
                if (mono.c > 0) {
                    Monomial t = mono;
                    t.c -= 1;
                    t.d += 1;
                    dnum += monomial(-c * mono.c, t);
                }
                if (mono.d == 1) {
                    Monomial t = mono;
                    t.d -= 1;
                    t.c += 1;
                    dnum += monomial(c, t);
                }
                break;
            }
            case Var::Pr:
                if (mono.l > 0) {
                    Monomial t = mono;
                    t.l -= 1;
                    dnum += monomial(c * mono.l, t);
                }
                break;
            case Var::Pphi:
                if (mono.m > 0) {
                    Monomial t = mono;
                    t.m -= 1;
                    dnum += monomial(c * mono.m, t);
                }
                break;
        }
    }
    RingElement numerator_part;
    numerator_part.num_ = num_;  // N with trivial denominator
    RingElement result = dnum;
    if (v == Var::R && (den_r_ != 0 || den_u_ != 0)) {
        RingElement chain;
        if (den_r_ != 0) chain += monomial(-den_r_, Monomial{.r = -1});
        if (den_u_ != 0) chain += monomial(2 * den_u_, Monomial{.k = 1, .r = 1}, 0, 1);
        result += numerator_part * chain;
    }
    RingElement den = monomial(1, Monomial{}, den_r_, den_u_);
    return result * den;
}

RingElement RingElement::at_kappa_zero() const {
    RingElement out;
    out.den_r_ = den_r_;  // u -> 1, s -> 1
    for (const auto& [mono, c] : num_) {
        if (mono.k != 0) continue;
        Monomial t = mono;
        t.s = 0;
        add_reduced(out.num_, t, c);
    }
    out.normalize();
    return out;
}

double RingElement::eval(double kappa, double r, double phi, double pr,
                         double pphi) const {
    const double u = 1.0 - kappa * r * r;
    if (u <= 0.0) throw std::domain_error("RingElement::eval: 1 - kappa r^2 <= 0");
    const double sq = std::sqrt(u);
    double acc = 0.0;
    for (const auto& [mono, c] : num_) {
        double t = to_double(c);
        t *= std::pow(kappa, mono.k) * std::pow(r, mono.r) * std::pow(sq, mono.s);
        t *= std::pow(std::cos(phi), mono.c) * std::pow(std::sin(phi), mono.d);
        t *= std::pow(pr, mono.l) * std::pow(pphi, mono.m);
        acc += t;
    }
    return acc / (std::pow(r, den_r_) * std::pow(u, den_u_));
}

std::string RingElement::str() const {
    std::ostringstream os;
    if (num_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (const auto& [mono, c] : num_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c) << "*k^" << mono.k << "*r^" << mono.r << "*s^"
               << mono.s << "*cos^" << mono.c << "*sin^" << mono.d << "*pr^"
               << mono.l << "*pf^" << mono.m;
        }
    }
    os << " / r^" << den_r_ << "*(1-k*r^2)^" << den_u_;
    return os.str();
}

}  // namespace curvosc::sym
