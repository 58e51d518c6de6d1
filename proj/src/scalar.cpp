#include "qgc/scalar.hpp"

#include <algorithm>

namespace qgc {

FracSH::FracSH(PolySH num, PolySH den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    canonicalize();
}

void FracSH::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolySH(Rat(1));
        return;
    }
    // Full exact division first: if den | num the fraction is a polynomial.
    if (!den_.is_constant()) {
        if (auto q = num_.div_exact(den_)) {
            num_ = *q;
            den_ = PolySH(Rat(1));
        }
    }
    // Common monomial content.
    int se = std::min(num_.min_exp_s(), den_.min_exp_s());
    int he = std::min(num_.min_exp_h(), den_.min_exp_h());
    if (se > 0 || he > 0) {
        num_ = num_.shift_down(se, he);
        den_ = den_.shift_down(se, he);
    }
    // Rational normalization: the denominator becomes integer-primitive.
    Rat cd = den_.content();
    if (cd != 1 && sgn(cd) != 0) {
        Rat inv = Rat(1) / cd;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
    // Sign: leading coefficient of den positive.
    if (sgn(den_.leading_coeff()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

FracSH FracSH::operator-() const {
    FracSH r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

FracSH FracSH::operator+(const FracSH& o) const {
    if (den_ == o.den_) return FracSH(num_ + o.num_, den_);
    return FracSH(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracSH FracSH::operator-(const FracSH& o) const { return *this + (-o); }

FracSH FracSH::operator*(const FracSH& o) const {
    return FracSH(num_ * o.num_, den_ * o.den_);
}

FracSH FracSH::operator/(const FracSH& o) const {
    if (o.is_zero()) throw division_by_zero();
    return FracSH(num_ * o.den_, den_ * o.num_);
}

FracSH FracSH::inverse() const {
    if (is_zero()) throw division_by_zero();
    return FracSH(den_, num_);
}

bool FracSH::operator==(const FracSH& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

FracSH FracSH::subst_h0() const {
    PolySH d = den_.subst_h0();
    if (d.is_zero()) throw substitution_pole("denominator vanishes at h = 0");
    return FracSH(num_.subst_h0(), d);
}

std::string FracSH::str() const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// --- ScalarQH -------------------------------------------------------------

ScalarQH ScalarQH::s_pow(int e) {
    if (e >= 0) return ScalarQH(FracSH(PolySH::var_s(e)));
    return ScalarQH(FracSH(PolySH(Rat(1)), PolySH::var_s(-e)));
}

ScalarQH ScalarQH::h(int e) { return ScalarQH(FracSH(PolySH::var_h(e))); }

ScalarQH ScalarQH::eta() {
    return ScalarQH(FracSH(PolySH::var_h(), PolySH::var_s(2) - PolySH(Rat(1))));
}

ScalarQH ScalarQH::sqrt2() {
    return ScalarQH(FracSH(), FracSH(PolySH(Rat(1))));
}

ScalarQH ScalarQH::from_poly_h(const PolyH& p) {
    PolySH rat_num, rad_num;
    for (int e = 0; e <= p.degree(); ++e) {
        rat_num = rat_num + PolySH::monomial(p.coeff(e), 0, e);
        rad_num = rad_num + PolySH::monomial(p.rad_coeff(e), 0, e);
    }
    return ScalarQH(FracSH(rat_num), FracSH(rad_num));
}

ScalarQH ScalarQH::from_rat_rad(const RatRad& c) {
    return ScalarQH(FracSH(PolySH(c.a)), FracSH(PolySH(c.b)));
}

ScalarQH ScalarQH::operator-() const { return ScalarQH(-rat_, -rad_); }

ScalarQH ScalarQH::operator+(const ScalarQH& o) const {
    return ScalarQH(rat_ + o.rat_, rad_ + o.rad_);
}

ScalarQH ScalarQH::operator-(const ScalarQH& o) const {
    return ScalarQH(rat_ - o.rat_, rad_ - o.rad_);
}

ScalarQH ScalarQH::operator*(const ScalarQH& o) const {
    // (a + r sqrt2)(c + t sqrt2) = (ac + 2rt) + (at + rc) sqrt2
    FracSH two(PolySH(Rat(2)));
    return ScalarQH(rat_ * o.rat_ + two * rad_ * o.rad_, rat_ * o.rad_ + rad_ * o.rat_);
}

ScalarQH ScalarQH::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (rad_.is_zero()) return ScalarQH(rat_.inverse());
    // 1/(a + r sqrt2) = (a - r sqrt2)/(a^2 - 2 r^2); the norm cannot vanish
    // for nonzero input since 2 is not a square in Q(s, h).
    FracSH two(PolySH(Rat(2)));
    FracSH norm = rat_ * rat_ - two * rad_ * rad_;
    if (norm.is_zero()) throw division_by_zero();
    FracSH ninv = norm.inverse();
    return ScalarQH(rat_ * ninv, -(rad_ * ninv));
}

ScalarQH ScalarQH::operator/(const ScalarQH& o) const {
    if (o.is_zero()) throw division_by_zero();
    return *this * o.inverse();
}

static LimitInfo limit_frac(const FracSH& f) {
    PolySH num = f.num(), den = f.den();
    int cancels = 0;
    while (num.eval_s1().is_zero() && den.eval_s1().is_zero()) {
        auto qn = num.div_s_minus_1();
        auto qd = den.div_s_minus_1();
        // Vanishing at s=1 implies exact divisibility by (s-1).
        num = *qn;
        den = *qd;
        ++cancels;
    }
    PolySH d1 = den.eval_s1();
    if (d1.is_zero()) throw pole_error();
    if (d1.degree_h() > 0) throw non_polynomial_error();
    Rat dc = d1.constant_value();
    PolySH n1 = num.eval_s1();
    PolyH out;
    for (auto& [m, c] : n1.terms()) out.set_coeff(m.he, out.coeff(m.he) + c / dc);
    return LimitInfo{out, cancels};
}

LimitInfo ScalarQH::limit_q_to_1_info() const {
    LimitInfo a = limit_frac(rat_);
    LimitInfo b = limit_frac(rad_);
    PolyH value = a.value;
    for (int e = 0; e <= b.value.degree(); ++e)
        value.set_rad_coeff(e, b.value.coeff(e));
    return LimitInfo{value, a.cancellations + b.cancellations};
}

PolyH ScalarQH::limit_q_to_1() const { return limit_q_to_1_info().value; }

ScalarQH ScalarQH::subst_h0() const {
    return ScalarQH(rat_.subst_h0(), rad_.subst_h0());
}

static PolyH frac_to_poly_h(const FracSH& f, bool rad_part, PolyH acc) {
    if (f.num().degree_s() > 0 || f.den().degree_s() > 0 || !f.den().is_constant())
        throw non_polynomial_error("value is not a polynomial in h");
    Rat dc = f.den().constant_value();
    for (auto& [m, c] : f.num().terms()) {
        if (rad_part)
            acc.set_rad_coeff(m.he, acc.rad_coeff(m.he) + c / dc);
        else
            acc.set_coeff(m.he, acc.coeff(m.he) + c / dc);
    }
    return acc;
}

PolyH ScalarQH::to_poly_h() const {
    PolyH out = frac_to_poly_h(rat_, false, PolyH());
    return frac_to_poly_h(rad_, true, out);
}

std::string ScalarQH::str() const {
    if (rad_.is_zero()) return rat_.str();
    std::string radical = "sqrt2*(" + rad_.str() + ")";
    if (rat_.is_zero()) return radical;
    return rat_.str() + " + " + radical;
}

} // namespace qgc
