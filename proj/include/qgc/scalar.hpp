#ifndef QGC_SCALAR_HPP
#define QGC_SCALAR_HPP

#include <string>

#include "qgc/errors.hpp"
#include "qgc/polyh.hpp"
#include "qgc/polysh.hpp"

namespace qgc {

// Fraction num/den over Q[s, h], den never zero. Canonical form removes the
// common monomial content and rational content, normalizes the sign of den's
// leading coefficient, and attempts a handful of exact divisions; it does NOT
// compute multivariate gcds, so equality goes through cross-multiplication.
class FracSH {
public:
    FracSH() : num_(), den_(PolySH(Rat(1))) {}
    explicit FracSH(PolySH num) : num_(std::move(num)), den_(PolySH(Rat(1))) {}
    FracSH(PolySH num, PolySH den);

    const PolySH& num() const { return num_; }
    const PolySH& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    FracSH operator-() const;
    FracSH operator+(const FracSH& o) const;
    FracSH operator-(const FracSH& o) const;
    FracSH operator*(const FracSH& o) const;
    FracSH operator/(const FracSH& o) const;
    FracSH inverse() const;

    bool operator==(const FracSH& o) const; // cross-multiplication
    bool operator!=(const FracSH& o) const { return !(*this == o); }

    // Substitute h := 0; throws substitution_pole if the denominator vanishes.
    FracSH subst_h0() const;

    std::string str() const;

private:
    void canonicalize();
    PolySH num_;
    PolySH den_;
};

struct LimitInfo {
    PolyH value;
    int cancellations = 0; // number of (s-1) factors removed from num and den
};

// Element of the fraction field Q(s, h) adjoined with sqrt2:
// value = rat + sqrt2 * rad. Field of every q-side matrix entry.
class ScalarQH {
public:
    ScalarQH() = default;
    ScalarQH(long n) : rat_(PolySH(Rat(n))) {}
    explicit ScalarQH(const Rat& c) : rat_(PolySH(c)) {}
    explicit ScalarQH(FracSH rat) : rat_(std::move(rat)) {}
    ScalarQH(FracSH rat, FracSH rad) : rat_(std::move(rat)), rad_(std::move(rad)) {}

    static ScalarQH zero() { return ScalarQH(); }
    static ScalarQH one() { return ScalarQH(1); }
    static ScalarQH s_pow(int e);               // s^e, e may be negative
    static ScalarQH q_pow(int e) { return s_pow(2 * e); } // q = s^2
    static ScalarQH h(int e = 1);
    static ScalarQH eta();                      // h / (s^2 - 1)
    static ScalarQH sqrt2();
    static ScalarQH from_poly_h(const PolyH& p);
    static ScalarQH from_rat_rad(const RatRad& c);

    const FracSH& rat() const { return rat_; }
    const FracSH& rad() const { return rad_; }
    bool has_radical() const { return !rad_.is_zero(); }

    bool is_zero() const { return rat_.is_zero() && rad_.is_zero(); }
    bool is_one() const { return rat_.is_one() && rad_.is_zero(); }

    ScalarQH operator-() const;
    ScalarQH operator+(const ScalarQH& o) const;
    ScalarQH operator-(const ScalarQH& o) const;
    ScalarQH operator*(const ScalarQH& o) const;
    ScalarQH operator/(const ScalarQH& o) const;
    ScalarQH inverse() const;
    ScalarQH& operator+=(const ScalarQH& o) { return *this = *this + o; }
    ScalarQH& operator-=(const ScalarQH& o) { return *this = *this - o; }
    ScalarQH& operator*=(const ScalarQH& o) { return *this = *this * o; }

    bool operator==(const ScalarQH& o) const { return rat_ == o.rat_ && rad_ == o.rad_; }
    bool operator!=(const ScalarQH& o) const { return !(*this == o); }

    // q -> 1 limit: cancel (s-1) factors between num and den as long as both
    // vanish at s = 1, then evaluate. pole_error if den(1,h) = 0 afterwards,
    // non_polynomial_error if den(1,h) still depends on h.
    PolyH limit_q_to_1() const;
    LimitInfo limit_q_to_1_info() const;

    ScalarQH subst_h0() const;

    // Succeeds iff the value is a polynomial in h (times sqrt2 parts);
    // throws non_polynomial_error otherwise.
    PolyH to_poly_h() const;

    std::string str() const;

private:
    FracSH rat_;
    FracSH rad_;
};

inline ScalarQH operator*(const Rat& c, const ScalarQH& x) { return ScalarQH(c) * x; }

} // namespace qgc

#endif
