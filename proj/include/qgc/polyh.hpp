#ifndef QGC_POLYH_HPP
#define QGC_POLYH_HPP

#include <string>
#include <vector>

#include "qgc/rational.hpp"

namespace qgc {

// Polynomial in Q(sqrt2)[h]: value = sum c_i h^i + sqrt2 * sum r_i h^i.
// Target of the q -> 1 limit and the coefficient ring of the contracted algebras.
class PolyH {
public:
    PolyH() = default;
    PolyH(long n) { set_coeff(0, Rat(n)); }
    explicit PolyH(const Rat& c) { set_coeff(0, c); }
    explicit PolyH(const RatRad& c) {
        set_coeff(0, c.a);
        set_rad_coeff(0, c.b);
    }

    static PolyH zero() { return PolyH(); }
    static PolyH one() { return PolyH(1); }
    static PolyH h(int e = 1) {
        PolyH p;
        p.set_coeff(e, Rat(1));
        return p;
    }
    static PolyH sqrt2() {
        PolyH p;
        p.set_rad_coeff(0, Rat(1));
        return p;
    }

    bool is_zero() const { return c_.empty() && r_.empty(); }
    bool is_one() const;
    bool is_constant() const { return c_.size() <= 1 && r_.size() <= 1; }
    bool has_radical() const { return !r_.empty(); }
    int degree() const;

    Rat coeff(int e) const { return e < static_cast<int>(c_.size()) ? c_[e] : Rat(0); }
    Rat rad_coeff(int e) const { return e < static_cast<int>(r_.size()) ? r_[e] : Rat(0); }
    void set_coeff(int e, const Rat& v);
    void set_rad_coeff(int e, const Rat& v);

    RatRad eval_h0() const { return RatRad(coeff(0), rad_coeff(0)); }
    PolyH subst_h0() const { return PolyH(eval_h0()); }

    PolyH operator-() const;
    PolyH operator+(const PolyH& o) const;
    PolyH operator-(const PolyH& o) const;
    PolyH operator*(const PolyH& o) const;
    PolyH operator*(const Rat& c) const;
    PolyH& operator+=(const PolyH& o) { return *this = *this + o; }
    PolyH& operator-=(const PolyH& o) { return *this = *this - o; }
    PolyH& operator*=(const PolyH& o) { return *this = *this * o; }

    bool operator==(const PolyH& o) const { return c_ == o.c_ && r_ == o.r_; }
    bool operator!=(const PolyH& o) const { return !(*this == o); }

    // True iff the value is a rational constant (no h, no radical).
    bool is_rational_constant() const { return r_.empty() && c_.size() <= 1; }
    // True iff constant in Q(sqrt2).
    bool is_rad_constant() const { return c_.size() <= 1 && r_.size() <= 1; }

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
    std::vector<Rat> r_;
};

inline PolyH operator*(const Rat& c, const PolyH& p) { return p * c; }

} // namespace qgc

#endif
