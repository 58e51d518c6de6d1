#ifndef QGC_RATIONAL_HPP
#define QGC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace qgc {

// Exact rational number with arbitrary-precision integer parts.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// "a" when integer, "a/b" otherwise.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Element of Q(sqrt(2)): a + b*sqrt(2).
struct RatRad {
    Rat a;
    Rat b;

    RatRad() : a(0), b(0) {}
    RatRad(Rat a_, Rat b_ = Rat(0)) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool operator==(const RatRad& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RatRad& o) const { return !(*this == o); }

    RatRad operator+(const RatRad& o) const { return {a + o.a, b + o.b}; }
    RatRad operator-(const RatRad& o) const { return {a - o.a, b - o.b}; }
    RatRad operator*(const RatRad& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (sgn(a) != 0) out = rat_str(a);
        if (sgn(b) != 0) {
            if (!out.empty()) out += (sgn(b) > 0) ? " + " : " - ";
            else if (sgn(b) < 0) out += "-";
            Rat mag = abs(b);
            out += (mag == 1) ? "sqrt2" : rat_str(mag) + "*sqrt2";
        }
        return out;
    }
};

} // namespace qgc

#endif
