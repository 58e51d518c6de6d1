#ifndef QGC_POLYSH_HPP
#define QGC_POLYSH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgc/rational.hpp"

namespace qgc {

// Monomial s^se * h^he with nonnegative exponents.
struct Mono {
    int se = 0;
    int he = 0;

    int degree() const { return se + he; }
    bool operator==(const Mono& o) const { return se == o.se && he == o.he; }
};

// Degree-lexicographic order, s weighted before h on ties.
struct MonoDegLexGreater {
    bool operator()(const Mono& x, const Mono& y) const {
        if (x.degree() != y.degree()) return x.degree() > y.degree();
        if (x.se != y.se) return x.se > y.se;
        return x.he > y.he;
    }
};

// Polynomial in Q[s, h], sparse, terms kept in descending deg-lex order.
class PolySH {
public:
    PolySH() = default;
    explicit PolySH(const Rat& c) {
        if (!qgc::is_zero(c)) terms_[Mono{0, 0}] = c;
    }
    PolySH(long n) : PolySH(Rat(n)) {}

    static PolySH monomial(const Rat& c, int se, int he);
    static PolySH var_s(int e = 1) { return monomial(Rat(1), e, 0); }
    static PolySH var_h(int e = 1) { return monomial(Rat(1), 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term access; zero polynomial yields 0.
    Rat constant_value() const;

    int degree_s() const;
    int degree_h() const;
    size_t term_count() const { return terms_.size(); }

    const std::map<Mono, Rat, MonoDegLexGreater>& terms() const { return terms_; }

    // Leading coefficient under deg-lex.
    Rat leading_coeff() const;

    PolySH operator-() const;
    PolySH operator+(const PolySH& o) const;
    PolySH operator-(const PolySH& o) const;
    PolySH operator*(const PolySH& o) const;
    PolySH operator*(const Rat& c) const;
    PolySH& operator+=(const PolySH& o) { return *this = *this + o; }

    bool operator==(const PolySH& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolySH& o) const { return !(*this == o); }

    // Substitutions. eval_s1 collapses s := 1 into a polynomial in h alone;
    // subst_h0 keeps only h-free terms.
    PolySH eval_s1() const;
    PolySH subst_h0() const;

    // Exact division by (s - 1); nullopt when the remainder is nonzero.
    std::optional<PolySH> div_s_minus_1() const;
    // Exact multivariate division p = q * t; nullopt if not exact.
    std::optional<PolySH> div_exact(const PolySH& q) const;

    // Minimal exponents across terms (0 for the zero polynomial).
    int min_exp_s() const;
    int min_exp_h() const;
    PolySH shift_down(int se, int he) const; // divide by s^se h^he, must be exact

    // gcd of numerators / lcm of denominators across coefficients; 0 for zero poly.
    Rat content() const;
    PolySH scaled(const Rat& c) const { return *this * c; }

    std::string str() const;

private:
    void insert(const Mono& m, const Rat& c);
    std::map<Mono, Rat, MonoDegLexGreater> terms_;
};

} // namespace qgc

#endif
