#ifndef QGC_COUPLING_HPP
#define QGC_COUPLING_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "qgc/freealg.hpp"
#include "qgc/report.hpp"

namespace qgc {

// Coupling coefficients <1/2 m1, 1/2 m2 | j m>_h for the half (x) half
// decomposition, j in {0, 1}. Operator components are tagged by index:
// index 1 <-> m = +1/2, index 2 <-> m = -1/2 (for both operator families).
struct CouplingTable {
    // key: (j, m, idx1, idx2) with idx in {1, 2}
    std::map<std::tuple<int, int, int, int>, ScalarQH> entries;
    std::string convention_note;

    ScalarQH coeff(int j, int m, int idx1, int idx2) const {
        if (j != 0 && j != 1) throw invalid_labels("rank j must be 0 or 1");
        if (m < -j || m > j) throw invalid_labels("|m| must not exceed j");
        auto it = entries.find({j, m, idx1, idx2});
        return it == entries.end() ? ScalarQH::zero() : it->second;
    }
    void set(int j, int m, int idx1, int idx2, const ScalarQH& v) {
        if (!v.is_zero()) entries[{j, m, idx1, idx2}] = v;
    }
};

// Classical su(2) table (the h = 0 reference).
CouplingTable classical_table();

// Derives the h-deformed table from the confluent tilde rewrite system for
// n = 2, m = 1: the singlet column is the (necessarily 1-dimensional) kernel
// of the creator-pair coupling, the triplet columns span the 3-dimensional
// kernel of the mixed commutator coupling, both normalized to the classical
// table at h = 0. Throws solve_dimension_error on any dimension mismatch.
CouplingTable derive_table(const RewriteSystem& tilde_system);

// Rank-1/2 pair of algebra elements: [0] is the m = +1/2 component.
template <class Elem>
using Spinor = std::array<Elem, 2>;

// Double spinor for the n = m = 2 case: component (i, s) at [i-1][s-1].
template <class Elem>
using DoubleSpinor = std::array<std::array<Elem, 2>, 2>;

namespace detail {
inline PolyH coeff_poly(const ScalarQH& c) { return c.to_poly_h(); }
}

// [U x V]^j_m = sum_{m1 m2} <m1 m2|j m>_h U_{m1} V_{m2}
template <class Elem>
Elem coupled_product(const Spinor<Elem>& u, const Spinor<Elem>& v, const CouplingTable& t,
                     int j, int m, const Elem& zero) {
    Elem out = zero;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            ScalarQH c = t.coeff(j, m, a, b);
            if (c.is_zero()) continue;
            out = out + (u[a - 1] * v[b - 1]).scaled(detail::coeff_poly(c));
        }
    return out;
}

// [U, V]^j_m = [U x V]^j_m - (-1)^eps [V x U]^j_m with eps = 1 - j.
template <class Elem>
Elem coupled_commutator(const Spinor<Elem>& u, const Spinor<Elem>& v, const CouplingTable& t,
                        int j, int m, const Elem& zero) {
    Elem first = coupled_product(u, v, t, j, m, zero);
    Elem second = coupled_product(v, u, t, j, m, zero);
    int eps = 1 - j;
    return (eps % 2 == 0) ? first - second : first + second;
}

// Double-spinor versions carry one coupling factor and one eps phase per
// sl(2) factor.
template <class Elem>
Elem coupled_product2(const DoubleSpinor<Elem>& u, const DoubleSpinor<Elem>& v,
                      const CouplingTable& t, int j, int m, int j2, int m2, const Elem& zero) {
    Elem out = zero;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            ScalarQH c1 = t.coeff(j, m, a, b);
            if (c1.is_zero()) continue;
            for (int uu = 1; uu <= 2; ++uu)
                for (int vv = 1; vv <= 2; ++vv) {
                    ScalarQH c = c1 * t.coeff(j2, m2, uu, vv);
                    if (c.is_zero()) continue;
                    out = out + (u[a - 1][uu - 1] * v[b - 1][vv - 1]).scaled(detail::coeff_poly(c));
                }
        }
    return out;
}

template <class Elem>
Elem coupled_commutator2(const DoubleSpinor<Elem>& u, const DoubleSpinor<Elem>& v,
                         const CouplingTable& t, int j, int m, int j2, int m2, const Elem& zero) {
    Elem first = coupled_product2(u, v, t, j, m, j2, m2, zero);
    Elem second = coupled_product2(v, u, t, j, m, j2, m2, zero);
    int eps = (1 - j) + (1 - j2);
    return (eps % 2 == 0) ? first - second : first + second;
}

// Coupled identities for n = 2, m = 1, verified both in the free algebra
// (modulo the tilde rewrite system) and on the Fock representation at
// truncation trunc.
VerificationReport verify_coupled_n2m1(const CouplingTable& t, int trunc);

// Coupled identities for n = m = 2, verified in the free algebra.
VerificationReport verify_coupled_n2m2(const CouplingTable& t);

} // namespace qgc

#endif
