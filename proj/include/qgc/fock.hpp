#ifndef QGC_FOCK_HPP
#define QGC_FOCK_HPP

#include <utility>
#include <vector>

#include "qgc/matrix.hpp"
#include "qgc/report.hpp"

namespace qgc {

// Two-mode Weyl algebra on the polynomial (Bargmann-type) representation,
// truncated at total degree D: basis x1^k1 x2^k2 with k1 + k2 <= D, ordered
// by total degree then lexicographically by (k1, k2). a+_i multiplies by x_i
// (images above degree D are dropped), a_i differentiates, so matrix entries
// stay rational. Identities are exact on columns of degree <= safe_degree.
struct FockRep {
    int modes = 2;
    int max_degree = 0;
    int safe_degree = 0;
    std::vector<std::pair<int, int>> basis;

    HMatrix a_plus[2];
    HMatrix a[2];
    HMatrix j_plus;  // a+_1 a_2
    HMatrix j_zero;  // (a+_1 a_1 - a+_2 a_2)/2

    bool spinors_built = false;
    HMatrix cap_plus[2]; // deformed creators
    HMatrix tilde[2];    // deformed annihilators, tilde set
    HMatrix cap[2];      // deformed annihilators, plain set (tilde * C^-1)

    int index_of(int k1, int k2) const;
    int degree_of(int idx) const { return basis[idx].first + basis[idx].second; }
};

FockRep build_weyl(int modes, int max_degree);

// Adds the h-deformed spinor operators:
//   A+_1 = (1 - h/2 J+)^-1 a+_1
//   A+_2 = (1 - h/2 J+) a+_2 + h/2 (A+_1 - 2 a+_1 J0)
//   A~_1 = (1 - h/2 J+)^-1 a_2
//   A~_2 = -(1 - h/2 J+) a_1 + h/2 (A~_1 - 2 a_2 J0)
// with (1 - h/2 J+)^-1 the finite Neumann sum (J+ is nilpotent here), and
// (A_1, A_2) = (A~_1, A~_2) C^-1 for the contracted metric C = [[0,-1],[1,h]].
void build_h_spinors(FockRep& rep);

enum class RelationSet { creation_pair, annihilation_pair, mixed_tilde, mixed_plain };

// Matrix-level verification of the deformed commutation relations, restricted
// to columns of total degree <= safe_degree (both sides raise degree by at
// most 2). h stays formal throughout.
VerificationReport verify_relations(const FockRep& rep, RelationSet which);

// All four sets at once.
VerificationReport verify_all_relations(const FockRep& rep);

// At h = 0 every operator degenerates to a canonical boson and the relations
// become the Weyl relations.
VerificationReport verify_classical_degeneration(const FockRep& rep);

// No truncation leakage: operators built at D+1, restricted to degree <= D-2,
// equal the operators built at D.
VerificationReport verify_truncation_stability(int max_degree);

// Degree bookkeeping: deformed creators raise total degree by exactly one,
// deformed annihilators lower it by exactly one.
VerificationReport verify_degree_blocks(const FockRep& rep);

// Matrix equality restricted to columns of states with degree <= col_deg.
bool equal_on_columns(const FockRep& rep, const HMatrix& x, const HMatrix& y, int col_deg,
                      std::string* witness = nullptr);

// Componentwise expansion of the covariant exchange relations with the n=2,
// m=1 contraction data regenerates exactly the hard-coded commutator sets.
VerificationReport verify_rform_match();

// Cross-module soundness: for every word of length <= 3 in the n=2, m=1
// generators, the free-algebra normal form evaluated in the Fock
// representation equals direct evaluation (columns of degree <= D - |word|
// see no truncation at all).
VerificationReport verify_rep_morphism(int trunc);

} // namespace qgc

#endif
