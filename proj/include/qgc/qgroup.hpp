#ifndef QGC_QGROUP_HPP
#define QGC_QGROUP_HPP

#include <vector>

#include "qgc/matrix.hpp"
#include "qgc/report.hpp"

namespace qgc {

// Standard q-deformed R-matrix on V (x) V, dim V = n:
//   q sum_i e_ii (x) e_ii + sum_{i!=j} e_ii (x) e_jj + (q - q^-1) sum_{i<j} e_ij (x) e_ji
RingMatrix r_standard(int n);

// Similarity generator g = I + eta e_{1n} with eta = h/(q - 1).
// n = 1 degenerates (e_11 = e_1n); by convention g(1) = [1 + eta].
RingMatrix g_matrix(int n);

// Triangular h-deformed R-matrix in closed form (entries polynomial in h).
RingMatrix r_jordanian(int n);

// q-side antidiagonal metric sum_i (-1)^(n-i) s^-(n-2i+1) e_{i,n+1-i}.
// The "script" copy acting on the second tensor factor is the same matrix.
RingMatrix c_metric_q(int n, bool script = false);

// Contracted metric. For even n the q -> 1 limit of g^t C' g is computed and
// compared against the closed form sum_i (-1)^i e_{i,n+1-i} + (n-1) h e_{nn};
// for odd n >= 3 the limit has a genuine pole and pole_error propagates.
// For n = 1 the trivial metric [1] is returned (the 1x1 factor is undeformed;
// no contraction is attempted).
RingMatrix c_metric_contract(int n);

struct ContractionReport {
    int n = 0;
    RingMatrix path_a; // entrywise q -> 1 limit of (g^-1 (x) g^-1) R'(g (x) g)
    RingMatrix path_b; // closed-form h-deformed R
    bool agree = false;
    std::vector<std::pair<int, int>> pole_locations; // entries that needed cancellation
};

// Runs both contraction routes and diffs them; agree is computed, never assumed.
ContractionReport contract_r(int n);

enum class RTildeVariant { q_side, h_side };

// Twisted R-matrix. Both defining expressions (leg-1 and leg-2 forms) are
// evaluated and compared; expression_mismatch is thrown if they differ.
//   q_side: q C1 (R^-1)^t1 C1^-1  ==  q C2 (R^t2)^-1 C2^-1
//   h_side: C1^-1 (R^-1)^t1 C1    ==  C2^-1 (R^t2)^-1 C2
RingMatrix r_tilde(const RingMatrix& r, const RingMatrix& c, RTildeVariant variant);

enum class StructureCheck { ybe, triangular, hecke, unital };

// Structural identities, reported entry-exactly (failures carry the first
// discrepant entry, they are not thrown).
VerificationReport verify_structure(const RingMatrix& r, const std::vector<StructureCheck>& checks);

// Both RTT orientations (R'_12 and R'_21^-1) must contract to the same
// triangular R; returns true when both limits equal r_jordanian(n).
bool limit_equivalence(int n);

} // namespace qgc

#endif
