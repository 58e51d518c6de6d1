// Acceptance suite: one pass/fail line per criterion, all exact (zero
// tolerance). Exit status is the number of failed criteria.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "qgc/coupling.hpp"
#include "qgc/fock.hpp"
#include "qgc/freealg.hpp"
#include "qgc/qgroup.hpp"

using namespace qgc;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
        ok = body();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    std::cout << "criterion " << number << " [" << label << "]: " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

RingMatrix reference_r_h2() {
    RingMatrix r(4);
    ScalarQH h = ScalarQH::h(), one = ScalarQH::one();
    r.at(0, 0) = one; r.at(0, 1) = h; r.at(0, 2) = -h; r.at(0, 3) = h * h;
    r.at(1, 1) = one; r.at(1, 3) = h;
    r.at(2, 2) = one; r.at(2, 3) = -h;
    r.at(3, 3) = one;
    r.set_factors({2, 2});
    return r;
}

RingMatrix trivial_cal_r() {
    RingMatrix m = RingMatrix::identity(1);
    m.set_factors({1, 1});
    return m;
}

// Criterion 11 helper: one perturbed input must trip at least one checker.
bool perturbation_detected(int row, int col) {
    RingMatrix bad = r_jordanian(2);
    bad.at(row, col) = bad.at(row, col) + ScalarQH::h();

    auto structural =
        verify_structure(bad, {StructureCheck::ybe, StructureCheck::triangular});
    if (!structural.overall()) return true;

    try {
        // Relations generated from the perturbed R, evaluated on the genuine
        // Fock operators (the criterion-6 route).
        BosonAlphabet ab = boson_alphabet(2, 1, BosonForm::tilde);
        std::vector<HElement> rels = boson_raw_relations(
            bad, trivial_cal_r(), c_metric_contract(2), RingMatrix::identity(1),
            BosonForm::tilde, ab);
        FockRep rep = build_weyl(2, 5);
        build_h_spinors(rep);
        const int dim = static_cast<int>(rep.basis.size());
        std::vector<HMatrix> gens = {rep.cap_plus[0], rep.cap_plus[1], rep.tilde[0],
                                     rep.tilde[1]};
        for (auto& rel : rels) {
            HMatrix value = element_matrix(rel, gens, dim);
            if (!equal_on_columns(rep, value, HMatrix(dim), rep.safe_degree)) return true;
        }
        // The coupled route (criterion 10): solution-space dimensions or the
        // coupled identities must break.
        RewriteSystem rs = boson_relations(bad, trivial_cal_r(), c_metric_contract(2),
                                           RingMatrix::identity(1), BosonForm::tilde);
        CouplingTable t = derive_table(rs);
        if (!verify_coupled_n2m1(t, 4).overall()) return true;
    } catch (const error&) {
        return true; // non-confluent system or wrong solution dimensions
    }
    return false;
}

} // namespace

int main() {
    criterion(1, "contraction reproduction, n = 2..5", [] {
        ContractionReport r2 = contract_r(2);
        if (!r2.agree || r2.path_a != reference_r_h2()) return false;
        for (int n : {3, 4, 5})
            if (!contract_r(n).agree) return false;
        return true;
    });

    criterion(2, "triangularity + YBE (h side, n = 2..5); YBE + Hecke (q side, n = 2..4)", [] {
        for (int n = 2; n <= 5; ++n) {
            auto rep = verify_structure(r_jordanian(n),
                                        {StructureCheck::ybe, StructureCheck::triangular});
            if (!rep.overall()) return false;
        }
        for (int n = 2; n <= 4; ++n) {
            auto rep =
                verify_structure(r_standard(n), {StructureCheck::ybe, StructureCheck::hecke});
            if (!rep.overall()) return false;
        }
        return true;
    });

    criterion(3, "RTT-form equivalence under contraction, n = 2..4", [] {
        for (int n = 2; n <= 4; ++n)
            if (!limit_equivalence(n)) return false;
        return true;
    });

    criterion(4, "metric parity: closed form for n = 2, 4; pole for n = 3, 5", [] {
        RingMatrix c2 = c_metric_contract(2);
        RingMatrix want2(2);
        want2.at(0, 1) = ScalarQH(Rat(-1));
        want2.at(1, 0) = ScalarQH::one();
        want2.at(1, 1) = ScalarQH::h();
        if (c2 != want2) return false;
        c_metric_contract(4); // closed form vs limit path compared internally
        for (int n : {3, 5}) {
            bool poled = false;
            try {
                c_metric_contract(n);
            } catch (const pole_error&) {
                poled = true;
            }
            if (!poled) return false;
        }
        return true;
    });

    criterion(5, "twisted-R coherence: leg forms agree; q-side limit matches h side", [] {
        RingMatrix rt_h = r_tilde(r_jordanian(2), c_metric_contract(2), RTildeVariant::h_side);
        RingMatrix rt_q = r_tilde(r_standard(2), c_metric_q(2), RTildeVariant::q_side);
        RingMatrix g = g_matrix(2);
        RingMatrix lim = limit_entrywise(kron(invert(g), invert(g)) * rt_q * kron(g, g)).value;
        lim.set_factors({2, 2});
        return lim == rt_h;
    });

    criterion(6, "Fock realization: all commutator identities exact at D = 6, h formal", [] {
        FockRep rep = build_weyl(2, 6);
        build_h_spinors(rep);
        if (!verify_all_relations(rep).overall()) return false;
        return verify_classical_degeneration(rep).overall();
    });

    criterion(7, "componentwise expansion regenerates the commutator sets", [] {
        return verify_rform_match().overall();
    });

    criterion(8, "abstract/concrete soundness for all words of degree <= 3", [] {
        return verify_rep_morphism(6).overall();
    });

    criterion(9, "covariance of the creation sector, (n,m) = (2,1) and (2,2)", [] {
        return covariance_check(2, 1).overall() && covariance_check(2, 2).overall();
    });

    criterion(10, "coupled identities with the derived coupling table", [] {
        RewriteSystem rs = boson_system_h(2, 1, BosonForm::tilde);
        CouplingTable t = derive_table(rs); // throws unless dims are exactly 1 and 3
        // unnormalized singlet proportional to (-h, 1, -1, 0)
        ScalarQH ratio = t.coeff(0, 0, 1, 2); // = 1/lambda for column (-h,1,-1,0)*lambda
        if (ratio.is_zero()) return false;
        if (t.coeff(0, 0, 1, 1) != -ScalarQH::h() * ratio) return false;
        if (t.coeff(0, 0, 2, 1) != -ratio) return false;
        if (!t.coeff(0, 0, 2, 2).is_zero()) return false;
        // classical limit equals the su(2) table
        CouplingTable cls = classical_table();
        for (int j : {0, 1})
            for (int m = -j; m <= j; ++m)
                for (int a = 1; a <= 2; ++a)
                    for (int b = 1; b <= 2; ++b)
                        if (t.coeff(j, m, a, b).subst_h0() != cls.coeff(j, m, a, b)) return false;
        if (!verify_coupled_n2m1(t, 6).overall()) return false;
        return verify_coupled_n2m2(t).overall();
    });

    criterion(11, "negative controls: every single-entry +h perturbation is detected", [] {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!perturbation_detected(i, j)) {
                    std::cerr << "perturbation at (" << i + 1 << "," << j + 1
                              << ") went undetected\n";
                    return false;
                }
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << std::endl;
    return failures;
}
