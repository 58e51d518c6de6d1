#include "doctest.h"

#include "qgc/coupling.hpp"
#include "qgc/fock.hpp"
#include "qgc/qgroup.hpp"

using namespace qgc;

namespace {

CouplingTable derived() {
    static CouplingTable t = derive_table(boson_system_h(2, 1, BosonForm::tilde));
    return t;
}

} // namespace

TEST_CASE("derived table: dimensions and the singlet column") {
    CouplingTable t = derived();
    ScalarQH inv_sqrt2 = ScalarQH::sqrt2() * ScalarQH(Rat(1, 2));

    // normalized singlet (-h, 1, -1, 0)/sqrt2
    CHECK(t.coeff(0, 0, 1, 1) == -(ScalarQH::h() * inv_sqrt2));
    CHECK(t.coeff(0, 0, 1, 2) == inv_sqrt2);
    CHECK(t.coeff(0, 0, 2, 1) == -inv_sqrt2);
    CHECK(t.coeff(0, 0, 2, 2).is_zero());
}

TEST_CASE("derived table: classical limit is the su(2) table") {
    CouplingTable t = derived();
    CouplingTable cls = classical_table();
    for (int j : {0, 1})
        for (int m = -j; m <= j; ++m)
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b) {
                    INFO("j=", j, " m=", m, " a=", a, " b=", b);
                    CHECK(t.coeff(j, m, a, b).subst_h0() == cls.coeff(j, m, a, b));
                }
}

TEST_CASE("derived table: weight rule holds classically, breaks at order h") {
    CouplingTable t = derived();
    bool violated_at_h = false;
    for (auto& [key, val] : t.entries) {
        auto [j, m, a, b] = key;
        int twice_weight = (3 - 2 * a) + (3 - 2 * b);
        if (twice_weight != 2 * m) {
            CHECK(val.subst_h0().is_zero()); // classical selection rule
            violated_at_h = true;
        }
    }
    CHECK(violated_at_h); // the solver reports what it finds: violation at h != 0
    CHECK(t.convention_note.find("violated") != std::string::npos);
}

TEST_CASE("coupled products at h = 0") {
    BosonAlphabet ab = boson_alphabet(2, 1, BosonForm::tilde);
    Spinor<HElement> ap = {HElement::generator(ab.creator(1, 1)),
                           HElement::generator(ab.creator(2, 1))};
    CouplingTable cls = classical_table();
    HElement zero;

    // [A+ x A+]^0_0 = (A+1 A+2 - A+2 A+1)/sqrt2
    HElement got = coupled_product(ap, ap, cls, 0, 0, zero);
    PolyH inv_sqrt2 = PolyH::sqrt2() * Rat(1, 2);
    HElement expect = (HElement::from_word(Word{0, 1}) - HElement::from_word(Word{1, 0}))
                          .scaled(inv_sqrt2);
    CHECK(got == expect);

    // stretched component: [A+ x A+]^1_1 = (A+1)^2
    CHECK(coupled_product(ap, ap, cls, 1, 1, zero) == HElement::from_word(Word{0, 0}));

    // identical operators, commutator branch: [A+, A+]^1_1 = 0 identically
    CHECK(coupled_commutator(ap, ap, cls, 1, 1, zero).is_zero());
}

TEST_CASE("invalid labels are rejected") {
    CouplingTable t = classical_table();
    CHECK_THROWS_AS(t.coeff(2, 0, 1, 1), invalid_labels);
    CHECK_THROWS_AS(t.coeff(1, 2, 1, 1), invalid_labels);
    CHECK_THROWS_AS(t.coeff(0, 1, 1, 1), invalid_labels);
}

TEST_CASE("coupled identities for n = 2, m = 1") {
    auto rep = verify_coupled_n2m1(derived(), 6);
    for (auto& r : rep.results) {
        INFO(r.identity, " ", r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("the same singlet vector solves all three conditions") {
    // (a) creator singlet reduces to zero -- by construction, checked above;
    // (b) annihilator singlet vanishes; (c) mixed anticommutator = sqrt2 I.
    // All three appear in verify_coupled_n2m1; here we pin (b) and (c)
    // directly against the singlet column.
    CouplingTable t = derived();
    RewriteSystem rs = boson_system_h(2, 1, BosonForm::tilde);
    BosonAlphabet ab = boson_alphabet(2, 1, BosonForm::tilde);
    HElement acc_ann, acc_mixed;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            ScalarQH c = t.coeff(0, 0, a, b);
            if (c.is_zero()) continue;
            PolyH cp = c.to_poly_h();
            Word ann{ab.annihilator(a, 1), ab.annihilator(b, 1)};
            acc_ann = acc_ann + HElement::from_word(ann, cp);
            acc_mixed = acc_mixed +
                        (HElement::from_word(Word{ab.annihilator(a, 1), ab.creator(b, 1)}) +
                         HElement::from_word(Word{ab.creator(a, 1), ab.annihilator(b, 1)}))
                            .scaled(cp);
        }
    CHECK(rs.reduce(acc_ann).is_zero());
    CHECK(rs.reduce(acc_mixed) == HElement::unit(PolyH::sqrt2() * Rat(1, 2)).scaled(PolyH(2)));
}

TEST_CASE("classical table with classical relations reproduces su(2) results") {
    RingMatrix id4 = RingMatrix::identity(4);
    id4.set_factors({2, 2});
    RingMatrix eps(2);
    eps.at(0, 1) = ScalarQH(Rat(-1));
    eps.at(1, 0) = ScalarQH::one();
    RingMatrix cal_r = RingMatrix::identity(1);
    cal_r.set_factors({1, 1});
    RewriteSystem rs = boson_relations(id4, cal_r, eps, RingMatrix::identity(1), BosonForm::tilde);

    CouplingTable cls = classical_table();
    BosonAlphabet ab = boson_alphabet(2, 1, BosonForm::tilde);
    HElement zero;
    Spinor<HElement> ap = {HElement::generator(ab.creator(1, 1)),
                           HElement::generator(ab.creator(2, 1))};
    Spinor<HElement> at = {HElement::generator(ab.annihilator(1, 1)),
                           HElement::generator(ab.annihilator(2, 1))};

    CHECK(rs.reduce(coupled_commutator(ap, ap, cls, 0, 0, zero)).is_zero());
    CHECK(rs.reduce(coupled_commutator(at, at, cls, 0, 0, zero)).is_zero());
    for (int m : {-1, 0, 1})
        CHECK(rs.reduce(coupled_commutator(at, ap, cls, 1, m, zero)).is_zero());
    CHECK(rs.reduce(coupled_commutator(at, ap, cls, 0, 0, zero)) ==
          HElement::unit(PolyH::sqrt2()));
}

TEST_CASE("coupled identities for n = m = 2") {
    auto rep = verify_coupled_n2m2(derived());
    for (auto& r : rep.results) {
        INFO(r.identity, " ", r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("negative control: corrupted relations break the coupled identities") {
    RingMatrix bad = r_jordanian(2);
    bad.at(1, 2) = bad.at(1, 2) + ScalarQH::h();
    RingMatrix cal_r = RingMatrix::identity(1);
    cal_r.set_factors({1, 1});
    bool detected = false;
    try {
        RewriteSystem rs = boson_relations(bad, cal_r, c_metric_contract(2),
                                           RingMatrix::identity(1), BosonForm::tilde);
        CouplingTable t = derive_table(rs);
        detected = !verify_coupled_n2m1(t, 4).overall();
    } catch (const error&) {
        detected = true; // non-confluent or wrong solution dimensions
    }
    CHECK(detected);
}
