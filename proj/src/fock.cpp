#include "qgc/fock.hpp"

#include <sstream>

#include "qgc/freealg.hpp"
#include "qgc/qgroup.hpp"

namespace qgc {

int FockRep::index_of(int k1, int k2) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].first == k1 && basis[i].second == k2) return static_cast<int>(i);
    return -1;
}

FockRep build_weyl(int modes, int max_degree) {
    if (modes != 2) throw error("build_weyl: two-mode representation only");
    if (max_degree < 2) throw error("build_weyl: degree bound must be >= 2");
    FockRep rep;
    rep.modes = modes;
    rep.max_degree = max_degree;
    rep.safe_degree = max_degree - 2;
    for (int d = 0; d <= max_degree; ++d)
        for (int k1 = 0; k1 <= d; ++k1) rep.basis.emplace_back(k1, d - k1);
    const int dim = static_cast<int>(rep.basis.size());

    for (int mode = 0; mode < 2; ++mode) {
        rep.a_plus[mode] = HMatrix(dim);
        rep.a[mode] = HMatrix(dim);
    }
    for (int col = 0; col < dim; ++col) {
        auto [k1, k2] = rep.basis[col];
        if (k1 + k2 < max_degree) {
            rep.a_plus[0].at(rep.index_of(k1 + 1, k2), col) = PolyH::one();
            rep.a_plus[1].at(rep.index_of(k1, k2 + 1), col) = PolyH::one();
        }
        if (k1 > 0) rep.a[0].at(rep.index_of(k1 - 1, k2), col) = PolyH(Rat(k1));
        if (k2 > 0) rep.a[1].at(rep.index_of(k1, k2 - 1), col) = PolyH(Rat(k2));
    }
    rep.j_plus = rep.a_plus[0] * rep.a[1];
    rep.j_zero = (rep.a_plus[0] * rep.a[0] - rep.a_plus[1] * rep.a[1]).scaled(PolyH(Rat(1, 2)));
    return rep;
}

void build_h_spinors(FockRep& rep) {
    const int dim = static_cast<int>(rep.basis.size());
    const PolyH half_h = PolyH::h() * Rat(1, 2);

    HMatrix nmat = HMatrix::identity(dim) - rep.j_plus.scaled(half_h);
    // J+ preserves total degree and strictly lowers k2, so it is nilpotent on
    // the truncated space and the Neumann sum below is the exact inverse.
    HMatrix ninv(dim);
    HMatrix power = HMatrix::identity(dim);
    for (int k = 0; k <= rep.max_degree; ++k) {
        ninv = ninv + power;
        power = power * rep.j_plus.scaled(half_h);
    }

    rep.cap_plus[0] = ninv * rep.a_plus[0];
    rep.cap_plus[1] = nmat * rep.a_plus[1] +
                      (rep.cap_plus[0] - (rep.a_plus[0] * rep.j_zero).scaled(PolyH(2))).scaled(half_h);
    rep.tilde[0] = ninv * rep.a[1];
    rep.tilde[1] = -(nmat * rep.a[0]) +
                   (rep.tilde[0] - (rep.a[1] * rep.j_zero).scaled(PolyH(2))).scaled(half_h);
    // (A_1, A_2) = (A~_1, A~_2) C^-1 with C = [[0,-1],[1,h]], C^-1 = [[h,1],[-1,0]]
    rep.cap[0] = rep.tilde[0].scaled(PolyH::h()) - rep.tilde[1];
    rep.cap[1] = rep.tilde[0];
    rep.spinors_built = true;
}

bool equal_on_columns(const FockRep& rep, const HMatrix& x, const HMatrix& y, int col_deg,
                      std::string* witness) {
    const int dim = static_cast<int>(rep.basis.size());
    for (int c = 0; c < dim; ++c) {
        if (rep.degree_of(c) > col_deg) continue;
        for (int r = 0; r < dim; ++r) {
            if (x.at(r, c) == y.at(r, c)) continue;
            if (witness) {
                std::ostringstream os;
                os << "column x1^" << rep.basis[c].first << " x2^" << rep.basis[c].second
                   << ", row x1^" << rep.basis[r].first << " x2^" << rep.basis[r].second
                   << ": " << (x.at(r, c) - y.at(r, c)).str() << " != 0";
                *witness = os.str();
            }
            return false;
        }
    }
    return true;
}

namespace {

HMatrix comm(const HMatrix& x, const HMatrix& y) { return x * y - y * x; }

struct Identity {
    std::string name;
    HMatrix lhs;
    HMatrix rhs;
};

std::vector<Identity> identities_for(const FockRep& rep, RelationSet which) {
    const int dim = static_cast<int>(rep.basis.size());
    const HMatrix id = HMatrix::identity(dim);
    const PolyH h = PolyH::h();
    const HMatrix &ap1 = rep.cap_plus[0], &ap2 = rep.cap_plus[1];
    const HMatrix &at1 = rep.tilde[0], &at2 = rep.tilde[1];
    const HMatrix &a1 = rep.cap[0], &a2 = rep.cap[1];

    std::vector<Identity> ids;
    switch (which) {
        case RelationSet::creation_pair:
            ids.push_back({"[A+1, A+2] = h (A+1)^2", comm(ap1, ap2), (ap1 * ap1).scaled(h)});
            break;
        case RelationSet::annihilation_pair:
            ids.push_back({"[A1, A2] = h A2^2", comm(a1, a2), (a2 * a2).scaled(h)});
            ids.push_back({"[A~1, A~2] = h A~1^2", comm(at1, at2), (at1 * at1).scaled(h)});
            break;
        case RelationSet::mixed_plain:
            ids.push_back({"[A2, A+1] = 0", comm(a2, ap1), HMatrix(dim)});
            ids.push_back({"[A1, A+2] = h(-A+1 A1 - A+2 A2 + h A+1 A2)", comm(a1, ap2),
                           (-(ap1 * a1) - ap2 * a2 + (ap1 * a2).scaled(h)).scaled(h)});
            ids.push_back({"[A1, A+1] = I + h A+1 A2", comm(a1, ap1), id + (ap1 * a2).scaled(h)});
            ids.push_back({"[A2, A+2] = I + h A+1 A2", comm(a2, ap2), id + (ap1 * a2).scaled(h)});
            break;
        case RelationSet::mixed_tilde:
            ids.push_back({"[A~1, A+1] = 0", comm(at1, ap1), HMatrix(dim)});
            ids.push_back({"[A~2, A+2] = h(I - A+1 A~2 + A+2 A~1 + h A+1 A~1)", comm(at2, ap2),
                           (id - ap1 * at2 + ap2 * at1 + (ap1 * at1).scaled(h)).scaled(h)});
            ids.push_back({"[A~1, A+2] = I + h A+1 A~1", comm(at1, ap2),
                           id + (ap1 * at1).scaled(h)});
            ids.push_back({"[A~2, A+1] = -(I + h A+1 A~1)", comm(at2, ap1),
                           -(id + (ap1 * at1).scaled(h))});
            ids.push_back({"[A~1, A+2] + [A~2, A+1] = 0", comm(at1, ap2) + comm(at2, ap1),
                           HMatrix(dim)});
            break;
    }
    return ids;
}

} // namespace

VerificationReport verify_relations(const FockRep& rep, RelationSet which) {
    if (!rep.spinors_built) throw error("verify_relations: spinors not built");
    VerificationReport rep_out;
    rep_out.suite = "boson-fock";
    rep_out.parameters["trunc"] = std::to_string(rep.max_degree);
    for (auto& ident : identities_for(rep, which)) {
        std::string witness;
        bool ok = equal_on_columns(rep, ident.lhs, ident.rhs, rep.safe_degree, &witness);
        rep_out.add(ident.name, ok, witness);
    }
    return rep_out;
}

VerificationReport verify_all_relations(const FockRep& rep) {
    VerificationReport out;
    out.suite = "boson-fock";
    out.parameters["trunc"] = std::to_string(rep.max_degree);
    for (RelationSet which : {RelationSet::creation_pair, RelationSet::annihilation_pair,
                              RelationSet::mixed_plain, RelationSet::mixed_tilde})
        out.merge(verify_relations(rep, which));
    return out;
}

namespace {

HMatrix at_h0(const HMatrix& m) {
    HMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = m.at(i, j).subst_h0();
    return out;
}

} // namespace

VerificationReport verify_classical_degeneration(const FockRep& rep) {
    VerificationReport out;
    out.suite = "boson-fock-classical";
    const int dim = static_cast<int>(rep.basis.size());
    const HMatrix id = HMatrix::identity(dim);
    HMatrix ap[2] = {at_h0(rep.cap_plus[0]), at_h0(rep.cap_plus[1])};
    HMatrix a[2] = {at_h0(rep.cap[0]), at_h0(rep.cap[1])};
    HMatrix at[2] = {at_h0(rep.tilde[0]), at_h0(rep.tilde[1])};

    std::string w;
    out.add("h=0: A+1 -> a+1", equal_on_columns(rep, ap[0], rep.a_plus[0], rep.safe_degree, &w), w);
    out.add("h=0: A~1 -> a2", equal_on_columns(rep, at[0], rep.a[1], rep.safe_degree, &w), w);
    out.add("h=0: A~2 -> -a1", equal_on_columns(rep, at[1], -rep.a[0], rep.safe_degree, &w), w);
    out.add("h=0: (A1, A2) -> (a1, a2)",
            equal_on_columns(rep, a[0], rep.a[0], rep.safe_degree, &w) &&
                equal_on_columns(rep, a[1], rep.a[1], rep.safe_degree, &w),
            w);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            HMatrix want = (i == j) ? id : HMatrix(dim);
            std::ostringstream name;
            name << "h=0: [A" << i + 1 << ", A+" << j + 1 << "] = " << (i == j ? "I" : "0");
            out.add(name.str(), equal_on_columns(rep, comm(a[i], ap[j]), want, rep.safe_degree, &w),
                    w);
        }
    out.add("h=0: creators commute",
            equal_on_columns(rep, comm(ap[0], ap[1]), HMatrix(dim), rep.safe_degree, &w), w);
    return out;
}

VerificationReport verify_truncation_stability(int max_degree) {
    VerificationReport out;
    out.suite = "truncation-stability";
    FockRep small = build_weyl(2, max_degree);
    build_h_spinors(small);
    FockRep big = build_weyl(2, max_degree + 1);
    build_h_spinors(big);

    // Basis ordering makes the degree <= D-2 states a common prefix.
    int block = 0;
    while (block < static_cast<int>(small.basis.size()) &&
           small.degree_of(block) <= max_degree - 2)
        ++block;

    auto restrict_equal = [&](const HMatrix& xs, const HMatrix& xb) {
        for (int i = 0; i < block; ++i)
            for (int j = 0; j < block; ++j)
                if (xs.at(i, j) != xb.at(i, j)) return false;
        return true;
    };
    std::vector<std::pair<std::string, std::pair<const HMatrix*, const HMatrix*>>> ops = {
        {"a+1", {&small.a_plus[0], &big.a_plus[0]}}, {"a+2", {&small.a_plus[1], &big.a_plus[1]}},
        {"a1", {&small.a[0], &big.a[0]}},            {"a2", {&small.a[1], &big.a[1]}},
        {"J+", {&small.j_plus, &big.j_plus}},        {"J0", {&small.j_zero, &big.j_zero}},
        {"A+1", {&small.cap_plus[0], &big.cap_plus[0]}},
        {"A+2", {&small.cap_plus[1], &big.cap_plus[1]}},
        {"A~1", {&small.tilde[0], &big.tilde[0]}},   {"A~2", {&small.tilde[1], &big.tilde[1]}},
        {"A1", {&small.cap[0], &big.cap[0]}},        {"A2", {&small.cap[1], &big.cap[1]}},
    };
    for (auto& [name, pr] : ops)
        out.add("no truncation leakage in " + name, restrict_equal(*pr.first, *pr.second));
    return out;
}

VerificationReport verify_degree_blocks(const FockRep& rep) {
    VerificationReport out;
    out.suite = "degree-blocks";
    const int dim = static_cast<int>(rep.basis.size());
    auto degree_shift_only = [&](const HMatrix& m, int shift) {
        for (int c = 0; c < dim; ++c)
            for (int r = 0; r < dim; ++r)
                if (!m.at(r, c).is_zero() && rep.degree_of(r) - rep.degree_of(c) != shift)
                    return false;
        return true;
    };
    out.add("A+1 raises degree by 1", degree_shift_only(rep.cap_plus[0], +1));
    out.add("A+2 raises degree by 1", degree_shift_only(rep.cap_plus[1], +1));
    out.add("A~1 lowers degree by 1", degree_shift_only(rep.tilde[0], -1));
    out.add("A~2 lowers degree by 1", degree_shift_only(rep.tilde[1], -1));
    // Neumann inverse exactness on the full truncated space.
    const PolyH half_h = PolyH::h() * Rat(1, 2);
    HMatrix nmat = HMatrix::identity(dim) - rep.j_plus.scaled(half_h);
    HMatrix ninv(dim);
    HMatrix power = HMatrix::identity(dim);
    for (int k = 0; k <= rep.max_degree; ++k) {
        ninv = ninv + power;
        power = power * rep.j_plus.scaled(half_h);
    }
    out.add("(1 - h/2 J+) Neumann inverse exact", (nmat * ninv).is_identity() &&
                                                      (ninv * nmat).is_identity());
    out.add("J+ nilpotent: (J+)^(D+1) = 0", [&] {
        HMatrix p = HMatrix::identity(dim);
        for (int k = 0; k <= rep.max_degree; ++k) p = p * rep.j_plus;
        return p.is_zero();
    }());
    return out;
}

// --- regeneration of the commutator sets from the exchange relations ---------

namespace {

// Scale so the shortlex-largest word has coefficient one; the division is
// done in the fraction field, so h-multiples of a relation normalize to the
// relation itself.
QElement normalized(const HElement& e) {
    QElement out;
    if (e.is_zero()) return out;
    ScalarQH inv = ScalarQH::from_poly_h(e.leading_coeff()).inverse();
    for (auto& [w, c] : e.terms()) out.add_term(w, ScalarQH::from_poly_h(c) * inv);
    return out;
}

std::vector<HElement> hardcoded_relations(BosonForm form, const BosonAlphabet& ab) {
    const PolyH h = PolyH::h();
    auto W = [](int a, int b) { return HElement::from_word(Word{a, b}); };
    const int p1 = ab.creator(1, 1), p2 = ab.creator(2, 1);
    const int m1 = ab.annihilator(1, 1), m2 = ab.annihilator(2, 1);
    const HElement unit = HElement::unit();
    std::vector<HElement> rels;
    // creators, common to both forms
    rels.push_back(W(p1, p2) - W(p2, p1) - W(p1, p1).scaled(h));
    if (form == BosonForm::tilde) {
        rels.push_back(W(m1, m2) - W(m2, m1) - W(m1, m1).scaled(h));
        rels.push_back(W(m1, p1) - W(p1, m1));
        rels.push_back(W(m2, p2) - W(p2, m2) -
                       (unit - W(p1, m2) + W(p2, m1) + W(p1, m1).scaled(h)).scaled(h));
        rels.push_back(W(m1, p2) - W(p2, m1) - unit - W(p1, m1).scaled(h));
        rels.push_back(W(m2, p1) - W(p1, m2) + unit + W(p1, m1).scaled(h));
    } else {
        rels.push_back(W(m1, m2) - W(m2, m1) - W(m2, m2).scaled(h));
        rels.push_back(W(m2, p1) - W(p1, m2));
        rels.push_back(W(m1, p2) - W(p2, m1) -
                       (-W(p1, m1) - W(p2, m2) + W(p1, m2).scaled(h)).scaled(h));
        rels.push_back(W(m1, p1) - W(p1, m1) - unit - W(p1, m2).scaled(h));
        rels.push_back(W(m2, p2) - W(p2, m2) - unit - W(p1, m2).scaled(h));
    }
    return rels;
}

} // namespace

VerificationReport verify_rep_morphism(int trunc) {
    VerificationReport out;
    out.suite = "rep-morphism";
    out.parameters["trunc"] = std::to_string(trunc);
    RewriteSystem rs = boson_system_h(2, 1, BosonForm::tilde);
    FockRep fr = build_weyl(2, trunc);
    build_h_spinors(fr);
    const int dim = static_cast<int>(fr.basis.size());
    std::vector<HMatrix> gens = {fr.cap_plus[0], fr.cap_plus[1], fr.tilde[0], fr.tilde[1]};
    bool all_ok = true;
    std::string witness;
    Word w;
    auto visit = [&](auto&& self, Word& word) -> void {
        if (!word.empty()) {
            HMatrix direct = word_matrix(word, gens, dim);
            HMatrix via_nf = element_matrix(rs.reduce_word(word), gens, dim);
            std::string local;
            if (!equal_on_columns(fr, direct, via_nf, trunc - static_cast<int>(word.size()),
                                  &local) &&
                all_ok) {
                all_ok = false;
                witness = "word";
                for (int id : word) witness += " " + rs.names[id];
                witness += ": " + local;
            }
        }
        if (word.size() == 3) return;
        for (int id = 0; id < 4; ++id) {
            word.push_back(id);
            self(self, word);
            word.pop_back();
        }
    };
    visit(visit, w);
    out.add("free-algebra normal forms agree with the Fock representation (words of length <= 3)",
            all_ok, witness);
    return out;
}

VerificationReport verify_rform_match() {
    VerificationReport out;
    out.suite = "rform-match";
    RingMatrix r = r_jordanian(2);
    RingMatrix cal_r = RingMatrix::identity(1);
    cal_r.set_factors({1, 1});
    RingMatrix c = c_metric_contract(2);
    RingMatrix cal_c = RingMatrix::identity(1);

    for (BosonForm form : {BosonForm::plain, BosonForm::tilde}) {
        BosonAlphabet ab = boson_alphabet(2, 1, form);
        std::vector<HElement> raw = boson_raw_relations(r, cal_r, c, cal_c, form, ab);
        std::vector<QElement> got;
        for (auto& rel : raw) {
            if (rel.is_zero()) continue;
            QElement n = normalized(rel);
            bool dup = false;
            for (auto& seen : got)
                if (seen == n) dup = true;
            if (!dup) got.push_back(n);
        }
        std::vector<QElement> want;
        for (auto& rel : hardcoded_relations(form, ab)) want.push_back(normalized(rel));

        const char* label = (form == BosonForm::tilde) ? "tilde" : "plain";
        bool same_count = got.size() == want.size();
        out.add(std::string(label) + " expansion yields " + std::to_string(want.size()) +
                    " independent relations",
                same_count, "got " + std::to_string(got.size()));
        bool all_found = true;
        std::string missing;
        for (auto& w : want) {
            bool found = false;
            for (auto& g : got)
                if (g == w) found = true;
            if (!found) {
                all_found = false;
                missing = w.str(ab.names);
                break;
            }
        }
        out.add(std::string(label) + " expansion matches the commutator set term-for-term",
                all_found, "missing: " + missing);
    }
    return out;
}

} // namespace qgc
