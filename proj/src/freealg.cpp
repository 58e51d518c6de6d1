#include "qgc/freealg.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "qgc/qgroup.hpp"

namespace qgc {

int rewrite_max_degree_default() {
    if (const char* env = std::getenv("QGC_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v >= 3) return v;
    }
    return 8;
}

// --- RewriteSystem ----------------------------------------------------------

std::pair<Word, PolyH> RewriteSystem::system_leading(const HElement& e) const {
    auto it = e.terms().begin();
    std::pair<Word, PolyH> best{it->first, it->second};
    for (++it; it != e.terms().end(); ++it)
        if (less_words(best.first, it->first)) best = {it->first, it->second};
    return best;
}

void RewriteSystem::add_rule(Word lhs, HElement rhs) {
    for (auto& [w, c] : rhs.terms())
        if (!less_words(w, lhs))
            throw error("rewrite rule does not decrease the word order");
    if (index_.count(lhs)) throw error("duplicate rewrite rule");
    index_[lhs] = static_cast<int>(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs)});
    cache_->map.clear();
}

HElement RewriteSystem::reduce_word(const Word& w) const {
    if (static_cast<int>(w.size()) > max_degree)
        throw degree_bound_exceeded("word length " + std::to_string(w.size()) +
                                    " exceeds rewrite bound " + std::to_string(max_degree));
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(w);
        if (it != cache_->map.end()) return it->second;
    }
    HElement nf = reduce_uncached(w);
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->map.emplace(w, nf);
    return nf;
}

HElement RewriteSystem::reduce_uncached(const Word& w) const {
    if (w.size() < 2) return HElement::from_word(w);
    for (size_t p = 0; p + 1 < w.size(); ++p) {
        Word sub{w[p], w[p + 1]};
        auto it = index_.find(sub);
        if (it == index_.end()) continue;
        const Rule& rule = rules_[it->second];
        HElement out;
        for (auto& [rw, rc] : rule.rhs.terms()) {
            Word nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + p + 2, w.end());
            HElement sub_nf = reduce_word(nw);
            out = out + sub_nf.scaled(rc);
        }
        return out;
    }
    return HElement::from_word(w); // irreducible
}

HElement RewriteSystem::reduce(const HElement& e) const {
    HElement out;
    for (auto& [w, c] : e.terms()) out = out + reduce_word(w).scaled(c);
    return out;
}

VerificationReport RewriteSystem::check_confluence(int degree) const {
    VerificationReport rep;
    rep.suite = "confluence";
    int splits = 0;
    std::string witness;
    const int g = static_cast<int>(names.size());
    std::function<void(Word&)> visit = [&](Word& w) {
        if (w.size() >= 2) {
            // All possible first steps must join at one normal form.
            bool have_ref = false;
            HElement ref;
            for (size_t p = 0; p + 1 < w.size(); ++p) {
                Word sub{w[p], w[p + 1]};
                auto it = index_.find(sub);
                if (it == index_.end()) continue;
                const Rule& rule = rules_[it->second];
                HElement stepped;
                for (auto& [rw, rc] : rule.rhs.terms()) {
                    Word nw(w.begin(), w.begin() + p);
                    nw.insert(nw.end(), rw.begin(), rw.end());
                    nw.insert(nw.end(), w.begin() + p + 2, w.end());
                    stepped.add_term(std::move(nw), rc);
                }
                HElement nf = reduce(stepped);
                if (!have_ref) {
                    ref = nf;
                    have_ref = true;
                } else if (nf != ref && splits == 0) {
                    ++splits;
                    witness = "critical word splits: ";
                    for (int id : w) witness += names[id] + " ";
                }
            }
            if (have_ref) {
                HElement direct = reduce_word(w);
                if (direct != ref && splits == 0) {
                    ++splits;
                    witness = "deterministic reduction disagrees on: ";
                    for (int id : w) witness += names[id] + " ";
                }
            }
        }
        if (static_cast<int>(w.size()) == degree) return;
        for (int id = 0; id < g; ++id) {
            w.push_back(id);
            visit(w);
            w.pop_back();
        }
    };
    Word w;
    visit(w);
    rep.add("all critical pairs join (degree <= " + std::to_string(degree) + ")", splits == 0,
            witness);
    return rep;
}

void RewriteSystem::interreduce() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rules_.size(); ++i) {
            HElement nf = reduce(rules_[i].rhs);
            if (nf != rules_[i].rhs) {
                rules_[i].rhs = nf;
                cache_->map.clear();
                changed = true;
            }
        }
    }
}

// --- RTT relations ----------------------------------------------------------

std::vector<QElement> rtt_relations(const RingMatrix& r, int n, const std::string& prefix,
                                    std::vector<std::string>* names_out, bool normalize) {
    auto flat = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    if (names_out) {
        names_out->clear();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                names_out->push_back(prefix + "_" + std::to_string(i) + std::to_string(j));
    }
    std::vector<QElement> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    QElement rel;
                    for (int a = 1; a <= n; ++a)
                        for (int b = 1; b <= n; ++b) {
                            const ScalarQH& c1 = r.at(flat(i, j), flat(a, b));
                            if (!c1.is_zero())
                                rel.add_term(Word{flat(a, k), flat(b, l)}, c1);
                            const ScalarQH& c2 = r.at(flat(a, b), flat(k, l));
                            if (!c2.is_zero())
                                rel.add_term(Word{flat(j, b), flat(i, a)}, -c2);
                        }
                    if (rel.is_zero()) continue;
                    if (normalize) rel = rel.scaled(rel.leading_coeff().inverse());
                    bool dup = false;
                    for (auto& seen : rels)
                        if (seen == rel) {
                            dup = true;
                            break;
                        }
                    if (!dup) rels.push_back(std::move(rel));
                }
    return rels;
}

ScalarQH substitute(const QElement& e, const std::vector<ScalarQH>& values) {
    ScalarQH out = ScalarQH::zero();
    for (auto& [w, c] : e.terms()) {
        ScalarQH prod = c;
        for (int id : w) prod = prod * values[id];
        out = out + prod;
    }
    return out;
}

// --- covariant boson relations ----------------------------------------------

BosonAlphabet boson_alphabet(int n, int m, BosonForm form) {
    BosonAlphabet ab;
    ab.n = n;
    ab.m = m;
    const std::string ann = (form == BosonForm::tilde) ? "A~" : "A";
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= m; ++s)
            ab.names.push_back(m == 1 ? "A+_" + std::to_string(i)
                                      : "A+_" + std::to_string(i) + std::to_string(s));
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= m; ++s)
            ab.names.push_back(m == 1 ? ann + "_" + std::to_string(i)
                                      : ann + "_" + std::to_string(i) + std::to_string(s));
    return ab;
}

namespace {

PolyH entry_h(const RingMatrix& m, int r, int c) { return m.at(r, c).to_poly_h(); }

// Prebuilt numeric data shared by the relation generators.
struct BosonData {
    int n, m;
    RingMatrix r, cal_r, c, cal_c;
    RingMatrix rt1, cal_rt1;       // partial transposes in leg 1 (plain form)
    RingMatrix rtilde_inv, cal_rtilde_inv; // inverse twisted matrices (tilde form)
};

BosonData make_data(const RingMatrix& r, const RingMatrix& cal_r, const RingMatrix& c,
                    const RingMatrix& cal_c, BosonForm form) {
    BosonData d{c.dim(), cal_c.dim(), r, cal_r, c, cal_c, {}, {}, {}, {}};
    if (form == BosonForm::plain) {
        d.rt1 = partial_transpose(r, 1);
        d.cal_rt1 = partial_transpose(cal_r, 1);
    } else {
        d.rtilde_inv = invert(r_tilde(r, c, RTildeVariant::h_side));
        d.cal_rtilde_inv = invert(r_tilde(cal_r, cal_c, RTildeVariant::h_side));
    }
    return d;
}

} // namespace

std::vector<HElement> boson_raw_relations(const RingMatrix& r, const RingMatrix& cal_r,
                                          const RingMatrix& c, const RingMatrix& cal_c,
                                          BosonForm form, const BosonAlphabet& ab) {
    const int n = ab.n, m = ab.m;
    BosonData d = make_data(r, cal_r, c, cal_c, form);
    auto rf = [n](int i, int j) { return (i - 1) * n + (j - 1); }; // composite index of R
    auto cf = [m](int s, int t) { return (s - 1) * m + (t - 1); };

    std::vector<HElement> rels;

    // Creator pairs (same shape in both forms):
    //   A+_(is) A+_(jt) = sum A+_(lv) A+_(ku) R_(kl),(ij) calR_(uv),(st)
    // Annihilator pairs of the tilde form follow the identical pattern.
    auto pair_family = [&](auto gen_id) {
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= m; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= m; ++t) {
                        HElement rel = HElement::from_word(Word{gen_id(i, s), gen_id(j, t)});
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                PolyH cr = entry_h(d.r, rf(k, l), rf(i, j));
                                if (cr.is_zero()) continue;
                                for (int u = 1; u <= m; ++u)
                                    for (int v = 1; v <= m; ++v) {
                                        PolyH cc = cr * entry_h(d.cal_r, cf(u, v), cf(s, t));
                                        if (cc.is_zero()) continue;
                                        rel.add_term(Word{gen_id(l, v), gen_id(k, u)}, -cc);
                                    }
                            }
                        if (!rel.is_zero()) rels.push_back(std::move(rel));
                    }
    };
    auto creator = [&ab](int i, int s) { return ab.creator(i, s); };
    auto annihilator = [&ab](int i, int s) { return ab.annihilator(i, s); };
    pair_family(creator);

    if (form == BosonForm::tilde) {
        pair_family(annihilator);
        // A~_(jt) A+_(is) = C_ij calC_st I + sum A+_(ku) A~_(lv) (R~^-1)_(kl),(ij) (calR~^-1)_(uv),(st)
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= m; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= m; ++t) {
                        HElement rel =
                            HElement::from_word(Word{annihilator(j, t), creator(i, s)});
                        PolyH metric = entry_h(d.c, i - 1, j - 1) *
                                       entry_h(d.cal_c, s - 1, t - 1);
                        rel.add_term(Word{}, -metric);
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                PolyH cr = entry_h(d.rtilde_inv, rf(k, l), rf(i, j));
                                if (cr.is_zero()) continue;
                                for (int u = 1; u <= m; ++u)
                                    for (int v = 1; v <= m; ++v) {
                                        PolyH cc =
                                            cr * entry_h(d.cal_rtilde_inv, cf(u, v), cf(s, t));
                                        if (cc.is_zero()) continue;
                                        rel.add_term(Word{creator(k, u), annihilator(l, v)}, -cc);
                                    }
                            }
                        rels.push_back(std::move(rel));
                    }
    } else {
        // A_(is) A_(jt) = sum R_(ij),(kl) calR_(st),(uv) A_(lv) A_(ku)
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= m; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= m; ++t) {
                        HElement rel = HElement::from_word(Word{annihilator(i, s), annihilator(j, t)});
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                PolyH cr = entry_h(d.r, rf(i, j), rf(k, l));
                                if (cr.is_zero()) continue;
                                for (int u = 1; u <= m; ++u)
                                    for (int v = 1; v <= m; ++v) {
                                        PolyH cc = cr * entry_h(d.cal_r, cf(s, t), cf(u, v));
                                        if (cc.is_zero()) continue;
                                        rel.add_term(Word{annihilator(l, v), annihilator(k, u)},
                                                     -cc);
                                    }
                            }
                        if (!rel.is_zero()) rels.push_back(std::move(rel));
                    }
        // A_(jt) A+_(is) = delta_ij delta_st I + sum (R^t1)_(ij),(kl) (calR^t1)_(st),(uv) A+_(ku) A_(lv)
        for (int i = 1; i <= n; ++i)
            for (int s = 1; s <= m; ++s)
                for (int j = 1; j <= n; ++j)
                    for (int t = 1; t <= m; ++t) {
                        HElement rel =
                            HElement::from_word(Word{annihilator(j, t), creator(i, s)});
                        if (i == j && s == t) rel.add_term(Word{}, PolyH(-1));
                        for (int k = 1; k <= n; ++k)
                            for (int l = 1; l <= n; ++l) {
                                PolyH cr = entry_h(d.rt1, rf(i, j), rf(k, l));
                                if (cr.is_zero()) continue;
                                for (int u = 1; u <= m; ++u)
                                    for (int v = 1; v <= m; ++v) {
                                        PolyH cc = cr * entry_h(d.cal_rt1, cf(s, t), cf(u, v));
                                        if (cc.is_zero()) continue;
                                        rel.add_term(Word{creator(k, u), annihilator(l, v)}, -cc);
                                    }
                            }
                        rels.push_back(std::move(rel));
                    }
    }
    return rels;
}

// Shared orientation loop: peel off relations whose normal form has a
// rational-constant leading coefficient, turning each into a rule; relations
// that are consequences reduce to zero along the way.
static void orient_relations(RewriteSystem& rs, std::vector<HElement> pending) {
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        std::vector<HElement> next;
        for (auto& rel : pending) {
            HElement nf = rs.reduce(rel);
            if (nf.is_zero()) {
                progress = true;
                continue;
            }
            auto [lead, lc] = rs.system_leading(nf);
            if (lc.is_rational_constant()) {
                Rat inv = Rat(1) / lc.coeff(0);
                HElement rest = (HElement::from_word(lead, lc) - nf).scaled(PolyH(inv));
                rs.add_rule(lead, rest);
                progress = true;
            } else {
                next.push_back(nf);
            }
        }
        pending.swap(next);
    }
    if (!pending.empty())
        throw non_confluent("relations could not be oriented into rewrite rules");
}

RewriteSystem boson_relations(const RingMatrix& r, const RingMatrix& cal_r, const RingMatrix& c,
                              const RingMatrix& cal_c, BosonForm form) {
    BosonAlphabet ab = boson_alphabet(c.dim(), cal_c.dim(), form);
    std::vector<HElement> rels = boson_raw_relations(r, cal_r, c, cal_c, form, ab);

    RewriteSystem rs;
    rs.names = ab.names;
    rs.max_degree = rewrite_max_degree_default();
    const int nm = ab.n * ab.m;
    for (int id = 0; id < nm; ++id) rs.weights.push_back(id);
    // The plain form corrects out-of-order annihilator pairs with terms on
    // the high-index side, so those weights run backwards.
    for (int id = 0; id < nm; ++id)
        rs.weights.push_back(form == BosonForm::plain ? nm + (nm - 1 - id) : nm + id);
    orient_relations(rs, rels);
    // Every raw component must now be a consequence.
    for (auto& rel : rels)
        if (!rs.reduce(rel).is_zero())
            throw non_confluent("relation set is not closed under its own rules");
    VerificationReport conf = rs.check_confluence(3);
    if (!conf.overall())
        throw non_confluent("boson rewrite system: " + conf.results[0].witness);
    return rs;
}

RewriteSystem boson_system_h(int n, int m, BosonForm form) {
    RingMatrix r = r_jordanian(n);
    RingMatrix c = c_metric_contract(n);
    RingMatrix cal_r = (m == 1) ? [] {
        RingMatrix one = RingMatrix::identity(1);
        one.set_factors({1, 1});
        return one;
    }()
                                : r_jordanian(m);
    RingMatrix cal_c = c_metric_contract(m);
    return boson_relations(r, cal_r, c, cal_c, form);
}

// --- covariance --------------------------------------------------------------

namespace {

// GL_h RTT rules need the corner generator smallest for the orientation to
// terminate; this is the id order of the T block inside the covariance
// alphabet, expressed as matrix positions (i, j).
// TODO: derive an order for n >= 3 if covariance beyond 2x2 copies is needed.
std::vector<std::pair<int, int>> rtt_generator_order(int n) {
    if (n == 1) return {{1, 1}};
    if (n == 2) return {{2, 1}, {2, 2}, {1, 1}, {1, 2}};
    throw error("rtt rewrite order defined for n <= 2 only");
}

struct RttBlock {
    std::vector<std::string> names;                  // in id order
    std::map<std::pair<int, int>, int> id_of;        // (i,j) -> local id
    std::vector<std::pair<Word, HElement>> rules;    // local ids
};

RttBlock rtt_rewrite_block(const RingMatrix& r, int n, const std::string& prefix) {
    RttBlock block;
    auto order = rtt_generator_order(n);
    for (int id = 0; id < static_cast<int>(order.size()); ++id) {
        block.id_of[order[id]] = id;
        block.names.push_back(prefix + "_" + std::to_string(order[id].first) +
                              std::to_string(order[id].second));
    }
    if (n == 1) return block; // GL_h(1) has no relations

    std::vector<std::string> flat_names;
    std::vector<QElement> rels_q = rtt_relations(r, n, prefix, &flat_names, /*normalize=*/false);
    // Remap flat ids (i-1)*n + (j-1) to the custom order and convert to PolyH.
    auto remap = [&](const QElement& e) {
        HElement out;
        for (auto& [w, cq] : e.terms()) {
            Word nw;
            for (int id : w) nw.push_back(block.id_of.at({id / n + 1, id % n + 1}));
            out.add_term(std::move(nw), cq.to_poly_h());
        }
        return out;
    };
    std::vector<HElement> pending;
    for (auto& e : rels_q) pending.push_back(remap(e));

    RewriteSystem tmp;
    tmp.names = block.names;
    tmp.max_degree = rewrite_max_degree_default();
    orient_relations(tmp, std::move(pending));
    tmp.interreduce();
    for (auto& rule : tmp.rules()) block.rules.emplace_back(rule.lhs, rule.rhs);
    return block;
}

} // namespace

VerificationReport covariance_check(int n, int m) {
    VerificationReport rep;
    rep.suite = "covariance";
    rep.parameters["n"] = std::to_string(n);
    rep.parameters["m"] = std::to_string(m);

    RingMatrix r = r_jordanian(n);
    RingMatrix cal_r;
    if (m == 1) {
        cal_r = RingMatrix::identity(1);
        cal_r.set_factors({1, 1});
    } else {
        cal_r = r_jordanian(m);
    }
    RingMatrix c = c_metric_contract(n);
    RingMatrix cal_c = c_metric_contract(m);

    // Creator rules of the boson system (ids 0 .. nm-1 are shared).
    RewriteSystem boson = boson_relations(r, cal_r, c, cal_c, BosonForm::tilde);
    const int nm = n * m;

    RttBlock tblock = rtt_rewrite_block(r, n, "T");
    RttBlock cblock = rtt_rewrite_block(cal_r, m, "cT");
    const int t_off = nm;
    const int c_off = nm + n * n;

    RewriteSystem rs;
    rs.max_degree = rewrite_max_degree_default();
    for (int i = 0; i < nm; ++i) rs.names.push_back(boson.names[i]);
    for (auto& nme : tblock.names) rs.names.push_back(nme);
    for (auto& nme : cblock.names) rs.names.push_back(nme);

    auto shift_word = [](const Word& w, int off) {
        Word out;
        for (int id : w) out.push_back(id + off);
        return out;
    };
    auto shift_elem = [&](const HElement& e, int off) {
        HElement out;
        for (auto& [w, cf] : e.terms()) out.add_term(shift_word(w, off), cf);
        return out;
    };

    for (auto& rule : boson.rules()) {
        bool creators_only = true;
        for (int id : rule.lhs)
            if (id >= nm) creators_only = false;
        if (creators_only) rs.add_rule(rule.lhs, rule.rhs);
    }
    for (auto& [lhs, rhs] : tblock.rules) rs.add_rule(shift_word(lhs, t_off), shift_elem(rhs, t_off));
    for (auto& [lhs, rhs] : cblock.rules) rs.add_rule(shift_word(lhs, c_off), shift_elem(rhs, c_off));
    // Cross-family commutation: quantum-matrix entries commute with the boson
    // generators and the two quantum-group copies commute with each other.
    for (int x = t_off; x < c_off + m * m; ++x)
        for (int g = 0; g < nm; ++g)
            rs.add_rule(Word{x, g}, HElement::from_word(Word{g, x}));
    for (int x = c_off; x < c_off + m * m; ++x)
        for (int u = t_off; u < c_off; ++u)
            rs.add_rule(Word{x, u}, HElement::from_word(Word{u, x}));

    VerificationReport conf = rs.check_confluence(3);
    rep.add("combined rewrite system confluent at degree 3", conf.overall(),
            conf.overall() ? "" : conf.results[0].witness);
    if (!conf.overall()) return rep;

    BosonAlphabet ab = boson_alphabet(n, m, BosonForm::tilde);
    auto t_id = [&](int i, int j) { return t_off + tblock.id_of.at({i, j}); };
    auto c_id = [&](int s, int t) { return c_off + cblock.id_of.at({s, t}); };
    // phi(A+_(is)) = sum_{j,t} A+_(jt) T_ji cT_ts
    auto phi = [&](int i, int s) {
        HElement out;
        for (int j = 1; j <= n; ++j)
            for (int t = 1; t <= m; ++t)
                out.add_term(Word{ab.creator(j, t), t_id(j, i), c_id(t, s)}, PolyH::one());
        return out;
    };

    auto rf = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    auto cf = [m](int s, int t) { return (s - 1) * m + (t - 1); };
    for (int i = 1; i <= n; ++i)
        for (int s = 1; s <= m; ++s)
            for (int j = 1; j <= n; ++j)
                for (int t = 1; t <= m; ++t) {
                    HElement image = phi(i, s) * phi(j, t);
                    for (int k = 1; k <= n; ++k)
                        for (int l = 1; l <= n; ++l) {
                            PolyH cr = r.at(rf(k, l), rf(i, j)).to_poly_h();
                            if (cr.is_zero()) continue;
                            for (int u = 1; u <= m; ++u)
                                for (int v = 1; v <= m; ++v) {
                                    PolyH cc = cr * cal_r.at(cf(u, v), cf(s, t)).to_poly_h();
                                    if (cc.is_zero()) continue;
                                    image = image - (phi(l, v) * phi(k, u)).scaled(cc);
                                }
                        }
                    HElement nf = rs.reduce(image);
                    std::ostringstream name;
                    name << "phi preserves creation relation ((" << i << "," << s << "),(" << j
                         << "," << t << "))";
                    rep.add(name.str(), nf.is_zero(),
                            nf.is_zero() ? "" : "residue " + nf.str(rs.names));
                }
    return rep;
}

HMatrix word_matrix(const Word& w, const std::vector<HMatrix>& gens, int dim) {
    HMatrix out = HMatrix::identity(dim);
    for (int id : w) out = out * gens[id];
    return out;
}

HMatrix element_matrix(const HElement& e, const std::vector<HMatrix>& gens, int dim) {
    HMatrix out(dim);
    for (auto& [w, c] : e.terms()) out = out + word_matrix(w, gens, dim).scaled(c);
    return out;
}

} // namespace qgc
