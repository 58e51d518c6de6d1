#ifndef QGC_FREEALG_HPP
#define QGC_FREEALG_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qgc/errors.hpp"
#include "qgc/matrix.hpp"
#include "qgc/polyh.hpp"
#include "qgc/report.hpp"
#include "qgc/scalar.hpp"

namespace qgc {

// Word over generator ids; the empty word is the algebra unit.
using Word = std::vector<int>;

// Shortlex: length first, then lexicographic by id.
inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// Element of the free associative algebra with coefficients in C.
template <class C>
class FreeElement {
public:
    FreeElement() = default;

    static FreeElement unit(const C& coeff = C::one()) {
        FreeElement e;
        e.add_term(Word{}, coeff);
        return e;
    }
    static FreeElement generator(int id, const C& coeff = C::one()) {
        FreeElement e;
        e.add_term(Word{id}, coeff);
        return e;
    }
    static FreeElement from_word(Word w, const C& coeff = C::one()) {
        FreeElement e;
        e.add_term(std::move(w), coeff);
        return e;
    }

    const std::map<Word, C, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (auto& [w, c] : terms_) d = std::max<int>(d, static_cast<int>(w.size()));
        return d;
    }

    void add_term(Word w, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FreeElement operator+(const FreeElement& o) const {
        FreeElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    FreeElement operator-(const FreeElement& o) const {
        FreeElement r = *this;
        for (auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    FreeElement operator-() const {
        FreeElement r;
        for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    FreeElement operator*(const FreeElement& o) const {
        FreeElement r;
        for (auto& [w1, c1] : terms_)
            for (auto& [w2, c2] : o.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                r.add_term(std::move(w), c1 * c2);
            }
        return r;
    }
    FreeElement scaled(const C& c) const {
        FreeElement r;
        if (c.is_zero()) return r;
        for (auto& [w, k] : terms_) r.add_term(w, k * c);
        return r;
    }

    bool operator==(const FreeElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const FreeElement& o) const { return !(*this == o); }

    // Shortlex-largest word (the "leading" word for orientation purposes).
    Word leading_word() const { return terms_.rbegin()->first; }
    C leading_coeff() const { return terms_.rbegin()->second; }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out += " + ";
            first = false;
            out += "(" + it->second.str() + ")";
            if (it->first.empty()) {
                out += "*I";
            } else {
                for (int id : it->first) out += "*" + names[id];
            }
        }
        return out;
    }

private:
    std::map<Word, C, WordLess> terms_;
};

using HElement = FreeElement<PolyH>;
using QElement = FreeElement<ScalarQH>;

struct Rule {
    Word lhs;      // always length 2 in this artifact
    HElement rhs;  // strictly smaller words
};

// Oriented quadratic rewrite system with PolyH coefficients. Termination
// order: word length, then total generator weight, then lexicographic by id
// (weights default to the ids themselves; the plain-boson systems need
// reversed annihilator weights because their h-corrections sit on the
// high-index side). Every rule strictly decreases this order, so reduction
// terminates; confluence is verified by brute force at degree 3, which
// covers all critical pairs of length-2 left-hand sides.
class RewriteSystem {
public:
    std::vector<std::string> names;  // generator_order = id order
    std::vector<long> weights;       // empty: weight(id) = id
    int max_degree = 8;

    long word_weight(const Word& w) const {
        long s = 0;
        for (int id : w) s += weights.empty() ? id : weights[id];
        return s;
    }
    bool less_words(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        long wa = word_weight(a), wb = word_weight(b);
        if (wa != wb) return wa < wb;
        return a < b;
    }
    // Largest term under the system's termination order.
    std::pair<Word, PolyH> system_leading(const HElement& e) const;

    void add_rule(Word lhs, HElement rhs);
    const std::vector<Rule>& rules() const { return rules_; }
    bool has_rule(const Word& lhs) const { return index_.count(lhs) > 0; }

    HElement reduce(const HElement& e) const;
    HElement reduce_word(const Word& w) const;

    // Reduces every word of length <= degree via every possible first step
    // and compares the resulting normal forms.
    VerificationReport check_confluence(int degree) const;

    // Re-reduce every rule right-hand side against the other rules.
    void interreduce();

private:
    HElement reduce_uncached(const Word& w) const;
    std::vector<Rule> rules_;
    std::map<Word, int, WordLess> index_;
    // Normal-form memo. Rules are frozen once the system is in use, so
    // concurrent reductions only race on the cache; the lock covers lookups
    // and inserts, recomputation under contention is harmless. Boxed to keep
    // the system movable.
    struct NfCache {
        std::mutex mu;
        std::map<Word, HElement, WordLess> map;
    };
    mutable std::unique_ptr<NfCache> cache_ = std::make_unique<NfCache>();
};

// The n^4 entries of R T1 T2 - T2 T1 R as quadratic elements in T_ij,
// with zeros and duplicates removed. When normalize is set, each relation is
// scaled in the coefficient field so its shortlex-leading word has
// coefficient one (canonical for comparisons; may leave non-polynomial
// coefficients on consequence rows).
std::vector<QElement> rtt_relations(const RingMatrix& r, int n, const std::string& prefix,
                                    std::vector<std::string>* names_out = nullptr,
                                    bool normalize = true);

// Substitute generators by scalars (counit-style checks).
ScalarQH substitute(const QElement& e, const std::vector<ScalarQH>& values);

enum class BosonForm { plain, tilde };

// Generator ids of the covariant boson algebra on n x m modes:
// creators first, then annihilators, each family ordered by (i, s).
struct BosonAlphabet {
    int n = 0, m = 0;
    std::vector<std::string> names;
    int creator(int i, int s) const { return (i - 1) * m + (s - 1); }
    int annihilator(int i, int s) const { return n * m + (i - 1) * m + (s - 1); }
    int count() const { return 2 * n * m; }
};

BosonAlphabet boson_alphabet(int n, int m, BosonForm form);

// Raw relation elements (all components, written as LHS - RHS) of the
// covariant exchange relations for the given R-matrices and metrics.
std::vector<HElement> boson_raw_relations(const RingMatrix& r, const RingMatrix& cal_r,
                                          const RingMatrix& c, const RingMatrix& cal_c,
                                          BosonForm form, const BosonAlphabet& ab);

// Oriented rewrite system: annihilator-before-creator words rewrite to
// constant + creator-before-annihilator terms; out-of-order pairs within a
// family rewrite to ordered terms plus h-corrections. Throws non_confluent
// if the degree-3 overlap check fails.
RewriteSystem boson_relations(const RingMatrix& r, const RingMatrix& cal_r, const RingMatrix& c,
                              const RingMatrix& cal_c, BosonForm form);

// Convenience: the contracted n x m system with both factors Jordanian.
RewriteSystem boson_system_h(int n, int m, BosonForm form);

// phi(A+) = A+ T calT applied to the creation-creation relations, reduced
// modulo (boson rules) (x) (RTT rules); every image must reduce to zero.
VerificationReport covariance_check(int n, int m);

// Evaluate a word / element in a matrix representation of the generators.
HMatrix word_matrix(const Word& w, const std::vector<HMatrix>& gens, int dim);
HMatrix element_matrix(const HElement& e, const std::vector<HMatrix>& gens, int dim);

int rewrite_max_degree_default();

} // namespace qgc

#endif
