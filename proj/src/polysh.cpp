#include "qgc/polysh.hpp"

#include <algorithm>
#include <sstream>

namespace qgc {

void PolySH::insert(const Mono& m, const Rat& c) {
    if (qgc::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (qgc::is_zero(it->second)) terms_.erase(it);
    }
}

PolySH PolySH::monomial(const Rat& c, int se, int he) {
    PolySH p;
    p.insert(Mono{se, he}, c);
    return p;
}

bool PolySH::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0;
}

Rat PolySH::constant_value() const {
    auto it = terms_.find(Mono{0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
}

int PolySH::degree_s() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.se);
    return d;
}

int PolySH::degree_h() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.he);
    return d;
}

Rat PolySH::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

PolySH PolySH::operator-() const {
    PolySH r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolySH PolySH::operator+(const PolySH& o) const {
    PolySH r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

PolySH PolySH::operator-(const PolySH& o) const {
    PolySH r = *this;
    for (auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

PolySH PolySH::operator*(const PolySH& o) const {
    PolySH r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_)
            r.insert(Mono{m1.se + m2.se, m1.he + m2.he}, c1 * c2);
    return r;
}

PolySH PolySH::operator*(const Rat& c) const {
    PolySH r;
    if (qgc::is_zero(c)) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

PolySH PolySH::eval_s1() const {
    PolySH r;
    for (auto& [m, c] : terms_) r.insert(Mono{0, m.he}, c);
    return r;
}

PolySH PolySH::subst_h0() const {
    PolySH r;
    for (auto& [m, c] : terms_)
        if (m.he == 0) r.terms_.emplace(m, c);
    return r;
}

std::optional<PolySH> PolySH::div_s_minus_1() const {
    if (is_zero()) return PolySH();
    // View as polynomial in s with Q[h] coefficients; synthetic division from the top.
    int ds = degree_s();
    std::vector<PolySH> by_s(ds + 1);
    for (auto& [m, c] : terms_) by_s[m.se] = by_s[m.se] + monomial(c, 0, m.he);
    std::vector<PolySH> quot(ds == 0 ? 1 : ds);
    PolySH carry; // running value, equals remainder at the end
    for (int k = ds; k >= 0; --k) {
        carry = carry + by_s[k];
        if (k > 0) quot[k - 1] = carry;
    }
    if (!carry.is_zero()) return std::nullopt;
    PolySH q;
    for (int k = 0; k < static_cast<int>(quot.size()); ++k)
        q = q + quot[k] * var_s(k);
    return q;
}

std::optional<PolySH> PolySH::div_exact(const PolySH& q) const {
    if (q.is_zero()) return std::nullopt;
    PolySH rem = *this;
    PolySH quot;
    const Mono lead_m = q.terms_.begin()->first;
    const Rat lead_c = q.terms_.begin()->second;
    while (!rem.is_zero()) {
        const Mono rm = rem.terms_.begin()->first;
        if (rm.se < lead_m.se || rm.he < lead_m.he) return std::nullopt;
        Rat c = rem.terms_.begin()->second / lead_c;
        PolySH t = monomial(c, rm.se - lead_m.se, rm.he - lead_m.he);
        quot = quot + t;
        rem = rem - t * q;
    }
    return quot;
}

int PolySH::min_exp_s() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.se;
    for (auto& [mo, c] : terms_) m = std::min(m, mo.se);
    return m;
}

int PolySH::min_exp_h() const {
    if (terms_.empty()) return 0;
    int m = terms_.begin()->first.he;
    for (auto& [mo, c] : terms_) m = std::min(m, mo.he);
    return m;
}

PolySH PolySH::shift_down(int se, int he) const {
    PolySH r;
    for (auto& [m, c] : terms_) r.terms_.emplace(Mono{m.se - se, m.he - he}, c);
    return r;
}

Rat PolySH::content() const {
    if (terms_.empty()) return Rat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : terms_) {
        mpz_class n = c.get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

std::string PolySH::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (mag != 1 || m.degree() == 0) parts.push_back(rat_str(mag));
        if (m.se > 0) parts.push_back(m.se == 1 ? "s" : "s^" + std::to_string(m.se));
        if (m.he > 0) parts.push_back(m.he == 1 ? "h" : "h^" + std::to_string(m.he));
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

} // namespace qgc
