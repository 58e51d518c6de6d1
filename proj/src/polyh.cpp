#include "qgc/polyh.hpp"

#include <algorithm>
#include <sstream>

namespace qgc {

void PolyH::trim() {
    while (!c_.empty() && qgc::is_zero(c_.back())) c_.pop_back();
    while (!r_.empty() && qgc::is_zero(r_.back())) r_.pop_back();
}

void PolyH::set_coeff(int e, const Rat& v) {
    if (e >= static_cast<int>(c_.size())) c_.resize(e + 1, Rat(0));
    c_[e] = v;
    trim();
}

void PolyH::set_rad_coeff(int e, const Rat& v) {
    if (e >= static_cast<int>(r_.size())) r_.resize(e + 1, Rat(0));
    r_[e] = v;
    trim();
}

bool PolyH::is_one() const {
    return r_.empty() && c_.size() == 1 && c_[0] == 1;
}

int PolyH::degree() const {
    int d = c_.empty() ? 0 : static_cast<int>(c_.size()) - 1;
    int dr = r_.empty() ? 0 : static_cast<int>(r_.size()) - 1;
    return std::max(d, dr);
}

PolyH PolyH::operator-() const {
    PolyH p = *this;
    for (auto& v : p.c_) v = -v;
    for (auto& v : p.r_) v = -v;
    return p;
}

PolyH PolyH::operator+(const PolyH& o) const {
    PolyH p = *this;
    if (o.c_.size() > p.c_.size()) p.c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) p.c_[i] += o.c_[i];
    if (o.r_.size() > p.r_.size()) p.r_.resize(o.r_.size(), Rat(0));
    for (size_t i = 0; i < o.r_.size(); ++i) p.r_[i] += o.r_[i];
    p.trim();
    return p;
}

PolyH PolyH::operator-(const PolyH& o) const { return *this + (-o); }

static std::vector<Rat> conv(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (qgc::is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

static std::vector<Rat> add_vec(std::vector<Rat> a, const std::vector<Rat>& b, const Rat& scale) {
    if (b.size() > a.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i] * scale;
    return a;
}

PolyH PolyH::operator*(const PolyH& o) const {
    // (p + sqrt2 q)(u + sqrt2 v) = (pu + 2qv) + sqrt2 (pv + qu)
    PolyH out;
    out.c_ = add_vec(conv(c_, o.c_), conv(r_, o.r_), Rat(2));
    out.r_ = add_vec(conv(c_, o.r_), conv(r_, o.c_), Rat(1));
    out.trim();
    return out;
}

PolyH PolyH::operator*(const Rat& c) const {
    PolyH p = *this;
    for (auto& v : p.c_) v *= c;
    for (auto& v : p.r_) v *= c;
    p.trim();
    return p;
}

static std::string poly_part_str(const std::vector<Rat>& v) {
    std::ostringstream os;
    bool first = true;
    for (int e = static_cast<int>(v.size()) - 1; e >= 0; --e) {
        const Rat& c = v[e];
        if (qgc::is_zero(c)) continue;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) {
            os << rat_str(mag);
            if (e > 0) os << "*";
        }
        if (e == 1) os << "h";
        else if (e > 1) os << "h^" << e;
    }
    if (first) os << "0";
    return os.str();
}

std::string PolyH::str() const {
    if (is_zero()) return "0";
    std::string rat_part = poly_part_str(c_);
    if (r_.empty()) return rat_part;
    std::string rad_part = "sqrt2*(" + poly_part_str(r_) + ")";
    if (c_.empty()) return rad_part;
    return rat_part + " + " + rad_part;
}

} // namespace qgc
