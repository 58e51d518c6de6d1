#include "doctest.h"

#include "qgc/scalar.hpp"

using namespace qgc;

namespace {

// Deterministic xorshift so every run sees the same random instances.
struct Rng {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

PolySH random_poly(Rng& rng, int max_terms = 4, int max_deg = 3) {
    PolySH p;
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        int c = rng.range(-5, 5);
        if (c == 0) continue;
        p = p + PolySH::monomial(Rat(c), rng.range(0, max_deg), rng.range(0, max_deg));
    }
    return p;
}

ScalarQH random_scalar(Rng& rng) {
    PolySH num = random_poly(rng);
    PolySH den;
    do {
        den = random_poly(rng);
    } while (den.is_zero());
    return ScalarQH(FracSH(num, den));
}

// Fraction with a removable (s-1)^k factor and a denominator regular at s=1.
ScalarQH random_limitable(Rng& rng) {
    PolySH num = random_poly(rng);
    PolySH den = PolySH::var_s() + PolySH(Rat(rng.range(1, 3)));  // den(1) != 0
    int k = rng.range(0, 2);
    PolySH sm1 = PolySH::var_s() - PolySH(Rat(1));
    for (int i = 0; i < k; ++i) {
        num = num * sm1;
        den = den * sm1;
    }
    return ScalarQH(FracSH(num, den));
}

} // namespace

TEST_CASE("ring arithmetic examples") {
    ScalarQH s = ScalarQH::s_pow(1);
    ScalarQH one = ScalarQH::one();

    CHECK((s - one) * (s + one) == ScalarQH::s_pow(2) - one);

    // q - q^-1 encoded as (s^4 - 1)/s^2
    ScalarQH qmq = ScalarQH::q_pow(1) - ScalarQH::q_pow(-1);
    ScalarQH encoded(FracSH(PolySH::var_s(4) - PolySH(Rat(1)), PolySH::var_s(2)));
    CHECK(qmq == encoded);
    CHECK(qmq + ScalarQH::zero() == encoded);

    CHECK(ScalarQH::eta() * (ScalarQH::q_pow(1) - one) == ScalarQH::h());
}

TEST_CASE("division by canonical zero throws") {
    CHECK_THROWS_AS(ScalarQH::one() / ScalarQH::zero(), division_by_zero);
    CHECK_THROWS_AS(ScalarQH::zero().inverse(), division_by_zero);
}

TEST_CASE("equality is cross-multiplicative") {
    ScalarQH a(FracSH(PolySH::var_s(2) - PolySH(Rat(1)), PolySH::var_s() - PolySH(Rat(1))));
    CHECK(a == ScalarQH::s_pow(1) + ScalarQH::one());
    ScalarQH b(FracSH(PolySH::var_s(2) - PolySH(Rat(1)), PolySH::var_s() + PolySH(Rat(1))));
    CHECK(b == ScalarQH::s_pow(1) - ScalarQH::one());
}

TEST_CASE("limit q->1 examples") {
    // (s^2-1)/(s-1) -> 2
    ScalarQH a(FracSH(PolySH::var_s(2) - PolySH(Rat(1)), PolySH::var_s() - PolySH(Rat(1))));
    CHECK(a.limit_q_to_1() == PolyH(2));

    // h/(s^2-1): simple pole
    CHECK_THROWS_AS(ScalarQH::eta().limit_q_to_1(), pole_error);

    // h(s-1)/(s^2-1) -> h/2
    ScalarQH c(FracSH(PolySH::var_h() * (PolySH::var_s() - PolySH(Rat(1))),
                      PolySH::var_s(2) - PolySH(Rat(1))));
    CHECK(c.limit_q_to_1() == PolyH::h() * Rat(1, 2));

    // residual h in the denominator
    ScalarQH d(FracSH(PolySH(Rat(1)), PolySH::var_h() - PolySH::var_s() + PolySH(Rat(1))));
    CHECK_THROWS_AS(d.limit_q_to_1(), non_polynomial_error);
}

TEST_CASE("substitute h = 0") {
    PolyH p = PolyH::h(2) + PolyH::h() * Rat(3) + PolyH(1);
    CHECK(p.eval_h0() == RatRad(Rat(1)));
    CHECK(PolyH().eval_h0() == RatRad());
    PolyH r = PolyH::sqrt2() * PolyH::h() + PolyH::sqrt2();
    CHECK(r.eval_h0() == RatRad(Rat(0), Rat(1)));
}

TEST_CASE("canonical rendering") {
    // (-1/2*s^3*h + s)/(s^2 - 1)
    PolySH num = PolySH::monomial(Rat(-1, 2), 3, 1) + PolySH::var_s();
    PolySH den = PolySH::var_s(2) - PolySH(Rat(1));
    CHECK(ScalarQH(FracSH(num, den)).str() == "(-1/2*s^3*h + s)/(s^2 - 1)");
    CHECK(ScalarQH::q_pow(1).str() == "s^2");
    CHECK(ScalarQH::zero().str() == "0");
    CHECK(ScalarQH::sqrt2().str() == "sqrt2*(1)");
    CHECK((ScalarQH::one() + ScalarQH::sqrt2()).str() == "1 + sqrt2*(1)");
    CHECK(ScalarQH::eta().str() == "(h)/(s^2 - 1)");
}

TEST_CASE("canonical sign and zero") {
    // Denominator leading coefficient is normalized positive.
    ScalarQH a(FracSH(PolySH::var_h(), PolySH(Rat(-1)) * PolySH::var_s()));
    CHECK(sgn(a.rat().den().leading_coeff()) > 0);
    ScalarQH z = a - a;
    CHECK(z.is_zero());
    CHECK(z.rat().num().is_zero());
    CHECK(z.rat().den().is_constant());
}

TEST_CASE("field axioms on random instances") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        ScalarQH a = random_scalar(rng);
        ScalarQH b = random_scalar(rng);
        ScalarQH c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ScalarQH::one());
            CHECK(a / a == ScalarQH::one());
        }
    }
}

TEST_CASE("radical arithmetic closes") {
    ScalarQH r = ScalarQH::sqrt2();
    CHECK(r * r == ScalarQH(Rat(2)));
    ScalarQH x = ScalarQH::one() + r;
    CHECK(x * x.inverse() == ScalarQH::one());
    // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(x.inverse() == r - ScalarQH::one());
}

TEST_CASE("limit is linear and multiplicative where defined") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        ScalarQH a = random_limitable(rng);
        ScalarQH b = random_limitable(rng);
        PolyH la = a.limit_q_to_1();
        PolyH lb = b.limit_q_to_1();
        CHECK((a + b).limit_q_to_1() == la + lb);
        CHECK((a * b).limit_q_to_1() == la * lb);
    }
}

TEST_CASE("limit of a polynomial is evaluation at s = 1") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        PolySH p = random_poly(rng);
        ScalarQH a{FracSH(p)};
        PolyH lim = a.limit_q_to_1();
        PolySH at1 = p.eval_s1();
        PolyH expect;
        for (auto& [m, cf] : at1.terms()) expect.set_coeff(m.he, cf);
        CHECK(lim == expect);
    }
}

TEST_CASE("poly exact division") {
    PolySH p = (PolySH::var_s() - PolySH(Rat(1))) * (PolySH::var_s() + PolySH::var_h());
    auto q = p.div_s_minus_1();
    REQUIRE(q.has_value());
    CHECK(*q == PolySH::var_s() + PolySH::var_h());
    CHECK(!(p + PolySH(Rat(1))).div_s_minus_1().has_value());
}
