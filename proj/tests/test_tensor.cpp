#include "doctest.h"

#include "qgc/matrix.hpp"

using namespace qgc;

namespace {

struct Rng {
    uint64_t state = 0x2545f4914f6cdd1dull;
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

RingMatrix random_matrix(Rng& rng, int dim) {
    RingMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            switch (rng.range(0, 3)) {
                case 0: m.at(i, j) = ScalarQH(Rat(rng.range(-3, 3))); break;
                case 1: m.at(i, j) = ScalarQH::h() * ScalarQH(Rat(rng.range(-2, 2))); break;
                case 2: m.at(i, j) = ScalarQH::s_pow(rng.range(0, 2)); break;
                default: break; // leave zero
            }
        }
    return m;
}

RingMatrix random_pair_matrix(Rng& rng, int n) {
    RingMatrix m = random_matrix(rng, n * n);
    m.set_factors({n, n});
    return m;
}

} // namespace

TEST_CASE("basis matrix") {
    RingMatrix e12 = basis_matrix(2, 1, 2);
    CHECK(e12.at(0, 1).is_one());
    CHECK(e12.at(0, 0).is_zero());
    CHECK(e12.at(1, 0).is_zero());
    CHECK(e12.at(1, 1).is_zero());

    CHECK(basis_matrix(1, 1, 1).is_identity());

    RingMatrix e31 = basis_matrix(3, 3, 1);
    CHECK(e31.at(2, 0).is_one());

    CHECK_THROWS_AS(basis_matrix(2, 0, 1), index_out_of_range);
    CHECK_THROWS_AS(basis_matrix(2, 1, 3), index_out_of_range);
}

TEST_CASE("kron index convention") {
    // e11 (x) e22 lands at row 2, col 2 (1-based)
    RingMatrix k = kron(basis_matrix(2, 1, 1), basis_matrix(2, 2, 2));
    CHECK(k.at(1, 1).is_one());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(i == 1 && j == 1)) CHECK(k.at(i, j).is_zero());

    CHECK(kron(RingMatrix::identity(2), RingMatrix::identity(2)).is_identity());

    // Independent index oracle: row of e_ij (x) e_kl is (i-1)*N + k.
    const int N = 2;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    RingMatrix kr = kron(basis_matrix(N, i, j), basis_matrix(N, k, l));
                    int row = (i - 1) * N + (k - 1);
                    int col = (j - 1) * N + (l - 1);
                    CHECK(kr.at(row, col).is_one());
                }
    // The spec's pinned case: e12 (x) e21 -> single 1 at row 2, col 3.
    RingMatrix k2 = kron(basis_matrix(2, 1, 2), basis_matrix(2, 2, 1));
    CHECK(k2.at(1, 2).is_one());
}

TEST_CASE("partial transpose") {
    RingMatrix m = kron(basis_matrix(2, 1, 2), basis_matrix(2, 1, 1));
    RingMatrix expect = kron(basis_matrix(2, 2, 1), basis_matrix(2, 1, 1));
    CHECK(partial_transpose(m, 1) == expect);

    Rng rng;
    for (int t = 0; t < 5; ++t) {
        RingMatrix r = random_pair_matrix(rng, 2);
        CHECK(partial_transpose(partial_transpose(r, 1), 1) == r);
        CHECK(partial_transpose(partial_transpose(r, 2), 2) == r);
        // t1 then t2 is the full transpose
        CHECK(partial_transpose(partial_transpose(r, 1), 2) == r.transposed());
    }

    RingMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
    CHECK(partial_transpose(kron(a, b), 2) == kron(a, b.transposed()));

    RingMatrix nofac(4);
    CHECK_THROWS_AS(partial_transpose(nofac, 1), missing_factor_dims);
}

TEST_CASE("swap legs") {
    Rng rng;
    RingMatrix a = random_matrix(rng, 3), b = random_matrix(rng, 3);
    CHECK(swap_legs(kron(a, b)) == kron(b, a));

    RingMatrix p = flip_operator(2);
    CHECK(swap_legs(p) == p);
    CHECK((p * p).is_identity());
}

TEST_CASE("invert") {
    CHECK(invert(RingMatrix::identity(4)).is_identity());

    // I + eta e12 has nilpotent off-diagonal part, inverse I - eta e12
    RingMatrix g = RingMatrix::identity(2);
    g.at(0, 1) = ScalarQH::eta();
    RingMatrix gi = invert(g);
    RingMatrix expect = RingMatrix::identity(2);
    expect.at(0, 1) = -ScalarQH::eta();
    CHECK(gi == expect);

    RingMatrix d(4);
    d.at(0, 0) = ScalarQH::q_pow(1);
    d.at(1, 1) = ScalarQH::one();
    d.at(2, 2) = ScalarQH::one();
    d.at(3, 3) = ScalarQH::q_pow(1);
    RingMatrix di = invert(d);
    CHECK(di.at(0, 0) == ScalarQH::q_pow(-1));
    CHECK(di.at(3, 3) == ScalarQH::q_pow(-1));

    RingMatrix sing(2);
    sing.at(0, 0) = ScalarQH::one();
    CHECK_THROWS_AS(invert(sing), singular_matrix);

    Rng rng;
    for (int t = 0; t < 4; ++t) {
        RingMatrix r = random_matrix(rng, 3);
        try {
            RingMatrix ri = invert(r);
            CHECK((r * ri).is_identity());
            CHECK((ri * r).is_identity());
        } catch (const singular_matrix&) {
            // fine: random matrix may be singular
        }
    }
}

TEST_CASE("embed three") {
    RingMatrix i4 = RingMatrix::identity(4);
    i4.set_factors({2, 2});
    CHECK(embed_three(i4, 12, 2).is_identity());
    CHECK(embed_three(i4, 13, 2).is_identity());
    CHECK(embed_three(i4, 23, 2).is_identity());

    // e11 (x) e22 in slot 13 equals e11 (x) I (x) e22
    RingMatrix m = kron(basis_matrix(2, 1, 1), basis_matrix(2, 2, 2));
    RingMatrix emb = embed_three(m, 13, 2);
    RingMatrix expect = kron(kron(basis_matrix(2, 1, 1), RingMatrix::identity(2)),
                             basis_matrix(2, 2, 2));
    CHECK(emb.dim() == 8);
    CHECK(MatrixT<ScalarQH>::first_difference(emb, expect) == std::nullopt);

    RingMatrix p = flip_operator(2);
    CHECK(embed_three(p, 23, 2) == kron(RingMatrix::identity(2), p));
}

TEST_CASE("kron associativity") {
    Rng rng;
    RingMatrix a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2);
    RingMatrix left = kron(kron(a, b), c);
    RingMatrix right = kron(a, kron(b, c));
    CHECK(MatrixT<ScalarQH>::first_difference(left, right) == std::nullopt);
}

TEST_CASE("matrix json shape") {
    RingMatrix m = basis_matrix(1, 1, 1);
    CHECK(matrix_json(m) == "{\"dim\":1, \"entries\":[[\"1\"]]}");
    RingMatrix k = kron(basis_matrix(2, 1, 1), basis_matrix(2, 2, 2));
    CHECK(matrix_json(k) ==
          "{\"dim\":4, \"factors\":[2, 2], \"entries\":[[\"0\", \"0\", \"0\", \"0\"], "
          "[\"0\", \"1\", \"0\", \"0\"], [\"0\", \"0\", \"0\", \"0\"], "
          "[\"0\", \"0\", \"0\", \"0\"]]}");
}
