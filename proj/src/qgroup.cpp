#include "qgc/qgroup.hpp"

#include <sstream>

namespace qgc {

namespace {

int flat(int i, int j, int n) { return (i - 1) * n + (j - 1); } // 1-based pair -> 0-based row

std::string entry_witness(const RingMatrix& m, int i, int j) {
    std::ostringstream os;
    os << "entry (" << i + 1 << "," << j + 1 << ") = " << m.at(i, j).str();
    return os.str();
}

} // namespace

RingMatrix r_standard(int n) {
    RingMatrix r(n * n);
    r.set_factors({n, n});
    const ScalarQH q = ScalarQH::q_pow(1);
    const ScalarQH qdiff = ScalarQH::q_pow(1) - ScalarQH::q_pow(-1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            r.at(flat(i, j, n), flat(i, j, n)) = (i == j) ? q : ScalarQH::one();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            r.at(flat(i, j, n), flat(j, i, n)) = qdiff;
    return r;
}

RingMatrix g_matrix(int n) {
    if (n == 1) {
        RingMatrix g(1);
        g.at(0, 0) = ScalarQH::one() + ScalarQH::eta();
        return g;
    }
    RingMatrix g = RingMatrix::identity(n);
    g.at(0, n - 1) = ScalarQH::eta();
    return g;
}

RingMatrix r_jordanian(int n) {
    const ScalarQH h = ScalarQH::h();
    auto e = [n](int i, int j) { return basis_matrix(n, i, j); };
    RingMatrix r(n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(flat(i, j, n), flat(i, j, n)) = ScalarQH::one();
    r.set_factors({n, n});
    RingMatrix hpart = kron(e(1, 1), e(1, n)) - kron(e(1, n), e(1, 1)) +
                       kron(e(1, n), e(n, n)) - kron(e(n, n), e(1, n));
    for (int i = 2; i <= n - 1; ++i)
        hpart = hpart + (kron(e(1, i), e(i, n)) - kron(e(i, n), e(1, i))).scaled(ScalarQH(Rat(2)));
    r = r + hpart.scaled(h) + kron(e(1, n), e(1, n)).scaled(h * h);
    r.set_factors({n, n});
    return r;
}

RingMatrix c_metric_q(int n, bool /*script*/) {
    RingMatrix c(n);
    for (int i = 1; i <= n; ++i) {
        int sign = ((n - i) % 2 == 0) ? 1 : -1;
        ScalarQH v = ScalarQH::s_pow(-(n - 2 * i + 1)) * ScalarQH(Rat(sign));
        c.at(i - 1, (n - i + 1) - 1) = v;
    }
    return c;
}

RingMatrix c_metric_contract(int n) {
    if (n == 1) {
        // The 1x1 factor enters the contracted relations with the trivial
        // metric; the similarity transform has no limit here and is skipped.
        return RingMatrix::identity(1);
    }
    // Closed form.
    RingMatrix closed(n);
    for (int i = 1; i <= n; ++i) {
        int sign = (i % 2 == 0) ? 1 : -1;
        closed.at(i - 1, (n - i + 1) - 1) = ScalarQH(Rat(sign));
    }
    closed.at(n - 1, n - 1) =
        closed.at(n - 1, n - 1) + ScalarQH::h() * ScalarQH(Rat(n - 1));
    // Limit path: C'' = g^t C' g, then q -> 1 entrywise. Odd n >= 3 throws here.
    RingMatrix g = g_matrix(n);
    RingMatrix cpp = g.transposed() * c_metric_q(n) * g;
    MatrixLimit lim = limit_entrywise(cpp);
    if (lim.value != closed)
        throw error("contracted metric disagrees with its closed form at n = " + std::to_string(n));
    return closed;
}

ContractionReport contract_r(int n) {
    ContractionReport rep;
    rep.n = n;
    RingMatrix g = g_matrix(n);
    RingMatrix gg = kron(g, g);
    RingMatrix gginv = kron(invert(g), invert(g));
    RingMatrix rpp = gginv * r_standard(n) * gg;
    MatrixLimit lim = limit_entrywise(rpp);
    rep.path_a = lim.value;
    rep.path_a.set_factors({n, n});
    rep.pole_locations = lim.pole_locations;
    rep.path_b = r_jordanian(n);
    rep.agree = (rep.path_a == rep.path_b);
    return rep;
}

RingMatrix r_tilde(const RingMatrix& r, const RingMatrix& c, RTildeVariant variant) {
    if (!r.has_pair_factors()) throw missing_factor_dims("r_tilde: R needs pair factors");
    const int n = c.dim();
    RingMatrix id = RingMatrix::identity(n);
    RingMatrix c1 = kron(c, id);
    RingMatrix c2 = kron(id, c);
    RingMatrix rinv = invert(r);
    RingMatrix leg1, leg2;
    if (variant == RTildeVariant::q_side) {
        ScalarQH q = ScalarQH::q_pow(1);
        leg1 = (c1 * partial_transpose(rinv, 1) * invert(c1)).scaled(q);
        leg2 = (c2 * invert(partial_transpose(r, 2)) * invert(c2)).scaled(q);
    } else {
        leg1 = invert(c1) * partial_transpose(rinv, 1) * c1;
        leg2 = invert(c2) * invert(partial_transpose(r, 2)) * c2;
    }
    if (leg1 != leg2) {
        auto diff = RingMatrix::first_difference(leg1, leg2);
        throw expression_mismatch("r_tilde: leg-1 and leg-2 expressions differ at entry (" +
                                  std::to_string(diff->first + 1) + "," +
                                  std::to_string(diff->second + 1) + ")");
    }
    leg1.set_factors(r.factors());
    return leg1;
}

namespace {

bool matrix_is_unital_limit(const RingMatrix& r, std::string& witness) {
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) {
            RatRad v;
            try {
                v = r.at(i, j).limit_q_to_1().eval_h0();
            } catch (const error& e) {
                witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "): " + e.what();
                return false;
            }
            RatRad want = (i == j) ? RatRad(Rat(1)) : RatRad();
            if (v != want) {
                witness = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") = " + v.str();
                return false;
            }
        }
    return true;
}

} // namespace

VerificationReport verify_structure(const RingMatrix& r, const std::vector<StructureCheck>& checks) {
    VerificationReport rep;
    rep.suite = "structure";
    const int n = r.has_pair_factors() ? r.factors()[0] : 0;
    for (StructureCheck chk : checks) {
        switch (chk) {
            case StructureCheck::ybe: {
                RingMatrix r12 = embed_three(r, 12, n);
                RingMatrix r13 = embed_three(r, 13, n);
                RingMatrix r23 = embed_three(r, 23, n);
                RingMatrix lhs = r12 * r13 * r23;
                RingMatrix rhs = r23 * r13 * r12;
                auto diff = RingMatrix::first_difference(lhs, rhs);
                rep.add("ybe", !diff.has_value(),
                        diff ? entry_witness(lhs, diff->first, diff->second) : "");
                break;
            }
            case StructureCheck::triangular: {
                RingMatrix lhs = invert(r);
                RingMatrix rhs = swap_legs(r);
                auto diff = RingMatrix::first_difference(lhs, rhs);
                rep.add("triangular", !diff.has_value(),
                        diff ? entry_witness(lhs, diff->first, diff->second) : "");
                break;
            }
            case StructureCheck::hecke: {
                RingMatrix p = flip_operator(n);
                RingMatrix pr = p * r;
                RingMatrix id = RingMatrix::identity(r.dim());
                RingMatrix lhs = (pr - id.scaled(ScalarQH::q_pow(1))) *
                                 (pr + id.scaled(ScalarQH::q_pow(-1)));
                bool ok = lhs.is_zero();
                std::string w;
                if (!ok) {
                    auto diff = RingMatrix::first_difference(lhs, RingMatrix(lhs.dim()));
                    w = entry_witness(lhs, diff->first, diff->second);
                }
                rep.add("hecke", ok, w);
                break;
            }
            case StructureCheck::unital: {
                std::string w;
                bool ok = matrix_is_unital_limit(r, w);
                rep.add("unital", ok, w);
                break;
            }
        }
    }
    return rep;
}

bool limit_equivalence(int n) {
    RingMatrix g = g_matrix(n);
    RingMatrix gg = kron(g, g);
    RingMatrix gginv = kron(invert(g), invert(g));
    RingMatrix rq = r_standard(n);
    RingMatrix target = r_jordanian(n);

    RingMatrix lim_first = limit_entrywise(gginv * rq * gg).value;
    RingMatrix alt = invert(swap_legs(rq)); // the other RTT orientation
    RingMatrix lim_second = limit_entrywise(gginv * alt * gg).value;
    return lim_first == target && lim_second == target;
}

} // namespace qgc
