#include "qgc/matrix.hpp"

#include <sstream>

namespace qgc {

RingMatrix basis_matrix(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw index_out_of_range("basis_matrix: index outside 1.." + std::to_string(n));
    RingMatrix m(n);
    m.at(i - 1, j - 1) = ScalarQH::one();
    return m;
}

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
    const int da = a.dim(), db = b.dim();
    RingMatrix m(da * db);
    for (int ia = 0; ia < da; ++ia)
        for (int ja = 0; ja < da; ++ja) {
            const ScalarQH& x = a.at(ia, ja);
            if (x.is_zero()) continue;
            for (int ib = 0; ib < db; ++ib)
                for (int jb = 0; jb < db; ++jb) {
                    const ScalarQH& y = b.at(ib, jb);
                    if (y.is_zero()) continue;
                    m.at(ia * db + ib, ja * db + jb) = x * y;
                }
        }
    m.set_factors({da, db});
    return m;
}

static void require_pair(const RingMatrix& m) {
    if (!m.has_pair_factors()) throw missing_factor_dims();
    if (m.factors()[0] != m.factors()[1])
        throw missing_factor_dims("tensor legs have unequal dimensions");
    if (m.factors()[0] * m.factors()[1] != m.dim())
        throw missing_factor_dims("factor dimensions inconsistent with matrix size");
}

RingMatrix partial_transpose(const RingMatrix& m, int leg) {
    require_pair(m);
    if (leg != 1 && leg != 2) throw index_out_of_range("partial_transpose: leg must be 1 or 2");
    const int n = m.factors()[0];
    RingMatrix out(m.dim());
    out.set_factors(m.factors());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const ScalarQH& v = m.at(i * n + j, k * n + l);
                    if (v.is_zero()) continue;
                    if (leg == 1)
                        out.at(k * n + j, i * n + l) = v;
                    else
                        out.at(i * n + l, k * n + j) = v;
                }
    return out;
}

RingMatrix flip_operator(int n) {
    RingMatrix p(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.at(i * n + j, j * n + i) = ScalarQH::one();
    p.set_factors({n, n});
    return p;
}

RingMatrix swap_legs(const RingMatrix& m) {
    require_pair(m);
    const int n = m.factors()[0];
    RingMatrix out(m.dim());
    out.set_factors(m.factors());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const ScalarQH& v = m.at(i * n + j, k * n + l);
                    if (v.is_zero()) continue;
                    out.at(j * n + i, l * n + k) = v;
                }
    return out;
}

RingMatrix embed_three(const RingMatrix& m, int slot, int n) {
    require_pair(m);
    if (m.factors()[0] != n)
        throw missing_factor_dims("embed_three: factor dimension mismatch");
    if (slot != 12 && slot != 13 && slot != 23)
        throw index_out_of_range("embed_three: slot must be 12, 13 or 23");
    RingMatrix out(n * n * n);
    out.set_factors({n, n, n});
    auto idx = [n](int a, int b, int c) { return (a * n + b) * n + c; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const ScalarQH& v = m.at(i * n + j, k * n + l);
                    if (v.is_zero()) continue;
                    for (int p = 0; p < n; ++p) {
                        if (slot == 12)
                            out.at(idx(i, j, p), idx(k, l, p)) = v;
                        else if (slot == 13)
                            out.at(idx(i, p, j), idx(k, p, l)) = v;
                        else
                            out.at(idx(p, i, j), idx(p, k, l)) = v;
                    }
                }
    return out;
}

RingMatrix invert(const RingMatrix& m) {
    const int n = m.dim();
    RingMatrix a = m;
    RingMatrix inv = RingMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        // Pick the structurally simplest nonzero pivot in this column.
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            if (pivot < 0 || a.at(r, col).is_one()) pivot = r;
            if (a.at(pivot, col).is_one()) break;
        }
        if (pivot < 0) throw singular_matrix();
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a.at(pivot, c), a.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        ScalarQH pinv = a.at(col, col).inverse();
        for (int c = 0; c < n; ++c) {
            if (!a.at(col, c).is_zero()) a.at(col, c) = a.at(col, c) * pinv;
            if (!inv.at(col, c).is_zero()) inv.at(col, c) = inv.at(col, c) * pinv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            ScalarQH f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (!a.at(col, c).is_zero()) a.at(r, c) = a.at(r, c) - f * a.at(col, c);
                if (!inv.at(col, c).is_zero()) inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
            }
        }
    }
    inv.set_factors(m.factors());
    if (!(m * inv).is_identity()) throw singular_matrix("inverse verification failed");
    return inv;
}

MatrixLimit limit_entrywise(const RingMatrix& m) {
    MatrixLimit out{RingMatrix(m.dim()), {}};
    out.value.set_factors(m.factors());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            LimitInfo li = m.at(i, j).limit_q_to_1_info();
            out.value.at(i, j) = ScalarQH::from_poly_h(li.value);
            if (li.cancellations > 0) out.pole_locations.emplace_back(i, j);
        }
    return out;
}

HMatrix to_h_matrix(const RingMatrix& m) {
    HMatrix out(m.dim());
    out.set_factors(m.factors());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = m.at(i, j).to_poly_h();
    return out;
}

RingMatrix from_h_matrix(const HMatrix& m) {
    RingMatrix out(m.dim());
    out.set_factors(m.factors());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = ScalarQH::from_poly_h(m.at(i, j));
    return out;
}

std::string matrix_json(const RingMatrix& m) {
    std::ostringstream os;
    os << "{\"dim\":" << m.dim();
    if (m.dim() > 1) {
        os << ", \"factors\":";
        if (m.has_pair_factors())
            os << "[" << m.factors()[0] << ", " << m.factors()[1] << "]";
        else
            os << "null";
    }
    os << ", \"entries\":[";
    for (int i = 0; i < m.dim(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) os << ", ";
            os << "\"" << m.at(i, j).str() << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

std::string matrix_latex(const RingMatrix& m) {
    std::ostringstream os;
    os << "\\begin{pmatrix}\n";
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) os << " & ";
            os << m.at(i, j).str();
        }
        os << (i + 1 < m.dim() ? " \\\\" : "") << "\n";
    }
    os << "\\end{pmatrix}";
    return os.str();
}

// --- rectangular elimination helpers ---------------------------------------

static int rref(std::vector<std::vector<ScalarQH>>& rows, int ncols, std::vector<int>& pivot_cols) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        ScalarQH pinv = rows[rank][col].inverse();
        for (int c = col; c < ncols; ++c)
            if (!rows[rank][c].is_zero()) rows[rank][c] = rows[rank][c] * pinv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            ScalarQH f = rows[r][col];
            if (f.is_zero()) continue;
            for (int c = col; c < ncols; ++c)
                if (!rows[rank][c].is_zero()) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<ScalarQH>> nullspace(std::vector<std::vector<ScalarQH>> rows, int ncols) {
    std::vector<int> pivot_cols;
    int rank = rref(rows, ncols, pivot_cols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<ScalarQH>> basis;
    for (int freec = 0; freec < ncols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<ScalarQH> v(ncols, ScalarQH::zero());
        v[freec] = ScalarQH::one();
        for (int r = 0; r < rank; ++r) v[pivot_cols[r]] = -rows[r][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

int matrix_rank(std::vector<std::vector<ScalarQH>> rows, int ncols) {
    std::vector<int> pivot_cols;
    return rref(rows, ncols, pivot_cols);
}

} // namespace qgc
