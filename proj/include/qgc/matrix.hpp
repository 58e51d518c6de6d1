#ifndef QGC_MATRIX_HPP
#define QGC_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "qgc/errors.hpp"
#include "qgc/polyh.hpp"
#include "qgc/scalar.hpp"

namespace qgc {

// Dense square matrix over an exact coefficient ring. Matrices acting on a
// tensor product V1 x ... x Vk record the factor dimensions so leg
// operations (partial transpose, leg swap, pair embedding) are well-posed.
template <class R>
class MatrixT {
public:
    MatrixT() : dim_(0) {}
    explicit MatrixT(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, R::zero()) {}

    static MatrixT identity(int dim) {
        MatrixT m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = R::one();
        return m;
    }

    int dim() const { return dim_; }
    const std::vector<int>& factors() const { return factors_; }
    void set_factors(std::vector<int> f) { factors_ = std::move(f); }
    bool has_pair_factors() const { return factors_.size() == 2; }

    R& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const R& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    MatrixT operator+(const MatrixT& o) const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
        return m;
    }
    MatrixT operator-(const MatrixT& o) const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
        return m;
    }
    MatrixT operator-() const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
        return m;
    }
    MatrixT operator*(const MatrixT& o) const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const R& a = at(i, k);
                if (a.is_zero()) continue; // sparse-ish inputs dominate here
                for (int j = 0; j < dim_; ++j) {
                    const R& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    m.at(i, j) = m.at(i, j) + a * b;
                }
            }
        return m;
    }
    MatrixT scaled(const R& c) const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
        return m;
    }

    bool operator==(const MatrixT& o) const {
        if (dim_ != o.dim_) return false;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    bool operator!=(const MatrixT& o) const { return !(*this == o); }

    bool is_identity() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i == j && !at(i, j).is_one()) return false;
                if (i != j && !at(i, j).is_zero()) return false;
            }
        return true;
    }
    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    MatrixT transposed() const {
        MatrixT m(dim_);
        m.factors_ = factors_;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    // First entry where the two matrices differ.
    static std::optional<std::pair<int, int>> first_difference(const MatrixT& a, const MatrixT& b) {
        for (int i = 0; i < a.dim_; ++i)
            for (int j = 0; j < a.dim_; ++j)
                if (a.at(i, j) != b.at(i, j)) return std::make_pair(i, j);
        return std::nullopt;
    }

private:
    int dim_;
    std::vector<int> factors_;
    std::vector<R> e_;
};

using RingMatrix = MatrixT<ScalarQH>;
using HMatrix = MatrixT<PolyH>;

// e_{ij}: single 1 in row i, column j (1-based, matching the usual convention).
RingMatrix basis_matrix(int n, int i, int j);

// Kronecker product; row index of A (x) B is (i_A - 1) * dim B + i_B.
// Factor dimensions of the result are (dim A, dim B).
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);

// Transposition of one tensor leg (leg = 1 or 2); requires equal pair factors.
RingMatrix partial_transpose(const RingMatrix& m, int leg);

// Conjugation by the flip P: M_21 = P M P.
RingMatrix swap_legs(const RingMatrix& m);

// Flip operator P on V (x) V.
RingMatrix flip_operator(int n);

// Embed a two-leg operator into legs {12, 13, 23} of V (x) V (x) V.
RingMatrix embed_three(const RingMatrix& m, int slot, int n);

// Exact inverse by Gaussian elimination; the product M * M^-1 is checked
// before returning. Throws singular_matrix on rank deficiency.
RingMatrix invert(const RingMatrix& m);

// Entrywise q -> 1 limit. Reports which entries needed pole cancellation.
struct MatrixLimit {
    RingMatrix value;                          // entries are h-polynomials
    std::vector<std::pair<int, int>> pole_locations;
};
MatrixLimit limit_entrywise(const RingMatrix& m);

HMatrix to_h_matrix(const RingMatrix& m); // entries must be h-polynomial
RingMatrix from_h_matrix(const HMatrix& m);

std::string matrix_json(const RingMatrix& m);
std::string matrix_latex(const RingMatrix& m);

// Reduced row echelon nullspace basis over the scalar field; columns in
// natural order, one basis vector per free column.
std::vector<std::vector<ScalarQH>> nullspace(std::vector<std::vector<ScalarQH>> rows, int ncols);
int matrix_rank(std::vector<std::vector<ScalarQH>> rows, int ncols);

} // namespace qgc

#endif
