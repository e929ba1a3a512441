#include "fqsim/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace fqsim {

Matrix Matrix::identity(int n) {
    Matrix M(n, n);
    for (int i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

Matrix Matrix::from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix M(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        assert(static_cast<int>(rows[r].size()) == cols);
        for (int c = 0; c < cols; ++c) M.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return M;
}

Vec Matrix::row(int r) const {
    Vec v(static_cast<size_t>(cols));
    for (int c = 0; c < cols; ++c) v[static_cast<size_t>(c)] = at(r, c);
    return v;
}

std::pair<Matrix, int> rref(const Field& F, Matrix M) {
    int pr = 0;
    for (int col = 0; col < M.cols && pr < M.rows; ++col) {
        int sel = -1;
        for (int r = pr; r < M.rows; ++r)
            if (M.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pr)
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(sel, c), M.at(pr, c));
        Fe piv_inv = F.inv(M.at(pr, col));
        for (int c = col; c < M.cols; ++c) M.at(pr, c) = F.mul(piv_inv, M.at(pr, c));
        for (int r = 0; r < M.rows; ++r) {
            if (r == pr) continue;
            Fe f = M.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < M.cols; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(f, M.at(pr, c)));
        }
        ++pr;
    }
    return {std::move(M), pr};
}

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B) {
    assert(A.cols == B.rows);
    Matrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            Fe v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
        }
    return C;
}

Vec vec_mat_mul(const Field& F, const Vec& x, const Matrix& A) {
    assert(static_cast<int>(x.size()) == A.rows);
    Vec out(static_cast<size_t>(A.cols), 0);
    for (int i = 0; i < A.rows; ++i) {
        Fe v = x[static_cast<size_t>(i)];
        if (v == 0) continue;
        for (int j = 0; j < A.cols; ++j)
            out[static_cast<size_t>(j)] = F.add(out[static_cast<size_t>(j)], F.mul(v, A.at(i, j)));
    }
    return out;
}

Matrix mat_transpose(const Matrix& A) {
    Matrix T(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

std::optional<Matrix> mat_inverse(const Field& F, const Matrix& A) {
    assert(A.rows == A.cols);
    const int n = A.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [R, rank] = rref(F, std::move(aug));
    (void)rank;  // always n: the identity block keeps the rows independent
    // A is invertible exactly when the left block reduced to the identity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (R.at(i, j) != static_cast<Fe>(i == j ? 1 : 0)) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = R.at(i, n + j);
    return inv;
}

Matrix kernel_basis(const Field& F, const Matrix& A) {
    auto [R, rank] = rref(F, A);
    std::vector<int> pivot_of_col(static_cast<size_t>(A.cols), -1);
    std::vector<int> pivot_cols;
    {
        int r = 0;
        for (int c = 0; c < A.cols && r < rank; ++c)
            if (R.at(r, c) != 0) {
                pivot_of_col[static_cast<size_t>(c)] = r;
                pivot_cols.push_back(c);
                ++r;
            }
    }
    std::vector<Vec> rows;
    for (int f = 0; f < A.cols; ++f) {
        if (pivot_of_col[static_cast<size_t>(f)] >= 0) continue;
        Vec v(static_cast<size_t>(A.cols), 0);
        v[static_cast<size_t>(f)] = 1;
        for (int idx = 0; idx < rank; ++idx)
            v[static_cast<size_t>(pivot_cols[static_cast<size_t>(idx)])] = F.neg(R.at(idx, f));
        rows.push_back(std::move(v));
    }
    auto [K, krank] = rref(F, Matrix::from_rows(A.cols, rows));
    (void)krank;  // rows are independent by construction
    return K;
}

Matrix left_kernel_basis(const Field& F, const Matrix& A) {
    return kernel_basis(F, mat_transpose(A));
}

Subspace Subspace::zero(int ambient) {
    Subspace S;
    S.ambient_ = ambient;
    S.basis_ = Matrix(0, ambient);
    return S;
}

Subspace Subspace::full(int ambient) {
    return from_rref(ambient, Matrix::identity(ambient));
}

Subspace Subspace::from_rref(int ambient, Matrix basis) {
    assert(basis.cols == ambient);
    Subspace S;
    S.ambient_ = ambient;
    S.basis_ = std::move(basis);
    S.pivots_.reserve(static_cast<size_t>(S.basis_.rows));
    for (int r = 0; r < S.basis_.rows; ++r) {
        int c = 0;
        while (c < ambient && S.basis_.at(r, c) == 0) ++c;
        assert(c < ambient && S.basis_.at(r, c) == 1);
        S.pivots_.push_back(c);
    }
    return S;
}

Subspace Subspace::from_generators(const Field& F, int ambient, const Matrix& gens) {
    assert(gens.cols == ambient || gens.rows == 0);
    auto [R, rank] = rref(F, gens);
    Matrix basis(rank, ambient);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < ambient; ++c) basis.at(r, c) = R.at(r, c);
    return from_rref(ambient, std::move(basis));
}

Vec Subspace::reduce(const Field& F, Vec v) const {
    assert(static_cast<int>(v.size()) == ambient_);
    for (int r = 0; r < basis_.rows; ++r) {
        Fe c = v[static_cast<size_t>(pivots_[static_cast<size_t>(r)])];
        if (c == 0) continue;
        for (int j = pivots_[static_cast<size_t>(r)]; j < ambient_; ++j)
            v[static_cast<size_t>(j)] = F.sub(v[static_cast<size_t>(j)], F.mul(c, basis_.at(r, j)));
    }
    return v;
}

bool Subspace::contains(const Field& F, const Vec& v) const {
    Vec r = reduce(F, v);
    return std::all_of(r.begin(), r.end(), [](Fe x) { return x == 0; });
}

bool Subspace::contains(const Field& F, const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("containment across ambient spaces");
    if (other.dim() > dim()) return false;
    for (int r = 0; r < other.basis_.rows; ++r)
        if (!contains(F, other.basis_.row(r))) return false;
    return true;
}

Vec Subspace::coordinates(const Field& F, const Vec& v) const {
    Vec coords(static_cast<size_t>(dim()));
    for (int r = 0; r < basis_.rows; ++r)
        coords[static_cast<size_t>(r)] = v[static_cast<size_t>(pivots_[static_cast<size_t>(r)])];
    if (!contains(F, v)) throw NotInDomain("vector outside subspace");
    return coords;
}

Subspace subspace_sum(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw AmbientMismatch("sum across ambient spaces");
    Matrix stacked(A.dim() + B.dim(), A.ambient());
    for (int r = 0; r < A.dim(); ++r)
        for (int c = 0; c < A.ambient(); ++c) stacked.at(r, c) = A.basis().at(r, c);
    for (int r = 0; r < B.dim(); ++r)
        for (int c = 0; c < A.ambient(); ++c) stacked.at(A.dim() + r, c) = B.basis().at(r, c);
    return Subspace::from_generators(F, A.ambient(), stacked);
}

Subspace subspace_intersection(const Field& F, const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw AmbientMismatch("intersection across ambient spaces");
    const int a = A.dim(), b = B.dim(), n = A.ambient();
    if (a == 0 || b == 0) return Subspace::zero(n);
    // x.A = y.B exactly when (x, -y) lies in the left kernel of [A; B]
    Matrix stacked(a + b, n);
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < n; ++c) stacked.at(r, c) = A.basis().at(r, c);
    for (int r = 0; r < b; ++r)
        for (int c = 0; c < n; ++c) stacked.at(a + r, c) = B.basis().at(r, c);
    Matrix K = left_kernel_basis(F, stacked);
    std::vector<Vec> gens;
    for (int r = 0; r < K.rows; ++r) {
        Vec x(static_cast<size_t>(a));
        for (int i = 0; i < a; ++i) x[static_cast<size_t>(i)] = K.at(r, i);
        gens.push_back(vec_mat_mul(F, x, A.basis()));
    }
    return Subspace::from_generators(F, n, Matrix::from_rows(n, gens));
}

std::vector<Subspace> enumerate_subspaces(const Field& F, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw BadDimensions("enumerate_subspaces requires 0 <= k <= n");
    std::vector<Subspace> out;

    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;

    while (true) {
        // free positions for this pivot shape, row-major
        std::vector<bool> is_piv(static_cast<size_t>(n), false);
        for (int p : piv) is_piv[static_cast<size_t>(p)] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<size_t>(r)] + 1; c < n; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);

        std::vector<Fe> vals(free_pos.size(), 0);
        while (true) {
            Matrix basis(k, n);
            for (int r = 0; r < k; ++r) basis.at(r, piv[static_cast<size_t>(r)]) = 1;
            for (size_t i = 0; i < free_pos.size(); ++i)
                basis.at(free_pos[i].first, free_pos[i].second) = vals[i];
            out.push_back(Subspace::from_rref(n, std::move(basis)));

            // odometer: last position fastest
            bool wrapped = true;
            for (size_t i = free_pos.size(); i > 0;) {
                --i;
                if (++vals[i] < F.q()) {
                    wrapped = false;
                    break;
                }
                vals[i] = 0;
            }
            if (wrapped) break;
        }

        // next k-subset of {0..n-1} in lexicographic order
        if (k == 0) break;
        int j = k - 1;
        while (j >= 0 && piv[static_cast<size_t>(j)] == n - k + j) --j;
        if (j < 0) break;
        ++piv[static_cast<size_t>(j)];
        for (int t = j + 1; t < k; ++t) piv[static_cast<size_t>(t)] = piv[static_cast<size_t>(t - 1)] + 1;
    }
    return out;
}

Vec QuotientMap::project(const Field& F, Vec v) const {
    v = sub.reduce(F, std::move(v));
    Vec coords(static_cast<size_t>(complement.rows));
    for (int r = 0; r < complement.rows; ++r)
        coords[static_cast<size_t>(r)] = v[static_cast<size_t>(cpivots[static_cast<size_t>(r)])];
    return coords;
}

Vec QuotientMap::lift(const Field& F, const Vec& coords) const {
    return vec_mat_mul(F, coords, complement);
}

QuotientMap quotient_coordinates(const Field& F, const Subspace& U, const Subspace& W) {
    if (U.ambient() != W.ambient()) throw AmbientMismatch("quotient across ambient spaces");
    if (!W.contains(F, U)) throw NotNested("quotient requires U <= W");
    // rows of W reduced modulo U span a complement of U in W
    std::vector<Vec> gens;
    for (int r = 0; r < W.dim(); ++r) gens.push_back(U.reduce(F, W.basis().row(r)));
    Subspace C = Subspace::from_generators(F, W.ambient(), Matrix::from_rows(W.ambient(), gens));
    assert(C.dim() == W.dim() - U.dim());
    QuotientMap Q;
    Q.sub = U;
    Q.complement = C.basis();
    Q.cpivots = C.pivots();
    return Q;
}

}  // namespace fqsim
