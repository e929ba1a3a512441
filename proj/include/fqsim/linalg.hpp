#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqsim/field.hpp"

namespace fqsim {

using Vec = std::vector<Fe>;  // row vector

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Fe> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static Matrix identity(int n);
    static Matrix from_rows(int cols, const std::vector<Vec>& rows);

    Fe at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    Fe& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Vec row(int r) const;

    bool operator==(const Matrix&) const = default;
};

// Reduced row echelon form and rank.  Deterministic: pivots are the
// first nonzero entries in column order.
std::pair<Matrix, int> rref(const Field& F, Matrix M);

Matrix mat_mul(const Field& F, const Matrix& A, const Matrix& B);
Vec vec_mat_mul(const Field& F, const Vec& x, const Matrix& A);
Matrix mat_transpose(const Matrix& A);
std::optional<Matrix> mat_inverse(const Field& F, const Matrix& A);

// Canonical (RREF) basis of {v : A v^T = 0}, one row per kernel basis vector.
Matrix kernel_basis(const Field& F, const Matrix& A);
// Canonical basis of {x : x A = 0}.
Matrix left_kernel_basis(const Field& F, const Matrix& A);

// A subspace of F_q^n held by its canonical basis: the unique RREF
// matrix with no zero rows whose row space is the subspace.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int ambient);
    static Subspace full(int ambient);
    static Subspace from_generators(const Field& F, int ambient, const Matrix& gens);
    // Trusted constructor: basis must already be canonical.
    static Subspace from_rref(int ambient, Matrix basis);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // v minus its projection onto this subspace (eliminates the pivot
    // coordinates); zero exactly when v is a member.
    Vec reduce(const Field& F, Vec v) const;
    bool contains(const Field& F, const Vec& v) const;
    bool contains(const Field& F, const Subspace& other) const;
    // Coefficients of v with respect to the canonical basis.  Throws
    // NotInDomain when v is not a member.
    Vec coordinates(const Field& F, const Vec& v) const;

    bool operator==(const Subspace&) const = default;

private:
    int ambient_ = 0;
    Matrix basis_;            // dim x ambient, RREF
    std::vector<int> pivots_;
};

Subspace subspace_sum(const Field& F, const Subspace& A, const Subspace& B);
Subspace subspace_intersection(const Field& F, const Subspace& A, const Subspace& B);

// All k-dimensional subspaces of F_q^n, enumerated by RREF shape:
// pivot-column sets in lexicographic order, then free entries in
// odometer order.
std::vector<Subspace> enumerate_subspaces(const Field& F, int n, int k);

// Coordinates on W/U for nested subspaces U <= W: a canonical
// complement basis C of U inside W plus the linear projection
// W -> F^(dim W - dim U) whose kernel is U.
struct QuotientMap {
    Subspace sub;        // U
    Matrix complement;   // rows lie in W, RREF, pivots disjoint from U's
    std::vector<int> cpivots;

    int quotient_dim() const { return complement.rows; }
    Vec project(const Field& F, Vec v) const;
    Vec lift(const Field& F, const Vec& coords) const;  // coords . complement
};

QuotientMap quotient_coordinates(const Field& F, const Subspace& U, const Subspace& W);

}  // namespace fqsim
