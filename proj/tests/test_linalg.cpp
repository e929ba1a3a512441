#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fqsim/linalg.hpp"
#include "fqsim/partitions.hpp"
#include "oracle_helpers.hpp"

using namespace fqsim;
using namespace fqsim::testing;

namespace {

// every r x c matrix over F, odometer order
std::vector<Matrix> all_matrices(const Field& F, int r, int c) {
    std::vector<Matrix> out;
    Matrix M(r, c);
    while (true) {
        out.push_back(M);
        size_t i = 0;
        for (; i < M.a.size(); ++i) {
            if (++M.a[i] < F.q()) break;
            M.a[i] = 0;
        }
        if (i == M.a.size()) break;
    }
    return out;
}

bool is_rref(const Field& F, const Matrix& M, int rank) {
    int prev_pivot = -1;
    for (int r = 0; r < M.rows; ++r) {
        int pivot = -1;
        for (int c = 0; c < M.cols; ++c) {
            if (M.at(r, c) != 0) {
                pivot = c;
                break;
            }
        }
        if (r >= rank) {
            if (pivot != -1) return false;
            continue;
        }
        if (pivot == -1 || pivot <= prev_pivot) return false;
        if (M.at(r, pivot) != 1) return false;
        for (int rr = 0; rr < M.rows; ++rr)
            if (rr != r && M.at(rr, pivot) != 0) return false;
        prev_pivot = pivot;
    }
    (void)F;
    return true;
}

}  // namespace

TEST_CASE("rref properties exhaustively on small shapes") {
    for (std::uint64_t q : {2, 3}) {
        Field F = Field::make(q);
        for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
            for (const Matrix& M : all_matrices(F, r, c)) {
                auto [R, rank] = rref(F, M);
                CHECK(is_rref(F, R, rank));
                CHECK(rank <= std::min(r, c));
                // idempotent
                auto [R2, rank2] = rref(F, R);
                CHECK(R2 == R);
                CHECK(rank2 == rank);
                // row rank equals column rank
                CHECK(rref(F, mat_transpose(M)).second == rank);
            }
        }
    }
}

TEST_CASE("matrix inverse on all 2x2 over F_2 and F_3") {
    for (std::uint64_t q : {2, 3}) {
        Field F = Field::make(q);
        int invertible = 0;
        for (const Matrix& M : all_matrices(F, 2, 2)) {
            auto inv = mat_inverse(F, M);
            if (rref(F, M).second == 2) {
                REQUIRE(inv.has_value());
                CHECK(mat_mul(F, M, *inv) == Matrix::identity(2));
                CHECK(mat_mul(F, *inv, M) == Matrix::identity(2));
                ++invertible;
            } else {
                CHECK(!inv.has_value());
            }
        }
        // |GL_2(F_q)| = (q^2-1)(q^2-q)
        CHECK(invertible == static_cast<int>((q * q - 1) * (q * q - q)));
    }
}

TEST_CASE("kernels annihilate and have complementary dimension") {
    for (std::uint64_t q : {2, 3}) {
        Field F = Field::make(q);
        for (const Matrix& M : all_matrices(F, 2, 3)) {
            int rank = rref(F, M).second;
            Matrix K = kernel_basis(F, M);  // rows v with M v^T = 0
            CHECK(K.rows == 3 - rank);
            for (int i = 0; i < K.rows; ++i) {
                Vec v = K.row(i);
                Vec image = vec_mat_mul(F, v, mat_transpose(M));
                for (Fe x : image) CHECK(x == 0);
            }
            Matrix L = left_kernel_basis(F, M);  // rows x with x M = 0
            CHECK(L.rows == 2 - rank);
            for (int i = 0; i < L.rows; ++i) {
                Vec image = vec_mat_mul(F, L.row(i), M);
                for (Fe x : image) CHECK(x == 0);
            }
        }
    }
}

TEST_CASE("subspace membership and canonical bases") {
    Field F = Field::make(2);
    Matrix gens = Matrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    Subspace W = Subspace::from_generators(F, 3, gens);
    CHECK(W.dim() == 2);  // third generator is the sum of the others
    CHECK(W.contains(F, {1, 0, 1}));
    CHECK(!W.contains(F, {1, 0, 0}));
    CHECK(W.contains(F, Subspace::zero(3)));
    CHECK(Subspace::full(3).contains(F, W));

    // coordinates invert the basis expansion
    Vec v = {1, 0, 1};
    Vec coords = W.coordinates(F, v);
    CHECK(vec_mat_mul(F, coords, W.basis()) == v);
    CHECK_THROWS_AS(W.coordinates(F, Vec{1, 0, 0}), NotInDomain);
    CHECK_THROWS_AS(W.contains(F, Subspace::zero(2)), AmbientMismatch);

    // same span, different generators, same canonical object
    Subspace W2 = Subspace::from_generators(F, 3, Matrix::from_rows(3, {{0, 1, 1}, {1, 0, 1}}));
    CHECK(W == W2);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    for (std::uint64_t q : {2, 3}) {
        Field F = Field::make(q);
        std::vector<Subspace> all;
        for (int k = 0; k <= 3; ++k)
            for (const Subspace& S : enumerate_subspaces(F, 3, k)) all.push_back(S);
        for (const Subspace& A : all) {
            for (const Subspace& B : all) {
                Subspace s = subspace_sum(F, A, B);
                Subspace i = subspace_intersection(F, A, B);
                CHECK(s.dim() + i.dim() == A.dim() + B.dim());
                CHECK(s.contains(F, A));
                CHECK(s.contains(F, B));
                CHECK(A.contains(F, i));
                CHECK(B.contains(F, i));
            }
        }
    }
}

TEST_CASE("subspace enumeration counts are Gaussian binomials") {
    for (std::uint64_t q : {2, 3}) {
        Field F = Field::make(q);
        for (int n = 0; n <= 4; ++n) {
            for (int k = 0; k <= n; ++k) {
                auto subs = enumerate_subspaces(F, n, k);
                BigInt expected = q_binomial(n, k).evaluate(BigInt(q));
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(BigInt(subs.size()) == expected);
                // all distinct
                std::set<std::vector<Fe>> seen;
                for (const Subspace& S : subs) {
                    CHECK(S.dim() == k);
                    seen.insert(S.basis().a);
                }
                CHECK(seen.size() == subs.size());
            }
        }
    }
    CHECK_THROWS_AS(enumerate_subspaces(Field::make(2), 2, 3), BadDimensions);
}

TEST_CASE("quotient coordinates: projection kills exactly U") {
    Field F = Field::make(2);
    for (const Subspace& W : enumerate_subspaces(F, 4, 3)) {
        for (int du = 0; du <= 3; ++du) {
            for (const Subspace& U : enumerate_subspaces(F, 4, du)) {
                if (!W.contains(F, U)) continue;
                QuotientMap Q = quotient_coordinates(F, U, W);
                CHECK(Q.quotient_dim() == W.dim() - U.dim());
                // scan W itself: the projection vanishes exactly on U
                for (Vec coords : all_vectors(F, W.dim())) {
                    Vec w = vec_mat_mul(F, coords, W.basis());
                    Vec image = Q.project(F, w);
                    bool zero = true;
                    for (Fe x : image) zero = zero && (x == 0);
                    CHECK(zero == U.contains(F, w));
                    // lifting the image lands in the same coset
                    Vec lifted = Q.lift(F, image);
                    Vec diff(w.size());
                    for (size_t t = 0; t < w.size(); ++t) diff[t] = F.sub(w[t], lifted[t]);
                    CHECK(U.contains(F, diff));
                }
                // project then lift then project is project
                for (Vec coords : all_vectors(F, Q.quotient_dim())) {
                    Vec lifted = Q.lift(F, coords);
                    CHECK(W.contains(F, lifted));
                    CHECK(Q.project(F, lifted) == coords);
                }
            }
        }
    }
    CHECK_THROWS_AS(
        quotient_coordinates(F, Subspace::from_generators(F, 3, Matrix::from_rows(3, {{1, 0, 0}})),
                             Subspace::from_generators(F, 3, Matrix::from_rows(3, {{0, 1, 0}}))),
        NotNested);
}
