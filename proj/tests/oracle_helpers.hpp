#pragma once

// Oracles for the test suite only: slow, independently coded routines
// that the library results are checked against.

#include <cstdint>
#include <map>
#include <vector>

#include "fqsim/census.hpp"
#include "fqsim/counting.hpp"
#include "fqsim/invariants.hpp"
#include "fqsim/io.hpp"

namespace fqsim::testing {

// Determinant by cofactor expansion along the first row.  Exponential,
// fine for the <= 4 x 4 matrices the tests use.
inline Poly laplace_det(const Field& F, const PolyMatrix& M) {
    if (M.rows != M.cols) throw BadDimensions("laplace_det requires a square matrix");
    if (M.rows == 0) return Poly::constant(1);
    if (M.rows == 1) return M.at(0, 0);
    Poly det;
    for (int j = 0; j < M.cols; ++j) {
        if (M.at(0, j).is_zero()) continue;
        PolyMatrix minor(M.rows - 1, M.cols - 1);
        for (int r = 1; r < M.rows; ++r) {
            int cc = 0;
            for (int c = 0; c < M.cols; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = M.at(r, c);
            }
        }
        Poly term = poly_mul(F, M.at(0, j), laplace_det(F, minor));
        if (j % 2 == 1) term = poly_neg(F, term);
        det = poly_add(F, det, term);
    }
    return det;
}

inline Poly laplace_det_scalar(const Field& F, const Matrix& A) {
    PolyMatrix M(A.rows, A.cols);
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) M.at(r, c) = Poly::constant(A.at(r, c));
    return laplace_det(F, M);
}

// Number of monic irreducibles of degree d over F_q by the Moebius
// necklace count (1/d) sum_{e | d} mu(e) q^(d/e).
inline std::int64_t necklace_count(std::uint64_t q, int d) {
    auto mu = [](int m) {
        int result = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p) continue;
            m /= p;
            if (m % p == 0) return 0;
            result = -result;
        }
        if (m > 1) result = -result;
        return result;
    };
    std::int64_t total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        std::int64_t power = 1;
        for (int i = 0; i < d / e; ++i) power *= static_cast<std::int64_t>(q);
        total += mu(e) * power;
    }
    return total / d;
}

// All vectors of F_q^n in odometer order.
inline std::vector<Vec> all_vectors(const Field& F, int n) {
    std::vector<Vec> out;
    Vec v(static_cast<size_t>(n), 0);
    while (true) {
        out.push_back(v);
        int i = 0;
        for (; i < n; ++i) {
            if (++v[static_cast<size_t>(i)] < F.q()) break;
            v[static_cast<size_t>(i)] = 0;
        }
        if (i == n) break;
    }
    return out;
}

// All monic polynomials of exactly the given degree.
inline std::vector<Poly> all_monic(const Field& F, int degree) {
    std::vector<Poly> out;
    for (Vec low : all_vectors(F, degree)) {
        low.push_back(1);
        out.push_back(Poly::from_coeffs(low));
    }
    return out;
}

// Every map with the given domain, one per action matrix.
template <typename Fn>
void for_each_action_on(const Field& F, int n, const Subspace& W, Fn&& fn) {
    const int k = W.dim();
    Matrix images(k, n);
    while (true) {
        fn(make_partial_map(F, n, W.basis(), images));
        size_t i = 0;
        for (; i < images.a.size(); ++i) {
            if (++images.a[i] < F.q()) break;
            images.a[i] = 0;
        }
        if (i == images.a.size()) break;
    }
}

}  // namespace fqsim::testing
