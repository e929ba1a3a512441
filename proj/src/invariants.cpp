#include "fqsim/invariants.hpp"

#include <algorithm>
#include <cassert>

namespace fqsim {

PartialLinearMap make_partial_map(const Field& F, int ambient, const Matrix& domain_rows,
                                  const Matrix& images) {
    if (ambient < 0) throw InvalidMap("ambient dimension must be >= 0");
    if (domain_rows.rows != images.rows)
        throw InvalidMap("domain_basis and images must have the same number of rows");
    if (domain_rows.rows > 0 && (domain_rows.cols != ambient || images.cols != ambient))
        throw InvalidMap("rows must have length n");
    if (domain_rows.rows > ambient)
        throw InvalidMap("more domain rows than the ambient dimension");
    for (Fe v : domain_rows.a)
        if (v >= F.q()) throw InvalidMap("domain entry out of range [0, q)");
    for (Fe v : images.a)
        if (v >= F.q()) throw InvalidMap("image entry out of range [0, q)");

    const int k = domain_rows.rows;
    // Row-reduce [B | M] with pivots restricted to the B block; the M
    // block then carries the images of the canonical basis rows.
    Matrix aug(k, 2 * ambient);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < ambient; ++c) {
            aug.at(r, c) = domain_rows.at(r, c);
            aug.at(r, ambient + c) = images.at(r, c);
        }
    int pr = 0;
    for (int col = 0; col < ambient && pr < k; ++col) {
        int sel = -1;
        for (int r = pr; r < k; ++r)
            if (aug.at(r, col) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pr)
            for (int c = 0; c < 2 * ambient; ++c) std::swap(aug.at(sel, c), aug.at(pr, c));
        Fe piv_inv = F.inv(aug.at(pr, col));
        for (int c = 0; c < 2 * ambient; ++c) aug.at(pr, c) = F.mul(piv_inv, aug.at(pr, c));
        for (int r = 0; r < k; ++r) {
            if (r == pr) continue;
            Fe f = aug.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < 2 * ambient; ++c)
                aug.at(r, c) = F.sub(aug.at(r, c), F.mul(f, aug.at(pr, c)));
        }
        ++pr;
    }
    if (pr < k) throw InvalidMap("domain_basis rows must be linearly independent");

    Matrix basis(k, ambient), action(k, ambient);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < ambient; ++c) {
            basis.at(r, c) = aug.at(r, c);
            action.at(r, c) = aug.at(r, ambient + c);
        }
    PartialLinearMap T;
    T.ambient = ambient;
    T.domain = Subspace::from_rref(ambient, std::move(basis));
    T.action = std::move(action);
    return T;
}

Vec apply_map(const Field& F, const PartialLinearMap& T, const Vec& v) {
    Vec x = T.domain.coordinates(F, v);  // throws NotInDomain
    return vec_mat_mul(F, x, T.action);
}

Subspace preimage(const Field& F, const PartialLinearMap& T, const Subspace& S) {
    if (S.ambient() != T.ambient) throw AmbientMismatch("preimage target in a different space");
    const int k = T.domain.dim();
    // x.action lies in S exactly when x kills the residuals of the
    // action rows modulo S.
    std::vector<Vec> residuals;
    residuals.reserve(static_cast<size_t>(k));
    for (int r = 0; r < k; ++r) residuals.push_back(S.reduce(F, T.action.row(r)));
    Matrix R = Matrix::from_rows(T.ambient, residuals);
    Matrix X = left_kernel_basis(F, R);  // rows: coefficient vectors
    std::vector<Vec> gens;
    gens.reserve(static_cast<size_t>(X.rows));
    for (int r = 0; r < X.rows; ++r) gens.push_back(vec_mat_mul(F, X.row(r), T.domain.basis()));
    return Subspace::from_generators(F, T.ambient, Matrix::from_rows(T.ambient, gens));
}

ChainReport subspace_chain(const Field& F, const PartialLinearMap& T) {
    ChainReport rep;
    rep.subspaces.push_back(Subspace::full(T.ambient));
    rep.dims.push_back(T.ambient);
    if (T.domain.dim() == T.ambient) {
        rep.ell = 0;  // W = V is already the fixed point
        return rep;
    }
    Subspace cur = T.domain;
    while (true) {
        rep.subspaces.push_back(cur);
        rep.dims.push_back(cur.dim());
        Subspace next = subspace_intersection(F, cur, preimage(F, T, cur));
        if (next == cur) {
            rep.ell = static_cast<int>(rep.subspaces.size()) - 1;
            return rep;
        }
        cur = std::move(next);
    }
}

Partition defect_dimensions(const Field& F, const PartialLinearMap& T) {
    ChainReport rep = subspace_chain(F, T);
    Partition lam;
    for (int i = 1; i <= rep.ell; ++i)
        lam.push_back(rep.dims[static_cast<size_t>(i - 1)] - rep.dims[static_cast<size_t>(i)]);
    assert(is_partition(lam));
    return lam;
}

Subspace maximal_invariant_subspace(const Field& F, const PartialLinearMap& T) {
    ChainReport rep = subspace_chain(F, T);
    return rep.subspaces.back();
}

Matrix operator_part(const Field& F, const PartialLinearMap& T) {
    Subspace U = maximal_invariant_subspace(F, T);
    const int d = U.dim();
    Matrix M(d, d);
    for (int r = 0; r < d; ++r) {
        Vec img = apply_map(F, T, U.basis().row(r));
        Vec coords = U.coordinates(F, img);  // invariance guarantees membership
        for (int c = 0; c < d; ++c) M.at(r, c) = coords[static_cast<size_t>(c)];
    }
    return M;
}

PartialLinearMap simple_part(const Field& F, const PartialLinearMap& T) {
    Subspace U = maximal_invariant_subspace(F, T);
    QuotientMap Q = quotient_coordinates(F, U, Subspace::full(T.ambient));
    const int nq = Q.quotient_dim();

    // span of the projected domain
    std::vector<Vec> proj;
    for (int r = 0; r < T.domain.dim(); ++r)
        proj.push_back(Q.project(F, T.domain.basis().row(r)));
    Subspace dom = Subspace::from_generators(F, nq, Matrix::from_rows(nq, proj));

    // lift each canonical quotient basis row back into W, apply T, project
    Matrix action(dom.dim(), nq);
    for (int r = 0; r < dom.dim(); ++r) {
        Vec w = Q.lift(F, dom.basis().row(r));  // lies in W since U <= W
        Vec img = Q.project(F, apply_map(F, T, w));
        for (int c = 0; c < nq; ++c) action.at(r, c) = img[static_cast<size_t>(c)];
    }
    PartialLinearMap S;
    S.ambient = nq;
    S.domain = dom;
    S.action = std::move(action);
    return S;
}

PolyMatrix characteristic_matrix(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) throw NotSquare("characteristic matrix requires a square input");
    PolyMatrix M(A.rows, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j) {
            std::vector<Fe> c;
            if (i == j)
                c = {F.neg(A.at(i, j)), 1};  // x - a_ii
            else
                c = {F.neg(A.at(i, j))};
            M.at(i, j) = Poly::from_coeffs(std::move(c));
        }
    return M;
}

InvariantFactors invariant_factors(const Field& F, const Matrix& A) {
    if (A.rows != A.cols) throw NotSquare("invariant factors require a square matrix");
    if (A.rows == 0) return {};
    std::vector<Poly> diag = smith_normal_form(F, characteristic_matrix(F, A));
    InvariantFactors out;
    for (Poly& d : diag) {
        assert(!d.is_zero());  // det(xI - A) != 0
        if (d.degree() >= 1) out.push_back(std::move(d));
    }
    return out;
}

bool is_valid_invariant_chain(const Field& F, const InvariantFactors& I) {
    for (size_t i = 0; i < I.size(); ++i) {
        if (I[i].degree() < 1 || !I[i].is_monic()) return false;
        if (i > 0 && !poly_divides(F, I[i - 1], I[i])) return false;
    }
    return true;
}

int chain_degree(const InvariantFactors& I) {
    int d = 0;
    for (const Poly& f : I) d += f.degree();
    return d;
}

SimilarityLabel similarity_label(const Field& F, const PartialLinearMap& T) {
    SimilarityLabel L;
    L.ambient = T.ambient;
    ChainReport rep = subspace_chain(F, T);
    for (int i = 1; i <= rep.ell; ++i)
        L.lambda.push_back(rep.dims[static_cast<size_t>(i - 1)] - rep.dims[static_cast<size_t>(i)]);
    // operator part computed against the already-known W_ell
    const Subspace& U = rep.subspaces.back();
    Matrix M(U.dim(), U.dim());
    for (int r = 0; r < U.dim(); ++r) {
        Vec coords = U.coordinates(F, apply_map(F, T, U.basis().row(r)));
        for (int c = 0; c < U.dim(); ++c) M.at(r, c) = coords[static_cast<size_t>(c)];
    }
    L.factors = invariant_factors(F, M);
    return L;
}

bool are_similar(const Field& F, const PartialLinearMap& a, const PartialLinearMap& b) {
    if (a.ambient != b.ambient) return false;
    return similarity_label(F, a) == similarity_label(F, b);
}

PartialLinearMap conjugate_map(const Field& F, const PartialLinearMap& T, const Matrix& S) {
    if (S.rows != T.ambient || S.cols != T.ambient)
        throw BadDimensions("conjugating matrix must be n x n");
    auto S_inv = mat_inverse(F, S);
    if (!S_inv) throw SingularMatrix("conjugation requires an invertible matrix");

    Subspace new_domain =
        Subspace::from_generators(F, T.ambient, mat_mul(F, T.domain.basis(), S));
    Matrix action(new_domain.dim(), T.ambient);
    for (int r = 0; r < new_domain.dim(); ++r) {
        Vec w = vec_mat_mul(F, new_domain.basis().row(r), *S_inv);  // back in W
        Vec img = vec_mat_mul(F, apply_map(F, T, w), S);
        for (int c = 0; c < T.ambient; ++c) action.at(r, c) = img[static_cast<size_t>(c)];
    }
    PartialLinearMap out;
    out.ambient = T.ambient;
    out.domain = std::move(new_domain);
    out.action = std::move(action);
    return out;
}

std::string factors_to_string(const InvariantFactors& I) {
    std::string out;
    for (size_t i = 0; i < I.size(); ++i) {
        if (i > 0) out += ';';
        out += poly_to_string(I[i]);
    }
    return out;
}

std::string label_key(const SimilarityLabel& L) {
    return partition_to_string(L.lambda) + "|" + factors_to_string(L.factors);
}

std::string map_key(const PartialLinearMap& T) {
    std::string out = std::to_string(T.ambient);
    out += ':';
    out += std::to_string(T.domain.dim());
    for (Fe v : T.domain.basis().a) {
        out += ',';
        out += std::to_string(v);
    }
    out += '/';
    for (Fe v : T.action.a) {
        out += ',';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace fqsim
