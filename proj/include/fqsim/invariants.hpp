#pragma once

#include <string>
#include <vector>

#include "fqsim/linalg.hpp"
#include "fqsim/partitions.hpp"
#include "fqsim/poly.hpp"

namespace fqsim {

// A linear map T : W -> V defined on a subspace W of V = F_q^n, stored
// in canonical form: the RREF basis of W plus the image of each basis
// row.  Two maps are equal exactly when their canonical forms agree.
struct PartialLinearMap {
    int ambient = 0;
    Subspace domain;  // k x n RREF basis of W
    Matrix action;    // k x n; row i = T(domain.basis().row(i))

    bool operator==(const PartialLinearMap&) const = default;
};

// Canonicalizing constructor.  domain_rows must be linearly independent
// rows spanning W; images must have the same shape.  Throws InvalidMap.
PartialLinearMap make_partial_map(const Field& F, int ambient, const Matrix& domain_rows,
                                  const Matrix& images);

// T(v); throws NotInDomain when v is outside W.
Vec apply_map(const Field& F, const PartialLinearMap& T, const Vec& v);

// {w in W : T(w) in S}
Subspace preimage(const Field& F, const PartialLinearMap& T, const Subspace& S);

// W_0 = V, W_1 = W, W_{i+1} = {v in W_i : T(v) in W_i}, stopping at the
// first fixed point W_ell = W_{ell+1}.
struct ChainReport {
    std::vector<Subspace> subspaces;  // W_0 .. W_ell
    std::vector<int> dims;            // d_0 .. d_ell
    int ell = 0;
};

ChainReport subspace_chain(const Field& F, const PartialLinearMap& T);

// (d_0 - d_1, d_1 - d_2, ..., d_{ell-1} - d_ell); empty when W = V.
Partition defect_dimensions(const Field& F, const PartialLinearMap& T);

// W_ell: the largest subspace of W mapped into itself by T.
Subspace maximal_invariant_subspace(const Field& F, const PartialLinearMap& T);

// Matrix of T restricted to W_ell in the canonical basis of W_ell
// (row i = coordinates of the image of basis row i).
Matrix operator_part(const Field& F, const PartialLinearMap& T);

// The induced map W/U -> V/U for U = W_ell, expressed in the canonical
// quotient coordinates; its maximal invariant subspace is zero.
PartialLinearMap simple_part(const Field& F, const PartialLinearMap& T);

// Monic nonconstant invariant factors in divisibility-increasing order
// (each divides the next), read off the Smith normal form of xI - A
// with unit entries discarded.  Empty for a 0 x 0 matrix.
using InvariantFactors = std::vector<Poly>;

PolyMatrix characteristic_matrix(const Field& F, const Matrix& A);  // xI - A
InvariantFactors invariant_factors(const Field& F, const Matrix& A);

bool is_valid_invariant_chain(const Field& F, const InvariantFactors& I);
int chain_degree(const InvariantFactors& I);  // sum of degrees

// The complete similarity invariant: defect partition plus the
// invariant factors of the operator part.
struct SimilarityLabel {
    Partition lambda;
    InvariantFactors factors;
    int ambient = 0;

    bool operator==(const SimilarityLabel&) const = default;
};

SimilarityLabel similarity_label(const Field& F, const PartialLinearMap& T);
bool are_similar(const Field& F, const PartialLinearMap& a, const PartialLinearMap& b);

// S T S^{-1} on S(W); throws SingularMatrix when S is not invertible.
PartialLinearMap conjugate_map(const Field& F, const PartialLinearMap& T, const Matrix& S);

// Compact deterministic keys used for bucketing and set comparison.
std::string factors_to_string(const InvariantFactors& I);  // "x;x^2+x"
std::string label_key(const SimilarityLabel& L);           // "1,1|x;x^2"
std::string map_key(const PartialLinearMap& T);

}  // namespace fqsim
