#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fqsim/invariants.hpp"
#include "fqsim/partitions.hpp"

namespace fqsim {

// For each monic irreducible phi, the exponent partition mu(phi): the
// exponents of phi across the invariant factors, sorted decreasing.
using FrobeniusData = std::map<Poly, Partition, PolyOrder>;

FrobeniusData invariant_factors_to_frobenius(const Field& F, const InvariantFactors& I);
// Inverse direction: the largest exponents land in the last factor.
InvariantFactors frobenius_to_invariant_factors(const Field& F, const FrobeniusData& data);

// Size of the conjugacy class of operators on F_q^d (d = total degree)
// with invariant factors I: |GL_d| divided by the centralizer order,
// the latter a product over irreducibles of
//   b_mu(Q) = Q^(sum mu'_i^2) * prod_i prod_{k=1}^{m_i} (1 - Q^-k)
// at Q = q^deg(phi).  Computed as an exact ratio; divisibility is
// asserted.  hall_class_size({}) = 1.
BigInt hall_class_size(const Field& F, const InvariantFactors& I);

// Simple maps with defect partition lambda on one fixed domain of
// dimension n - lambda_1:
//   q^(sum_{i>=2} lambda_i^2) * gamma_q(n - lambda_1)
//     * prod_i qbinom(lambda_i, lambda_{i+1});
// sigma of the empty partition is 1.
BigInt sigma(const Partition& lambda, int n, std::uint64_t q);

// Simple similarity class of defect partition lambda |- n, all domains:
// q^(sum_{i>=2} lambda_i^2) * qmultinom(n; n-l1, l1-l2, ..., l_last)
BigInt count_simple_class(const Partition& lambda, std::uint64_t q);

// |C(lambda, I)| restricted to one fixed domain of dimension k:
//   q^(d(k-d)) * qbinom(k, d) * hall(I) * sigma(lambda)
BigInt count_class_fixed_domain(const Field& F, const Partition& lambda,
                                const InvariantFactors& I, int n, int k);

// Full similarity class size; k = n - lambda_1.
BigInt count_class(const Field& F, const Partition& lambda, const InvariantFactors& I, int n);

// Maps with a prescribed maximal invariant subspace of dimension d
// inside a fixed domain of dimension k: q^(d(k-d)) * hall(I) * sigma(lambda).
BigInt count_with_fixed_invariant_subspace(const Field& F, const Partition& lambda,
                                           const InvariantFactors& I, int n, int k);

// Maps sharing a prescribed operator part and simple part.
BigInt count_extensions(int d, int k, std::uint64_t q);

// Simple maps on one fixed k-dimensional domain, k < n:
// prod_{i=1}^{k} (q^n - q^i)
BigInt count_simple_fixed_domain(int n, int k, std::uint64_t q);

// Maps on one fixed domain whose operator part has invariant factors I:
// qbinom(k, d) * hall(I) * prod_{i=d+1}^{k} (q^n - q^i)
BigInt count_operator_part_class(const Field& F, const InvariantFactors& I, int n, int k);

// k-dimensional subspaces W' with W cap W' equal to a fixed d-dimensional
// subspace of a fixed k-dimensional W: qbinom(n-k, k-d) * q^((k-d)^2)
BigInt count_subspaces_with_intersection(int n, int k, int d, std::uint64_t q);

// Flags with successive quotient dimensions dims (all >= 1, summing to n).
BigInt count_flags(int n, const std::vector<int>& dims, std::uint64_t q);

// Every similarity label of partial maps on F_q^n, deterministic order,
// no duplicates: for each d = deg(I) in 0..n, every invariant-factor
// chain of degree d paired with every partition of n - d.
std::vector<SimilarityLabel> enumerate_labels(const Field& F, int n);

// sum_k qbinom(n, k) q^(nk)
BigInt total_partial_maps(int n, std::uint64_t q);

// Convenience evaluations at integer q.
BigInt big_pow(std::uint64_t base, int e);
BigInt q_binomial_at(int n, int k, std::uint64_t q);
BigInt gamma_at(int k, std::uint64_t q);

}  // namespace fqsim
