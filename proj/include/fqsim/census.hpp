#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fqsim/counting.hpp"

namespace fqsim {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Visits every partial linear map on F_q^n exactly once: for each
// dimension k, each canonical domain, each of the q^(nk) action
// matrices.  Throws TooLarge when total_partial_maps(n, q) > budget.
void for_each_partial_map(const Field& F, int n,
                          const std::function<void(const PartialLinearMap&)>& fn,
                          std::uint64_t budget = kDefaultBudget);

struct CensusRow {
    SimilarityLabel label;
    BigInt predicted;
    BigInt observed;
};

struct CensusReport {
    int n = 0;
    std::uint64_t q = 0;
    std::vector<CensusRow> rows;  // sorted by label key
    BigInt total_observed = 0;
    BigInt total_predicted = 0;

    std::vector<CensusRow> mismatches() const;
    bool clean() const;
};

// Buckets every map by its similarity label and compares the observed
// bucket sizes against the closed-form class sizes.  Work is split by
// (k, domain) units across `threads` workers (0 = hardware default);
// the merged result is schedule-independent.
CensusReport run_census(const Field& F, int n, std::uint64_t budget = kDefaultBudget,
                        int threads = 0);

// Verifies, for every map T on F_q^n, that the conjugation orbit
// {S T S^-1 : S in GL_n} coincides with the set of maps sharing T's
// label.  Guarded by gamma_q(n) * total_partial_maps(n, q) <= budget.
bool orbit_check(const Field& F, int n, std::uint64_t budget = kDefaultBudget);

// All invertible n x n matrices (ascending odometer order, filtered).
std::vector<Matrix> general_linear_group(const Field& F, int n);
// Transvections plus dilations; generates GL_n(F_q).
std::vector<Matrix> gl_generators(const Field& F, int n);

// Conjugation orbits as sorted key sets.  When use_generators is true
// the orbit is grown by closure under the generator set instead of one
// pass over the full group (for groups past the enumeration threshold).
std::vector<std::string> map_orbit(const Field& F, const PartialLinearMap& T,
                                   bool use_generators);
std::vector<std::string> matrix_orbit(const Field& F, const Matrix& A, bool use_generators);
std::string matrix_key(const Matrix& A);

// Conjugacy class size of A under GL_n by explicit orbit computation.
BigInt brute_conjugacy_class_size(const Field& F, const Matrix& A,
                                  std::uint64_t budget = kDefaultBudget);

// Brute-force versions of the two subspace-counting formulas.
BigInt brute_intersection_count(const Field& F, int n, int k, int d);
BigInt brute_flag_count(const Field& F, int n, const std::vector<int>& dims);

}  // namespace fqsim
