#include "fqsim/counting.hpp"

#include <algorithm>
#include <cassert>

namespace fqsim {

BigInt big_pow(std::uint64_t base, int e) {
    BigInt b = base, r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

namespace {

void validate_label(const Partition& lambda, int d, int n, int k) {
    if (!is_partition(lambda)) throw BadLabel("lambda is not a partition");
    if (d < 0 || k < 0 || k > n || d > k) throw BadLabel("need 0 <= d <= k <= n");
    if (partition_weight(lambda) != n - d)
        throw BadLabel("lambda must be a partition of n - deg(I)");
    int l1 = lambda.empty() ? 0 : lambda[0];
    if (l1 != n - k) throw BadLabel("first part of lambda must equal n - k");
}

}  // namespace

BigInt q_binomial_at(int n, int k, std::uint64_t q) {
    return q_binomial(n, k).evaluate(BigInt(q));
}

BigInt gamma_at(int k, std::uint64_t q) {
    BigInt qk = big_pow(q, k), acc = 1, qi = 1;
    for (int i = 0; i < k; ++i) {
        acc *= qk - qi;
        qi *= q;
    }
    return acc;
}

FrobeniusData invariant_factors_to_frobenius(const Field& F, const InvariantFactors& I) {
    if (!is_valid_invariant_chain(F, I))
        throw InvalidChain("invariant factors must be monic, nonconstant, each dividing the next");
    FrobeniusData data{PolyOrder{}};
    for (const Poly& p : I)
        for (const auto& [phi, mult] : factor(F, p)) data[phi].push_back(mult);
    // exponents were collected in divisibility order, hence increasing
    for (auto& [phi, mu] : data) std::reverse(mu.begin(), mu.end());
    return data;
}

InvariantFactors frobenius_to_invariant_factors(const Field& F, const FrobeniusData& data) {
    size_t r = 0;
    for (const auto& [phi, mu] : data) {
        if (!is_partition(mu) || mu.empty())
            throw InvalidChain("each irreducible needs a nonempty exponent partition");
        if (!is_irreducible(F, phi)) throw InvalidChain("keys must be monic irreducibles");
        r = std::max(r, mu.size());
    }
    InvariantFactors out;
    for (size_t i = 0; i < r; ++i) {
        // factor i (0-based from the smallest) takes exponent index r-1-i
        Poly f = Poly::constant(1);
        for (const auto& [phi, mu] : data) {
            size_t idx = r - 1 - i;
            if (idx < mu.size()) f = poly_mul(F, f, poly_pow(F, phi, static_cast<unsigned>(mu[idx])));
        }
        if (f.degree() >= 1) out.push_back(std::move(f));
    }
    return out;
}

BigInt hall_class_size(const Field& F, const InvariantFactors& I) {
    FrobeniusData data = invariant_factors_to_frobenius(F, I);
    const int d = chain_degree(I);
    BigInt centralizer = 1;
    for (const auto& [phi, mu] : data) {
        BigInt Q = big_pow(F.q(), phi.degree());
        Partition conj = conjugate(mu);
        int sq = 0;
        for (int c : conj) sq += c * c;
        // multiplicities m_i of each part size
        std::map<int, int> mult;
        for (int part : mu) ++mult[part];
        BigInt numer = 1;
        int denom_exp = 0;
        for (const auto& [part, m] : mult) {
            BigInt Qk = 1;
            for (int k = 1; k <= m; ++k) {
                Qk *= Q;
                numer *= Qk - 1;
                denom_exp += k;
            }
        }
        // b_mu(Q) = Q^sq * prod (1 - Q^-k) = Q^sq * numer / Q^denom_exp
        BigInt num_total = numer;
        BigInt denom = 1;
        if (sq >= denom_exp) {
            for (int i = 0; i < sq - denom_exp; ++i) num_total *= Q;
        } else {
            for (int i = 0; i < denom_exp - sq; ++i) denom *= Q;
        }
        // centralizer orders are integers; fail loudly if the exact
        // ratio ever stops cancelling
        if (num_total % denom != 0) throw Error("internal: centralizer order not integral");
        centralizer *= num_total / denom;
    }
    BigInt group = gamma_at(d, F.q());
    if (group % centralizer != 0) throw Error("internal: class size not integral");
    return group / centralizer;
}

BigInt sigma(const Partition& lambda, int n, std::uint64_t q) {
    if (!is_partition(lambda)) throw BadLabel("sigma requires a partition");
    if (lambda.empty()) return 1;
    if (partition_weight(lambda) > n) throw BadLabel("lambda has weight above n");
    int sq = 0;
    for (size_t i = 1; i < lambda.size(); ++i) sq += lambda[i] * lambda[i];
    BigInt acc = big_pow(q, sq) * gamma_at(n - lambda[0], q);
    for (size_t i = 0; i < lambda.size(); ++i) {
        int next = (i + 1 < lambda.size()) ? lambda[i + 1] : 0;
        acc *= q_binomial_at(lambda[i], next, q);
    }
    return acc;
}

BigInt count_simple_class(const Partition& lambda, std::uint64_t q) {
    if (!is_partition(lambda)) throw BadLabel("count_simple_class requires a partition");
    const int n = partition_weight(lambda);
    if (n == 0) return 1;  // the empty map on the zero space
    int sq = 0;
    for (size_t i = 1; i < lambda.size(); ++i) sq += lambda[i] * lambda[i];
    std::vector<int> parts;
    parts.push_back(n - lambda[0]);
    for (size_t i = 0; i + 1 < lambda.size(); ++i) parts.push_back(lambda[i] - lambda[i + 1]);
    parts.push_back(lambda.back());
    return big_pow(q, sq) * q_multinomial(n, parts).evaluate(BigInt(q)) * gamma_at(n - lambda[0], q);
}

BigInt count_class_fixed_domain(const Field& F, const Partition& lambda,
                                const InvariantFactors& I, int n, int k) {
    const int d = chain_degree(I);
    validate_label(lambda, d, n, k);
    BigInt acc = big_pow(F.q(), d * (k - d));
    acc *= q_binomial_at(k, d, F.q());
    acc *= hall_class_size(F, I);
    acc *= sigma(lambda, n - d, F.q());
    return acc;
}

BigInt count_class(const Field& F, const Partition& lambda, const InvariantFactors& I, int n) {
    const int l1 = lambda.empty() ? 0 : lambda[0];
    const int k = n - l1;
    return q_binomial_at(n, k, F.q()) * count_class_fixed_domain(F, lambda, I, n, k);
}

BigInt count_with_fixed_invariant_subspace(const Field& F, const Partition& lambda,
                                           const InvariantFactors& I, int n, int k) {
    const int d = chain_degree(I);
    validate_label(lambda, d, n, k);
    return big_pow(F.q(), d * (k - d)) * hall_class_size(F, I) * sigma(lambda, n - d, F.q());
}

BigInt count_extensions(int d, int k, std::uint64_t q) {
    if (d < 0 || d > k) throw BadDimensions("count_extensions requires 0 <= d <= k");
    return big_pow(q, d * (k - d));
}

BigInt count_simple_fixed_domain(int n, int k, std::uint64_t q) {
    if (k < 0 || k >= n) throw BadDimensions("count_simple_fixed_domain requires 0 <= k < n");
    BigInt qn = big_pow(q, n), acc = 1, qi = 1;
    for (int i = 1; i <= k; ++i) {
        qi *= q;
        acc *= qn - qi;
    }
    return acc;
}

BigInt count_operator_part_class(const Field& F, const InvariantFactors& I, int n, int k) {
    const int d = chain_degree(I);
    if (k < 0 || k > n || d > k)
        throw BadDimensions("count_operator_part_class requires deg(I) <= k <= n");
    BigInt acc = q_binomial_at(k, d, F.q()) * hall_class_size(F, I);
    BigInt qn = big_pow(F.q(), n);
    for (int i = d + 1; i <= k; ++i) acc *= qn - big_pow(F.q(), i);
    return acc;
}

BigInt count_subspaces_with_intersection(int n, int k, int d, std::uint64_t q) {
    if (d < 0 || d > k || k > n)
        throw BadDimensions("count_subspaces_with_intersection requires 0 <= d <= k <= n");
    // No room for a (k-d)-dimensional complement inside the (n-k)-dimensional
    // quotient: the count is genuinely zero, not a domain error.
    if (k - d > n - k) return 0;
    return q_binomial_at(n - k, k - d, q) * big_pow(q, (k - d) * (k - d));
}

BigInt count_flags(int n, const std::vector<int>& dims, std::uint64_t q) {
    int sum = 0;
    for (int v : dims) {
        if (v < 1) throw BadDimensions("flag dimensions must be >= 1");
        sum += v;
    }
    if (sum != n) throw BadDimensions("flag dimensions must sum to n");
    return q_multinomial(n, dims).evaluate(BigInt(q));
}

namespace {

// Assign exponent partitions to irreducibles so total degree hits `rem`.
void assign_frobenius(const Field& F, const std::vector<Poly>& irr, size_t idx, int rem,
                      FrobeniusData& cur, std::vector<InvariantFactors>& out) {
    if (rem == 0) {
        out.push_back(frobenius_to_invariant_factors(F, cur));
        return;
    }
    if (idx == irr.size()) return;
    const Poly& phi = irr[idx];
    const int deg = phi.degree();
    assign_frobenius(F, irr, idx + 1, rem, cur, out);  // skip phi
    for (int w = 1; w * deg <= rem; ++w) {
        for (const Partition& mu : partitions_of(w)) {
            cur[phi] = mu;
            assign_frobenius(F, irr, idx + 1, rem - w * deg, cur, out);
        }
        cur.erase(phi);
    }
}

}  // namespace

std::vector<SimilarityLabel> enumerate_labels(const Field& F, int n) {
    if (n < 0) throw BadDimensions("enumerate_labels requires n >= 0");
    std::vector<SimilarityLabel> out;
    std::vector<Poly> irr = enumerate_monic_irreducibles(F, n);
    for (int d = 0; d <= n; ++d) {
        std::vector<InvariantFactors> chains;
        if (d == 0) {
            chains.push_back({});
        } else {
            FrobeniusData cur{PolyOrder{}};
            assign_frobenius(F, irr, 0, d, cur, chains);
        }
        std::vector<Partition> lams = partitions_of(n - d);
        for (const InvariantFactors& I : chains)
            for (const Partition& lam : lams) {
                SimilarityLabel L;
                L.lambda = lam;
                L.factors = I;
                L.ambient = n;
                out.push_back(std::move(L));
            }
    }
    return out;
}

BigInt total_partial_maps(int n, std::uint64_t q) {
    if (n < 0) throw BadDimensions("total_partial_maps requires n >= 0");
    BigInt acc = 0;
    for (int k = 0; k <= n; ++k) acc += q_binomial_at(n, k, q) * big_pow(q, n * k);
    return acc;
}

}  // namespace fqsim
