#include "fqsim/census.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace fqsim {

namespace {

// Iterates the q^(nk) action matrices for one fixed domain.
template <typename Fn>
void for_each_action(const Field& F, int n, const Subspace& W, Fn&& fn) {
    const int k = W.dim();
    PartialLinearMap T;
    T.ambient = n;
    T.domain = W;
    T.action = Matrix(k, n);
    const size_t cells = static_cast<size_t>(k) * n;
    while (true) {
        fn(T);
        bool wrapped = true;
        for (size_t i = cells; i > 0;) {
            --i;
            if (++T.action.a[i] < F.q()) {
                wrapped = false;
                break;
            }
            T.action.a[i] = 0;
        }
        if (wrapped) break;
    }
}

std::uint64_t threshold_full_group = 10'000;

}  // namespace

void for_each_partial_map(const Field& F, int n,
                          const std::function<void(const PartialLinearMap&)>& fn,
                          std::uint64_t budget) {
    if (n < 0) throw BadDimensions("ambient dimension must be >= 0");
    BigInt total = total_partial_maps(n, F.q());
    if (total > budget)
        throw TooLarge("census of " + total.str() + " maps exceeds budget " +
                       std::to_string(budget));
    for (int k = 0; k <= n; ++k)
        for (const Subspace& W : enumerate_subspaces(F, n, k))
            for_each_action(F, n, W, fn);
}

std::vector<CensusRow> CensusReport::mismatches() const {
    std::vector<CensusRow> out;
    for (const CensusRow& r : rows)
        if (r.predicted != r.observed) out.push_back(r);
    return out;
}

bool CensusReport::clean() const {
    return mismatches().empty() && total_observed == total_predicted;
}

CensusReport run_census(const Field& F, int n, std::uint64_t budget, int threads) {
    if (n < 0) throw BadDimensions("ambient dimension must be >= 0");
    BigInt total = total_partial_maps(n, F.q());
    if (total > budget)
        throw TooLarge("census of " + total.str() + " maps exceeds budget " +
                       std::to_string(budget));

    // work units: one per (k, domain)
    std::vector<Subspace> units;
    for (int k = 0; k <= n; ++k)
        for (Subspace& W : enumerate_subspaces(F, n, k)) units.push_back(std::move(W));

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(units.size()));
    if (threads < 1) threads = 1;

    struct Local {
        std::unordered_map<std::string, std::uint64_t> counts;
        std::unordered_map<std::string, SimilarityLabel> labels;
    };
    std::vector<Local> locals(static_cast<size_t>(threads));
    std::atomic<size_t> next_unit{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](int me) {
        try {
            Local& loc = locals[static_cast<size_t>(me)];
            while (true) {
                size_t idx = next_unit.fetch_add(1);
                if (idx >= units.size()) break;
                for_each_action(F, n, units[idx], [&](const PartialLinearMap& T) {
                    SimilarityLabel L = similarity_label(F, T);
                    std::string key = label_key(L);
                    auto [it, fresh] = loc.counts.try_emplace(key, 0);
                    it->second += 1;
                    if (fresh) loc.labels.emplace(key, std::move(L));
                });
            }
        } catch (...) {
            std::lock_guard<std::mutex> g(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    // merge: addition keyed by label, schedule-independent
    std::map<std::string, CensusRow> merged;
    for (Local& loc : locals)
        for (auto& [key, cnt] : loc.counts) {
            auto it = merged.find(key);
            if (it == merged.end()) {
                CensusRow row;
                row.label = loc.labels.at(key);
                row.observed = cnt;
                row.predicted = 0;
                merged.emplace(key, std::move(row));
            } else {
                it->second.observed += cnt;
            }
        }
    // every predicted label joins the table, observed or not
    for (SimilarityLabel& L : enumerate_labels(F, n)) {
        std::string key = label_key(L);
        auto it = merged.find(key);
        if (it == merged.end()) {
            CensusRow row;
            row.label = std::move(L);
            row.observed = 0;
            merged.emplace(key, std::move(row));
        }
    }

    CensusReport rep;
    rep.n = n;
    rep.q = F.q();
    for (auto& [key, row] : merged) {
        row.predicted = count_class(F, row.label.lambda, row.label.factors, n);
        rep.total_observed += row.observed;
        rep.total_predicted += row.predicted;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::vector<Matrix> general_linear_group(const Field& F, int n) {
    std::vector<Matrix> out;
    Matrix M(n, n);
    const size_t cells = static_cast<size_t>(n) * n;
    while (true) {
        if (rref(F, M).second == n) out.push_back(M);
        bool wrapped = true;
        for (size_t i = cells; i > 0;) {
            --i;
            if (++M.a[i] < F.q()) {
                wrapped = false;
                break;
            }
            M.a[i] = 0;
        }
        if (wrapped) break;
    }
    return out;
}

std::vector<Matrix> gl_generators(const Field& F, int n) {
    std::vector<Matrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            for (Fe c = 1; c < F.q(); ++c) {
                Matrix M = Matrix::identity(n);
                M.at(i, j) = c;
                gens.push_back(std::move(M));
            }
        }
    // dilations in the first slot cover the determinant classes
    if (n >= 1)
        for (Fe u = 2; u < F.q(); ++u) {
            Matrix M = Matrix::identity(n);
            M.at(0, 0) = u;
            gens.push_back(std::move(M));
        }
    return gens;
}

std::string matrix_key(const Matrix& A) {
    std::string out = std::to_string(A.rows);
    out += 'x';
    out += std::to_string(A.cols);
    for (Fe v : A.a) {
        out += ',';
        out += std::to_string(v);
    }
    return out;
}

namespace {

// cached full groups for the small cases the fast path handles
const std::vector<Matrix>& cached_gl(const Field& F, int n) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::vector<Matrix>> cache;
    std::lock_guard<std::mutex> g(mu);
    auto key = std::make_pair(F.q(), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, general_linear_group(F, n)).first;
    return it->second;
}

}  // namespace

std::vector<std::string> map_orbit(const Field& F, const PartialLinearMap& T,
                                   bool use_generators) {
    std::set<std::string> seen;
    if (!use_generators) {
        for (const Matrix& S : cached_gl(F, T.ambient))
            seen.insert(map_key(conjugate_map(F, T, S)));
    } else {
        std::vector<Matrix> gens = gl_generators(F, T.ambient);
        std::deque<PartialLinearMap> frontier{T};
        seen.insert(map_key(T));
        while (!frontier.empty()) {
            PartialLinearMap cur = std::move(frontier.front());
            frontier.pop_front();
            for (const Matrix& S : gens) {
                PartialLinearMap nxt = conjugate_map(F, cur, S);
                if (seen.insert(map_key(nxt)).second) frontier.push_back(std::move(nxt));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::string> matrix_orbit(const Field& F, const Matrix& A, bool use_generators) {
    if (A.rows != A.cols) throw NotSquare("conjugation requires a square matrix");
    const int n = A.rows;
    std::set<std::string> seen;
    if (!use_generators) {
        for (const Matrix& S : cached_gl(F, n)) {
            auto S_inv = mat_inverse(F, S);
            seen.insert(matrix_key(mat_mul(F, mat_mul(F, *S_inv, A), S)));
        }
    } else {
        std::vector<Matrix> gens = gl_generators(F, n);
        std::vector<Matrix> gen_invs;
        for (const Matrix& S : gens) gen_invs.push_back(*mat_inverse(F, S));
        std::deque<Matrix> frontier{A};
        seen.insert(matrix_key(A));
        while (!frontier.empty()) {
            Matrix cur = std::move(frontier.front());
            frontier.pop_front();
            for (size_t i = 0; i < gens.size(); ++i) {
                Matrix nxt = mat_mul(F, mat_mul(F, gen_invs[i], cur), gens[i]);
                if (seen.insert(matrix_key(nxt)).second) frontier.push_back(std::move(nxt));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool orbit_check(const Field& F, int n, std::uint64_t budget) {
    BigInt group = gamma_at(n, F.q());
    BigInt work = group * total_partial_maps(n, F.q());
    if (work > budget)
        throw TooLarge("orbit check of " + work.str() + " conjugations exceeds budget " +
                       std::to_string(budget));
    bool use_generators = group > threshold_full_group;

    std::vector<PartialLinearMap> maps;
    std::vector<std::string> keys_of;
    std::unordered_map<std::string, std::vector<std::string>> buckets;
    for_each_partial_map(
        F, n,
        [&](const PartialLinearMap& T) {
            maps.push_back(T);
            std::string lk = label_key(similarity_label(F, T));
            keys_of.push_back(lk);
            buckets[lk].push_back(map_key(T));
        },
        budget);
    for (auto& [lk, keys] : buckets) std::sort(keys.begin(), keys.end());

    for (size_t i = 0; i < maps.size(); ++i) {
        std::vector<std::string> orbit = map_orbit(F, maps[i], use_generators);
        if (orbit != buckets.at(keys_of[i])) return false;
    }
    return true;
}

BigInt brute_conjugacy_class_size(const Field& F, const Matrix& A, std::uint64_t budget) {
    if (A.rows != A.cols) throw NotSquare("conjugation requires a square matrix");
    BigInt group = gamma_at(A.rows, F.q());
    if (group > budget)
        throw TooLarge("group of order " + group.str() + " exceeds budget " +
                       std::to_string(budget));
    return static_cast<std::uint64_t>(
        matrix_orbit(F, A, group > threshold_full_group).size());
}

BigInt brute_intersection_count(const Field& F, int n, int k, int d) {
    if (d < 0 || d > k || k > n) throw BadDimensions("need 0 <= d <= k <= n");
    // canonical W = <e_0..e_{k-1}>, U = <e_0..e_{d-1}>
    Matrix wb(k, n), ub(d, n);
    for (int i = 0; i < k; ++i) wb.at(i, i) = 1;
    for (int i = 0; i < d; ++i) ub.at(i, i) = 1;
    Subspace W = Subspace::from_rref(n, std::move(wb));
    Subspace U = Subspace::from_rref(n, std::move(ub));
    BigInt count = 0;
    for (const Subspace& Wp : enumerate_subspaces(F, n, k))
        if (subspace_intersection(F, W, Wp) == U) ++count;
    return count;
}

BigInt brute_flag_count(const Field& F, int n, const std::vector<int>& dims) {
    int sum = 0;
    for (int v : dims) {
        if (v < 1) throw BadDimensions("flag dimensions must be >= 1");
        sum += v;
    }
    if (sum != n) throw BadDimensions("flag dimensions must sum to n");

    std::vector<std::vector<Subspace>> by_dim(static_cast<size_t>(n) + 1);
    {
        int cum = 0;
        for (int v : dims) {
            cum += v;
            if (by_dim[static_cast<size_t>(cum)].empty())
                by_dim[static_cast<size_t>(cum)] = enumerate_subspaces(F, n, cum);
        }
    }
    // count chains extending `prev` with the remaining quotient dims
    std::function<BigInt(const Subspace&, size_t)> extend =
        [&](const Subspace& prev, size_t level) -> BigInt {
        if (level == dims.size()) return 1;
        int next_dim = prev.dim() + dims[level];
        BigInt total = 0;
        for (const Subspace& S : by_dim[static_cast<size_t>(next_dim)])
            if (S.contains(F, prev)) total += extend(S, level + 1);
        return total;
    };
    return extend(Subspace::zero(n), 0);
}

}  // namespace fqsim
