#include "fqsim/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace fqsim {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& p) {
    int w = 0;
    for (int v : p) w += v;
    return w;
}

int partition_part(const Partition& p, int i) {
    return (i >= 1 && i <= static_cast<int>(p.size())) ? p[static_cast<size_t>(i - 1)] : 0;
}

QPoly QPoly::from_coeffs(std::vector<BigInt> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    QPoly f;
    f.c_ = std::move(c);
    return f;
}

QPoly QPoly::constant(BigInt c) {
    return from_coeffs({std::move(c)});
}

QPoly QPoly::monomial(BigInt c, int deg) {
    std::vector<BigInt> v(static_cast<size_t>(deg) + 1, BigInt(0));
    v[static_cast<size_t>(deg)] = std::move(c);
    return from_coeffs(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return from_coeffs(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<BigInt> c(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return from_coeffs(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<BigInt> c(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(c));
}

BigInt QPoly::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        BigInt mag = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
        if (out.empty()) {
            if (c_[i] < 0) out += "-";
        } else {
            out += c_[i] < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            out += mag.str();
        } else {
            if (!unit) {
                out += mag.str();
                out += "*";
            }
            out += "q";
            if (i > 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out;
}

QPoly q_int(int n) {
    if (n < 0) throw BadArguments("q_int requires n >= 0");
    std::vector<BigInt> c(static_cast<size_t>(n), BigInt(1));
    return QPoly::from_coeffs(std::move(c));
}

QPoly q_factorial(int n) {
    if (n < 0) throw BadArguments("q_factorial requires n >= 0");
    QPoly acc = QPoly::constant(1);
    for (int i = 1; i <= n; ++i) acc = acc * q_int(i);
    return acc;
}

QPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw BadArguments("q_binomial requires 0 <= k <= n");
    // row-by-row Pascal recurrence: [m,j] = [m-1,j-1] + q^j [m-1,j]
    std::vector<QPoly> row = {QPoly::constant(1)};  // m = 0
    for (int m = 1; m <= n; ++m) {
        std::vector<QPoly> next(static_cast<size_t>(std::min(m, k)) + 1);
        next[0] = QPoly::constant(1);
        for (int j = 1; j <= std::min(m, k); ++j) {
            QPoly upper_left =
                (j - 1 < static_cast<int>(row.size())) ? row[static_cast<size_t>(j - 1)] : QPoly();
            QPoly upper = (j < static_cast<int>(row.size())) ? row[static_cast<size_t>(j)] : QPoly();
            next[static_cast<size_t>(j)] = upper_left + QPoly::monomial(1, j) * upper;
        }
        row = std::move(next);
    }
    return k < static_cast<int>(row.size()) ? row[static_cast<size_t>(k)] : QPoly();
}

QPoly q_multinomial(int n, const std::vector<int>& parts) {
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw BadArguments("q_multinomial parts must be >= 0");
        sum += p;
    }
    if (sum != n) throw BadArguments("q_multinomial parts must sum to n");
    QPoly acc = QPoly::constant(1);
    int rest = n;
    for (int p : parts) {
        acc = acc * q_binomial(rest, p);
        rest -= p;
    }
    return acc;
}

QPoly gamma_q(int k) {
    if (k < 0) throw BadArguments("gamma_q requires k >= 0");
    QPoly acc = QPoly::constant(1);
    for (int i = 0; i < k; ++i)
        acc = acc * (QPoly::monomial(1, k) - QPoly::monomial(1, i));
    return acc;
}

namespace {

// partitions of m into at most r parts, each part <= s
BigInt box_count(int m, int r, int s, std::map<std::tuple<int, int, int>, BigInt>& memo) {
    if (m == 0) return 1;
    if (m < 0 || r == 0 || s == 0) return 0;
    auto key = std::make_tuple(m, r, s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (int t = std::min(s, m); t >= 1; --t) total += box_count(m - t, r - 1, t, memo);
    memo.emplace(key, total);
    return total;
}

}  // namespace

BigInt p_box(int m, int r, int s) {
    if (m < 0 || r < 0 || s < 0) throw BadArguments("p_box requires nonnegative arguments");
    std::map<std::tuple<int, int, int>, BigInt> memo;
    return box_count(m, r, s, memo);
}

bool verify_box_identity(int r, int s) {
    if (r < 0 || s < 0) throw BadArguments("box identity requires r, s >= 0");
    std::vector<BigInt> c(static_cast<size_t>(r * s) + 1);
    std::map<std::tuple<int, int, int>, BigInt> memo;
    for (int m = 0; m <= r * s; ++m) c[static_cast<size_t>(m)] = box_count(m, r, s, memo);
    return QPoly::from_coeffs(std::move(c)) == q_binomial(r + s, s);
}

namespace {

void gen_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int t = std::min(n, max_part); t >= 1; --t) {
        cur.push_back(t);
        gen_partitions(n - t, t, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw BadArguments("partitions_of requires n >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_with_first_part(int n, int m) {
    if (m < 1 || m > n) throw BadArguments("partitions_with_first_part requires 1 <= m <= n");
    std::vector<Partition> out;
    Partition cur = {m};
    gen_partitions(n - m, m, cur, out);
    return out;
}

Partition conjugate(const Partition& p) {
    if (!is_partition(p)) throw BadArguments("conjugate requires a partition");
    if (p.empty()) return {};
    Partition out(static_cast<size_t>(p[0]), 0);
    for (int part : p)
        for (int i = 0; i < part; ++i) ++out[static_cast<size_t>(i)];
    return out;
}

int durfee_rank(const Partition& p) {
    if (!is_partition(p)) throw BadArguments("durfee_rank requires a partition");
    int d = 0;
    while (d < static_cast<int>(p.size()) && p[static_cast<size_t>(d)] >= d + 1) ++d;
    return d;
}

bool verify_durfee_identity(int m, int n) {
    if (m < 1 || m > n) throw BadArguments("durfee identity requires 1 <= m <= n");
    QPoly lhs;
    for (const Partition& lam : partitions_with_first_part(n, m)) {
        int sq = 0;
        for (int part : lam) sq += part * part;
        QPoly term = QPoly::monomial(1, sq);
        for (size_t i = 0; i < lam.size(); ++i) {
            int next = (i + 1 < lam.size()) ? lam[i + 1] : 0;
            term = term * q_binomial(lam[i], next);
        }
        lhs = lhs + term;
    }
    QPoly rhs = QPoly::monomial(1, m * m + n - m) * q_binomial(n - 1, m - 1);
    return lhs == rhs;
}

std::string partition_to_string(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition partition_parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    Partition p;
    if (s.empty()) return p;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseFailure("bad partition \"" + std::string(text) + "\": expected positive integers");
        p.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!is_partition(p))
        throw ParseFailure("bad partition \"" + std::string(text) + "\": parts must be weakly decreasing and positive");
    return p;
}

}  // namespace fqsim
