#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "fqsim/errors.hpp"

namespace fqsim {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_weight(const Partition& p);
// lambda_i with 1-based index; 0 beyond the last part.
int partition_part(const Partition& p, int i);

// Polynomial in q with arbitrary-precision integer coefficients,
// little-endian, no trailing zeros.
class QPoly {
public:
    QPoly() = default;

    static QPoly from_coeffs(std::vector<BigInt> c);
    static QPoly constant(BigInt c);
    static QPoly monomial(BigInt c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : BigInt(0);
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    bool operator==(const QPoly&) const = default;

    BigInt evaluate(const BigInt& q) const;
    // "1 + q + 2*q^2", ascending powers
    std::string to_string() const;

private:
    std::vector<BigInt> c_;
};

QPoly q_int(int n);                                   // 1 + q + ... + q^(n-1)
QPoly q_factorial(int n);
QPoly q_binomial(int n, int k);                       // Pascal-type recurrence
QPoly q_multinomial(int n, const std::vector<int>& parts);
QPoly gamma_q(int k);                                 // prod_{i<k} (q^k - q^i)

// Number of partitions of m inside an r x s box, by direct enumeration
// (independent of the q-binomial recurrence).
BigInt p_box(int m, int r, int s);
// sum_m p_box(m, r, s) q^m == q_binomial(r+s, s)
bool verify_box_identity(int r, int s);

// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);
// Partitions of n whose first part is exactly m (1 <= m <= n).
std::vector<Partition> partitions_with_first_part(int n, int m);
Partition conjugate(const Partition& p);
int durfee_rank(const Partition& p);

// sum over lambda |- n with lambda_1 = m of
//   q^(sum lambda_i^2) prod_i qbinom(lambda_i, lambda_{i+1})
// equals q^(m^2 + n - m) * qbinom(n-1, m-1).
bool verify_durfee_identity(int m, int n);

std::string partition_to_string(const Partition& p);  // "2,1,1"; "" for empty
Partition partition_parse(std::string_view text);     // throws ParseFailure

}  // namespace fqsim
