#include "fqsim/field.hpp"

#include <algorithm>

namespace fqsim {

namespace {

// ---- polynomial helpers over the prime field F_p (digit vectors) ----
// Little-endian coefficient vectors, not normalized unless stated.

int digits_degree(const std::vector<Fe>& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return -1;
}

// Remainder of a modulo the monic polynomial m, coefficients mod p.
std::vector<Fe> digits_mod(std::vector<Fe> a, const std::vector<Fe>& m, std::uint64_t p) {
    int dm = digits_degree(m);
    for (int da = digits_degree(a); da >= dm; da = digits_degree(a)) {
        Fe lead = a[da];  // m is monic, so the quotient digit is just lead
        int shift = da - dm;
        for (int i = 0; i <= dm; ++i) {
            std::uint64_t v = a[i + shift] + p - static_cast<Fe>((std::uint64_t)lead * m[i] % p);
            a[i + shift] = static_cast<Fe>(v % p);
        }
    }
    return a;
}

bool digits_is_irreducible(const std::vector<Fe>& f, std::uint64_t p) {
    int d = digits_degree(f);
    if (d < 1) return false;
    // trial division by every monic polynomial of degree 1 .. d/2
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<Fe> g(dd + 1, 0);
            std::uint64_t v = t;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<Fe>(v % p);
                v /= p;
            }
            g[dd] = 1;
            if (digits_degree(digits_mod(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::make(std::uint64_t q) {
    if (q < 2) throw NotAPrimePower("q must be a prime power >= 2, got " + std::to_string(q));
    if (q > (1ull << 31))
        throw NotAPrimePower("q too large for the element encoding: " + std::to_string(q));
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself is prime
    unsigned e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw NotAPrimePower("q is not a prime power: " + std::to_string(q));

    Field F;
    F.p_ = p;
    F.q_ = q;
    F.e_ = e;
    if (e > 1) {
        // Scan monic degree-e candidates in lexicographic order of
        // (c_0, c_1, ..., c_{e-1}); the first irreducible wins.
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<Fe> cand(e + 1, 0);
            std::uint64_t v = t;
            for (int i = static_cast<int>(e) - 1; i >= 0; --i) {
                cand[i] = static_cast<Fe>(v % p);
                v /= p;
            }
            cand[e] = 1;
            if (digits_is_irreducible(cand, p)) {
                F.modulus_ = std::move(cand);
                break;
            }
        }
    }
    return F;
}

Fe Field::add(Fe a, Fe b) const {
    if (e_ == 1) return static_cast<Fe>(((std::uint64_t)a + b) % p_);
    Fe out = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        Fe da = static_cast<Fe>(a % p_), db = static_cast<Fe>(b % p_);
        out += static_cast<Fe>(((std::uint64_t)da + db) % p_) * scale;
        a /= static_cast<Fe>(p_);
        b /= static_cast<Fe>(p_);
        scale *= static_cast<Fe>(p_);
    }
    return out;
}

Fe Field::neg(Fe a) const {
    if (e_ == 1) return a == 0 ? 0 : static_cast<Fe>(p_ - a);
    Fe out = 0, scale = 1;
    for (unsigned i = 0; i < e_; ++i) {
        Fe d = static_cast<Fe>(a % p_);
        out += (d == 0 ? 0 : static_cast<Fe>(p_ - d)) * scale;
        a /= static_cast<Fe>(p_);
        scale *= static_cast<Fe>(p_);
    }
    return out;
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul(Fe a, Fe b) const {
    if (e_ == 1) return static_cast<Fe>((std::uint64_t)a * b % p_);
    // decode, convolve, reduce mod the defining polynomial
    std::vector<Fe> da(e_), db(e_);
    for (unsigned i = 0; i < e_; ++i) {
        da[i] = static_cast<Fe>(a % p_);
        a /= static_cast<Fe>(p_);
        db[i] = static_cast<Fe>(b % p_);
        b /= static_cast<Fe>(p_);
    }
    std::vector<Fe> prod(2 * e_ - 1, 0);
    for (unsigned i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = static_cast<Fe>((prod[i + j] + (std::uint64_t)da[i] * db[j]) % p_);
    }
    prod = digits_mod(std::move(prod), modulus_, p_);
    Fe out = 0;
    for (unsigned i = e_; i-- > 0;)
        out = static_cast<Fe>(out * p_ + (i < prod.size() ? prod[i] : 0));
    return out;
}

Fe Field::pow(Fe a, std::uint64_t k) const {
    Fe result = 1, base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

Fe Field::inv(Fe a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    return pow(a, q_ - 2);
}

std::vector<Fe> Field::elements() const {
    std::vector<Fe> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<Fe>(i);
    return out;
}

}  // namespace fqsim
