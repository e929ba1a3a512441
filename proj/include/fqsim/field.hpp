#pragma once

#include <cstdint>
#include <vector>

#include "fqsim/errors.hpp"

namespace fqsim {

// Canonical encoding of a field element as an integer in [0, q).
// For GF(p^e) the encoding is by base-p digits, least-significant digit
// being the constant coefficient of the residue polynomial.
using Fe = std::uint32_t;

// Arithmetic context for GF(q), q = p^e.  Immutable once built; every
// operation is a pure function of its arguments, so one Field can be
// shared across threads.
class Field {
public:
    // Builds GF(q).  For e > 1 the modulus is the lexicographically
    // smallest monic irreducible of degree e over F_p, coefficients
    // compared from the constant term upward.  Throws NotAPrimePower
    // when q is not a prime power (or q < 2).
    static Field make(std::uint64_t q);

    std::uint64_t q() const { return q_; }
    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }

    // Defining polynomial as little-endian coefficients over F_p,
    // length e+1, monic.  Empty for prime fields.
    const std::vector<Fe>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;  // throws DivisionByZero on a == 0
    Fe pow(Fe a, std::uint64_t k) const;

    std::vector<Fe> elements() const;  // 0, 1, ..., q-1

    bool operator==(const Field& o) const { return q_ == o.q_; }

private:
    Field() = default;

    std::uint64_t p_ = 0;
    std::uint64_t q_ = 0;
    unsigned e_ = 0;
    std::vector<Fe> modulus_;
};

}  // namespace fqsim
