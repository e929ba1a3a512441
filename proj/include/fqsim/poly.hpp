#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fqsim/field.hpp"

namespace fqsim {

// Univariate polynomial over F_q.  Little-endian coefficients with no
// trailing zeros; the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;

    static Poly from_coeffs(std::vector<Fe> c);  // strips trailing zeros
    static Poly constant(Fe c);
    static Poly x();

    // degree() is -1 for the zero polynomial; that value is the
    // distinguished "minus infinity" marker used throughout.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Fe coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
    }
    Fe leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Fe>& coeffs() const { return c_; }

    bool operator==(const Poly&) const = default;

private:
    explicit Poly(std::vector<Fe> c) : c_(std::move(c)) {}
    std::vector<Fe> c_;
};

// Total order by (degree, then coefficients from the leading one down);
// for equal degree this is ascending order of the base-q encoding.
bool poly_less(const Poly& a, const Poly& b);
struct PolyOrder {
    bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, Fe c, const Poly& a);
Poly poly_pow(const Field& F, const Poly& a, unsigned k);

// Quotient and remainder with deg r < deg b.  Throws DivisionByZero
// when b is zero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
bool poly_divides(const Field& F, const Poly& a, const Poly& b);  // a | b

// Monic gcd; gcd(a, 0) = monic(a).  Throws BothZero on gcd(0, 0).
Poly poly_gcd(const Field& F, Poly a, Poly b);
Poly poly_make_monic(const Field& F, const Poly& a);

// Irreducibility by trial division against all monic polynomials of
// degree <= deg(f)/2.
bool is_irreducible(const Field& F, const Poly& f);

// All monic irreducibles of degree 1..max_degree, sorted by
// (degree, coefficient order).
std::vector<Poly> enumerate_monic_irreducibles(const Field& F, int max_degree);

// Factorization of a monic nonconstant polynomial into (irreducible,
// multiplicity) pairs sorted by factor.  The second overload reuses a
// precomputed irreducible table covering degree <= deg(f)/2.
std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f);
std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f,
                                         const std::vector<Poly>& irreducibles);

// Human-readable form, e.g. "x^2+x+1" or "2*x+1"; coefficients are the
// integer encodings of field elements.
std::string poly_to_string(const Poly& f);
// Inverse of the above; whitespace-insensitive, also accepts '-'.
// Throws ParseFailure on malformed input.
Poly poly_parse(const Field& F, std::string_view text);

struct PolyMatrix {
    int rows = 0, cols = 0;
    std::vector<Poly> a;

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Diagonal of the Smith normal form of a square polynomial matrix:
// monic or zero entries, each dividing the next (units normalized to 1).
// Pivots are chosen by minimal degree, ties broken row-major.
std::vector<Poly> smith_normal_form(const Field& F, PolyMatrix M);

}  // namespace fqsim
