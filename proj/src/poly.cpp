#include "fqsim/poly.hpp"

#include <algorithm>
#include <cctype>

namespace fqsim {

Poly Poly::from_coeffs(std::vector<Fe> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return Poly(std::move(c));
}

Poly Poly::constant(Fe c) {
    return c == 0 ? Poly() : Poly(std::vector<Fe>{c});
}

Poly Poly::x() { return Poly(std::vector<Fe>{0, 1}); }

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<Fe> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly::from_coeffs(std::move(c));
}

Poly poly_neg(const Field& F, const Poly& a) {
    std::vector<Fe> c(a.coeffs());
    for (Fe& v : c) v = F.neg(v);
    return Poly::from_coeffs(std::move(c));
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    return poly_add(F, a, poly_neg(F, b));
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Fe> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        Fe ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return Poly::from_coeffs(std::move(c));
}

Poly poly_scale(const Field& F, Fe c, const Poly& a) {
    if (c == 0) return Poly();
    std::vector<Fe> out(a.coeffs());
    for (Fe& v : out) v = F.mul(c, v);
    return Poly::from_coeffs(std::move(out));
}

Poly poly_pow(const Field& F, const Poly& a, unsigned k) {
    Poly result = Poly::constant(1), base = a;
    while (k > 0) {
        if (k & 1) result = poly_mul(F, result, base);
        base = poly_mul(F, base, base);
        k >>= 1;
    }
    return result;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    Fe lead_inv = F.inv(b.leading());
    std::vector<Fe> rem(a.coeffs());
    std::vector<Fe> quot(a.degree() - b.degree() + 1, 0);
    for (int d = a.degree(); d >= b.degree(); --d) {
        Fe c = rem[static_cast<size_t>(d)];
        if (c == 0) continue;
        Fe qc = F.mul(c, lead_inv);
        int shift = d - b.degree();
        quot[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= b.degree(); ++i) {
            size_t idx = static_cast<size_t>(i + shift);
            rem[idx] = F.sub(rem[idx], F.mul(qc, b.coeff(i)));
        }
    }
    return {Poly::from_coeffs(std::move(quot)), Poly::from_coeffs(std::move(rem))};
}

bool poly_divides(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero();
    return poly_divmod(F, b, a).second.is_zero();
}

Poly poly_make_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(F, F.inv(a.leading()), a);
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(F, a);
}

namespace {

// Monic polynomial of degree d whose lower coefficients are the base-q
// digits of val (least-significant digit = constant term).
Poly monic_from_index(const Field& F, int d, std::uint64_t val) {
    std::vector<Fe> c(static_cast<size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) {
        c[static_cast<size_t>(i)] = static_cast<Fe>(val % F.q());
        val /= F.q();
    }
    c[static_cast<size_t>(d)] = 1;
    return Poly::from_coeffs(std::move(c));
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

bool is_irreducible(const Field& F, const Poly& f) {
    if (f.degree() < 1) return false;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::uint64_t count = ipow(F.q(), d);
        for (std::uint64_t v = 0; v < count; ++v)
            if (poly_divides(F, monic_from_index(F, d, v), f)) return false;
    }
    return true;
}

std::vector<Poly> enumerate_monic_irreducibles(const Field& F, int max_degree) {
    std::vector<Poly> out;
    for (int d = 1; d <= max_degree; ++d) {
        std::uint64_t count = ipow(F.q(), d);
        for (std::uint64_t v = 0; v < count; ++v) {
            Poly cand = monic_from_index(F, d, v);
            // divisors of degree <= d/2 are already in `out`
            bool reducible = false;
            for (const Poly& g : out) {
                if (2 * g.degree() > d) break;
                if (poly_divides(F, g, cand)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) out.push_back(std::move(cand));
        }
    }
    return out;
}

namespace {

std::vector<std::pair<Poly, int>> factor_impl(const Field& F, const Poly& f,
                                              const std::vector<Poly>* irreducibles) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroOrConstant("factor requires a nonconstant polynomial");
    if (!f.is_monic()) throw NotMonic("factor requires a monic polynomial");

    std::vector<std::pair<Poly, int>> out;
    Poly work = f;
    auto extract = [&](const Poly& g) {
        int mult = 0;
        while (true) {
            auto [quot, rem] = poly_divmod(F, work, g);
            if (!rem.is_zero()) break;
            work = std::move(quot);
            ++mult;
        }
        if (mult > 0) out.emplace_back(g, mult);
    };

    if (irreducibles != nullptr) {
        for (const Poly& g : *irreducibles) {
            if (2 * g.degree() > work.degree()) break;
            extract(g);
        }
    } else {
        // Trial division over all monic candidates in ascending order;
        // composites never divide because their factors were removed first.
        for (int d = 1; 2 * d <= work.degree(); ++d) {
            std::uint64_t count = ipow(F.q(), d);
            for (std::uint64_t v = 0; v < count && 2 * d <= work.degree(); ++v)
                extract(monic_from_index(F, d, v));
        }
    }
    if (work.degree() >= 1) out.emplace_back(work, 1);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f) {
    return factor_impl(F, f, nullptr);
}

std::vector<std::pair<Poly, int>> factor(const Field& F, const Poly& f,
                                         const std::vector<Poly>& irreducibles) {
    return factor_impl(F, f, &irreducibles);
}

std::string poly_to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int d = f.degree(); d >= 0; --d) {
        Fe c = f.coeff(d);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (d == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 'x';
            if (d > 1) {
                out += '^';
                out += std::to_string(d);
            }
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw ParseFailure("bad polynomial \"" + std::string(text) + "\": " + why);
}

}  // namespace

Poly poly_parse(const Field& F, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) parse_fail(text, "empty input");

    Poly result;
    size_t pos = 0;
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        pos = 1;
    }
    while (pos < s.size()) {
        // one term: [coeff][*][x[^exp]]
        std::uint64_t coeff = 1;
        bool saw_coeff = false;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) {
            saw_coeff = true;
            coeff = std::stoull(s.substr(start, pos - start));
            if (coeff >= F.q())
                parse_fail(text, "coefficient " + std::to_string(coeff) + " not in [0, q)");
        }
        int deg = 0;
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == '*')) {
            if (s[pos] == '*') {
                if (!saw_coeff || pos + 1 >= s.size() || s[pos + 1] != 'x')
                    parse_fail(text, "misplaced '*'");
                ++pos;
            }
            ++pos;  // consume 'x'
            deg = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                size_t es = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == es) parse_fail(text, "missing exponent after '^'");
                deg = std::stoi(s.substr(es, pos - es));
            }
        } else if (!saw_coeff) {
            parse_fail(text, "expected a term at position " + std::to_string(pos));
        }
        Fe c = static_cast<Fe>(coeff);
        if (negative) c = F.neg(c);
        std::vector<Fe> mono(static_cast<size_t>(deg) + 1, 0);
        mono[static_cast<size_t>(deg)] = c;
        result = poly_add(F, result, Poly::from_coeffs(std::move(mono)));

        if (pos == s.size()) break;
        if (s[pos] == '+') negative = false;
        else if (s[pos] == '-') negative = true;
        else parse_fail(text, std::string("unexpected character '") + s[pos] + "'");
        ++pos;
        if (pos == s.size()) parse_fail(text, "trailing operator");
    }
    return result;
}

std::vector<Poly> smith_normal_form(const Field& F, PolyMatrix M) {
    if (M.rows != M.cols) throw NotSquare("Smith normal form requires a square matrix");
    const int n = M.rows;

    auto row_sub_mul = [&](int dst, int src, const Poly& q, int from_col) {
        if (q.is_zero()) return;
        for (int c = from_col; c < n; ++c)
            M.at(dst, c) = poly_sub(F, M.at(dst, c), poly_mul(F, q, M.at(src, c)));
    };
    auto col_sub_mul = [&](int dst, int src, const Poly& q, int from_row) {
        if (q.is_zero()) return;
        for (int r = from_row; r < n; ++r)
            M.at(r, dst) = poly_sub(F, M.at(r, dst), poly_mul(F, q, M.at(r, src)));
    };

    for (int t = 0; t < n; ++t) {
        while (true) {
            // minimal-degree nonzero entry of the trailing block, row-major ties
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j) {
                    const Poly& v = M.at(i, j);
                    if (v.is_zero()) continue;
                    if (pi < 0 || v.degree() < M.at(pi, pj).degree()) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing block is zero
            if (pi != t)
                for (int c = t; c < n; ++c) std::swap(M.at(t, c), M.at(pi, c));
            if (pj != t)
                for (int r = t; r < n; ++r) std::swap(M.at(r, t), M.at(r, pj));

            bool dirty = false;
            for (int i = t + 1; i < n; ++i) {
                if (M.at(i, t).is_zero()) continue;
                auto [q, r] = poly_divmod(F, M.at(i, t), M.at(t, t));
                row_sub_mul(i, t, q, t);
                dirty = dirty || !r.is_zero();
            }
            for (int j = t + 1; j < n; ++j) {
                if (M.at(t, j).is_zero()) continue;
                auto [q, r] = poly_divmod(F, M.at(t, j), M.at(t, t));
                col_sub_mul(j, t, q, t);
                dirty = dirty || !r.is_zero();
            }
            if (dirty) continue;  // a smaller-degree entry appeared

            // pivot now alone in its row and column; enforce divisibility
            bool fixed = true;
            for (int i = t + 1; i < n && fixed; ++i)
                for (int j = t + 1; j < n && fixed; ++j)
                    if (!poly_divides(F, M.at(t, t), M.at(i, j))) {
                        // pull the offending row up; column t stays clear
                        for (int c = t; c < n; ++c)
                            M.at(t, c) = poly_add(F, M.at(t, c), M.at(i, c));
                        fixed = false;
                    }
            if (fixed) break;
        }
    }

    std::vector<Poly> diag(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) diag[static_cast<size_t>(i)] = poly_make_monic(F, M.at(i, i));
    return diag;
}

}  // namespace fqsim
