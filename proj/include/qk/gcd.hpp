#pragma once

#include <optional>

#include "qk/poly.hpp"

namespace qk {

// Exact multivariate polynomial gcd and division over the rationals, the
// amount of factorization needed to keep rational functions canonical.
// All inputs here have nonnegative exponents; Laurent callers shift first.

namespace detail {

inline const TermOrder& div_order() {
    static TermOrder ord(OrderKind::GrLex);
    return ord;
}

} // namespace detail

// Exact division test: returns a/b when b divides a, nullopt otherwise.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error("division by zero polynomial");
    if (a.is_zero()) return Poly::zero();
    if (b.is_constant()) return a * (Rational(1) / b.constant_value());
    const TermOrder& ord = detail::div_order();
    auto [lmb, lcb] = b.leading_term(ord);
    Poly q, r = a;
    while (!r.is_zero()) {
        auto [lmr, lcr] = r.leading_term(ord);
        if (!Monomial::divides(lmb, lmr)) return std::nullopt;
        Poly t = Poly::monomial(lmr / lmb, lcr / lcb);
        q += t;
        r -= t * b;
    }
    return q;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
    auto q = try_divide(a, b);
    if (!q) throw error("inexact polynomial division");
    return *q;
}

// content over Q: gcd of numerators / lcm of denominators, signed so that
// dividing by it leaves an integer-primitive poly with positive leading
// coefficient (grlex).
inline Rational rational_content(const Poly& p) {
    if (p.is_zero()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    auto [lm, lc] = p.leading_term(detail::div_order());
    if (lc < 0) content = -content;
    return content;
}

inline Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / rational_content(p));
}

namespace detail {

// Highest variable present (by Var ordering); nullopt for constants.
inline std::optional<Var> main_variable(const Poly& a, const Poly& b) {
    std::optional<Var> best;
    for (const Poly* p : {&a, &b})
        for (auto& [m, c] : p->terms())
            for (auto& [v, e] : m.entries())
                if (!best || *best < v) best = v;
    return best;
}

// View p as a univariate polynomial in v with Poly coefficients.
inline std::map<int, Poly> univariate_view(const Poly& p, Var v) {
    std::map<int, Poly> coeffs;
    for (auto& [m, c] : p.terms())
        coeffs[m.exponent(v)].add_term(m / Monomial::var(v, m.exponent(v)), c);
    std::erase_if(coeffs, [](auto& kv) { return kv.second.is_zero(); });
    return coeffs;
}

inline Poly from_univariate(const std::map<int, Poly>& coeffs, Var v) {
    Poly out;
    for (auto& [e, c] : coeffs) out += c * Poly::monomial(Monomial::var(v, e));
    return out;
}

inline int degree_in(const Poly& p, Var v) {
    int d = 0;
    for (auto& [m, c] : p.terms()) d = std::max(d, m.exponent(v));
    return d;
}

inline Poly leading_coeff_in(const Poly& p, Var v) {
    int d = degree_in(p, v);
    Poly out;
    for (auto& [m, c] : p.terms())
        if (m.exponent(v) == d) out.add_term(m / Monomial::var(v, d), c);
    return out;
}

// Pseudo-remainder of f by g with respect to v.
inline Poly pseudo_remainder(Poly f, const Poly& g, Var v) {
    int dg = degree_in(g, v);
    Poly lcg = leading_coeff_in(g, v);
    int df = degree_in(f, v);
    while (!f.is_zero() && (df = degree_in(f, v)) >= dg) {
        Poly lcf = leading_coeff_in(f, v);
        f = f * lcg - g * (lcf * Poly::monomial(Monomial::var(v, df - dg)));
    }
    return f;
}

} // namespace detail

inline Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// gcd of the Poly-coefficients of a univariate view (the content w.r.t. v).
inline Poly content_in(const Poly& p, Var v) {
    Poly g;
    for (auto& [e, c] : univariate_view(p, v)) g = poly_gcd(g, c);
    return g;
}

} // namespace detail

// gcd over Q[x...], normalized integer-primitive with positive leading
// coefficient. Primitive PRS.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return Poly::one();
    auto v = detail::main_variable(a, b);
    if (!v) return Poly::one();
    if (detail::degree_in(a, *v) == 0 || detail::degree_in(b, *v) == 0) {
        // main variable missing from one side: gcd divides its content
        const Poly& flat = detail::degree_in(a, *v) == 0 ? a : b;
        const Poly& tall = detail::degree_in(a, *v) == 0 ? b : a;
        return poly_gcd(flat, detail::content_in(tall, *v));
    }
    Poly ca = detail::content_in(a, *v), cb = detail::content_in(b, *v);
    Poly ppa = exact_divide(a, ca), ppb = exact_divide(b, cb);
    Poly cont_gcd = poly_gcd(ca, cb);

    Poly r0 = ppa, r1 = ppb;
    if (detail::degree_in(r0, *v) < detail::degree_in(r1, *v)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Poly r = detail::pseudo_remainder(r0, r1, *v);
        if (!r.is_zero()) {
            Poly c = detail::content_in(r, *v);
            r = exact_divide(r, c);
            r = primitive_part(r);
        }
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    Poly pp = detail::degree_in(r0, *v) == 0 ? Poly::one() : primitive_part(r0);
    return primitive_part(cont_gcd * pp);
}

} // namespace qk
