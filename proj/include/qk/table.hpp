#pragma once

#include <map>
#include <string>
#include <vector>

#include "qk/bounds.hpp"
#include "qk/poly_io.hpp"
#include "qk/ratfunc.hpp"

namespace qk {

// Coefficient of one basis element in a (quantum) product: a polynomial in
// the Novikov variables with coefficients in Frac(R(T)). Keys are Q-monomials.
using QCoeff = std::map<Monomial, RatFunc>;

inline void qcoeff_add(QCoeff& a, const Monomial& qmono, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.try_emplace(qmono, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

inline bool qcoeff_is_zero(const QCoeff& a) { return a.empty(); }

inline long qcoeff_max_degree(const QCoeff& a) {
    long d = 0;
    for (auto& [m, c] : a) d = std::max(d, m.degree_in(VarKind::Q));
    return d;
}

inline QCoeff qcoeff_at_q_zero(const QCoeff& a) {
    QCoeff out;
    auto it = a.find(Monomial());
    if (it != a.end()) out[Monomial()] = it->second;
    return out;
}

// Every coefficient must be R(T)-integral (denominator 1 in canonical form).
inline bool qcoeff_integral(const QCoeff& a) {
    for (auto& [m, c] : a)
        if (!c.is_polynomial()) return false;
    return true;
}

inline std::string to_string(const QCoeff& a) {
    if (a.empty()) return "0";
    bool all_poly = true;
    for (auto& [m, c] : a)
        if (!c.is_polynomial()) all_poly = false;
    if (all_poly) {
        Poly p;
        for (auto& [m, c] : a) p += c.num() * Poly::monomial(m);
        return to_string(p);
    }
    std::string out;
    for (auto& [m, c] : a) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (!m.is_one()) out += "*" + to_string(m);
    }
    return out;
}

inline DegreeVector q_monomial_to_degree(const Monomial& m, int r) {
    DegreeVector d(r, 0);
    for (auto& [v, e] : m.entries()) {
        if (v.kind != VarKind::Q || v.index < 1 || v.index > r)
            throw error("not a Q-monomial");
        d[v.index - 1] = e;
    }
    return d;
}

// Basis-indexed table of products with the polynomiality certificate and
// degree-bound audit data carried alongside.
struct SCTable {
    std::string basis_kind;          // "monomial" | "schubert"
    int rank = 0;
    std::string mode;                // "equivariant" | "specialized" | "nonequivariant"
    std::string boundary;            // "det" | "paper"
    std::vector<std::string> labels; // basis element labels, fixed order

    // P-monomials indexing the table rows/columns; for the schubert basis
    // these are the monomials whose index multisets drive the audit (the
    // conversion is Q-free, so the envelope data transports unchanged).
    std::vector<Monomial> basis_monomials;

    // entries[u][v] : basis index -> coefficient
    std::vector<std::vector<std::map<std::size_t, QCoeff>>> entries;

    // audit, populated for quantum tables
    std::vector<std::vector<long>> max_q_degree;
    std::vector<std::vector<std::vector<DegreeVector>>> admissible; // per entry

    // true when every non-leading Groebner term satisfies
    // deg_P + deg_Q <= deg_P(leading monomial), which proves
    // |d|_1 <= deg(u*v) - deg(w) for every entry of this table
    bool graded_envelope_certified = false;

    std::size_t size() const { return labels.size(); }

    void init(std::size_t n) {
        entries.assign(n, std::vector<std::map<std::size_t, QCoeff>>(n));
        max_q_degree.assign(n, std::vector<long>(n, 0));
        admissible.assign(n, std::vector<std::vector<DegreeVector>>(n));
    }
};

} // namespace qk
