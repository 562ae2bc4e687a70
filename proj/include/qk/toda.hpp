#pragma once

#include "qk/flag.hpp"

namespace qk {

// One term of H_k^{q-Toda}: an index subset I = {i_1 < ... < i_k} of
// {1..r+1} together with its Novikov coefficient
// prod_l (1 - Q_{i_l-1})^{1 - delta(i_l - i_{l-1}, 1)}, i_0 = 0.
struct TodaTerm {
    std::vector<int> subset;
    Poly coeff; // product of (1 - Q_j) factors, recomputable from the subset

    static Poly coefficient_for(const std::vector<int>& I, int r) {
        Poly c = Poly::one();
        int prev = 0;
        for (int idx : I) {
            if (idx - prev >= 2) {
                int qi = idx - 1;
                if (qi < 1 || qi > r) throw error("Q index out of range");
                c *= Poly::one() - Poly::variable(qvar(qi));
            }
            prev = idx;
        }
        return c;
    }
};

struct TodaHamiltonian {
    int level = 0; // k
    int rank = 0;  // r
    std::vector<TodaTerm> terms;
};

inline TodaHamiltonian toda_hamiltonian(int k, int r) {
    if (k < 1 || k > r + 1) throw error("toda level out of range");
    TodaHamiltonian h{k, r, {}};
    std::vector<int> cur;
    FlagRing::enumerate_subsets(r + 1, k, 1, cur, [&](const std::vector<int>& I) {
        h.terms.push_back({I, TodaTerm::coefficient_for(I, r)});
    });
    return h;
}

// p_i as elements of the flag ring under A_{i,com}1 = P_i:
// p_i -> P_i P_{i-1}^{-1} with the context's boundary scalars.
inline Poly toda_substituted(const TodaHamiltonian& h, const FlagContext& ctx) {
    Poly sum;
    for (auto& t : h.terms) {
        Poly term = t.coeff;
        for (int idx : t.subset) {
            term *= ctx.p_class(idx);
            if (idx - 1 >= 1) term *= Poly::variable(pvar(idx - 1), -1);
        }
        sum += term;
    }
    return sum;
}

// Denominator-cleared quantum relation generators g_1..g_{r+1}:
// (H_k^{q-Toda}(P_i P_{i-1}^{-1}) - e_k) * prod P_i. Specializing Q -> 0
// recovers the cleared classical relations termwise.
inline std::vector<Poly> quantum_relation_generators(const FlagContext& ctx) {
    std::vector<Poly> out;
    Poly mult = Poly::one();
    for (int i = 1; i <= ctx.rank; ++i) mult *= Poly::variable(pvar(i));
    for (int k = 1; k <= ctx.rank + 1; ++k) {
        TodaHamiltonian h = toda_hamiltonian(k, ctx.rank);
        out.push_back((toda_substituted(h, ctx) - ctx.elementary_symmetric(k)) * mult);
    }
    return out;
}

// d/dt_i as a signed combination of Q_j d/dQ_j; pairs (j, sign).
inline std::map<int, std::vector<std::pair<int, int>>> t_derivative_dictionary(int r) {
    std::map<int, std::vector<std::pair<int, int>>> dict;
    for (int i = 1; i <= r + 1; ++i) {
        std::vector<std::pair<int, int>> img;
        if (i <= r) img.push_back({i, +1});
        if (i >= 2 && i - 1 <= r) img.push_back({i - 1, -1});
        dict[i] = img;
    }
    return dict;
}

// Composite Q-shift exponents of the term with subset I, after multiplying
// the shift-operator form on the left by prod_j q^{Q_j dQ_j}.
inline std::vector<int> shift_exponents_after_clearing(const std::vector<int>& I, int r) {
    auto dict = t_derivative_dictionary(r);
    std::vector<int> shift(r, 1); // the cleared prefix contributes +1 each
    for (int i : I)
        for (auto& [j, sign] : dict[i]) shift[j - 1] += sign;
    return shift;
}

// Pretty-printer reproducing the H_k notation.
inline std::string to_string(const TodaHamiltonian& h) {
    std::string out = "H_" + std::to_string(h.level) + " = ";
    bool first = true;
    for (auto& t : h.terms) {
        if (!first) out += " + ";
        first = false;
        if (!t.coeff.is_one()) out += "(" + to_string(t.coeff) + ")*";
        bool firstp = true;
        for (int idx : t.subset) {
            if (!firstp) out += "*";
            firstp = false;
            out += "p" + std::to_string(idx);
        }
    }
    return out;
}

} // namespace qk
