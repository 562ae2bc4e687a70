#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>

#include "qk/linalg.hpp"
#include "qk/table.hpp"

namespace qk {

enum class Mode { Equivariant, Specialized, NonEquivariant };
enum class Boundary { PaperLiteral, DetTwisted };

inline std::string to_string(Mode m) {
    switch (m) {
        case Mode::Equivariant: return "equivariant";
        case Mode::Specialized: return "specialized";
        case Mode::NonEquivariant: return "nonequivariant";
    }
    throw error("bad mode");
}

inline std::string to_string(Boundary b) {
    return b == Boundary::DetTwisted ? "det" : "paper";
}

struct FlagContext {
    int rank = 1;
    Mode mode = Mode::Equivariant;
    Boundary boundary = Boundary::DetTwisted;
    std::vector<Rational> lambda_values; // size rank+1 in Specialized mode

    void validate() const {
        if (rank < 1) throw error("rank must be >= 1");
        if (mode == Mode::Specialized) {
            if (static_cast<int>(lambda_values.size()) != rank + 1)
                throw error("specialized mode needs rank+1 lambda values");
            for (std::size_t i = 0; i < lambda_values.size(); ++i) {
                if (lambda_values[i] == 0) throw error("lambda values must be nonzero");
                for (std::size_t j = i + 1; j < lambda_values.size(); ++j)
                    if (lambda_values[i] == lambda_values[j])
                        throw error("lambda values must be pairwise distinct");
            }
        }
    }

    // Lambda_i as an element of the coefficient ring, 1-based.
    Poly lambda(int i) const {
        if (i < 1 || i > rank + 1) throw error("lambda index out of range");
        switch (mode) {
            case Mode::Equivariant: return Poly::variable(lam(i));
            case Mode::Specialized: return Poly(lambda_values[i - 1]);
            case Mode::NonEquivariant: return Poly::one();
        }
        throw error("bad mode");
    }

    // e_k(Lambda_1..Lambda_{r+1})
    Poly elementary_symmetric(int k) const {
        int n = rank + 1;
        if (k < 0 || k > n) throw error("elementary symmetric index out of range");
        // dp over variables
        std::vector<Poly> e(k + 1, Poly::zero());
        e[0] = Poly::one();
        for (int i = 1; i <= n; ++i) {
            Poly li = lambda(i);
            for (int j = std::min(i, k); j >= 1; --j) e[j] += e[j - 1] * li;
        }
        return e[k];
    }

    // P_i including the boundary scalars P_0 and P_{r+1}.
    Poly p_class(int i) const {
        if (i == 0) return Poly::one();
        if (i == rank + 1)
            return boundary == Boundary::DetTwisted ? elementary_symmetric(rank + 1)
                                                    : Poly::one();
        if (i < 0 || i > rank + 1) throw error("P index out of range");
        return Poly::variable(pvar(i));
    }
};

// --- permutations -----------------------------------------------------------

using Permutation = std::vector<int>; // one-line notation, 1-based values

inline std::vector<Permutation> all_permutations(int n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline int permutation_length(const Permutation& w) {
    int len = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++len;
    return len;
}

inline std::string to_string(const Permutation& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

// element of K_T(Fl_{r+1}) in standard monomial coordinates
using KClassicalElem = std::map<Monomial, RatFunc>;

// --- the classical ring ------------------------------------------------------

// Classical equivariant K-ring of the flag manifold: standard monomial basis,
// fixed-point localization, normal form via the localization linear system.
// In nonequivariant mode the computation routes through a shadow equivariant
// ring and specializes Lambda_i -> 1 (the all-equal localization matrix is
// singular, so the system cannot be solved directly there).
class FlagRing {
  public:
    // The default module basis is the staircase of standard monomials
    // prod P_i^{a_i}, 0 <= a_i <= i. Any other free basis of P-monomials may
    // be supplied instead (localization certifies independence on first use).
    explicit FlagRing(FlagContext ctx, std::vector<Monomial> basis = {})
        : ctx_(std::move(ctx)), basis_(std::move(basis)) {
        ctx_.validate();
        int r = ctx_.rank;
        if (basis_.empty()) {
            std::vector<int> a(r, 0);
            for (;;) {
                Monomial m;
                for (int i = 0; i < r; ++i) m = m * Monomial::var(pvar(i + 1), a[i]);
                basis_.push_back(m);
                int i = 0;
                while (i < r && a[i] == i + 1) a[i++] = 0;
                if (i == r) break;
                ++a[i];
            }
        }
        std::size_t card = 1;
        for (int i = 2; i <= r + 1; ++i) card *= static_cast<std::size_t>(i);
        if (basis_.size() != card) throw error("module basis has wrong cardinality");
        TermOrder ord(OrderKind::GrLex);
        std::sort(basis_.begin(), basis_.end(),
                  [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
        fixed_points_ = all_permutations(r + 1);

        if (ctx_.mode == Mode::NonEquivariant) {
            FlagContext shadow = ctx_;
            shadow.mode = Mode::Equivariant;
            shadow.boundary = Boundary::DetTwisted;
            shadow_ = std::make_unique<FlagRing>(std::move(shadow), basis_);
        }
    }

    const FlagContext& ctx() const { return ctx_; }
    int rank() const { return ctx_.rank; }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Permutation>& fixed_points() const { return fixed_points_; }

    std::string basis_label(std::size_t k) const { return to_string(basis_[k]); }

    // weight of P_i at the fixed point w: prod_{j<=i} Lambda_{w(j)}
    Poly fixed_point_weight(int i, const Permutation& w) const {
        Poly p = Poly::one();
        for (int j = 1; j <= i; ++j) p *= ctx_.lambda(w[j - 1]);
        return p;
    }

    // restriction of a Laurent polynomial in P to the fixed point w
    RatFunc restrict_to_fixed_point(const Poly& f, const Permutation& w) const {
        std::map<Var, Poly> bind;
        for (int i = 1; i <= ctx_.rank; ++i) {
            bind[pvar(i)] = fixed_point_weight(i, w);
            bind[pinv(i)] = fixed_point_weight(i, w).inverse_unit();
        }
        return RatFunc(f.substitute(bind));
    }

    // Cleared classical relations (H_k - e_k) * prod P_i, k = 1..r+1.
    // The clearing multiplier prod P_i is recorded once; the k = r+1 relation
    // is identically zero whenever the boundary convention is consistent.
    std::vector<Poly> classical_relations() const {
        std::vector<Poly> out;
        for (int k = 1; k <= ctx_.rank + 1; ++k)
            out.push_back(h_relation_cleared(k, /*quantum=*/false));
        return out;
    }

    Poly clearing_multiplier() const {
        Poly m = Poly::one();
        for (int i = 1; i <= ctx_.rank; ++i) m *= Poly::variable(pvar(i));
        return m;
    }

    // H_k as a Laurent polynomial in P over R(T) (classical: all Toda
    // coefficients 1; quantum: (1 - Q_{i_l-1}) factors for non-unit gaps).
    Poly h_polynomial(int k, bool quantum) const {
        int n = ctx_.rank + 1;
        if (k < 1 || k > n) throw error("H_k index out of range");
        Poly sum;
        std::vector<int> subset;
        enumerate_subsets(n, k, 1, subset, [&](const std::vector<int>& I) {
            Poly term = Poly::one();
            int prev = 0;
            for (int idx : I) {
                term *= ctx_.p_class(idx);
                if (idx - 1 >= 1) term *= Poly::variable(pvar(idx - 1), -1);
                if (quantum && idx - prev >= 2) {
                    int qi = idx - 1; // a gap >= 2 forces qi >= 1; Q_0 never occurs
                    if (qi < 1 || qi > ctx_.rank) throw error("Q index out of range");
                    term *= Poly::one() - Poly::variable(qvar(qi));
                }
                prev = idx;
            }
            sum += term;
        });
        return sum;
    }

    // (H_k - e_k) * prod P_i with the stated quantum flag
    Poly h_relation_cleared(int k, bool quantum) const {
        return (h_polynomial(k, quantum) - ctx_.elementary_symmetric(k)) *
               clearing_multiplier();
    }

    // unique standard-monomial expansion with matching fixed-point restrictions
    KClassicalElem normal_form(const Poly& f) const {
        if (shadow_) {
            KClassicalElem shadow_nf = shadow_->normal_form(f);
            KClassicalElem out;
            for (auto& [m, c] : shadow_nf) {
                RatFunc s = specialize_all_lambda_to_one(c);
                if (!s.is_zero()) out[m] = s;
            }
            return out;
        }
        const LUFactor<RatFunc>& lu = localization_lu();
        std::vector<RatFunc> b;
        b.reserve(fixed_points_.size());
        for (auto& w : fixed_points_) b.push_back(restrict_to_fixed_point(f, w));
        auto x = lu.solve(b);
        KClassicalElem out;
        for (std::size_t k = 0; k < basis_.size(); ++k)
            if (!x[k].is_zero()) out[basis_[k]] = x[k];
        return out;
    }

    // polynomial expression for P_i^{-1} from prod_{|J|=i} (P_i - Lambda_J) = 0
    Poly p_inverse_polynomial(int i) const {
        if (i < 1 || i > ctx_.rank) throw error("P index out of range");
        if (shadow_) {
            Poly p = shadow_->p_inverse_polynomial(i);
            std::map<Var, Poly> bind;
            for (int j = 1; j <= ctx_.rank + 1; ++j) bind[lam(j)] = Poly::one();
            return p.substitute(bind);
        }
        int n = ctx_.rank + 1;
        Poly prod = Poly::one();
        std::vector<int> subset;
        enumerate_subsets(n, i, 1, subset, [&](const std::vector<int>& J) {
            Poly lam_j = Poly::one();
            for (int j : J) lam_j *= ctx_.lambda(j);
            prod *= Poly::variable(pvar(i)) - lam_j;
        });
        // prod = sum_m c_m P_i^m = 0 with c_0 a unit; P_i^{-1} = -c_0^{-1} sum_{m>=1} c_m P_i^{m-1}
        auto by_p = prod.collect([&](const Var& v) { return v == pvar(i); });
        Poly c0 = by_p.count(Monomial()) ? by_p[Monomial()] : Poly::zero();
        if (c0.term_count() != 1) throw error("constant coefficient is not a unit");
        Poly result;
        for (auto& [m, coeff] : by_p) {
            int e = m.exponent(pvar(i));
            if (e == 0) continue;
            result -= coeff * Poly::variable(pvar(i), e - 1);
        }
        return result * c0.inverse_unit();
    }

    // full monomial-basis table of classical structure constants
    SCTable classical_structure_constants() const {
        SCTable t;
        t.basis_kind = "monomial";
        t.rank = ctx_.rank;
        t.mode = qk::to_string(ctx_.mode);
        t.boundary = qk::to_string(ctx_.boundary);
        for (std::size_t k = 0; k < basis_.size(); ++k) t.labels.push_back(basis_label(k));
        t.basis_monomials = basis_;
        t.init(basis_.size());
        for (std::size_t u = 0; u < basis_.size(); ++u) {
            for (std::size_t v = u; v < basis_.size(); ++v) {
                Poly prod = Poly::monomial(basis_[u] * basis_[v]);
                KClassicalElem nf = normal_form(prod);
                for (auto& [m, c] : nf) {
                    std::size_t w = basis_index(m);
                    if (!c.is_polynomial())
                        throw error("classical structure constant not R(T)-integral");
                    t.entries[u][v][w][Monomial()] = c;
                }
                if (v != u) t.entries[v][u] = t.entries[u][v];
            }
        }
        return t;
    }

    std::size_t basis_index(const Monomial& m) const {
        auto it = std::find(basis_.begin(), basis_.end(), m);
        if (it == basis_.end()) throw error("monomial not in standard basis");
        return static_cast<std::size_t>(it - basis_.begin());
    }

    RatFunc specialize_all_lambda_to_one(const RatFunc& f) const {
        std::map<Var, Poly> bind;
        for (int j = 1; j <= ctx_.rank + 1; ++j) bind[lam(j)] = Poly::one();
        Poly den = f.den().substitute(bind);
        if (den.is_zero()) throw error("denominator vanishes at Lambda = 1");
        return RatFunc(f.num().substitute(bind), den);
    }

    const LUFactor<RatFunc>& localization_lu() const {
        if (!lu_) {
            std::size_t n = basis_.size();
            Matrix<RatFunc> a(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    a.at(j, k) =
                        restrict_to_fixed_point(Poly::monomial(basis_[k]), fixed_points_[j]);
            lu_ = std::make_unique<LUFactor<RatFunc>>(std::move(a));
        }
        return *lu_;
    }

    template <typename Fn>
    static void enumerate_subsets(int n, int k, int start, std::vector<int>& cur, Fn&& fn) {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())) + 1; ++i) {
            cur.push_back(i);
            enumerate_subsets(n, k, i + 1, cur, fn);
            cur.pop_back();
        }
    }

  private:
    FlagContext ctx_;
    std::vector<Monomial> basis_;
    std::vector<Permutation> fixed_points_;
    std::unique_ptr<FlagRing> shadow_; // equivariant shadow for nonequivariant mode
    mutable std::unique_ptr<LUFactor<RatFunc>> lu_;
};

} // namespace qk
