#pragma once

#include "qk/qkring.hpp"

namespace qk {

// swap z_i and z_{i+1}
inline Poly swap_z(const Poly& f, int i) {
    std::map<Var, Poly> bind;
    bind[zvar(i)] = Poly::variable(zvar(i + 1));
    bind[zvar(i + 1)] = Poly::variable(zvar(i));
    return f.substitute(bind);
}

// Isobaric divided difference pi_i f = (f - (z_{i+1}/z_i) s_i f) / (1 - z_{i+1}/z_i),
// computed as (z_i f - z_{i+1} s_i f) / (z_i - z_{i+1}); the division is exact
// on any input (the numerator is s_i-antisymmetrizable), and inexactness
// signals a bug.
inline Poly demazure_operator(int i, const Poly& f) {
    Poly sf = swap_z(f, i);
    Poly num = Poly::variable(zvar(i)) * f - Poly::variable(zvar(i + 1)) * sf;
    Poly den = Poly::variable(zvar(i)) - Poly::variable(zvar(i + 1));
    // clear negative exponents of the numerator before dividing
    auto mins = num.min_exponents();
    Monomial shift;
    for (auto& [v, e] : mins) shift = shift * Monomial::var(v, e);
    Poly unit = Poly::monomial(shift);
    auto q = try_divide(num * unit.inverse_unit(), den);
    if (!q) throw error("demazure operator: inexact division");
    return *q * unit;
}

// Double Grothendieck polynomials in the Chern-root variables z_1..z_{r+1},
// generated downward from the top class prod_{i+j <= r+1} (1 - Lambda_j / z_i).
class GrothendieckFamily {
  public:
    explicit GrothendieckFamily(FlagContext ctx) : ctx_(std::move(ctx)) {}

    const FlagContext& ctx() const { return ctx_; }

    Poly top_class() const {
        int n = ctx_.rank + 1;
        Poly g = Poly::one();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; i + j <= n; ++j)
                g *= Poly::one() - ctx_.lambda(j) * Poly::variable(zvar(i), -1);
        return g;
    }

    // polynomial for w; pick_last selects a different ascent at each step so
    // reduced-word independence can be exercised
    Poly polynomial(const Permutation& w, bool pick_last = false) const {
        auto& cache = pick_last ? cache_last_ : cache_first_;
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        int n = static_cast<int>(w.size());
        Poly out;
        if (permutation_length(w) == n * (n - 1) / 2) {
            out = top_class();
        } else {
            int chosen = -1;
            for (int i = 1; i < n; ++i) {
                if (w[i - 1] < w[i]) { // ascent: l(w s_i) > l(w)
                    chosen = i;
                    if (!pick_last) break;
                }
            }
            Permutation ws = w;
            std::swap(ws[chosen - 1], ws[chosen]);
            out = demazure_operator(chosen, polynomial(ws, pick_last));
        }
        cache[w] = out;
        return out;
    }

  private:
    FlagContext ctx_;
    mutable std::map<Permutation, Poly> cache_first_;
    mutable std::map<Permutation, Poly> cache_last_;
};

inline void qcoeff_add_scaled(QCoeff& acc, const QCoeff& qc, const RatFunc& s) {
    if (s.is_zero()) return;
    for (auto& [m, c] : qc) qcoeff_add(acc, m, c * s);
}

// The Schubert-class basis {sigma_w} realized by Grothendieck polynomials,
// with the change of basis to and from the standard monomial basis.
class SchubertBasis {
  public:
    explicit SchubertBasis(const FlagRing& ring) : ring_(ring), family_(shadow_ctx(ring)) {
        int n = ring.rank() + 1;
        perms_ = all_permutations(n);
        std::sort(perms_.begin(), perms_.end(), [](const Permutation& a, const Permutation& b) {
            int la = permutation_length(a), lb = permutation_length(b);
            return la != lb ? la < lb : a < b;
        });
        build_matrix();
    }

    const std::vector<Permutation>& permutations() const { return perms_; }
    const Matrix<RatFunc>& matrix() const { return m_; }
    const Matrix<RatFunc>& inverse_matrix() const { return minv_; }
    RatFunc determinant_value() const { return det_; }

    Poly grothendieck(const Permutation& w, bool pick_last = false) const {
        return family_.polynomial(w, pick_last);
    }

    // sigma_w in standard monomial coordinates (row w of the matrix)
    KClassicalElem coordinates(std::size_t w) const {
        KClassicalElem out;
        for (std::size_t k = 0; k < ring_.basis().size(); ++k)
            if (!m_.at(w, k).is_zero()) out[ring_.basis()[k]] = m_.at(w, k);
        return out;
    }

    // Convert a monomial-basis table (classical or quantum) to the Schubert
    // basis; audit fields for degree bounds are monomial-basis notions and
    // are left empty here.
    SCTable convert(const SCTable& t) const {
        std::size_t n = perms_.size();
        if (t.basis_kind != "monomial" || t.size() != n)
            throw error("convert expects a monomial table of matching rank");
        SCTable out;
        out.basis_kind = "schubert";
        out.rank = t.rank;
        out.mode = t.mode;
        out.boundary = t.boundary;
        for (auto& w : perms_) out.labels.push_back(qk::to_string(w));
        out.init(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u; v < n; ++v) {
                // product coordinates over the monomial basis
                std::vector<QCoeff> x(n);
                for (std::size_t a = 0; a < n; ++a) {
                    if (m_.at(u, a).is_zero()) continue;
                    for (std::size_t b = 0; b < n; ++b) {
                        RatFunc s = m_.at(u, a) * m_.at(v, b);
                        if (s.is_zero()) continue;
                        for (auto& [w, qc] : t.entries[a][b]) qcoeff_add_scaled(x[w], qc, s);
                    }
                }
                // back to Schubert coordinates: c = x * M^{-1}
                long maxdeg = 0;
                for (std::size_t w = 0; w < n; ++w) {
                    QCoeff c;
                    for (std::size_t mcol = 0; mcol < n; ++mcol)
                        qcoeff_add_scaled(c, x[mcol], minv_.at(mcol, w));
                    if (!c.empty()) {
                        out.entries[u][v][w] = c;
                        maxdeg = std::max(maxdeg, qcoeff_max_degree(c));
                    }
                }
                out.max_q_degree[u][v] = maxdeg;
                if (v != u) {
                    out.entries[v][u] = out.entries[u][v];
                    out.max_q_degree[v][u] = maxdeg;
                }
            }
        }
        return out;
    }

  private:
    const FlagRing& ring_;
    GrothendieckFamily family_;
    std::vector<Permutation> perms_;
    Matrix<RatFunc> m_, minv_;
    RatFunc det_;

    // Grothendieck polynomials are built equivariantly even when the ambient
    // ring is nonequivariant; coordinates are specialized afterwards.
    static FlagContext shadow_ctx(const FlagRing& ring) {
        FlagContext c = ring.ctx();
        if (c.mode == Mode::NonEquivariant) c.mode = Mode::Equivariant;
        return c;
    }

    void build_matrix() {
        std::size_t n = perms_.size();
        bool specialize = ring_.ctx().mode == Mode::NonEquivariant;
        // evaluate G_w at each fixed point and solve the localization system
        FlagContext eq_ctx = family_.ctx();
        eq_ctx.boundary = Boundary::DetTwisted;
        FlagRing eq_ring(eq_ctx);
        const auto& fps = eq_ring.fixed_points();
        const LUFactor<RatFunc>& lu = eq_ring.localization_lu();
        m_ = Matrix<RatFunc>(n, n);
        for (std::size_t wi = 0; wi < n; ++wi) {
            Poly g = family_.polynomial(perms_[wi]);
            std::vector<RatFunc> b;
            b.reserve(n);
            for (auto& fp : fps) {
                std::map<Var, Poly> bind;
                for (int i = 1; i <= ring_.rank() + 1; ++i)
                    bind[zvar(i)] = eq_ctx.lambda(fp[i - 1]);
                b.push_back(RatFunc(g.substitute(bind)));
            }
            auto coords = lu.solve(b);
            for (std::size_t k = 0; k < n; ++k) {
                RatFunc c = coords[k];
                if (specialize) c = ring_.specialize_all_lambda_to_one(c);
                m_.at(wi, k) = c;
            }
        }
        LUFactor<RatFunc> mfac(m_); // throws on singular: sigma_w not a basis
        det_ = mfac.determinant();
        minv_ = matrix_inverse(m_);
    }
};

} // namespace qk
