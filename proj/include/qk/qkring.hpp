#pragma once

#include "qk/groebner.hpp"
#include "qk/toda.hpp"

namespace qk {

// Element of QK_T(Fl_{r+1}): standard-monomial coordinates with coefficients
// polynomial in Q over Frac(R(T)). Polynomiality is what the pipeline
// certifies; it is never assumed by truncation.
struct QKElem {
    std::map<Monomial, QCoeff> coords;

    bool is_zero() const { return coords.empty(); }

    void add(const Monomial& m, const Monomial& qmono, const RatFunc& c) {
        if (c.is_zero()) return;
        qcoeff_add(coords[m], qmono, c);
        if (coords[m].empty()) coords.erase(m);
    }

    QCoeff coeff(const Monomial& m) const {
        auto it = coords.find(m);
        return it == coords.end() ? QCoeff{} : it->second;
    }

    long max_q_degree() const {
        long d = 0;
        for (auto& [m, qc] : coords) d = std::max(d, qcoeff_max_degree(qc));
        return d;
    }

    friend bool operator==(const QKElem& a, const QKElem& b) = default;
};

inline std::string to_string(const QKElem& e) {
    if (e.coords.empty()) return "0";
    std::string out;
    for (auto& [m, qc] : e.coords) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(qc) + ")";
        if (!m.is_one()) out += "*" + to_string(m);
    }
    return out;
}

// The quantum K-ring as the quotient by the q-Toda relations together with
// a single inverse-saturation relation P1' * (P_1 ... P_r) = 1. Inverting
// the product makes every P_i a unit (P_i^{-1} = P1' * prod_{j != i} P_j)
// while adding only one elimination variable; saturating each P_i with its
// own inverse variable yields the same P'-free basis elements but the
// Groebner computation is far more expensive.
//
// The Groebner machinery works over Frac(R(T)) with the Novikov variables Q
// kept in the ring. Coordinates of normal forms are therefore polynomial in
// Q by construction, and classical (Q = 0) limits of any normal-form
// identity remain valid in the classical ring: every basis element of the
// saturated ideal restricts to zero at all torus fixed points after setting
// Q = 0. (Working over the field Frac(R(T)[Q]) instead is tempting but
// wrong: at rank 3 the quotient module has Q-torsion, which that field
// kills, and the Q = 0 limits of the resulting tables fail the fixed-point
// oracle.)
class QKRing {
  public:
    explicit QKRing(FlagContext ctx, GroebnerOptions opt = {})
        : flag_(std::move(ctx)), ord_(OrderKind::Block) {
        std::vector<GBPoly> gens;
        for (auto& g : quantum_relation_generators(flag_.ctx()))
            if (!g.is_zero()) gens.push_back(GBPoly::from_poly(g, ord_));
        Poly sat = Poly::variable(pinv(1));
        for (int i = 1; i <= flag_.rank(); ++i) sat = sat * Poly::variable(pvar(i));
        gens.push_back(GBPoly::from_poly(sat - Poly::one(), ord_));
        gb_ = std::make_unique<GroebnerBasis>(std::move(gens), ord_, opt);
        build_module_basis();
    }

    const FlagRing& flag() const { return flag_; }
    const FlagContext& ctx() const { return flag_.ctx(); }
    const TermOrder& order() const { return ord_; }
    const GroebnerBasis& groebner() const { return *gb_; }

    GBPoly normal_form(const Poly& f) const { return gb_->normal_form(f); }
    GBPoly normal_form(const GBPoly& f) const { return gb_->normal_form(f); }

    // The module basis of the quantum ring: P-monomials outside the
    // leading-term ideal of the Groebner basis. The quotient is a free
    // module over R(T)[Q] on these monomials, and normal forms land on them
    // with coefficients polynomial in Q by construction. (The classical
    // staircase {a_i <= i} is *not* free over R(T)[Q] once r >= 2: expanding
    // P1^2 over it forces a 1/(1-Q_2) denominator, and no term order makes
    // it an escalier, so the quantum module basis is chosen by the order.)
    const std::vector<Monomial>& basis() const { return escalier_; }

    // True when the escalier has the classical rank (r+1)! and hence is a
    // free module basis over R(T)[Q]; false at r = 3 where the quotient has
    // Q-torsion and the escalier is a canonical generating set instead.
    bool module_basis_free() const { return module_basis_free_; }

    std::string basis_label(std::size_t k) const { return to_string(escalier_[k]); }

    std::size_t basis_index(const Monomial& m) const {
        auto it = escalier_index_.find(m);
        if (it == escalier_index_.end()) throw error("monomial not in quantum module basis");
        return it->second;
    }

    // Interpret a fully reduced normal form as coordinates over the module
    // basis. A residual saturation variable signals a bug.
    QKElem to_elem(const GBPoly& nf) const {
        QKElem e;
        for (auto& [m, c] : nf.terms()) {
            if (m.has_kind(VarKind::PInv))
                throw error("residual P' variable in normal form (saturation failure)");
            Monomial pm = m.part([](const Var& v) { return v.kind == VarKind::P; });
            Monomial qm = m.part([](const Var& v) { return v.kind == VarKind::Q; });
            basis_index(pm); // throws if outside the module basis
            e.add(pm, qm, c);
        }
        return e;
    }

    GBPoly representative(const QKElem& e) const {
        std::vector<GBPoly::Term> terms;
        for (auto& [m, qc] : e.coords)
            for (auto& [qm, c] : qc) terms.push_back({m * qm, c});
        return GBPoly::from_terms(std::move(terms), ord_);
    }

    QKElem star_multiply(const QKElem& a, const QKElem& b) const {
        GBPoly prod = multiply(representative(a), representative(b), ord_);
        return to_elem(normal_form(prod));
    }

    QKElem star_multiply(const Poly& a, const Poly& b) const {
        return to_elem(normal_form(a * b));
    }

    QKElem element(const Poly& f) const { return to_elem(normal_form(f)); }

    // Coordinates of a normal form at Q = 0: the Q-degree-zero part of the
    // (polynomial in Q) coordinates. Every normal-form identity specializes
    // to a valid classical identity, so this is the classical product.
    QKElem classical_limit(const GBPoly& nf) const {
        QKElem full = to_elem(nf);
        QKElem e;
        for (auto& [m, qc] : full.coords) {
            auto it = qc.find(Monomial());
            if (it != qc.end()) e.add(m, Monomial(), it->second);
        }
        return e;
    }

    // Q = 0 limit of the quantum table, entry by entry.
    SCTable classical_limit_structure_constants() const {
        SCTable t = table_skeleton();
        const std::size_t n = escalier_.size();
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u; v < n; ++v) {
                QKElem e =
                    classical_limit(normal_form(Poly::monomial(escalier_[u] * escalier_[v])));
                for (auto& [m, qc] : e.coords) t.entries[u][v][basis_index(m)] = qc;
                if (v != u) t.entries[v][u] = t.entries[u][v];
            }
        }
        return t;
    }

    // Normal form of the inverse of P_i, expressed through the saturation
    // variable as P1' * prod_{j != i} P_j. In general this is supported on
    // monomials involving P' (the star-inverse of a generator is a genuine
    // Q-series over the standard basis); the defining certificate is
    // P_i * result = 1.
    GBPoly star_inverse(int i) const {
        if (i < 1 || i > flag_.rank()) throw error("index out of range");
        Poly f = Poly::variable(pinv(1));
        for (int j = 1; j <= flag_.rank(); ++j)
            if (j != i) f = f * Poly::variable(pvar(j));
        return normal_form(f);
    }

    // Runtime certificate for the graded degree envelope: if every
    // non-leading term of every Groebner basis element satisfies
    // deg_P + deg_Q <= deg_P(leading monomial), then each reduction step
    // weakly decreases deg_P + deg_Q, so every table entry obeys
    // |d|_1 <= deg(u*v) - deg(w). Only P/Q-pure elements matter: the
    // elimination order confines reduction of P/Q-polynomials to them.
    bool graded_envelope_certified() const {
        auto pq_degree = [](const Monomial& m) {
            return m.degree_in(VarKind::P) + m.degree_in(VarKind::Q);
        };
        for (auto& g : gb_->basis()) {
            bool pure = true;
            for (auto& [m, c] : g.terms())
                if (m.has_kind(VarKind::PInv)) pure = false;
            if (!pure) continue;
            long lead = g.leading_monomial().degree_in(VarKind::P);
            for (auto& [m, c] : g.terms())
                if (pq_degree(m) > lead) return false;
        }
        return true;
    }

    // index multiset of a product of two standard monomials
    std::vector<int> index_multiset(const Monomial& u, const Monomial& v) const {
        std::vector<int> out;
        Monomial prod = u * v;
        for (auto& [var, e] : prod.entries()) {
            if (var.kind != VarKind::P) throw error("not a P-monomial");
            for (int k = 0; k < e; ++k) out.push_back(var.index);
        }
        return out;
    }

    // Classical structure constants over the same module basis as the
    // quantum table, for the table-to-table Q = 0 comparison. Only defined
    // when the escalier is a free basis (r <= 2): at r = 3 its classical
    // image is linearly dependent and the comparison is ill-posed; use
    // classical_limit_matches_oracle there instead.
    SCTable classical_structure_constants() const {
        if (!module_basis_free())
            throw error("escalier is not a free module basis; "
                        "use the fixed-point oracle check instead");
        return FlagRing(ctx(), escalier_).classical_structure_constants();
    }

    // Basis-free classical oracle check of a Q = 0 limit table: each entry
    // must restrict at every torus fixed point to the product of the
    // restrictions of its factors. This certifies the classical limit even
    // when the basis images at Q = 0 are linearly dependent, where a
    // table-against-table comparison is ill-posed.
    bool classical_limit_matches_oracle(const SCTable& t) const {
        const auto& fps = flag_.fixed_points();
        const std::size_t n = escalier_.size();
        if (t.size() != n) throw error("table size does not match module basis");
        std::vector<std::vector<RatFunc>> loc(n, std::vector<RatFunc>(fps.size()));
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t wi = 0; wi < fps.size(); ++wi)
                loc[k][wi] =
                    flag_.restrict_to_fixed_point(Poly::monomial(escalier_[k]), fps[wi]);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u; v < n; ++v) {
                for (std::size_t wi = 0; wi < fps.size(); ++wi) {
                    RatFunc lhs = loc[u][wi] * loc[v][wi];
                    RatFunc rhs;
                    for (auto& [w, qc] : t.entries[u][v]) {
                        for (auto& [qm, c] : qc) {
                            if (!qm.is_one())
                                throw error("classical limit table has a Q-dependent entry");
                            rhs += c * loc[w][wi];
                        }
                    }
                    if (lhs != rhs) return false;
                }
            }
        }
        return true;
    }

    SCTable quantum_structure_constants() const {
        const auto& basis = escalier_;
        SCTable t = table_skeleton();
        t.graded_envelope_certified = graded_envelope_certified();
        const std::size_t n = basis.size();
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u; v < n; ++v) {
                QKElem e = to_elem(normal_form(Poly::monomial(basis[u] * basis[v])));
                long maxdeg = 0;
                for (auto& [m, qc] : e.coords) {
                    t.entries[u][v][basis_index(m)] = qc;
                    maxdeg = std::max(maxdeg, qcoeff_max_degree(qc));
                }
                t.max_q_degree[u][v] = maxdeg;
                t.admissible[u][v] = admissible_degrees(flag_.rank(), index_multiset(basis[u], basis[v]));
                if (v != u) {
                    t.entries[v][u] = t.entries[u][v];
                    t.max_q_degree[v][u] = maxdeg;
                    t.admissible[v][u] = t.admissible[u][v];
                }
            }
        }
        return t;
    }

  private:
    SCTable table_skeleton() const {
        SCTable t;
        t.basis_kind = "monomial";
        t.rank = flag_.rank();
        t.mode = qk::to_string(ctx().mode);
        t.boundary = qk::to_string(ctx().boundary);
        for (std::size_t k = 0; k < escalier_.size(); ++k) t.labels.push_back(basis_label(k));
        t.basis_monomials = escalier_;
        t.init(escalier_.size());
        return t;
    }

    void build_module_basis() {
        const int n = flag_.rank();
        std::vector<Monomial> plms;
        for (auto& g : gb_->basis()) {
            const Monomial& lm = g.leading_monomial();
            if (lm.has_kind(VarKind::P) && !lm.has_kind(VarKind::PInv) && !lm.has_kind(VarKind::Q))
                plms.push_back(lm);
        }
        // a pure power of every P_i must lead some basis element, otherwise
        // the escalier is not finite over the Novikov base
        std::vector<int> cap(static_cast<std::size_t>(n) + 1, 0);
        for (auto& lm : plms)
            if (lm.entries().size() == 1)
                cap[static_cast<std::size_t>(lm.entries()[0].first.index)] = lm.entries()[0].second;
        for (int i = 1; i <= n; ++i)
            if (cap[static_cast<std::size_t>(i)] == 0)
                throw error("leading-term ideal contains no pure power of P" + std::to_string(i));
        std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
        std::function<void(int)> walk = [&](int i) {
            if (i > n) {
                Monomial m;
                for (int k = 1; k <= n; ++k)
                    if (exps[static_cast<std::size_t>(k)] > 0)
                        m = m * Monomial::var(pvar(k), exps[static_cast<std::size_t>(k)]);
                for (auto& lm : plms)
                    if (Monomial::divides(lm, m)) return;
                escalier_.push_back(m);
                return;
            }
            for (exps[static_cast<std::size_t>(i)] = 0;
                 exps[static_cast<std::size_t>(i)] < cap[static_cast<std::size_t>(i)];
                 ++exps[static_cast<std::size_t>(i)])
                walk(i + 1);
            exps[static_cast<std::size_t>(i)] = 0;
        };
        walk(1);
        TermOrder grlex(OrderKind::GrLex);
        std::sort(escalier_.begin(), escalier_.end(),
                  [&](const Monomial& x, const Monomial& y) { return grlex.less(x, y); });
        // When the count matches the classical rank (r+1)! the escalier is a
        // free R(T)[Q]-module basis (true for r <= 2). At r = 3 mixed P-Q
        // leading monomials appear, the module acquires Q-torsion, and the
        // escalier is a canonical generating set of normal-form support
        // rather than a free basis; coordinates stay canonical either way.
        module_basis_free_ = escalier_.size() == flag_.basis().size();
        for (std::size_t k = 0; k < escalier_.size(); ++k) escalier_index_[escalier_[k]] = k;
    }

    FlagRing flag_;
    TermOrder ord_;
    std::unique_ptr<GroebnerBasis> gb_;
    std::vector<Monomial> escalier_;
    std::map<Monomial, std::size_t> escalier_index_;
    bool module_basis_free_ = false;
};

// Audit report for the finiteness certificate. Three hard checks:
//   polynomial          every coefficient lies in R(T)[Q] (no denominators)
//   graded_bounds       |d|_1 <= deg(u*v) - deg(w) for every occurring d,
//                       backed by the table's runtime Groebner certificate
//   distinct_classical  products with pairwise-distinct generator indices
//                       have Q-degree support {0}
// The ellipsoid admissible set is recorded per entry for audit; containment
// over the presentation's module basis is not implied for repeated indices
// (the relations themselves leave it), so exceptions are informational.
struct PolynomialityReport {
    bool polynomial = true;
    bool graded_bounds = true;
    bool distinct_classical = true;
    long global_max_q_degree = 0;
    std::vector<std::string> violations;
    std::vector<std::string> ellipsoid_exceptions;

    bool ok() const { return polynomial && graded_bounds && distinct_classical; }
};

inline PolynomialityReport verify_polynomiality(const SCTable& t) {
    PolynomialityReport rep;
    bool monomial = !t.basis_monomials.empty();
    for (std::size_t u = 0; u < t.size(); ++u) {
        for (std::size_t v = 0; v < t.size(); ++v) {
            bool distinct = false;
            long deg_uv = 0;
            if (monomial) {
                Monomial prod = t.basis_monomials[u] * t.basis_monomials[v];
                deg_uv = prod.total_degree();
                distinct = true;
                for (auto& [var, e] : prod.entries())
                    if (e > 1) distinct = false;
            }
            for (auto& [w, qc] : t.entries[u][v]) {
                std::string where =
                    "(" + t.labels[u] + ", " + t.labels[v] + ") -> " + t.labels[w];
                if (!qcoeff_integral(qc)) {
                    rep.polynomial = false;
                    rep.violations.push_back("non-integral coefficient at " + where);
                }
                for (auto& [qm, c] : qc) {
                    long deg = qm.degree_in(VarKind::Q);
                    rep.global_max_q_degree = std::max(rep.global_max_q_degree, deg);
                    if (!monomial) continue;
                    std::string at = where + ", Q-degree " + to_string(Poly::monomial(qm));
                    if (!t.graded_envelope_certified ||
                        deg + t.basis_monomials[w].total_degree() > deg_uv) {
                        rep.graded_bounds = false;
                        rep.violations.push_back("graded degree bound violation at " + at);
                    }
                    if (distinct && deg > 0) {
                        rep.distinct_classical = false;
                        rep.violations.push_back("quantum term in distinct-index product at " + at);
                    }
                    DegreeVector d = q_monomial_to_degree(qm, t.rank);
                    if (!contains(t.admissible[u][v], d))
                        rep.ellipsoid_exceptions.push_back("outside ellipsoid set at " + at);
                }
            }
        }
    }
    return rep;
}

} // namespace qk
