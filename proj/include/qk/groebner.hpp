#pragma once

#include <cstdlib>
#include <deque>
#include <iostream>

#include "qk/ratfunc.hpp"
#include "qk/table.hpp"

namespace qk {

// Polynomial in the P / P' / Q variables with coefficients in Frac(R(T)),
// stored as a term list sorted descending under a fixed monomial order.
class GBPoly {
  public:
    using Term = std::pair<Monomial, RatFunc>;

    GBPoly() = default;

    static GBPoly from_terms(std::vector<Term> terms, const TermOrder& ord) {
        GBPoly p;
        std::sort(terms.begin(), terms.end(),
                  [&](const Term& a, const Term& b) { return ord.less(b.first, a.first); });
        for (auto& t : terms) {
            if (t.second.is_zero()) continue;
            if (!p.terms_.empty() && p.terms_.back().first == t.first) {
                p.terms_.back().second += t.second;
                if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
            } else {
                p.terms_.push_back(std::move(t));
            }
        }
        return p;
    }

    // split a Laurent polynomial into P/P'/Q monomials with Lambda-part
    // coefficients promoted into the field. Q stays in the ring: inverting
    // Q-polynomials would pass to the quotient over Frac(R(T)[Q]), which
    // kills Q-torsion of the module and demonstrably changes classical
    // (Q = 0) limits at rank 3. Normal-form coordinates computed here are
    // polynomial in Q by construction.
    static GBPoly from_poly(const Poly& f, const TermOrder& ord) {
        std::map<Monomial, Poly> groups = f.collect([](const Var& v) {
            return v.kind == VarKind::P || v.kind == VarKind::PInv || v.kind == VarKind::Q;
        });
        std::vector<Term> terms;
        for (auto& [m, lam_part] : groups) terms.push_back({m, RatFunc(lam_part)});
        return from_terms(std::move(terms), ord);
    }

    Poly to_poly() const {
        Poly out;
        for (auto& [m, c] : terms_) {
            if (!c.is_polynomial()) throw error("coefficient with denominator; not a polynomial");
            out += c.num() * Poly::monomial(m);
        }
        return out;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw error("leading monomial of zero");
        return terms_.front().first;
    }
    const RatFunc& leading_coeff() const {
        if (terms_.empty()) throw error("leading coefficient of zero");
        return terms_.front().second;
    }

    GBPoly scaled(const RatFunc& c) const {
        GBPoly p;
        if (c.is_zero()) return p;
        p.terms_ = terms_;
        for (auto& t : p.terms_) t.second *= c;
        return p;
    }

    GBPoly monic() const {
        if (terms_.empty()) return *this;
        return scaled(leading_coeff().inverse());
    }

    GBPoly without_leading() const {
        GBPoly p;
        p.terms_.assign(terms_.begin() + (terms_.empty() ? 0 : 1), terms_.end());
        return p;
    }

    // this - (c * m) * g, merged in order
    GBPoly subtract_multiple(const RatFunc& c, const Monomial& m, const GBPoly& g,
                             const TermOrder& ord) const {
        GBPoly out;
        out.terms_.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size()) {
                out.terms_.push_back(terms_[i++]);
                continue;
            }
            Monomial gm = g.terms_[j].first * m;
            if (i == terms_.size()) {
                RatFunc gc = -(c * g.terms_[j].second);
                if (!gc.is_zero()) out.terms_.push_back({gm, std::move(gc)});
                ++j;
                continue;
            }
            int cmp = ord.compare(terms_[i].first, gm);
            if (cmp > 0) {
                out.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                RatFunc gc = -(c * g.terms_[j].second);
                if (!gc.is_zero()) out.terms_.push_back({gm, std::move(gc)});
                ++j;
            } else {
                RatFunc merged = terms_[i].second - c * g.terms_[j].second;
                if (!merged.is_zero()) out.terms_.push_back({gm, std::move(merged)});
                ++i, ++j;
            }
        }
        return out;
    }

    friend GBPoly multiply(const GBPoly& a, const GBPoly& b, const TermOrder& ord) {
        GBPoly out;
        for (auto& [m, c] : a.terms_) out = out.subtract_multiple(-c, m, b, ord);
        return out;
    }

    friend GBPoly add(const GBPoly& a, const GBPoly& b, const TermOrder& ord) {
        return a.subtract_multiple(RatFunc(-1L), Monomial(), b, ord);
    }

    friend bool operator==(const GBPoly& a, const GBPoly& b) = default;

  private:
    std::vector<Term> terms_;
};

struct GroebnerOptions {
    long spair_budget = 2'000'000; // reductions spent on S-pairs before giving up
};

struct BudgetExceeded : error {
    BudgetExceeded() : error("Groebner S-pair budget exceeded; consider specialized mode") {}
};

class GroebnerBasis {
  public:
    GroebnerBasis(std::vector<GBPoly> generators, TermOrder ord, GroebnerOptions opt = {})
        : ord_(ord), opt_(opt) {
        std::erase_if(generators, [](const GBPoly& g) { return g.is_zero(); });
        for (auto& g : generators) basis_.push_back(g.monic());
        buchberger();
        reduce_basis();
    }

    const TermOrder& order() const { return ord_; }
    const std::vector<GBPoly>& basis() const { return basis_; }
    long spairs_processed() const { return spairs_; }

    // full normal form (head and tail reduction)
    GBPoly normal_form(const GBPoly& f) const {
        GBPoly p = f;
        std::vector<GBPoly::Term> remainder;
        while (!p.is_zero()) {
            bool reduced = false;
            const Monomial& lm = p.leading_monomial();
            for (auto& g : basis_) {
                if (Monomial::divides(g.leading_monomial(), lm)) {
                    RatFunc c = p.leading_coeff() / g.leading_coeff();
                    p = p.subtract_multiple(c, lm / g.leading_monomial(), g, ord_);
                    reduced = true;
                    break;
                }
            }
            if (!reduced) {
                remainder.push_back(p.terms().front());
                p = p.without_leading();
            }
        }
        return GBPoly::from_terms(std::move(remainder), ord_);
    }

    GBPoly normal_form(const Poly& f) const {
        return normal_form(GBPoly::from_poly(f, ord_));
    }

  private:
    TermOrder ord_;
    GroebnerOptions opt_;
    std::vector<GBPoly> basis_;
    long spairs_ = 0;

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    // Buchberger loop with the Gebauer-Moller pair update: each new basis
    // element prunes its own pair set (coprime-head and lcm-chain criteria)
    // and retires superseded old pairs, and basis elements whose leading
    // monomial the new head divides are marked redundant so they generate
    // no further pairs. Without this update the pair queue grows
    // quadratically and the computation stalls beyond rank 2.
    void buchberger() {
        std::vector<Pair> pairs;
        std::vector<GBPoly> input = std::move(basis_);
        basis_.clear();
        redundant_.clear();
        for (auto& g : input) update_pairs(pairs, std::move(g));
        while (!pairs.empty()) {
            // normal strategy: smallest lcm first
            auto best = pairs.begin();
            for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
                if (ord_.less(it->lcm, best->lcm)) best = it;
            Pair pr = *best;
            *best = std::move(pairs.back());
            pairs.pop_back();
            if (++spairs_ > opt_.spair_budget) throw BudgetExceeded();
            if (std::getenv("QK_GB_TRACE") && spairs_ % 1000 == 0)
                std::cerr << "spairs=" << spairs_ << " basis=" << basis_.size()
                          << " queue=" << pairs.size() << "\n";

            GBPoly s = spoly(basis_[pr.i], basis_[pr.j], pr.lcm);
            GBPoly h = normal_form(s);
            if (!h.is_zero()) update_pairs(pairs, h.monic());
        }
    }

    // Gebauer-Moller UPDATE: install h as a new basis element, generating
    // only the S-pairs that no criterion discharges.
    void update_pairs(std::vector<Pair>& pairs, GBPoly h) {
        const Monomial& hm = h.leading_monomial();
        std::size_t t = basis_.size();

        // candidate pairs (i, t) with their lcms
        std::vector<Pair> cand;
        for (std::size_t i = 0; i < t; ++i) {
            if (redundant_[i]) continue;
            cand.push_back({i, t, Monomial::lcm(basis_[i].leading_monomial(), hm)});
        }
        // chain criterion among the candidates: discard (i, t) when another
        // candidate's lcm properly divides its lcm; among equal lcms keep one
        std::vector<Pair> kept;
        std::vector<bool> dead(cand.size(), false);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (dead[a]) continue;
            for (std::size_t b = 0; b < cand.size(); ++b) {
                if (a == b || dead[b]) continue;
                if (Monomial::divides(cand[b].lcm, cand[a].lcm) &&
                    (cand[b].lcm != cand[a].lcm || b < a)) {
                    dead[a] = true;
                    break;
                }
            }
            if (!dead[a]) kept.push_back(cand[a]);
        }
        // retire old pairs whose lcm the new head divides, unless the new
        // head's lcm with either member equals the old lcm (chain criterion)
        std::erase_if(pairs, [&](const Pair& pr) {
            return Monomial::divides(hm, pr.lcm) &&
                   Monomial::lcm(basis_[pr.i].leading_monomial(), hm) != pr.lcm &&
                   Monomial::lcm(basis_[pr.j].leading_monomial(), hm) != pr.lcm;
        });
        // coprime-head pairs reduce to zero; drop them last so they still
        // participated in the chain pruning above
        for (auto& pr : kept)
            if (!Monomial::coprime(basis_[pr.i].leading_monomial(), hm))
                pairs.push_back(std::move(pr));
        // the new head supersedes basis elements it divides: they stay
        // available as reducers but generate no further pairs
        for (std::size_t i = 0; i < t; ++i)
            if (!redundant_[i] && Monomial::divides(hm, basis_[i].leading_monomial()))
                redundant_[i] = true;
        basis_.push_back(std::move(h));
        redundant_.push_back(false);
    }

    GBPoly spoly(const GBPoly& f, const GBPoly& g, const Monomial& l) const {
        GBPoly a = GBPoly::from_terms(
            {{l / f.leading_monomial(), f.leading_coeff().inverse()}}, ord_);
        GBPoly fa = multiply(a, f, ord_);
        return fa.subtract_multiple(g.leading_coeff().inverse(), l / g.leading_monomial(), g,
                                    ord_);
    }

    std::vector<bool> redundant_;

    void reduce_basis() {
        // minimal: drop elements whose leading monomial another divides
        std::vector<GBPoly> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j) continue;
                const Monomial &mi = basis_[i].leading_monomial(),
                               &mj = basis_[j].leading_monomial();
                if (Monomial::divides(mj, mi) && (mi != mj || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis_[i]);
        }
        basis_ = std::move(minimal);
        // reduced: tail-reduce each element against the others
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<GBPoly> others;
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            std::swap(basis_, others);
            GBPoly reduced = normal_form(others[i]);
            std::swap(basis_, others);
            basis_[i] = reduced.monic();
        }
        std::sort(basis_.begin(), basis_.end(), [&](const GBPoly& a, const GBPoly& b) {
            return ord_.less(a.leading_monomial(), b.leading_monomial());
        });
    }
};

} // namespace qk
