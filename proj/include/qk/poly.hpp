#pragma once

#include <map>
#include <optional>

#include "qk/monomial.hpp"
#include "qk/term_order.hpp"

namespace qk {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Canonical on every operation: no zero coefficients are ever stored, so
// structural equality is ring equality.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(Rational c) {
        if (c != 0) terms_[Monomial()] = std::move(c);
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly variable(Var v, int exp = 1) { return monomial(Monomial::var(v, exp)); }
    static Poly monomial(const Monomial& m, Rational c = Rational(1)) {
        Poly p;
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw error("not a constant polynomial");
        return terms_.begin()->second;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool has_kind(VarKind k) const {
        for (auto& [m, c] : terms_)
            if (m.has_kind(k)) return true;
        return false;
    }

    bool all_exponents_nonnegative() const {
        for (auto& [m, c] : terms_)
            if (!m.all_nonnegative()) return false;
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend Poly operator*(const Poly& a, const Rational& c) {
        Poly r;
        if (c == 0) return r;
        r.terms_ = a.terms_;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }
    friend Poly operator*(const Rational& c, const Poly& a) { return a * c; }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    Poly pow(int k) const {
        if (k < 0) {
            if (terms_.size() != 1) throw error("negative power of a non-monomial");
            auto& [m, c] = *terms_.begin();
            Rational cc = 1;
            for (int i = 0; i < -k; ++i) cc *= c;
            return Poly::monomial(m.pow(k), Rational(1) / cc);
        }
        Poly r = Poly::one(), base = *this;
        int e = k;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    // multiplicative inverse, defined only for single-term polynomials
    Poly inverse_unit() const {
        if (terms_.size() != 1) throw error("inverse of a non-monomial polynomial");
        auto& [m, c] = *terms_.begin();
        return Poly::monomial(m.inverse(), Rational(1) / c);
    }

    // Simultaneous substitution. Variables bound to non-invertible images may
    // not occur with negative exponents.
    Poly substitute(const std::map<Var, Poly>& bindings) const {
        Poly out;
        for (auto& [m, c] : terms_) {
            Poly t(c);
            Monomial rest;
            for (auto& [v, e] : m.entries()) {
                auto it = bindings.find(v);
                if (it == bindings.end()) {
                    rest = rest * Monomial::var(v, e);
                    continue;
                }
                if (e >= 0) {
                    t *= it->second.pow(e);
                } else {
                    if (it->second.terms().size() != 1)
                        throw error("substitute: non-invertible image for " + var_name(v) +
                                    " occurring with negative exponent");
                    t *= it->second.inverse_unit().pow(-e);
                }
            }
            out += t * Poly::monomial(rest);
        }
        return out;
    }

    // Coefficient of Q^d; f must be polynomial in the Q alphabet.
    Poly coeff_by_qdegree(const Monomial& qd) const {
        Poly out;
        for (auto& [m, c] : terms_) {
            Monomial qpart = m.part([](const Var& v) { return v.kind == VarKind::Q; });
            if (qpart.degree_in(VarKind::Q) < 0 || !qpart.all_nonnegative())
                throw error("coeff_by_qdegree: negative Q exponent");
            if (qpart == qd)
                out.add_term(m.part([](const Var& v) { return v.kind != VarKind::Q; }), c);
        }
        return out;
    }

    // All distinct Q-monomials occurring in f.
    std::vector<Monomial> q_support() const {
        std::map<Monomial, bool> seen;
        for (auto& [m, c] : terms_)
            seen[m.part([](const Var& v) { return v.kind == VarKind::Q; })] = true;
        std::vector<Monomial> out;
        for (auto& [m, b] : seen) out.push_back(m);
        return out;
    }

    // Group terms by their sub-monomial on variables matching pred; the
    // mapped values collect the complementary parts.
    std::map<Monomial, Poly> collect(const std::function<bool(const Var&)>& pred) const {
        std::map<Monomial, Poly> groups;
        for (auto& [m, c] : terms_) {
            Monomial key = m.part(pred);
            groups[key].add_term(m / key, c);
        }
        return groups;
    }

    Poly set_q_to_zero() const {
        Poly out;
        for (auto& [m, c] : terms_)
            if (!m.has_kind(VarKind::Q)) out.add_term(m, c);
        return out;
    }

    // Leading term with respect to an order.
    std::pair<Monomial, Rational> leading_term(const TermOrder& ord) const {
        if (terms_.empty()) throw error("leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    // Per-variable minimum exponents over all terms (used to shift Laurent
    // polynomials into the polynomial range).
    std::map<Var, int> min_exponents() const {
        std::map<Var, int> mins;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::map<Var, int> present;
            for (auto& [v, e] : m.entries()) present[v] = e;
            if (first) {
                mins = present;
                first = false;
            } else {
                for (auto& [v, e] : mins) {
                    auto it = present.find(v);
                    e = std::min(e, it == present.end() ? 0 : it->second);
                }
                for (auto& [v, e] : present)
                    if (!mins.count(v)) mins[v] = std::min(0, e);
            }
        }
        std::erase_if(mins, [](auto& kv) { return kv.second == 0; });
        return mins;
    }

  private:
    TermMap terms_;
};

inline Poly pow(const Poly& p, int k) { return p.pow(k); }

} // namespace qk
