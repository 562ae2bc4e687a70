#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "qk/variable.hpp"

namespace qk {

// Exponent vector, sparse and canonical: sorted by variable, no zero
// exponents. Exponents may be negative (Laurent) except in the Q alphabet,
// which callers keep nonnegative.
class Monomial {
  public:
    using Entry = std::pair<Var, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end());
        normalize();
    }
    static Monomial var(Var v, int exp = 1) {
        Monomial m;
        if (exp != 0) m.entries_.push_back({v, exp});
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    int exponent(Var v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, const Var& w) { return e.first < w; });
        return (it != entries_.end() && it->first == v) ? it->second : 0;
    }

    long total_degree() const {
        long d = 0;
        for (auto& [v, e] : entries_) d += e;
        return d;
    }

    long degree_in(VarKind k) const {
        long d = 0;
        for (auto& [v, e] : entries_)
            if (v.kind == k) d += e;
        return d;
    }

    bool has_kind(VarKind k) const {
        for (auto& [v, e] : entries_)
            if (v.kind == k) return true;
        return false;
    }

    bool all_nonnegative() const {
        for (auto& [v, e] : entries_)
            if (e < 0) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) { return merge(a, b, +1); }
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return merge(a, b, -1); }

    Monomial inverse() const {
        Monomial m = *this;
        for (auto& [v, e] : m.entries_) e = -e;
        return m;
    }

    Monomial pow(int k) const {
        Monomial m = *this;
        if (k == 0) return Monomial();
        for (auto& [v, e] : m.entries_) e *= k;
        return m;
    }

    // a | b in the polynomial (nonnegative) sense
    static bool divides(const Monomial& a, const Monomial& b) {
        for (auto& [v, e] : a.entries_)
            if (b.exponent(v) < e) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (auto& [v, e] : b.entries_) {
            int ea = m.exponent(v);
            if (e > ea) m.set(v, e);
        }
        return m;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (auto& [v, e] : a.entries_)
            if (b.exponent(v) != 0) return false;
        return true;
    }

    // Sub-monomial on variables matching pred.
    Monomial part(const std::function<bool(const Var&)>& pred) const {
        Monomial m;
        for (auto& [v, e] : entries_)
            if (pred(v)) m.entries_.push_back({v, e});
        return m;
    }

    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        return a.entries_ <=> b.entries_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

  private:
    std::vector<Entry> entries_;

    void set(Var v, int e) {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& en, const Var& w) { return en.first < w; });
        if (it != entries_.end() && it->first == v) {
            if (e == 0)
                entries_.erase(it);
            else
                it->second = e;
        } else if (e != 0) {
            entries_.insert(it, {v, e});
        }
    }

    void normalize() {
        std::vector<Entry> out;
        for (auto& [v, e] : entries_) {
            if (!out.empty() && out.back().first == v)
                out.back().second += e;
            else
                out.push_back({v, e});
        }
        std::erase_if(out, [](const Entry& e) { return e.second == 0; });
        entries_ = std::move(out);
    }

    static Monomial merge(const Monomial& a, const Monomial& b, int sign) {
        Monomial m;
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() || ib != b.entries_.end()) {
            if (ib == b.entries_.end() || (ia != a.entries_.end() && ia->first < ib->first)) {
                m.entries_.push_back(*ia++);
            } else if (ia == a.entries_.end() || ib->first < ia->first) {
                m.entries_.push_back({ib->first, sign * ib->second});
                ++ib;
            } else {
                int e = ia->second + sign * ib->second;
                if (e != 0) m.entries_.push_back({ia->first, e});
                ++ia, ++ib;
            }
        }
        return m;
    }
};

} // namespace qk
