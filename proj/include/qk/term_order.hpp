#pragma once

#include "qk/monomial.hpp"

namespace qk {

// Monomial orders used by division and Groebner machinery. All are
// multiplicative strict total orders on exponent vectors.
//
//   GrLex : total degree, ties by lex (variable priority = Var ordering,
//           i.e. L < z < P < P' < Q, lower index first).
//   Lex   : pure lex with the same priority.
//   Block : elimination order P' block > P block > Q block, grlex within
//           each block. Eliminating P' first guarantees that the normal
//           form of any polynomial in P and Q alone stays free of the
//           saturation variables; comparing P before Q keeps Q = 0 leading
//           terms aligned with classical leading terms.
enum class OrderKind { GrLex, Lex, Block };

namespace detail {

// lex: scan variables in priority order; first differing exponent decides.
// With the sparse sorted representation this is a simultaneous sweep.
inline int lex_cmp(const Monomial& a, const Monomial& b) {
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            if (ia->second != 0) return ia->second > 0 ? 1 : -1;
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            if (ib->second != 0) return ib->second > 0 ? -1 : 1;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia, ++ib;
        }
    }
    return 0;
}

inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db ? 1 : -1;
    return lex_cmp(a, b);
}

// grlex on the sub-monomial of variables of one kind, computed by a
// simultaneous sweep (no temporary monomials; this comparison dominates
// Groebner running time).
inline long kind_degree(const Monomial& m, VarKind k) {
    long d = 0;
    for (const auto& [v, e] : m.entries())
        if (v.kind == k) d += e;
    return d;
}

inline int block_kind_cmp(const Monomial& a, const Monomial& b, VarKind k) {
    long da = kind_degree(a, k), db = kind_degree(b, k);
    if (da != db) return da > db ? 1 : -1;
    auto ia = a.entries().begin(), ea = a.entries().end();
    auto ib = b.entries().begin(), eb = b.entries().end();
    auto skip = [&](auto& it, auto end) {
        while (it != end && (it->first.kind != k || it->second == 0)) ++it;
    };
    for (;;) {
        skip(ia, ea);
        skip(ib, eb);
        if (ia == ea && ib == eb) return 0;
        if (ib == eb) return ia->second > 0 ? 1 : -1;
        if (ia == ea) return ib->second > 0 ? -1 : 1;
        if (ia->first < ib->first) return ia->second > 0 ? 1 : -1;
        if (ib->first < ia->first) return ib->second > 0 ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
}

} // namespace detail

class TermOrder {
  public:
    explicit TermOrder(OrderKind kind = OrderKind::GrLex) : kind_(kind) {}

    OrderKind kind() const { return kind_; }

    // returns +1 if a > b, 0 if equal, -1 if a < b
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case OrderKind::Lex: return detail::lex_cmp(a, b);
            case OrderKind::GrLex: return detail::grlex_cmp(a, b);
            case OrderKind::Block: {
                int c = detail::block_kind_cmp(a, b, VarKind::PInv);
                if (c != 0) return c;
                c = detail::block_kind_cmp(a, b, VarKind::P);
                if (c != 0) return c;
                return detail::block_kind_cmp(a, b, VarKind::Q);
            }
        }
        throw error("bad order kind");
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  private:
    OrderKind kind_;
};

} // namespace qk
