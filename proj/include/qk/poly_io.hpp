#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "qk/poly.hpp"

namespace qk {

// Text form: `3/2*L1^2*P1^-1*Q1 - 2*P2 + 1`. Terms appear in the canonical
// storage order, so printing is deterministic and parse(print(f)) == f.

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto& [m, c] : p.terms()) {
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (m.is_one()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += to_string(m);
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw error("parse error at position " + std::to_string(pos) + ": " + why);
    }

    long parse_integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    Rational parse_number() {
        long num = parse_integer();
        if (peek() == '/') {
            ++pos;
            long den = parse_integer();
            return make_rational(num, den);
        }
        return Rational(num);
    }

    Var parse_var() {
        skip_ws();
        char k = s[pos++];
        VarKind kind;
        switch (k) {
            case 'L': kind = VarKind::Lambda; break;
            case 'z': kind = VarKind::Z; break;
            case 'P': kind = VarKind::P; break;
            case 'Q': kind = VarKind::Q; break;
            default: fail(std::string("unknown variable '") + k + "'");
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected variable index");
        int idx = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            idx = idx * 10 + (s[pos++] - '0');
        if (kind == VarKind::P && pos < s.size() && s[pos] == '\'') {
            ++pos;
            kind = VarKind::PInv;
        }
        return Var{kind, idx};
    }

    Poly parse_term() {
        Poly t = Poly::one();
        bool first = true;
        for (;;) {
            char c = peek();
            if (first && (std::isdigit(static_cast<unsigned char>(c)))) {
                t = t * Poly(parse_number());
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                Var v = parse_var();
                int e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = static_cast<int>(parse_integer());
                }
                t = t * Poly::monomial(Monomial::var(v, e));
            } else {
                fail("expected coefficient or variable");
            }
            first = false;
            if (peek() == '*')
                ++pos;
            else
                break;
        }
        return t;
    }

    Poly parse_poly() {
        Poly out;
        bool neg = false;
        char c = peek();
        if (c == '-') {
            neg = true;
            ++pos;
        } else if (c == '+') {
            ++pos;
        }
        for (;;) {
            Poly t = parse_term();
            out += neg ? -t : t;
            c = peek();
            if (c == '+' || c == '-') {
                neg = c == '-';
                ++pos;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return out;
    }
};

} // namespace detail

inline Poly parse_poly(const std::string& s) { return detail::PolyParser(s).parse_poly(); }

} // namespace qk
