#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qk/rational.hpp"

namespace qk {

// Variable alphabets:
//   Lambda : torus characters L1..L{r+1}            (Laurent allowed)
//   Z      : K-theoretic Chern roots z1..z{r+1}     (Laurent allowed)
//   P      : tautological line bundle classes P1..Pr (Laurent allowed)
//   PInv   : saturation variables P1'..Pr' standing for inverses
//   Q      : Novikov variables Q1..Qr               (never negative)
enum class VarKind : std::uint8_t { Lambda = 0, Z = 1, P = 2, PInv = 3, Q = 4 };

struct Var {
    VarKind kind;
    int index; // 1-based

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var lam(int i) { return {VarKind::Lambda, i}; }
inline Var zvar(int i) { return {VarKind::Z, i}; }
inline Var pvar(int i) { return {VarKind::P, i}; }
inline Var pinv(int i) { return {VarKind::PInv, i}; }
inline Var qvar(int i) { return {VarKind::Q, i}; }

inline std::string var_name(const Var& v) {
    switch (v.kind) {
        case VarKind::Lambda: return "L" + std::to_string(v.index);
        case VarKind::Z: return "z" + std::to_string(v.index);
        case VarKind::P: return "P" + std::to_string(v.index);
        case VarKind::PInv: return "P" + std::to_string(v.index) + "'";
        case VarKind::Q: return "Q" + std::to_string(v.index);
    }
    throw error("bad variable kind");
}

} // namespace qk
