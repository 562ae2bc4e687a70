#include <catch2/catch_amalgamated.hpp>

#include "qk/poly_io.hpp"
#include "qk/qkring.hpp"

using namespace qk;

namespace {

QKElem elem_of(const Poly& p) {
    QKElem e;
    for (auto& [m, c] : p.terms()) {
        Monomial pm = m.part([](const Var& v) { return v.kind == VarKind::P; });
        Monomial qm = m.part([](const Var& v) { return v.kind == VarKind::Q; });
        e.add(pm, qm, RatFunc(Poly(c)));
    }
    return e;
}

} // namespace

TEST_CASE("rank 1 closed forms", "[qkring]") {
    // nonequivariant: P1 * P1 = 2 P1 - 1 + Q1
    QKRing neq(FlagContext{1, Mode::NonEquivariant, Boundary::PaperLiteral, {}});
    CHECK(neq.star_multiply(parse_poly("P1"), parse_poly("P1")) ==
          elem_of(parse_poly("2*P1 - 1 + Q1")));

    // equivariant det-twisted: (L1 + L2) P1 - L1 L2 (1 - Q1)
    QKRing eq(FlagContext{1, Mode::Equivariant, Boundary::DetTwisted, {}});
    QKElem prod = eq.star_multiply(parse_poly("P1"), parse_poly("P1"));
    QKElem expect;
    expect.add(Monomial::var(pvar(1)), Monomial(), RatFunc(parse_poly("L1 + L2")));
    expect.add(Monomial(), Monomial(), RatFunc(parse_poly("-L1*L2")));
    expect.add(Monomial(), Monomial::var(qvar(1)), RatFunc(parse_poly("L1*L2")));
    CHECK(prod == expect);
}

TEST_CASE("unit and associativity of the star product", "[qkring]") {
    QKRing ring(FlagContext{2, Mode::Equivariant, Boundary::DetTwisted, {}});
    QKElem p1 = ring.element(parse_poly("P1"));
    CHECK(ring.star_multiply(parse_poly("1"), parse_poly("P1")) == p1);
    QKElem ab_c = ring.star_multiply(
        ring.star_multiply(parse_poly("P1"), parse_poly("P1")), ring.element(parse_poly("P2")));
    QKElem a_bc = ring.star_multiply(
        p1, ring.star_multiply(parse_poly("P1"), parse_poly("P2")));
    CHECK(ab_c == a_bc);
}

TEST_CASE("distinct index products are classical", "[qkring]") {
    QKRing ring(FlagContext{2, Mode::Equivariant, Boundary::DetTwisted, {}});
    QKElem prod = ring.star_multiply(parse_poly("P1"), parse_poly("P2"));
    CHECK(prod.max_q_degree() == 0);
    // and matches the classical normal form of the localization oracle
    FlagRing classical(ring.ctx(), ring.basis());
    auto nf = classical.normal_form(parse_poly("P1*P2"));
    QKElem expect;
    for (auto& [m, c] : nf) expect.add(m, Monomial(), c);
    CHECK(prod == expect);
}

TEST_CASE("quantum table: symmetry, finiteness, degree audit", "[qkring]") {
    QKRing ring(FlagContext{2, Mode::Equivariant, Boundary::DetTwisted, {}});
    SCTable t = ring.quantum_structure_constants();
    CHECK(t.size() == 6);
    CHECK(t.graded_envelope_certified);
    for (std::size_t u = 0; u < t.size(); ++u)
        for (std::size_t v = 0; v < t.size(); ++v)
            CHECK(t.entries[u][v] == t.entries[v][u]);
    PolynomialityReport rep = verify_polynomiality(t);
    CHECK(rep.ok());
    CHECK(rep.violations.empty());
    CHECK(rep.global_max_q_degree > 0); // the deformation is nontrivial
}

TEST_CASE("Q = 0 limit of the quantum table is the classical table", "[qkring]") {
    QKRing ring(FlagContext{1, Mode::Equivariant, Boundary::DetTwisted, {}});
    SCTable qt = ring.quantum_structure_constants();
    SCTable ct = ring.classical_structure_constants();
    for (std::size_t u = 0; u < qt.size(); ++u)
        for (std::size_t v = 0; v < qt.size(); ++v) {
            std::map<std::size_t, QCoeff> limit;
            for (auto& [w, qc] : qt.entries[u][v]) {
                QCoeff q0 = qcoeff_at_q_zero(qc);
                if (!q0.empty()) limit[w] = q0;
            }
            CHECK(limit == ct.entries[u][v]);
        }
    CHECK(ring.classical_limit_matches_oracle(ring.classical_limit_structure_constants()));
}

TEST_CASE("verification flags corrupted tables", "[qkring]") {
    QKRing ring(FlagContext{1, Mode::NonEquivariant, Boundary::PaperLiteral, {}});
    SCTable t = ring.quantum_structure_constants();
    std::size_t u = ring.basis_index(Monomial::var(pvar(1)));
    std::size_t w = ring.basis_index(Monomial());
    // simulate a relation leaking an out-of-envelope Q-term into P1 * P1
    t.entries[u][u][w][Monomial::var(qvar(1), 3)] = RatFunc(1L);
    PolynomialityReport rep = verify_polynomiality(t);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.graded_bounds);
    bool named = false;
    for (auto& v : rep.violations)
        if (v.find("graded degree bound") != std::string::npos) named = true;
    CHECK(named);
}

TEST_CASE("non-integral coefficients are reported", "[qkring]") {
    QKRing ring(FlagContext{1, Mode::Equivariant, Boundary::DetTwisted, {}});
    SCTable t = ring.quantum_structure_constants();
    t.entries[0][0][0][Monomial()] +=
        RatFunc(Poly::one(), parse_poly("L1 - L2"));
    PolynomialityReport rep = verify_polynomiality(t);
    CHECK_FALSE(rep.polynomial);
}
