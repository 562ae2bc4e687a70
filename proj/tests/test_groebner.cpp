#include <catch2/catch_amalgamated.hpp>

#include "qk/poly_io.hpp"
#include "qk/qkring.hpp"

using namespace qk;

TEST_CASE("generators reduce to zero", "[groebner]") {
    FlagContext ctx{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing ring(ctx);
    for (auto& g : quantum_relation_generators(ctx))
        CHECK(ring.normal_form(g).is_zero());
}

TEST_CASE("reduced basis: pairwise irreducible leading monomials", "[groebner]") {
    FlagContext ctx{2, Mode::NonEquivariant, Boundary::PaperLiteral, {}};
    QKRing ring(ctx);
    const auto& basis = ring.groebner().basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (i != j)
                CHECK_FALSE(Monomial::divides(basis[i].leading_monomial(),
                                              basis[j].leading_monomial()));
}

TEST_CASE("normal form is idempotent and linear", "[groebner]") {
    FlagContext ctx{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing ring(ctx);
    Poly f = parse_poly("P1^3*P2 - 2*P2^3 + Q1*P1");
    Poly g = parse_poly("P1^2*P2^2 + 5");
    GBPoly nf = ring.normal_form(f);
    CHECK(ring.normal_form(nf).terms() == nf.terms());

    QKElem sum = ring.element(f + g);
    QKElem parts = ring.element(f);
    for (auto& [m, qc] : ring.element(g).coords)
        for (auto& [qm, c] : qc) parts.add(m, qm, c);
    CHECK(sum == parts);
}

TEST_CASE("normal form respects multiplication classes", "[groebner]") {
    FlagContext ctx{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing ring(ctx);
    Poly f = parse_poly("P1^2 - P2");
    Poly g = parse_poly("P2^2 + P1");
    // NF(f*g) == NF(NF(f)*NF(g))
    QKElem direct = ring.element(f * g);
    QKElem staged = ring.star_multiply(ring.element(f), ring.element(g));
    CHECK(direct == staged);
}

TEST_CASE("escalier is the free module basis for small ranks", "[groebner]") {
    FlagContext c1{1, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing r1(c1);
    CHECK(r1.basis().size() == 2);
    CHECK(r1.module_basis_free());

    FlagContext c2{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing r2(c2);
    CHECK(r2.basis().size() == 6);
    CHECK(r2.module_basis_free());
    CHECK(r2.graded_envelope_certified());
}

TEST_CASE("basis index rejects foreign monomials", "[groebner]") {
    FlagContext ctx{1, Mode::Equivariant, Boundary::DetTwisted, {}};
    QKRing ring(ctx);
    CHECK_THROWS_AS(ring.basis_index(Monomial::var(pvar(1), 5)), error);
}

TEST_CASE("s-pair budget is enforced", "[groebner]") {
    FlagContext ctx{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    GroebnerOptions opt;
    opt.spair_budget = 1;
    CHECK_THROWS_AS(QKRing(ctx, opt), BudgetExceeded);
}

TEST_CASE("star inverse certificate", "[groebner]") {
    for (int r = 1; r <= 2; ++r) {
        FlagContext ctx{r, Mode::Equivariant, Boundary::DetTwisted, {}};
        QKRing ring(ctx);
        for (int i = 1; i <= r; ++i) {
            GBPoly inv = ring.star_inverse(i);
            GBPoly prod = multiply(ring.normal_form(Poly::variable(pvar(i))), inv,
                                   ring.order());
            GBPoly nf = ring.normal_form(prod);
            CHECK(nf.to_poly() == Poly::one());
        }
    }
}
