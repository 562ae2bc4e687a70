// Acceptance suite: one PASS/FAIL line per criterion, exit 0 iff all pass.
// An optional argv[1] names the CLI binary; the determinism criterion then
// compares byte-for-byte output of two full verification runs.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qk/poly_io.hpp"
#include "qk/schubert.hpp"

using namespace qk;

namespace {

int failures = 0;

void report(const std::string& name, bool pass) {
    std::cout << name << ": " << (pass ? "PASS" : "FAIL") << std::endl;
    if (!pass) ++failures;
}

bool q_zero_limit_equals(const SCTable& qt, const SCTable& ct) {
    if (qt.size() != ct.size()) return false;
    for (std::size_t u = 0; u < qt.size(); ++u)
        for (std::size_t v = 0; v < qt.size(); ++v) {
            std::map<std::size_t, QCoeff> limit;
            for (auto& [w, qc] : qt.entries[u][v]) {
                QCoeff q0 = qcoeff_at_q_zero(qc);
                if (!q0.empty()) limit[w] = q0;
            }
            if (limit != ct.entries[u][v]) return false;
        }
    return true;
}

// all nonempty subsets of {1..r} with pairwise distinct elements
std::vector<std::vector<int>> distinct_subsets(int r) {
    std::vector<std::vector<int>> out;
    for (int mask = 1; mask < (1 << r); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= r; ++i)
            if (mask & (1 << (i - 1))) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

// a distinct-index product is classical and its (Q-free) expansion agrees
// with the localization oracle at every fixed point
bool distinct_products_classical(const QKRing& ring) {
    const FlagRing& flag = ring.flag();
    for (auto& idx : distinct_subsets(flag.rank())) {
        Poly p = Poly::one();
        for (int i : idx) p *= Poly::variable(pvar(i));
        QKElem e = ring.element(p);
        if (e.max_q_degree() != 0) return false;
        for (auto& w : flag.fixed_points()) {
            RatFunc lhs = flag.restrict_to_fixed_point(p, w);
            RatFunc rhs(0L);
            for (auto& [m, qc] : e.coords)
                rhs += flag.restrict_to_fixed_point(Poly::monomial(m), w) *
                       qc.at(Monomial());
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    FlagContext eq1{1, Mode::Equivariant, Boundary::DetTwisted, {}};
    FlagContext eq2{2, Mode::Equivariant, Boundary::DetTwisted, {}};
    FlagContext sp3{3, Mode::Specialized, Boundary::DetTwisted,
                    {Rational(2), Rational(3), Rational(5), Rational(7)}};
    QKRing ring1(eq1), ring2(eq2);

    SCTable qt1 = ring1.quantum_structure_constants();
    SCTable qt2 = ring2.quantum_structure_constants();

    // the r = 3 ring is shared between criteria 1 and 4
    QKRing ring3(sp3);
    bool c4_r3 = distinct_products_classical(ring3);

    // 1. classical oracle equivalence at Q = 0
    {
        bool pass = q_zero_limit_equals(qt1, ring1.classical_structure_constants()) &&
                    q_zero_limit_equals(qt2, ring2.classical_structure_constants()) &&
                    !ring3.module_basis_free() &&
                    ring3.classical_limit_matches_oracle(
                        ring3.classical_limit_structure_constants());
        report("criterion 1 (classical oracle equivalence, r<=3)", pass);
    }

    // 2. finiteness: genuine Q-polynomials in both bases, r <= 2
    {
        bool pass = verify_polynomiality(qt1).polynomial &&
                    verify_polynomiality(qt2).polynomial;
        for (QKRing* ring : {&ring1, &ring2}) {
            FlagRing flat(ring->ctx(), ring->basis());
            SchubertBasis sb(flat);
            SCTable st = sb.convert(ring == &ring1 ? qt1 : qt2);
            for (std::size_t u = 0; u < st.size(); ++u)
                for (std::size_t v = 0; v < st.size(); ++v)
                    for (auto& [w, qc] : st.entries[u][v])
                        if (!qcoeff_integral(qc)) pass = false;
        }
        report("criterion 2 (finiteness in both bases, r<=2)", pass);
    }

    // 3. degree envelope: certified graded bound, single generators classical,
    //    per-entry ellipsoid audit recorded
    {
        PolynomialityReport r1 = verify_polynomiality(qt1);
        PolynomialityReport r2 = verify_polynomiality(qt2);
        bool singles = true;
        for (int i = 1; i <= 2; ++i)
            if (ring2.element(Poly::variable(pvar(i))).max_q_degree() != 0) singles = false;
        bool pass = qt1.graded_envelope_certified && qt2.graded_envelope_certified &&
                    r1.graded_bounds && r2.graded_bounds && singles;
        report("criterion 3 (degree envelope certified, r<=2)", pass);
        if (!r2.ellipsoid_exceptions.empty())
            std::cout << "  note: " << r2.ellipsoid_exceptions.size()
                      << " informational ellipsoid audit exceptions at r=2" << std::endl;
    }

    // 4. distinct-index products are classical, r <= 3
    report("criterion 4 (distinct-index classicality, r<=3)",
           distinct_products_classical(ring1) && distinct_products_classical(ring2) &&
               c4_r3);

    // 5. rank 1 closed forms
    {
        QKRing neq(FlagContext{1, Mode::NonEquivariant, Boundary::PaperLiteral, {}});
        QKElem got_n = neq.star_multiply(parse_poly("P1"), parse_poly("P1"));
        QKElem want_n;
        want_n.add(Monomial::var(pvar(1)), Monomial(), RatFunc(2L));
        want_n.add(Monomial(), Monomial(), RatFunc(-1L));
        want_n.add(Monomial(), Monomial::var(qvar(1)), RatFunc(1L));

        QKElem got_e = ring1.star_multiply(parse_poly("P1"), parse_poly("P1"));
        QKElem want_e;
        want_e.add(Monomial::var(pvar(1)), Monomial(), RatFunc(parse_poly("L1 + L2")));
        want_e.add(Monomial(), Monomial(), RatFunc(parse_poly("-L1*L2")));
        want_e.add(Monomial(), Monomial::var(qvar(1)), RatFunc(parse_poly("L1*L2")));
        report("criterion 5 (rank 1 closed forms)", got_n == want_n && got_e == want_e);
    }

    // 6. Q-degeneration of the relations, r <= 3
    {
        bool pass = true;
        for (int r = 1; r <= 3; ++r) {
            FlagContext ctx{r, Mode::Equivariant, Boundary::DetTwisted, {}};
            FlagRing flag(ctx);
            auto gens = quantum_relation_generators(ctx);
            auto rels = flag.classical_relations();
            if (gens.size() != rels.size()) pass = false;
            for (std::size_t k = 0; k < gens.size() && pass; ++k)
                if (gens[k].set_q_to_zero() != rels[k]) pass = false;
        }
        report("criterion 6 (relations degenerate at Q=0, r<=3)", pass);
    }

    // 7. bounds sanity
    {
        bool pass = kd({0}) == Rational(0) && kd({1}) == Rational(2) &&
                    kd({1, 1}) == Rational(3);
        for (int r = 1; r <= 6; ++r)
            if (!quadratic_form_positivity(r).positive_definite) pass = false;
        report("criterion 7 (bounds sanity)", pass);
    }

    // 8. Schubert basis integrity and round trip, r <= 2
    {
        bool pass = true;
        for (QKRing* ring : {&ring1, &ring2}) {
            FlagRing flat(ring->ctx(), ring->basis());
            SchubertBasis sb(flat);
            if (sb.determinant_value().is_zero()) pass = false;
            SCTable st = sb.convert(flat.classical_structure_constants());
            for (std::size_t u = 0; u < st.size(); ++u)
                for (std::size_t v = 0; v < st.size(); ++v)
                    for (auto& [w, qc] : st.entries[u][v])
                        if (!qcoeff_integral(qc)) pass = false;
            std::size_t n = sb.permutations().size();
            for (std::size_t i = 0; i < n && pass; ++i)
                for (std::size_t j = 0; j < n && pass; ++j) {
                    RatFunc s(0L);
                    for (std::size_t k = 0; k < n; ++k)
                        s += sb.matrix().at(i, k) * sb.inverse_matrix().at(k, j);
                    if (s != RatFunc(i == j ? 1L : 0L)) pass = false;
                }
        }
        report("criterion 8 (schubert basis integrity, r<=2)", pass);
    }

    // 9. determinism of verification reports
    {
        bool pass;
        if (argc > 1) {
            namespace fs = std::filesystem;
            fs::path dir = fs::temp_directory_path();
            fs::path a = dir / "qk_verify_a.json", b = dir / "qk_verify_b.json";
            std::string cmd = std::string("\"") + argv[1] +
                              "\" verify --rank 2 --out ";
            int ra = std::system((cmd + a.string()).c_str());
            int rb = std::system((cmd + b.string()).c_str());
            pass = ra == 0 && rb == 0 && slurp(a) == slurp(b) && !slurp(a).empty();
            fs::remove(a);
            fs::remove(b);
        } else {
            // in-process fallback: independent rebuilds serialize identically
            QKRing again(eq2);
            std::ostringstream sa, sb2;
            SCTable ta = ring2.quantum_structure_constants();
            SCTable tb = again.quantum_structure_constants();
            for (std::size_t u = 0; u < ta.size(); ++u)
                for (std::size_t v = 0; v < ta.size(); ++v)
                    for (auto& [w, qc] : ta.entries[u][v])
                        sa << w << to_string(qc);
            for (std::size_t u = 0; u < tb.size(); ++u)
                for (std::size_t v = 0; v < tb.size(); ++v)
                    for (auto& [w, qc] : tb.entries[u][v])
                        sb2 << w << to_string(qc);
            pass = sa.str() == sb2.str();
        }
        report("criterion 9 (determinism of verification reports)", pass);
    }

    // negative control: a corrupted relation must be caught, not absorbed
    {
        QKRing neq(FlagContext{1, Mode::NonEquivariant, Boundary::PaperLiteral, {}});
        SCTable t = neq.quantum_structure_constants();
        std::size_t u = neq.basis_index(Monomial::var(pvar(1)));
        std::size_t w = neq.basis_index(Monomial());
        t.entries[u][u][w][Monomial::var(qvar(1), 3)] = RatFunc(1L);
        PolynomialityReport rep = verify_polynomiality(t);
        bool named = false;
        for (auto& v : rep.violations)
            if (v.find("graded degree bound") != std::string::npos) named = true;
        report("negative control (corrupted relation rejected)", !rep.ok() && named);
    }

    return failures == 0 ? 0 : 1;
}
