#pragma once

#include <vector>

#include "qk/linalg.hpp"

namespace qk {

// Degree vector d = (d_1..d_r), nonnegative, with implicit d_0 = d_{r+1} = 0.
using DegreeVector = std::vector<long>;

// k_d = d_1 + ... + d_r + sum_{i=1}^{r+1} (d_i - d_{i-1})^2 / 2
inline Rational kd(const DegreeVector& d) {
    long r = static_cast<long>(d.size());
    Rational lin = 0, quad = 0;
    for (long i = 0; i < r; ++i) {
        if (d[i] < 0) throw error("kd: negative degree");
        lin += d[i];
    }
    for (long i = 1; i <= r + 1; ++i) {
        long di = i <= r ? d[i - 1] : 0;
        long dprev = i >= 2 ? d[i - 2] : 0;
        long diff = di - dprev;
        quad += Rational(diff * diff);
    }
    return lin + quad / 2;
}

// Gram matrix of the quadratic form sum (d_i - d_{i-1})^2 / 2 in d_1..d_r:
// 1 on the diagonal, -1/2 on the off-diagonals.
inline Matrix<Rational> gram_matrix(int r) {
    Matrix<Rational> a(r, r);
    for (int i = 0; i < r; ++i) {
        a.at(i, i) = Rational(1);
        if (i + 1 < r) {
            a.at(i, i + 1) = make_rational(-1, 2);
            a.at(i + 1, i) = make_rational(-1, 2);
        }
    }
    return a;
}

struct PositivityCertificate {
    Matrix<Rational> gram;
    std::vector<Rational> leading_minors;
    bool positive_definite = false;
};

inline PositivityCertificate quadratic_form_positivity(int r) {
    PositivityCertificate cert;
    cert.gram = gram_matrix(r);
    cert.positive_definite = true;
    for (int k = 1; k <= r; ++k) {
        Matrix<Rational> sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = cert.gram.at(i, j);
        Rational det = determinant(sub);
        cert.leading_minors.push_back(det);
        if (det <= 0) cert.positive_definite = false;
    }
    return cert;
}

// admissibility predicate: sum_k d_{i_k} - k_d >= 0, indices a multiset in
// {1..r} given as a list with repetition.
inline bool degree_admissible(const std::vector<int>& indices, const DegreeVector& d) {
    Rational lhs = 0;
    for (int i : indices) {
        if (i < 1 || i > static_cast<int>(d.size())) throw error("index out of range");
        lhs += d[i - 1];
    }
    return lhs - kd(d) >= 0;
}

namespace detail {

// smallest integer >= sqrt(x), x >= 0 rational
inline long ceil_sqrt(const Rational& x) {
    if (x < 0) throw error("sqrt of negative");
    Integer t;
    mpz_cdiv_q(t.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Integer s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    if (s * s < t) s += 1;
    return s.get_si();
}

} // namespace detail

// Certified per-coordinate enumeration bounds for {d >= 0 : c.d - d^T A d >= 0}
// with c_j = mult_j - 1. Completing the square, the admissible set lies in the
// ball (d - A^{-1}c/2)^T A (d - A^{-1}c/2) <= c^T A^{-1} c / 4, so
// d_j <= center_j + sqrt(rho * (A^{-1})_{jj}). This makes the finiteness of
// the admissible set an exact computation rather than a trusted radius.
inline std::vector<long> enumeration_box(int r, const std::vector<int>& indices) {
    std::vector<Rational> c(r, Rational(-1));
    for (int i : indices) {
        if (i < 1 || i > r) throw error("index out of range");
        c[i - 1] += 1;
    }
    Matrix<Rational> ainv = matrix_inverse(gram_matrix(r));
    std::vector<Rational> center(r, Rational(0));
    Rational rho = 0;
    for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) center[j] += ainv.at(j, k) * c[k];
        center[j] /= 2;
        rho += c[j] * center[j];
    }
    rho /= 2; // rho = c^T A^{-1} c / 4
    if (rho < 0) rho = 0;
    std::vector<long> box(r, 0);
    for (int j = 0; j < r; ++j) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), center[j].get_num().get_mpz_t(),
                   center[j].get_den().get_mpz_t());
        long b = fl.get_si() + detail::ceil_sqrt(rho * ainv.at(j, j)) + 1;
        box[j] = std::max(0L, b);
    }
    return box;
}

// All d >= 0 with sum_k d_{i_k} - k_d >= 0, enumerated inside the certified
// box (enlarged by one so the boundary shell can be brute-checked empty).
inline std::vector<DegreeVector> admissible_degrees(int r, const std::vector<int>& indices) {
    std::vector<long> box = enumeration_box(r, indices);
    std::vector<DegreeVector> out;
    DegreeVector d(r, 0);
    for (;;) {
        if (degree_admissible(indices, d)) {
            for (int j = 0; j < r; ++j)
                if (d[j] > box[j])
                    throw error("admissible degree on enumeration boundary; box bound violated");
            out.push_back(d);
        }
        int j = 0;
        while (j < r && d[j] == box[j] + 1) d[j++] = 0;
        if (j == r) break;
        ++d[j];
    }
    return out;
}

inline bool contains(const std::vector<DegreeVector>& set, const DegreeVector& d) {
    for (auto& x : set)
        if (x == d) return true;
    return false;
}

} // namespace qk
