#pragma once

#include "qk/gcd.hpp"
#include "qk/poly_io.hpp"

namespace qk {

// Element of the fraction field of the Laurent polynomial ring. Canonical
// form: the denominator is a genuine polynomial, integer-primitive, positive
// leading coefficient (grlex), not divisible by any variable, and never a
// monomial other than 1 (monomial units are absorbed into the numerator,
// which may be Laurent). Structural equality is then field equality.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    explicit RatFunc(Rational c) : num_(Poly(std::move(c))), den_(Poly::one()) {}
    explicit RatFunc(long c) : num_(Poly(c)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw error("rational function with zero denominator");
        reduce();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Rational constant_value() const {
        if (!is_constant()) throw error("rational function is not constant");
        return num_.constant_value();
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.is_constant() && b.is_constant())
            return RatFunc(a.num_.constant_value() + b.num_.constant_value());
        if (a.den_.is_one() && b.den_.is_one()) return from_num(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return -b;
        if (a.is_constant() && b.is_constant())
            return RatFunc(a.num_.constant_value() - b.num_.constant_value());
        if (a.den_.is_one() && b.den_.is_one()) return from_num(a.num_ - b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.is_constant() && b.is_constant())
            return RatFunc(a.num_.constant_value() * b.num_.constant_value());
        if (a.den_.is_one() && b.den_.is_one()) return from_num(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw error("division by zero rational function");
        if (a.is_zero()) return RatFunc();
        if (a.is_constant() && b.is_constant())
            return RatFunc(a.num_.constant_value() / b.num_.constant_value());
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc inverse() const {
        if (is_zero()) throw error("inverse of zero");
        if (is_constant()) return RatFunc(Rational(1) / num_.constant_value());
        return RatFunc(den_, num_);
    }

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  private:
    Poly num_; // zero polynomial means the zero element
    Poly den_ = Poly::one();

    // already-canonical result of an operation between polynomials
    static RatFunc from_num(Poly num) {
        RatFunc r;
        r.num_ = std::move(num);
        return r;
    }

    void reduce() {
        if (num_.is_zero() || den_.is_one()) {
            den_ = Poly::one();
            return;
        }
        // absorb a monomial-unit denominator directly
        if (den_.is_single_term()) {
            num_ = num_ * den_.inverse_unit();
            den_ = Poly::one();
            return;
        }
        // shift the denominator into the polynomial range; compensate in num
        auto mins = den_.min_exponents();
        if (!mins.empty()) {
            Monomial shift;
            for (auto& [v, e] : mins) shift = shift * Monomial::var(v, e);
            Poly unit = Poly::monomial(shift);
            den_ = den_ * unit.inverse_unit();
            num_ = num_ * unit.inverse_unit();
        }
        // split numerator as unit * polynomial for the gcd
        auto nmins = num_.min_exponents();
        Monomial nshift;
        for (auto& [v, e] : nmins) nshift = nshift * Monomial::var(v, e);
        Poly nunit = Poly::monomial(nshift);
        Poly npoly = num_ * nunit.inverse_unit();

        Poly g = poly_gcd(npoly, den_);
        if (!g.is_one()) {
            npoly = exact_divide(npoly, g);
            den_ = exact_divide(den_, g);
        }
        num_ = npoly * nunit;
        if (den_.is_single_term()) {
            num_ = num_ * den_.inverse_unit();
            den_ = Poly::one();
            return;
        }
        Rational c = rational_content(den_);
        den_ = den_ * (Rational(1) / c);
        num_ = num_ * (Rational(1) / c);
    }
};

inline std::string to_string(const RatFunc& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace qk
