#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "diagasym/rational.hpp"

namespace diagasym {

using Prec = mpfr_prec_t;

// Arbitrary-precision real number: a thin RAII wrapper over mpfr_t.
// Every constructor takes an explicit precision; arithmetic results carry
// max(operand precisions), so precision never degrades silently.
class BigFloat {
  public:
    BigFloat() { mpfr_init2(x_, 53); mpfr_set_zero(x_, 1); }
    explicit BigFloat(Prec bits) { mpfr_init2(x_, bits); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, 53);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from(long v, Prec bits) {
        BigFloat r(bits);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from(double v, Prec bits) {
        BigFloat r(bits);
        mpfr_set_d(r.x_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Int& v, Prec bits) {
        BigFloat r(bits);
        mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from(const Rat& v, Prec bits) {
        BigFloat r(bits);
        mpfr_set_q(r.x_, v.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat pi(Prec bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    Prec precision() const { return mpfr_get_prec(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    // Scientific-notation rendering with the given number of significant
    // digits; stable across platforms, used in all reports.
    std::string to_string(int digits = 30) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    BigFloat& operator+=(const BigFloat& o) { return apply2(o, mpfr_add); }
    BigFloat& operator-=(const BigFloat& o) { return apply2(o, mpfr_sub); }
    BigFloat& operator*=(const BigFloat& o) { return apply2(o, mpfr_mul); }
    BigFloat& operator/=(const BigFloat& o) { return apply2(o, mpfr_div); }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend BigFloat operator*(BigFloat a, long b) {
        mpfr_mul_si(a.x_, a.x_, b, MPFR_RNDN);
        return a;
    }
    friend BigFloat operator/(BigFloat a, long b) {
        mpfr_div_si(a.x_, a.x_, b, MPFR_RNDN);
        return a;
    }
    friend BigFloat operator-(BigFloat a) {
        mpfr_neg(a.x_, a.x_, MPFR_RNDN);
        return a;
    }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

    friend BigFloat abs(BigFloat a) {
        mpfr_abs(a.x_, a.x_, MPFR_RNDN);
        return a;
    }
    friend BigFloat sqrt(BigFloat a) {
        mpfr_sqrt(a.x_, a.x_, MPFR_RNDN);
        return a;
    }
    friend BigFloat pow(const BigFloat& a, long e) {
        BigFloat r(a.precision());
        mpfr_pow_si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }
    friend BigFloat pow(const BigFloat& a, const BigFloat& e) {
        BigFloat r(std::max(a.precision(), e.precision()));
        mpfr_pow(r.x_, a.x_, e.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(BigFloat a) {
        mpfr_log(a.x_, a.x_, MPFR_RNDN);
        return a;
    }
    friend BigFloat log2(BigFloat a) {
        mpfr_log2(a.x_, a.x_, MPFR_RNDN);
        return a;
    }
    friend BigFloat log10(BigFloat a) {
        mpfr_log10(a.x_, a.x_, MPFR_RNDN);
        return a;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a >= b ? a : b; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a <= b ? a : b; }

  private:
    using Op2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    BigFloat& apply2(const BigFloat& o, Op2 op) {
        if (o.precision() > precision()) {
            BigFloat r(o.precision());
            op(r.x_, x_, o.x_, MPFR_RNDN);
            *this = std::move(r);
        } else {
            op(x_, x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }

    mpfr_t x_;
};

// base^(p/q) at the base's precision (base > 0 for fractional exponents)
BigFloat pow_rat(const BigFloat& base, const Rat& e);

// 2^-e such that |a - b| <= 2^-e * max(|a|, |b|); "bits of agreement".
// Returns the operand precision when a == b exactly.
long agreement_bits(const BigFloat& a, const BigFloat& b);

// Complex number with BigFloat components; only the operations needed for
// polynomial root finding and clustering.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(Prec bits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from(double r, double i, Prec bits) {
        return {BigFloat::from(r, bits), BigFloat::from(i, bits)};
    }

    Prec precision() const { return std::max(re.precision(), im.precision()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
        return {a.re * s, a.im * s};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

}  // namespace diagasym
