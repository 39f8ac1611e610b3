#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace geq {

/// Number of mantissa bits needed to carry at least `digits` significant
/// decimal digits, plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

/// Arbitrary-precision real value. Each Scalar carries its own mantissa
/// precision; binary operations round to the wider of the two operands.
/// All rounding is to-nearest, so identical operand sequences produce
/// bit-identical results.
class Scalar {
public:
    Scalar() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
    explicit Scalar(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Scalar(long value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    Scalar(double value, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    Scalar(const Scalar& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Scalar(Scalar&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Scalar& operator=(const Scalar& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Scalar& operator=(Scalar&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Scalar() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }

    static Scalar infinity(mpfr_prec_t prec, int sign = 1) {
        Scalar s(prec);
        mpfr_set_inf(s.v_, sign);
        return s;
    }

    /// Parse a decimal string (plain or scientific) at the given precision.
    static Scalar parse(const std::string& text, mpfr_prec_t prec);

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    /// Decimal serialization with `digits` significant figures; scientific
    /// notation outside [1e-4, 1e6].
    std::string to_decimal(int digits) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Scalar r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Scalar operator-() const {
        Scalar r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend Scalar abs(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar sqrt(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar exp(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar log(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar sinh(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_sinh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar cosh(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar asinh(const Scalar& a) {
        Scalar r(a.precision());
        mpfr_asinh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Scalar pow(const Scalar& a, const Scalar& b) {
        Scalar r(join(a, b));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    /// a * 10^e, exact scaling in the exponent.
    friend Scalar scale10(const Scalar& a, long e);

private:
    static mpfr_prec_t join(const Scalar& a, const Scalar& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }
    mpfr_t v_;
};

/// Working-precision configuration shared by a computation. Read-only after
/// construction.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits = 400) : digits_(digits) {
        if (digits < 16) throw std::invalid_argument("PrecisionContext: digits must be >= 16");
        bits_ = bits_for_digits(digits);
    }
    int digits() const { return digits_; }
    mpfr_prec_t bits() const { return bits_; }

    Scalar zero() const { return Scalar(bits_); }
    Scalar from_long(long v) const { return Scalar(v, bits_); }
    Scalar from_double(double v) const { return Scalar(v, bits_); }
    Scalar parse(const std::string& text) const { return Scalar::parse(text, bits_); }
    /// 10^e at working precision.
    Scalar pow10(long e) const { return scale10(from_long(1), e); }
    std::string format(const Scalar& s) const { return s.to_decimal(digits_); }

private:
    int digits_;
    mpfr_prec_t bits_;
};

}  // namespace geq
