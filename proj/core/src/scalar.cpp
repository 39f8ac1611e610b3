#include "geq/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace geq {

mpfr_prec_t bits_for_digits(int digits) {
    // log2(10) = 3.32192809...; 16 guard bits on top.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Scalar Scalar::parse(const std::string& text, mpfr_prec_t prec) {
    Scalar s(prec);
    if (text == "inf") return infinity(prec, 1);
    if (text == "-inf") return infinity(prec, -1);
    if (text == "nan") return Scalar();
    if (mpfr_set_str(s.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("Scalar::parse: bad decimal literal '" + text + "'");
    }
    return s;
}

Scalar scale10(const Scalar& a, long e) {
    Scalar ten(10L, a.precision());
    Scalar r(a.precision());
    mpfr_t p;
    mpfr_init2(p, a.precision());
    mpfr_pow_si(p, ten.raw(), e, MPFR_RNDN);
    mpfr_mul(r.v_, a.v_, p, MPFR_RNDN);
    mpfr_clear(p);
    return r;
}

std::string Scalar::to_decimal(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^exp10; e is the exponent of the leading digit.
    long e = static_cast<long>(exp10) - 1;

    // Trim trailing zeros (keep at least one digit).
    size_t last = mant.find_last_not_of('0');
    mant.erase(last == std::string::npos ? 1 : last + 1);

    std::string out;
    if (e >= -4 && e <= 6) {
        if (e >= 0) {
            if (static_cast<size_t>(e) + 1 >= mant.size()) {
                out = mant + std::string(e + 1 - mant.size(), '0');
            } else {
                out = mant.substr(0, e + 1) + "." + mant.substr(e + 1);
            }
        } else {
            out = "0." + std::string(-e - 1, '0') + mant;
        }
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        char buf[32];
        std::snprintf(buf, sizeof buf, "e%+03ld", e);
        out += buf;
    }
    return neg ? "-" + out : out;
}

}  // namespace geq
