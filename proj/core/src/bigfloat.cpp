#include "cyclotrig/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclotrig {

BigFloat::BigFloat(mpfr_prec_t precision) {
    mpfr_init2(v_, precision);
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(BigFloat const& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(BigFloat const& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from(double x, mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_set_d(out.v_, x, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from(Rational const& x, mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_set_q(out.v_, x.get_mpq_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from(Int const& x, mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_set_z(out.v_, x.get_mpz_t(), MPFR_RNDN);
    return out;
}

BigFloat BigFloat::from_string(std::string const& s, mpfr_prec_t precision) {
    BigFloat out(precision);
    if (mpfr_set_str(out.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("cannot parse big float: " + s);
    return out;
}

BigFloat BigFloat::pow2(long exponent, mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_set_ui_2exp(out.v_, 1, exponent, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
    BigFloat out(precision);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

mpfr_prec_t BigFloat::precision() const { return mpfr_get_prec(v_); }

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string() const {
    if (mpfr_zero_p(v_)) return "0";
    // n_digits = 0 asks mpfr for a round-trippable digit count.
    mpfr_exp_t exp = 0;
    char* digits = mpfr_get_str(nullptr, &exp, 10, 0, v_, MPFR_RNDN);
    std::string mant(digits);
    mpfr_free_str(digits);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // digits are 0.mant * 10^exp; render as mantissa with explicit exponent
    std::string out = sign + "0." + mant + "e" + std::to_string(exp);
    return out;
}

int BigFloat::sign() const { return mpfr_sgn(v_); }

namespace {
mpfr_prec_t joint_prec(BigFloat const& a, BigFloat const& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(BigFloat const& a, BigFloat const& b) {
    BigFloat out(joint_prec(a, b));
    mpfr_add(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator-(BigFloat const& a, BigFloat const& b) {
    BigFloat out(joint_prec(a, b));
    mpfr_sub(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator*(BigFloat const& a, BigFloat const& b) {
    BigFloat out(joint_prec(a, b));
    mpfr_mul(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator/(BigFloat const& a, BigFloat const& b) {
    BigFloat out(joint_prec(a, b));
    mpfr_div(out.v_, a.v_, b.v_, MPFR_RNDN);
    return out;
}

BigFloat operator-(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_neg(out.v_, a.v_, MPFR_RNDN);
    return out;
}

bool operator<(BigFloat const& a, BigFloat const& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
bool operator>(BigFloat const& a, BigFloat const& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
bool operator==(BigFloat const& a, BigFloat const& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

BigFloat abs(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_abs(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat sin(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_sin(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat cos(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_cos(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat tan(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_tan(out.v_, a.v_, MPFR_RNDN);
    return out;
}

BigFloat round_to_integer(BigFloat const& a) {
    BigFloat out(a.precision());
    mpfr_rint(out.v_, a.v_, MPFR_RNDN);
    return out;
}

namespace {
BigFloat two_pi_frac(std::uint64_t e, std::uint64_t q, mpfr_prec_t precision) {
    if (q == 0) throw std::invalid_argument("zero denominator angle");
    BigFloat angle = BigFloat::pi(precision);
    mpfr_mul_ui(angle.raw(), angle.raw(), 2, MPFR_RNDN);
    mpfr_mul_ui(angle.raw(), angle.raw(), static_cast<unsigned long>(e % q), MPFR_RNDN);
    mpfr_div_ui(angle.raw(), angle.raw(), static_cast<unsigned long>(q), MPFR_RNDN);
    return angle;
}
}  // namespace

BigFloat cos_two_pi_frac(std::uint64_t e, std::uint64_t q, mpfr_prec_t precision) {
    return cos(two_pi_frac(e, q, precision));
}

BigFloat sin_two_pi_frac(std::uint64_t e, std::uint64_t q, mpfr_prec_t precision) {
    return sin(two_pi_frac(e, q, precision));
}

}  // namespace cyclotrig
