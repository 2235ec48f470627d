#ifndef CYCLOTRIG_BIGFLOAT_HPP
#define CYCLOTRIG_BIGFLOAT_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "cyclotrig/rational.hpp"

namespace cyclotrig {

// Thin RAII wrapper over mpfr_t.  Every value carries its own precision;
// binary operations compute at the larger of the two operand precisions,
// rounding to nearest.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t precision = 64);
    BigFloat(BigFloat const& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(BigFloat const& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from(double x, mpfr_prec_t precision);
    static BigFloat from(Rational const& x, mpfr_prec_t precision);
    static BigFloat from(Int const& x, mpfr_prec_t precision);
    static BigFloat from_string(std::string const& s, mpfr_prec_t precision);
    static BigFloat pow2(long exponent, mpfr_prec_t precision);  // 2^exponent
    static BigFloat pi(mpfr_prec_t precision);

    mpfr_prec_t precision() const;
    double to_double() const;
    // Decimal string with enough digits to round-trip at this precision.
    std::string to_string() const;

    int sign() const;  // -1, 0, +1
    bool is_zero() const { return sign() == 0; }

    friend BigFloat operator+(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator-(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator*(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator/(BigFloat const& a, BigFloat const& b);
    friend BigFloat operator-(BigFloat const& a);

    friend bool operator<(BigFloat const& a, BigFloat const& b);
    friend bool operator>(BigFloat const& a, BigFloat const& b);
    friend bool operator==(BigFloat const& a, BigFloat const& b);
    friend bool operator!=(BigFloat const& a, BigFloat const& b) { return !(a == b); }
    friend bool operator<=(BigFloat const& a, BigFloat const& b) { return !(a > b); }
    friend bool operator>=(BigFloat const& a, BigFloat const& b) { return !(a < b); }

    friend BigFloat abs(BigFloat const& a);
    friend BigFloat sin(BigFloat const& a);
    friend BigFloat cos(BigFloat const& a);
    friend BigFloat tan(BigFloat const& a);
    friend BigFloat round_to_integer(BigFloat const& a);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

// cos(2*pi*e/q) and sin(2*pi*e/q), computed from an exactly represented
// rational multiple of pi.
BigFloat cos_two_pi_frac(std::uint64_t e, std::uint64_t q, mpfr_prec_t precision);
BigFloat sin_two_pi_frac(std::uint64_t e, std::uint64_t q, mpfr_prec_t precision);

}  // namespace cyclotrig

#endif
