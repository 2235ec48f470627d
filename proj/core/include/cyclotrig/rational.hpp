#ifndef CYCLOTRIG_RATIONAL_HPP
#define CYCLOTRIG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclotrig {

// Exact unbounded arithmetic.  GMP canonicalizes mpq results of its own
// operators, so a Rational built through make_rational or arithmetic is
// always in lowest terms with positive denominator.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(Int const& num, Int const& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Always "num/den", even for integers ("-2" prints as "-2/1").
inline std::string fraction_string(Rational const& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "num/den" or a bare integer string.
inline Rational rational_from_string(std::string_view s) {
    std::string buf(s);
    Rational r;
    if (r.set_str(buf, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + buf);
    r.canonicalize();
    return r;
}

}  // namespace cyclotrig

#endif
