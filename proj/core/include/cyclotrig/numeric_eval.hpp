#ifndef CYCLOTRIG_NUMERIC_EVAL_HPP
#define CYCLOTRIG_NUMERIC_EVAL_HPP

#include "cyclotrig/basis.hpp"
#include "cyclotrig/bigfloat.hpp"

namespace cyclotrig {

struct ComplexValue {
    BigFloat re;
    BigFloat im;
};

// Evaluates the vector numerically: each key is a product of
// cos(2*pi*e/q_i) factors for A atoms and i*sin(2*pi*e/q_i) for B atoms.
// Work happens at precision_bits + 32 guard bits; at desk scale the result
// is accurate to within 2^-(precision_bits - 20).
ComplexValue numeric_eval(CoordVector const& v, mpfr_prec_t precision_bits);

}  // namespace cyclotrig

#endif
