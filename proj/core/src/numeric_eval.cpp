#include "cyclotrig/numeric_eval.hpp"

#include <stdexcept>

namespace cyclotrig {

ComplexValue numeric_eval(CoordVector const& v, mpfr_prec_t precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("numeric_eval requires >= 64 bits");
    mpfr_prec_t work = precision_bits + 32;
    Factorization f = factorize(v.conductor());

    BigFloat re_acc(work), im_acc(work);
    for (auto const& [key, coeff] : v.entries()) {
        BigFloat magnitude = BigFloat::from(coeff, work);
        std::size_t b_count = 0;
        for (std::size_t i = 0; i < key.size(); ++i) {
            std::uint64_t q = f[i].value();
            if (key[i].part == Part::A) {
                magnitude = magnitude * cos_two_pi_frac(key[i].exponent, q, work);
            } else {
                magnitude = magnitude * sin_two_pi_frac(key[i].exponent, q, work);
                ++b_count;
            }
        }
        // the B parts carry a factor i each: i^b cycles 1, i, -1, -i
        switch (b_count % 4) {
            case 0: re_acc = re_acc + magnitude; break;
            case 1: im_acc = im_acc + magnitude; break;
            case 2: re_acc = re_acc - magnitude; break;
            case 3: im_acc = im_acc - magnitude; break;
        }
    }
    return {re_acc, im_acc};
}

}  // namespace cyclotrig
