#ifndef CYCLOTRIG_POWER_ORACLE_HPP
#define CYCLOTRIG_POWER_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotrig/basis.hpp"
#include "cyclotrig/numtheory.hpp"
#include "cyclotrig/rational.hpp"

namespace cyclotrig {

// Dense integer polynomial, lowest degree first, no trailing zeros.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly monomial(Int const& coeff, std::size_t degree);

    std::vector<Int> const& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

    friend IntPoly operator+(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator-(IntPoly const& a, IntPoly const& b);
    friend IntPoly operator*(IntPoly const& a, IntPoly const& b);
    friend bool operator==(IntPoly const&, IntPoly const&) = default;

    // Quotient of an exact division; throws std::domain_error when the
    // remainder is not identically zero.
    IntPoly divide_exact(IntPoly const& divisor) const;

  private:
    void trim();
    std::vector<Int> c_;
};

// The n-th cyclotomic polynomial, computed as (x^n - 1) / prod_{d|n, d<n}
// Phi_d by exact division.  Memoized; safe for concurrent use.
IntPoly cyclotomic_poly(std::uint64_t n);

// Element of Q(omega_n) in the power basis 1, omega, ..., omega^{phi(n)-1},
// always fully reduced modulo Phi_n.  Equality is coefficientwise.
class PowerPoly {
  public:
    explicit PowerPoly(std::uint64_t conductor);  // zero element
    PowerPoly(std::uint64_t conductor, std::vector<Rational> coeffs);  // reduces

    static PowerPoly one(std::uint64_t conductor);

    std::uint64_t conductor() const { return n_; }
    std::vector<Rational> const& coefficients() const { return c_; }
    bool is_zero() const;

    friend PowerPoly operator+(PowerPoly const& a, PowerPoly const& b);
    friend PowerPoly operator-(PowerPoly const& a, PowerPoly const& b);
    friend PowerPoly operator*(PowerPoly const& a, PowerPoly const& b);
    friend PowerPoly operator*(Rational const& s, PowerPoly p);
    friend bool operator==(PowerPoly const&, PowerPoly const&) = default;

  private:
    std::uint64_t n_;
    std::vector<Rational> c_;
};

// omega_n^t as a PowerPoly (the monomial x^{t mod n} reduced mod Phi_n).
PowerPoly root_power(std::uint64_t n, std::int64_t t);

// Exact power-basis representations of Re(omega_n^t) and i*Im(omega_n^t):
//   re = (omega^t + omega^{-t}) / 2,  im = (omega^t - omega^{-t}) / 2.
struct ReImPower {
    PowerPoly re;
    PowerPoly im;
};

ReImPower re_im_power(std::uint64_t n, std::int64_t t);

// The field value of a basis key, lifted to conductor n via
// omega_{q_i} = omega_n^{n/q_i} and multiplied exactly mod Phi_n.
// Memoized per (n, key); safe for concurrent use.
PowerPoly key_power(std::uint64_t n, BasisKey const& key);

// Sum of coeff * key_power over the vector's support.
PowerPoly vector_power(CoordVector const& v);

// Exact proportionality over power-basis coordinates; throws
// ZeroDenominatorVector when v == 0.
std::optional<Rational> proportionality(PowerPoly const& u, PowerPoly const& v);

}  // namespace cyclotrig

#endif
