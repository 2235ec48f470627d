#ifndef CYCLOTRIG_BASIS_HPP
#define CYCLOTRIG_BASIS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclotrig/numtheory.hpp"
#include "cyclotrig/rational.hpp"

namespace cyclotrig {

struct ZeroDenominatorVector : std::domain_error {
    using std::domain_error::domain_error;
};

// One basis element of a prime-power field Q(omega_q):
//   (A, e) stands for Re(omega_q^e), (B, e) for i*Im(omega_q^e).
// Valid exponent ranges:
//   q odd prime power:  1 <= e <= phi(q)/2 for both parts
//   q = 2^k, k >= 2:    A with 0 <= e < 2^{k-2}, B with 0 < e <= 2^{k-2}
//   q in {1, 2}:        only (A, 0), the constant 1
enum class Part : std::uint8_t { A = 0, B = 1 };

struct BasisAtom {
    Part part = Part::A;
    std::uint32_t exponent = 0;
    friend auto operator<=>(BasisAtom const&, BasisAtom const&) = default;
};

// One atom per prime-power factor of the conductor, factors in increasing
// prime order.  The represented number is real iff the number of B parts is
// even, purely imaginary iff it is odd.
using BasisKey = std::vector<BasisAtom>;

std::size_t key_parity(BasisKey const& key);  // count of B parts, mod 2
bool key_valid(BasisKey const& key, Factorization const& f);

// "A4.0*B3.1" (part, prime power, exponent); the empty key prints as "1".
std::string key_to_string(BasisKey const& key, Factorization const& f);
BasisKey key_from_string(std::string_view s, Factorization const& f);

// Sparse exact coordinate vector over the basis keys of D_n.  Zero
// coefficients are never stored, so structural equality is equality.
class CoordVector {
  public:
    CoordVector() = default;
    explicit CoordVector(std::uint64_t conductor) : n_(conductor) {}

    std::uint64_t conductor() const { return n_; }
    std::map<BasisKey, Rational> const& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    Rational coefficient(BasisKey const& key) const;
    void add(BasisKey const& key, Rational const& coeff);

    CoordVector& operator+=(CoordVector const& other);
    CoordVector& operator*=(Rational const& scale);
    CoordVector operator-() const;
    friend CoordVector operator*(Rational const& scale, CoordVector v) {
        v *= scale;
        return v;
    }

    friend bool operator==(CoordVector const&, CoordVector const&) = default;

  private:
    std::uint64_t n_ = 1;
    std::map<BasisKey, Rational> entries_;
};

// The full basis D_n of Q(omega_n): every product of one atom per
// prime-power factor.  |keys| == phi(n).
struct BasisDescriptor {
    std::uint64_t n = 1;
    Factorization factorization;
    std::vector<BasisKey> keys;  // canonical order: factorwise, A before B,
                                 // exponent ascending, leftmost factor major
};

BasisDescriptor build_basis(std::uint64_t n);

// Memoized variant; recomputation is pure, the cache is an optimization.
// Safe for concurrent use.
std::shared_ptr<BasisDescriptor const> cached_basis(std::uint64_t n);

// Exact local decomposition of omega_q^s over the atoms of D_q:
//   Re(omega_q^s)   = sum re[a] * value(a)
//   i*Im(omega_q^s) = sum im[a] * value(a)
// re is supported on A atoms, im on B atoms; coefficients are integers
// (the s = 0 case of an odd q contributes -2's, everything else +-1).
using AtomMap = std::map<BasisAtom, std::int64_t>;

struct LocalDecomposition {
    AtomMap re;
    AtomMap im;
};

LocalDecomposition decompose_prime_power(std::uint64_t q, std::int64_t s);  // q odd prime power
LocalDecomposition decompose_two_power(std::uint64_t q, std::int64_t s);    // q a power of two

// Exact decomposition of omega_n^t over D_n:
//   re represents Re(omega_n^t), im represents i*Im(omega_n^t).
struct RootDecomposition {
    CoordVector re;
    CoordVector im;
};

RootDecomposition decompose_root(std::uint64_t n, std::int64_t t);

// Exact proportionality test: the lambda with u == lambda*v, if one exists.
// Throws ZeroDenominatorVector when v == 0.
std::optional<Rational> proportionality(CoordVector const& u, CoordVector const& v);

}  // namespace cyclotrig

#endif
