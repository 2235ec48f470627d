#ifndef CYCLOTRIG_NUMTHEORY_HPP
#define CYCLOTRIG_NUMTHEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclotrig {

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    std::uint64_t value() const;  // prime^exponent
    friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

// Ordered prime factorization; primes strictly increasing.  The prime-power
// values q_i = p_i^{e_i} are pairwise coprime by construction.
class Factorization {
  public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    std::vector<PrimePower> const& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }
    PrimePower const& operator[](std::size_t i) const { return factors_[i]; }
    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }

    std::uint64_t value() const;  // product of all p^e (1 for the empty one)

    friend bool operator==(Factorization const&, Factorization const&) = default;

  private:
    std::vector<PrimePower> factors_;
};

// Trial division; n = 1 yields the empty factorization.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(Factorization const& f);

// Unique x in [0, m) with a*x == 1 (mod m); throws NotInvertible when
// gcd(a, m) != 1.  a may be negative.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

struct CrtComponent {
    std::uint64_t modulus = 0;   // q_i = p_i^{e_i}
    std::uint64_t residue = 0;   // s_i in [0, q_i)
    friend bool operator==(CrtComponent const&, CrtComponent const&) = default;
};

// Components (q_i, s_i) with sum s_i*(n/q_i) == t (mod n), one per
// prime-power factor of n; hence omega_n^t = prod omega_{q_i}^{s_i}.
// t is reduced modulo n first and may be any integer.
std::vector<CrtComponent> crt_components(std::uint64_t n, std::int64_t t);
std::vector<CrtComponent> crt_components(Factorization const& f, std::int64_t t);

// Reduce t into [0, n).
std::uint64_t mod_reduce(std::int64_t t, std::uint64_t n);

}  // namespace cyclotrig

#endif
