#include "cyclotrig/numtheory.hpp"

#include <cassert>
#include <numeric>

namespace cyclotrig {

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) v *= prime;
    return v;
}

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
    for (std::size_t i = 0; i + 1 < factors_.size(); ++i)
        if (factors_[i].prime >= factors_[i + 1].prime)
            throw std::invalid_argument("factorization primes must be strictly increasing");
    for (auto const& f : factors_)
        if (f.prime < 2 || f.exponent == 0)
            throw std::invalid_argument("invalid prime power in factorization");
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto const& f : factors_) v *= f.value();
    return v;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<PrimePower> out;
    auto strip = [&](std::uint64_t p) {
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // remaining candidates are 6k +- 1
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return Factorization(std::move(out));
}

std::uint64_t euler_phi(Factorization const& f) {
    std::uint64_t phi = 1;
    for (auto const& pp : f) {
        std::uint64_t q = pp.value();
        phi *= q / pp.prime * (pp.prime - 1);
    }
    return phi;
}

std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

std::uint64_t mod_reduce(std::int64_t t, std::uint64_t n) {
    assert(n >= 1);
    std::int64_t m = static_cast<std::int64_t>(n);
    std::int64_t r = t % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_inverse requires m >= 1");
    if (m == 1) return 0;
    // extended Euclid on (a mod m, m)
    std::int64_t mm = static_cast<std::int64_t>(m);
    std::int64_t r0 = static_cast<std::int64_t>(mod_reduce(a, m)), r1 = mm;
    std::int64_t x0 = 1, x1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    if (r0 != 1) throw NotInvertible("mod_inverse: gcd(a, m) != 1");
    return mod_reduce(x0, m);
}

std::vector<CrtComponent> crt_components(Factorization const& f, std::int64_t t) {
    std::uint64_t n = f.value();
    std::uint64_t tr = mod_reduce(t, n);
    std::vector<CrtComponent> out;
    out.reserve(f.size());
    for (auto const& pp : f) {
        std::uint64_t q = pp.value();
        std::uint64_t cofactor = n / q;
        std::uint64_t inv = mod_inverse(static_cast<std::int64_t>(cofactor % q), q);
        std::uint64_t s = (tr % q) * inv % q;
        out.push_back({q, s});
    }
    // sum s_i*(n/q_i) == t (mod n)
    std::uint64_t acc = 0;
    for (auto const& c : out) acc = (acc + c.residue % n * ((n / c.modulus) % n)) % n;
    assert(acc == tr);
    return out;
}

std::vector<CrtComponent> crt_components(std::uint64_t n, std::int64_t t) {
    return crt_components(factorize(n), t);
}

}  // namespace cyclotrig
