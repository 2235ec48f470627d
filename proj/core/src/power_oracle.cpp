#include "cyclotrig/power_oracle.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace cyclotrig {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int const& coeff, std::size_t degree) {
    if (coeff == 0) return IntPoly{};
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = coeff;
    return IntPoly(std::move(c));
}

IntPoly operator+(IntPoly const& a, IntPoly const& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(IntPoly const& a, IntPoly const& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(IntPoly const& a, IntPoly const& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::divide_exact(IntPoly const& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (c_.size() < divisor.c_.size())
        throw std::domain_error("inexact polynomial division");

    std::vector<Int> rem = c_;
    std::size_t dd = divisor.c_.size() - 1;
    Int const& lead = divisor.c_.back();
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0) continue;
        Int q = rem[i] / lead;
        if (q * lead != rem[i]) throw std::domain_error("inexact polynomial division");
        quot[i - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    for (auto const& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return IntPoly(std::move(quot));
}

namespace {

std::shared_ptr<IntPoly const> cyclotomic_cached(std::uint64_t n);

IntPoly cyclotomic_compute(std::uint64_t n) {
    if (n == 1) return IntPoly({Int(-1), Int(1)});  // x - 1
    std::vector<Int> xn1(n + 1, Int(0));
    xn1[0] = -1;
    xn1[n] = 1;
    IntPoly numerator(std::move(xn1));
    IntPoly denominator({Int(1)});
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) denominator = denominator * *cyclotomic_cached(d);
    return numerator.divide_exact(denominator);
}

std::shared_ptr<IntPoly const> cyclotomic_cached(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<IntPoly const>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    auto fresh = std::make_shared<IntPoly const>(cyclotomic_compute(n));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(n, std::move(fresh));
    return it->second;
}

// In-place reduction modulo the (monic) cyclotomic polynomial.
void reduce_mod_phi(std::vector<Rational>& c, IntPoly const& phi, std::size_t target) {
    std::size_t deg_phi = phi.degree();
    auto const& pc = phi.coefficients();
    for (std::size_t i = c.size(); i-- > deg_phi;) {
        if (c[i] == 0) continue;
        Rational q = c[i];  // phi is monic
        for (std::size_t j = 0; j <= deg_phi; ++j) c[i - deg_phi + j] -= q * Rational(pc[j]);
        assert(c[i] == 0);
    }
    c.resize(target, Rational(0));
}

}  // namespace

IntPoly cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly requires n >= 1");
    return *cyclotomic_cached(n);
}

PowerPoly::PowerPoly(std::uint64_t conductor) : n_(conductor) {
    if (n_ == 0) throw std::invalid_argument("PowerPoly requires conductor >= 1");
    c_.assign(euler_phi(n_), Rational(0));
}

PowerPoly::PowerPoly(std::uint64_t conductor, std::vector<Rational> coeffs)
    : n_(conductor), c_(std::move(coeffs)) {
    if (n_ == 0) throw std::invalid_argument("PowerPoly requires conductor >= 1");
    reduce_mod_phi(c_, cyclotomic_poly(n_), euler_phi(n_));
}

PowerPoly PowerPoly::one(std::uint64_t conductor) {
    PowerPoly p(conductor);
    p.c_[0] = 1;
    return p;
}

bool PowerPoly::is_zero() const {
    for (auto const& c : c_)
        if (c != 0) return false;
    return true;
}

PowerPoly operator+(PowerPoly const& a, PowerPoly const& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("conductor mismatch");
    PowerPoly out(a.n_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
}

PowerPoly operator-(PowerPoly const& a, PowerPoly const& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("conductor mismatch");
    PowerPoly out(a.n_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
}

PowerPoly operator*(PowerPoly const& a, PowerPoly const& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("conductor mismatch");
    if (a.is_zero() || b.is_zero()) return PowerPoly(a.n_);
    std::vector<Rational> c(a.c_.size() + b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return PowerPoly(a.n_, std::move(c));
}

PowerPoly operator*(Rational const& s, PowerPoly p) {
    for (auto& c : p.c_) c *= s;
    return p;
}

PowerPoly root_power(std::uint64_t n, std::int64_t t) {
    std::uint64_t tr = mod_reduce(t, n);
    std::vector<Rational> c(tr + 1, Rational(0));
    c[tr] = 1;
    return PowerPoly(n, std::move(c));
}

ReImPower re_im_power(std::uint64_t n, std::int64_t t) {
    PowerPoly fwd = root_power(n, t);
    PowerPoly bwd = root_power(n, -t);
    Rational half = make_rational(1, 2);
    return {half * (fwd + bwd), half * (fwd - bwd)};
}

namespace {

PowerPoly key_power_compute(std::uint64_t n, BasisKey const& key) {
    Factorization f = factorize(n);
    if (!key_valid(key, f)) throw std::invalid_argument("invalid basis key for conductor");
    PowerPoly out = PowerPoly::one(n);
    for (std::size_t i = 0; i < key.size(); ++i) {
        std::uint64_t q = f[i].value();
        std::int64_t lifted = static_cast<std::int64_t>(key[i].exponent * (n / q));
        ReImPower rip = re_im_power(n, lifted);
        out = out * (key[i].part == Part::A ? rip.re : rip.im);
    }
    return out;
}

}  // namespace

PowerPoly key_power(std::uint64_t n, BasisKey const& key) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, BasisKey>, std::shared_ptr<PowerPoly const>> cache;
    auto mapkey = std::make_pair(n, key);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(mapkey);
        if (it != cache.end()) return *it->second;
    }
    auto fresh = std::make_shared<PowerPoly const>(key_power_compute(n, key));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace(std::move(mapkey), std::move(fresh));
    return *it->second;
}

PowerPoly vector_power(CoordVector const& v) {
    PowerPoly out(v.conductor());
    for (auto const& [key, coeff] : v.entries()) out = out + coeff * key_power(v.conductor(), key);
    return out;
}

std::optional<Rational> proportionality(PowerPoly const& u, PowerPoly const& v) {
    if (v.is_zero()) throw ZeroDenominatorVector("proportionality: v is the zero element");
    if (u.conductor() != v.conductor())
        throw std::invalid_argument("proportionality: conductor mismatch");
    auto const& uc = u.coefficients();
    auto const& vc = v.coefficients();
    std::size_t pivot = 0;
    while (vc[pivot] == 0) ++pivot;
    Rational lambda = uc[pivot] / vc[pivot];
    for (std::size_t i = 0; i < vc.size(); ++i)
        if (uc[i] != lambda * vc[i]) return std::nullopt;
    return lambda;
}

}  // namespace cyclotrig
