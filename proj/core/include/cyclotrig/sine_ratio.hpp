#ifndef CYCLOTRIG_SINE_RATIO_HPP
#define CYCLOTRIG_SINE_RATIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cyclotrig/basis.hpp"
#include "cyclotrig/rational.hpp"

namespace cyclotrig {

// A rational angle parameter rho = p/q, normalized to lowest terms with
// 0 < p/q < 1.
class Rho {
  public:
    Rho(std::int64_t p, std::int64_t q);  // reduces; throws unless 0 < p/q < 1
    static Rho parse(std::string_view s);  // "p/q"

    std::uint64_t p() const { return p_; }
    std::uint64_t q() const { return q_; }
    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    friend bool operator==(Rho const&, Rho const&) = default;

  private:
    std::uint64_t p_;
    std::uint64_t q_;
};

// Exact classification of sin(k*pi*rho) / sin(m*pi*rho).
struct Classification {
    enum class Kind { Zero, RationalRatio, Irrational, DenominatorZero };

    Kind kind = Kind::Irrational;
    std::optional<Rational> lambda;  // set iff kind == RationalRatio

    static Classification zero() { return {Kind::Zero, std::nullopt}; }
    static Classification rational(Rational l) { return {Kind::RationalRatio, std::move(l)}; }
    static Classification irrational() { return {Kind::Irrational, std::nullopt}; }
    static Classification denominator_zero() { return {Kind::DenominatorZero, std::nullopt}; }

    friend bool operator==(Classification const&, Classification const&) = default;
};

// i*sin(k*pi*rho) as an exact vector over D_{2q}; sin(k*pi*p/q) is the
// imaginary part of omega_{2q}^{k*p}.
CoordVector sin_vector(Rho const& rho, std::int64_t k);

// The basis-path classifier.
Classification classify_ratio(Rho const& rho, std::int64_t k, std::int64_t m);

// The same classification computed over power-basis coordinates only; no
// shared machinery with the basis decomposition.  Used to cross-check.
Classification classify_ratio_oracle(Rho const& rho, std::int64_t k, std::int64_t m);

}  // namespace cyclotrig

#endif
