#ifndef CYCLOTRIG_TAN_IDENTITY_HPP
#define CYCLOTRIG_TAN_IDENTITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclotrig/basis.hpp"
#include "cyclotrig/bigfloat.hpp"
#include "cyclotrig/sine_ratio.hpp"

namespace cyclotrig {

// Exact verdict on n*tan(pi*rho) == tan(n*pi*rho) for one (rho, n).
// The equation is tested in the cross-multiplied form
//   (n+1)*sin((n-1)*pi*rho) == (n-1)*sin((n+1)*pi*rho),
// which is total (no division) and equivalent whenever both tangents are
// finite.  lhs/rhs carry the two compared vectors as evidence.
struct IdentityVerdict {
    enum class Kind {
        Holds,     // exact equality; would contradict the expected outcome
        Fails,     // exact inequality
        PoleLHS,   // rho = 1/2, tan(pi*rho) undefined
        PoleRHS,   // tan(n*pi*rho) undefined
    };

    Kind kind = Kind::Fails;
    CoordVector lhs;  // (n+1) * [i*sin((n-1)*pi*rho)]
    CoordVector rhs;  // (n-1) * [i*sin((n+1)*pi*rho)]
};

IdentityVerdict check_identity(Rho const& rho, std::int64_t n);

// The ratio-form restatement: classify sin((n-1)*pi*rho)/sin((n+1)*pi*rho)
// and pair it with the target value (n-1)/(n+1).  The identity holds iff
// the classification is RationalRatio of exactly that target.
std::pair<Classification, Rational> ratio_form(Rho const& rho, std::int64_t n);

struct SweepViolation {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::int64_t n = 0;
    friend bool operator==(SweepViolation const&, SweepViolation const&) = default;
};

// Exhaustive record over the grid q in [3, qmax], p in [1, q) coprime to q,
// n in [2, nmax].  Deterministic regardless of worker count.
struct SweepReport {
    std::uint64_t qmax = 0;
    std::uint64_t nmax = 0;
    std::uint64_t total = 0;
    std::uint64_t fails = 0;
    std::uint64_t pole_rhs = 0;
    std::vector<SweepViolation> violations;  // Holds verdicts; expected empty

    friend bool operator==(SweepReport const&, SweepReport const&) = default;
};

SweepReport sweep(std::uint64_t qmax, std::uint64_t nmax, unsigned jobs = 1);

// Bisection root of h(rho) = (n-1)*sin((n+1)*pi*rho) - (n+1)*sin((n-1)*pi*rho)
// on [a, b]; h is smooth and pole-free, unlike the tangent form.  Returns
// nothing when sign(h(a)) == sign(h(b)).  A returned root is checked to
// satisfy the tangent identity numerically to within 2^-(precision_bits/2);
// that check refuses to run within 2^-10 of a tangent pole.
std::optional<BigFloat> find_real_root(std::int64_t n, double a, double b,
                                       mpfr_prec_t precision_bits);

// |n*tan(pi*rho) - tan(n*pi*rho)| at the precision of rho.
BigFloat tan_residual(BigFloat const& rho, std::int64_t n);

// |sin((n-1)*pi*rho)/sin((n+1)*pi*rho) - (n-1)/(n+1)| at the precision of rho.
BigFloat ratio_residual(BigFloat const& rho, std::int64_t n);

}  // namespace cyclotrig

#endif
