#include "cyclotrig/tan_identity.hpp"

#include <atomic>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cyclotrig {

namespace {

bool rhs_pole(Rho const& rho, std::int64_t n) {
    // tan(n*pi*p/q) is undefined iff n*p == q/2 (mod q) with q even,
    // i.e. 2*n*p == q (mod 2q).
    if (rho.q() % 2 != 0) return false;
    std::uint64_t r = mod_reduce(n * static_cast<std::int64_t>(rho.p()), rho.q());
    return r == rho.q() / 2;
}

// su*u == sv*v without materializing the scaled vectors.
bool scaled_equal(CoordVector const& u, Rational const& su,
                  CoordVector const& v, Rational const& sv) {
    auto const& ue = u.entries();
    auto const& ve = v.entries();
    if (ue.size() != ve.size()) return false;
    auto it = ue.begin();
    auto jt = ve.begin();
    for (; it != ue.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (su * it->second != sv * jt->second) return false;
    }
    return true;
}

}  // namespace

IdentityVerdict check_identity(Rho const& rho, std::int64_t n) {
    if (n <= 1) throw std::invalid_argument("check_identity requires n >= 2");

    std::uint64_t conductor = 2 * rho.q();
    IdentityVerdict out;
    out.lhs = CoordVector(conductor);
    out.rhs = CoordVector(conductor);

    if (rho.q() == 2) {  // rho = 1/2: tan(pi/2) undefined
        out.kind = IdentityVerdict::Kind::PoleLHS;
        return out;
    }
    if (rhs_pole(rho, n)) {
        out.kind = IdentityVerdict::Kind::PoleRHS;
        return out;
    }
    out.lhs = Rational(n + 1) * sin_vector(rho, n - 1);
    out.rhs = Rational(n - 1) * sin_vector(rho, n + 1);
    out.kind = out.lhs == out.rhs ? IdentityVerdict::Kind::Holds : IdentityVerdict::Kind::Fails;
    return out;
}

std::pair<Classification, Rational> ratio_form(Rho const& rho, std::int64_t n) {
    if (n <= 1) throw std::invalid_argument("ratio_form requires n >= 2");
    return {classify_ratio(rho, n - 1, n + 1), make_rational(n - 1, n + 1)};
}

namespace {

struct SweepPartial {
    std::uint64_t total = 0;
    std::uint64_t fails = 0;
    std::uint64_t pole_rhs = 0;
    std::vector<SweepViolation> violations;
};

SweepPartial sweep_one_q(std::uint64_t q, std::uint64_t nmax) {
    std::uint64_t conductor = 2 * q;
    std::vector<CoordVector> im_by_t;
    im_by_t.reserve(conductor);
    for (std::uint64_t t = 0; t < conductor; ++t)
        im_by_t.push_back(decompose_root(conductor, static_cast<std::int64_t>(t)).im);

    SweepPartial part;
    bool q_even = q % 2 == 0;
    for (std::uint64_t p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        for (std::uint64_t n = 2; n <= nmax; ++n) {
            ++part.total;
            if (q_even && n * p % q == q / 2) {
                ++part.pole_rhs;
                continue;
            }
            CoordVector const& lhs = im_by_t[(n - 1) * p % conductor];
            CoordVector const& rhs = im_by_t[(n + 1) * p % conductor];
            if (scaled_equal(lhs, Rational(static_cast<long>(n + 1)),
                             rhs, Rational(static_cast<long>(n - 1)))) {
                part.violations.push_back({p, q, static_cast<std::int64_t>(n)});
            } else {
                ++part.fails;
            }
        }
    }
    return part;
}

}  // namespace

SweepReport sweep(std::uint64_t qmax, std::uint64_t nmax, unsigned jobs) {
    if (qmax < 3) throw std::invalid_argument("sweep requires qmax >= 3");
    if (nmax < 2) throw std::invalid_argument("sweep requires nmax >= 2");
    if (jobs == 0) jobs = 1;

    std::vector<SweepPartial> partials(qmax - 2);
    auto worker_body = [&](std::atomic<std::uint64_t>& next) {
        for (;;) {
            std::uint64_t q = next.fetch_add(1);
            if (q > qmax) break;
            partials[q - 3] = sweep_one_q(q, nmax);
        }
    };

    std::atomic<std::uint64_t> next_q{3};
    if (jobs == 1) {
        worker_body(next_q);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w)
            workers.emplace_back([&] { worker_body(next_q); });
        for (auto& w : workers) w.join();
    }

    // merge in q order; inner loops already emit (p, n) ascending
    SweepReport report;
    report.qmax = qmax;
    report.nmax = nmax;
    for (auto const& part : partials) {
        report.total += part.total;
        report.fails += part.fails;
        report.pole_rhs += part.pole_rhs;
        report.violations.insert(report.violations.end(), part.violations.begin(),
                                 part.violations.end());
    }
    return report;
}

namespace {

BigFloat eq3_h(BigFloat const& rho, std::int64_t n) {
    mpfr_prec_t prec = rho.precision();
    BigFloat pi = BigFloat::pi(prec);
    BigFloat nm = BigFloat::from(static_cast<double>(n - 1), prec);
    BigFloat np = BigFloat::from(static_cast<double>(n + 1), prec);
    return nm * sin(np * pi * rho) - np * sin(nm * pi * rho);
}

// distance from x to the nearest half-integer (the poles of tan(pi*x))
BigFloat half_integer_distance(BigFloat const& x) {
    BigFloat half = BigFloat::from(0.5, x.precision());
    BigFloat shifted = x - half;
    return abs(shifted - round_to_integer(shifted));
}

}  // namespace

BigFloat tan_residual(BigFloat const& rho, std::int64_t n) {
    mpfr_prec_t prec = rho.precision();
    BigFloat pi = BigFloat::pi(prec);
    BigFloat nf = BigFloat::from(static_cast<double>(n), prec);
    return abs(nf * tan(pi * rho) - tan(nf * pi * rho));
}

BigFloat ratio_residual(BigFloat const& rho, std::int64_t n) {
    mpfr_prec_t prec = rho.precision();
    BigFloat pi = BigFloat::pi(prec);
    BigFloat nm = BigFloat::from(static_cast<double>(n - 1), prec);
    BigFloat np = BigFloat::from(static_cast<double>(n + 1), prec);
    BigFloat target = BigFloat::from(make_rational(n - 1, n + 1), prec);
    return abs(sin(nm * pi * rho) / sin(np * pi * rho) - target);
}

std::optional<BigFloat> find_real_root(std::int64_t n, double a, double b,
                                       mpfr_prec_t precision_bits) {
    if (n < 2) throw std::invalid_argument("find_real_root requires n >= 2");
    if (!(0.0 < a && a < b && b < 1.0))
        throw std::invalid_argument("find_real_root requires 0 < a < b < 1");

    mpfr_prec_t work = precision_bits + 32;
    BigFloat lo = BigFloat::from(a, work);
    BigFloat hi = BigFloat::from(b, work);
    BigFloat flo = eq3_h(lo, n);
    BigFloat fhi = eq3_h(hi, n);

    if (flo.is_zero()) {
        hi = lo;
    } else if (fhi.is_zero()) {
        lo = hi;
    } else if (flo.sign() == fhi.sign()) {
        return std::nullopt;
    } else {
        BigFloat width_target = BigFloat::pow2(-(static_cast<long>(precision_bits) - 8), work);
        BigFloat two = BigFloat::from(2.0, work);
        while (hi - lo > width_target) {
            BigFloat mid = (lo + hi) / two;
            if (mid == lo || mid == hi) break;  // interval at one ulp
            BigFloat fmid = eq3_h(mid, n);
            if (fmid.is_zero()) {
                lo = mid;
                hi = mid;
                break;
            }
            bool same_side_as_lo = fmid.sign() == flo.sign();
            (same_side_as_lo ? lo : hi) = mid;
            (same_side_as_lo ? flo : fhi) = fmid;
        }
    }
    BigFloat two = BigFloat::from(2.0, work);
    BigFloat root = (lo + hi) / two;

    // numeric witness: the root must satisfy the tangent form as well
    BigFloat guard = BigFloat::pow2(-10, work);
    BigFloat n_rho = BigFloat::from(static_cast<double>(n), work) * root;
    if (half_integer_distance(root) < guard || half_integer_distance(n_rho) < guard)
        throw std::domain_error("find_real_root: root too close to a tangent pole to verify");
    BigFloat tolerance = BigFloat::pow2(-(static_cast<long>(precision_bits) / 2), work);
    if (!(tan_residual(root, n) < tolerance))
        throw std::logic_error("find_real_root: bisection root fails the tangent identity check");
    return root;
}

}  // namespace cyclotrig
