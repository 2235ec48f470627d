#include "cyclotrig/sine_ratio.hpp"

#include <numeric>

#include "cyclotrig/power_oracle.hpp"

namespace cyclotrig {

Rho::Rho(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0 || p >= q)
        throw std::invalid_argument("rho must satisfy 0 < p/q < 1");
    std::int64_t g = std::gcd(p, q);
    p_ = static_cast<std::uint64_t>(p / g);
    q_ = static_cast<std::uint64_t>(q / g);
}

Rho Rho::parse(std::string_view s) {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == s.size())
        throw std::invalid_argument("rho must be written p/q");
    std::int64_t p = 0, q = 0;
    try {
        p = std::stoll(std::string(s.substr(0, slash)));
        q = std::stoll(std::string(s.substr(slash + 1)));
    } catch (std::exception const&) {
        throw std::invalid_argument("rho must be written p/q");
    }
    return Rho(p, q);
}

CoordVector sin_vector(Rho const& rho, std::int64_t k) {
    std::uint64_t conductor = 2 * rho.q();
    std::int64_t exponent = k * static_cast<std::int64_t>(rho.p());
    return decompose_root(conductor, exponent).im;
}

Classification classify_ratio(Rho const& rho, std::int64_t k, std::int64_t m) {
    CoordVector denom = sin_vector(rho, m);
    if (denom.is_zero()) return Classification::denominator_zero();
    CoordVector numer = sin_vector(rho, k);
    if (numer.is_zero()) return Classification::zero();
    if (auto lambda = proportionality(numer, denom))
        return Classification::rational(*lambda);
    return Classification::irrational();
}

Classification classify_ratio_oracle(Rho const& rho, std::int64_t k, std::int64_t m) {
    std::uint64_t conductor = 2 * rho.q();
    std::int64_t p = static_cast<std::int64_t>(rho.p());
    PowerPoly denom = re_im_power(conductor, m * p).im;
    if (denom.is_zero()) return Classification::denominator_zero();
    PowerPoly numer = re_im_power(conductor, k * p).im;
    if (numer.is_zero()) return Classification::zero();
    if (auto lambda = proportionality(numer, denom))
        return Classification::rational(*lambda);
    return Classification::irrational();
}

}  // namespace cyclotrig
