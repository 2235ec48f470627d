#include "cyclotrig/json_io.hpp"

#include <stdexcept>

namespace cyclotrig {

json to_json(CoordVector const& v) {
    Factorization f = factorize(v.conductor());
    json out = json::object();
    for (auto const& [key, coeff] : v.entries())
        out[key_to_string(key, f)] = fraction_string(coeff);
    return out;
}

CoordVector coord_vector_from_json(std::uint64_t conductor, json const& j) {
    if (!j.is_object()) throw std::invalid_argument("coordinate vector must be a JSON object");
    Factorization f = factorize(conductor);
    CoordVector v(conductor);
    for (auto const& [key_str, coeff_str] : j.items())
        v.add(key_from_string(key_str, f), rational_from_string(coeff_str.get<std::string>()));
    return v;
}

json to_json(PowerPoly const& p) {
    json out = json::array();
    for (auto const& c : p.coefficients()) out.push_back(fraction_string(c));
    return out;
}

PowerPoly power_poly_from_json(std::uint64_t conductor, json const& j) {
    if (!j.is_array()) throw std::invalid_argument("power poly must be a JSON array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (auto const& c : j) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return PowerPoly(conductor, std::move(coeffs));
}

json to_json(BasisDescriptor const& d) {
    json keys = json::array();
    for (auto const& key : d.keys) keys.push_back(key_to_string(key, d.factorization));
    return json{{"n", d.n}, {"phi", d.keys.size()}, {"keys", keys}};
}

BasisDescriptor basis_descriptor_from_json(json const& j) {
    BasisDescriptor d;
    d.n = j.at("n").get<std::uint64_t>();
    d.factorization = factorize(d.n);
    for (auto const& key_str : j.at("keys"))
        d.keys.push_back(key_from_string(key_str.get<std::string>(), d.factorization));
    return d;
}

std::string classification_name(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::Zero: return "zero";
        case Classification::Kind::RationalRatio: return "rational";
        case Classification::Kind::Irrational: return "irrational";
        case Classification::Kind::DenominatorZero: return "denominator_zero";
    }
    throw std::logic_error("unknown classification kind");
}

Classification::Kind classification_kind_from_name(std::string const& name) {
    if (name == "zero") return Classification::Kind::Zero;
    if (name == "rational") return Classification::Kind::RationalRatio;
    if (name == "irrational") return Classification::Kind::Irrational;
    if (name == "denominator_zero") return Classification::Kind::DenominatorZero;
    throw std::invalid_argument("unknown classification: " + name);
}

json classification_record(Rho const& rho, std::int64_t k, std::int64_t m,
                           Classification const& cls) {
    json out{{"rho", rho.str()},
             {"k", k},
             {"m", m},
             {"class", classification_name(cls.kind)}};
    if (cls.lambda) out["lambda"] = fraction_string(*cls.lambda);
    return out;
}

Classification classification_from_record(json const& j) {
    Classification cls;
    cls.kind = classification_kind_from_name(j.at("class").get<std::string>());
    if (j.contains("lambda"))
        cls.lambda = rational_from_string(j.at("lambda").get<std::string>());
    if ((cls.kind == Classification::Kind::RationalRatio) != cls.lambda.has_value())
        throw std::invalid_argument("lambda must appear exactly for rational classifications");
    return cls;
}

std::string verdict_name(IdentityVerdict::Kind kind) {
    switch (kind) {
        case IdentityVerdict::Kind::Holds: return "holds";
        case IdentityVerdict::Kind::Fails: return "fails";
        case IdentityVerdict::Kind::PoleLHS: return "pole_lhs";
        case IdentityVerdict::Kind::PoleRHS: return "pole_rhs";
    }
    throw std::logic_error("unknown verdict kind");
}

IdentityVerdict::Kind verdict_kind_from_name(std::string const& name) {
    if (name == "holds") return IdentityVerdict::Kind::Holds;
    if (name == "fails") return IdentityVerdict::Kind::Fails;
    if (name == "pole_lhs") return IdentityVerdict::Kind::PoleLHS;
    if (name == "pole_rhs") return IdentityVerdict::Kind::PoleRHS;
    throw std::invalid_argument("unknown verdict: " + name);
}

json verdict_record(Rho const& rho, std::int64_t n, IdentityVerdict const& verdict) {
    return json{{"rho", rho.str()},
                {"n", n},
                {"verdict", verdict_name(verdict.kind)},
                {"lhs", to_json(verdict.lhs)},
                {"rhs", to_json(verdict.rhs)}};
}

IdentityVerdict verdict_from_record(json const& j) {
    Rho rho = Rho::parse(j.at("rho").get<std::string>());
    IdentityVerdict out;
    out.kind = verdict_kind_from_name(j.at("verdict").get<std::string>());
    out.lhs = coord_vector_from_json(2 * rho.q(), j.at("lhs"));
    out.rhs = coord_vector_from_json(2 * rho.q(), j.at("rhs"));
    return out;
}

json to_json(SweepReport const& r) {
    json violations = json::array();
    for (auto const& v : r.violations)
        violations.push_back(json{{"p", v.p}, {"q", v.q}, {"n", v.n}});
    return json{{"qmax", r.qmax},
                {"nmax", r.nmax},
                {"total", r.total},
                {"tallies", json{{"fails", r.fails}, {"pole_rhs", r.pole_rhs}}},
                {"violations", violations}};
}

SweepReport sweep_report_from_json(json const& j) {
    SweepReport r;
    r.qmax = j.at("qmax").get<std::uint64_t>();
    r.nmax = j.at("nmax").get<std::uint64_t>();
    r.total = j.at("total").get<std::uint64_t>();
    r.fails = j.at("tallies").at("fails").get<std::uint64_t>();
    r.pole_rhs = j.at("tallies").at("pole_rhs").get<std::uint64_t>();
    for (auto const& v : j.at("violations"))
        r.violations.push_back({v.at("p").get<std::uint64_t>(), v.at("q").get<std::uint64_t>(),
                                v.at("n").get<std::int64_t>()});
    return r;
}

}  // namespace cyclotrig
