#ifndef CYCLOTRIG_JSON_IO_HPP
#define CYCLOTRIG_JSON_IO_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "cyclotrig/basis.hpp"
#include "cyclotrig/power_oracle.hpp"
#include "cyclotrig/sine_ratio.hpp"
#include "cyclotrig/tan_identity.hpp"

namespace cyclotrig {

using nlohmann::json;

// {"A4.0*B3.1": "num/den", ...}
json to_json(CoordVector const& v);
CoordVector coord_vector_from_json(std::uint64_t conductor, json const& j);

// ["num/den", ...], degree ascending, phi(n) entries
json to_json(PowerPoly const& p);
PowerPoly power_poly_from_json(std::uint64_t conductor, json const& j);

// {"n":..., "phi":..., "keys":[...]}
json to_json(BasisDescriptor const& d);
BasisDescriptor basis_descriptor_from_json(json const& j);

std::string classification_name(Classification::Kind kind);
Classification::Kind classification_kind_from_name(std::string const& name);

// {"rho":"p/q","k":K,"m":M,"class":"...","lambda":"num/den" when rational}
json classification_record(Rho const& rho, std::int64_t k, std::int64_t m,
                           Classification const& cls);
Classification classification_from_record(json const& j);

std::string verdict_name(IdentityVerdict::Kind kind);
IdentityVerdict::Kind verdict_kind_from_name(std::string const& name);

// {"rho":"p/q","n":...,"verdict":"...","lhs":{...},"rhs":{...}}
json verdict_record(Rho const& rho, std::int64_t n, IdentityVerdict const& verdict);
IdentityVerdict verdict_from_record(json const& j);

// {"qmax":...,"nmax":...,"total":...,"tallies":{"fails":...,"pole_rhs":...},
//  "violations":[{"p":...,"q":...,"n":...}]}
json to_json(SweepReport const& r);
SweepReport sweep_report_from_json(json const& j);

}  // namespace cyclotrig

#endif
