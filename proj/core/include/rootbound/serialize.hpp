#ifndef ROOTBOUND_SERIALIZE_HPP
#define ROOTBOUND_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "rootbound/concavity.hpp"
#include "rootbound/domains.hpp"
#include "rootbound/exact.hpp"
#include "rootbound/roots.hpp"

namespace rootbound {

/// Objects keep insertion order so emitted documents follow the schema order.
using Json = nlohmann::ordered_json;

// Root: [1,-1,0]
void to_json(Json& j, const Root& root);
void from_json(const Json& j, Root& root);

// Root sets serialize as sorted arrays of roots.
Json root_set_json(const RootSet& roots);

/// {"p":..,"p_prime":..,"r":..,"r_prime":..} or {"n":..,"p":..,"q":..}
Json params_json(const DomainSpec& spec);

/// Keys lambda_k, lambda_q0, lambda_u_minus, gamma, phi.
Json partition_json(const RootPartition& part);

/// Keys family, params, dim_u_minus, attractiveness, d_ma, argmin,
/// paper_bound, derived_bound_su, convex_degenerate, paper_formula_match.
Json report_json(const ConcavityReport& report);

/// Array of arrays of "num/den" strings.
Json matrix_json(const RationalMatrix& m);

}  // namespace rootbound

#endif  // ROOTBOUND_SERIALIZE_HPP
