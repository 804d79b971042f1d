#include "rootbound/serialize.hpp"

namespace rootbound {

using json = Json;

void to_json(json& j, const Root& root) { j = root.coeffs(); }

void from_json(const json& j, Root& root) { root = Root(j.get<std::vector<int>>()); }

json root_set_json(const RootSet& roots) {
  json out = json::array();
  for (const Root& r : roots) out.push_back(r);
  return out;
}

json params_json(const DomainSpec& spec) {
  if (const auto* s = std::get_if<SuSpec>(&spec))
    return {{"p", s->p}, {"p_prime", s->p_prime}, {"r", s->r}, {"r_prime", s->r_prime}};
  const auto& s = std::get<SpSpec>(spec);
  return {{"n", s.n}, {"p", s.p}, {"q", s.q}};
}

json partition_json(const RootPartition& part) {
  return {
      {"lambda_k", root_set_json(part.lambda_k)},
      {"lambda_q0", root_set_json(part.lambda_q0)},
      {"lambda_u_minus", root_set_json(part.lambda_u_minus)},
      {"gamma", root_set_json(part.gamma)},
      {"phi", root_set_json(part.phi)},
  };
}

json report_json(const ConcavityReport& rep) {
  json at = json::array();
  for (const auto& [alpha, size] : rep.per_alpha) at.push_back({{"alpha", alpha}, {"size", size}});
  return {
      {"family", family_name(rep.spec)},
      {"params", params_json(rep.spec)},
      {"dim_u_minus", rep.dim_u_minus},
      {"attractiveness", std::move(at)},
      {"d_ma", rep.d_ma},
      {"argmin", root_set_json(rep.argmin)},
      {"paper_bound", rep.closed_form_bound},
      {"derived_bound_su", rep.derived_bound_su ? json(*rep.derived_bound_su) : json(nullptr)},
      {"convex_degenerate", rep.convex_degenerate},
      {"paper_formula_match", rep.closed_form_match},
  };
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace rootbound
