#include "rootbound/concavity.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootbound {

RootSet Attractiveness::betas() const {
  RootSet out;
  for (const auto& pr : pairs) out.insert(pr.beta);
  return out;
}

Attractiveness attractiveness(const Root& alpha, const RootPartition& part) {
  if (!part.phi.contains(alpha))
    throw std::invalid_argument("attractiveness: " + alpha.pretty() + " is not in Phi");
  Attractiveness at{alpha, {}};
  for (const Root& beta : part.lambda_u_minus) {
    Root gamma = alpha - beta;
    if (part.gamma.contains(gamma)) at.pairs.push_back({beta, std::move(gamma)});
  }
  return at;
}

MinAttractiveness min_attractiveness(const RootPartition& part) {
  if (part.lambda_u_minus.empty() || part.phi.empty()) return {0, part.phi};
  MinAttractiveness best{-1, {}};
  for (const Root& alpha : part.phi) {
    const int size = static_cast<int>(attractiveness(alpha, part).size());
    if (best.value < 0 || size < best.value) {
      best.value = size;
      best.argmin.clear();
    }
    if (size == best.value) best.argmin.insert(alpha);
  }
  return best;
}

int closed_form_bound(const DomainSpec& spec) {
  require_valid(spec);
  if (const auto* s = std::get_if<SuSpec>(&spec))
    return std::min(s->r + s->p_prime - s->r_prime, s->p - s->r + s->p_prime);
  const auto& s = std::get<SpSpec>(spec);
  return std::min(s.n - s.p, s.n - s.q);
}

SpotCodims spot_codims_su(const DomainSpec& spec) {
  const auto* s = std::get_if<SuSpec>(&spec);
  if (s == nullptr) throw std::invalid_argument("spot codimensions are defined for SU domains only");
  require_valid(spec);
  return {s->r + (s->p_prime - s->r_prime), (s->p - s->r) + s->r_prime};
}

ConcavityReport report(const DomainSpec& spec) {
  const RootPartition part = partition(spec);
  ConcavityReport rep;
  rep.spec = spec;
  rep.dim_u_minus = static_cast<int>(part.lambda_u_minus.size());
  for (const Root& alpha : part.phi)
    rep.per_alpha.emplace(alpha, static_cast<int>(attractiveness(alpha, part).size()));
  auto minimum = min_attractiveness(part);
  rep.d_ma = minimum.value;
  rep.argmin = std::move(minimum.argmin);
  rep.closed_form_bound = closed_form_bound(spec);
  if (std::holds_alternative<SuSpec>(spec)) {
    const auto spots = spot_codims_su(spec);
    rep.derived_bound_su = std::min(spots.upper, spots.lower);
  }
  rep.convex_degenerate = is_convex_degenerate(part);
  rep.closed_form_match = rep.d_ma == rep.closed_form_bound;
  return rep;
}

}  // namespace rootbound
