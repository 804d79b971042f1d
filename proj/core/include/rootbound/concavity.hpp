#ifndef ROOTBOUND_CONCAVITY_HPP
#define ROOTBOUND_CONCAVITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "rootbound/domains.hpp"

namespace rootbound {

struct AttractivePair {
  Root beta;   // in Lambda(u-)
  Root gamma;  // in Gamma, beta + gamma = alpha
};

/// At(alpha): the roots beta of Lambda(u-) that reach alpha through some
/// gamma in Gamma. Each beta determines its gamma, so the gammas are
/// pairwise distinct.
struct Attractiveness {
  Root alpha;
  std::vector<AttractivePair> pairs;  // sorted by beta

  std::size_t size() const { return pairs.size(); }
  RootSet betas() const;
};

/// Throws std::invalid_argument unless alpha is in part.phi.
Attractiveness attractiveness(const Root& alpha, const RootPartition& part);

/// Minimal attractiveness over Phi and the roots attaining it.
/// Zero with argmin = Phi when Lambda(u-) or Phi is empty.
struct MinAttractiveness {
  int value = 0;
  RootSet argmin;
};

MinAttractiveness min_attractiveness(const RootPartition& part);

/// Closed-form lower bounds printed for the two families:
///   SU: min{r + p' - r', p - r + p'}
///   Sp: min{n - p, n - q}
int closed_form_bound(const DomainSpec& spec);

/// Codimensions of the boundary variety for a single spot of the SU block
/// picture: upper = r + (p' - r'), lower = (p - r) + r'.
struct SpotCodims {
  int upper = 0;
  int lower = 0;
};

/// Throws std::invalid_argument for non-SU or invalid specs.
SpotCodims spot_codims_su(const DomainSpec& spec);

struct ConcavityReport {
  DomainSpec spec;
  int dim_u_minus = 0;
  std::map<Root, int> per_alpha;  // |At(alpha)| for alpha in Phi
  int d_ma = 0;
  RootSet argmin;
  int closed_form_bound = 0;
  std::optional<int> derived_bound_su;
  bool convex_degenerate = false;
  bool closed_form_match = false;
};

ConcavityReport report(const DomainSpec& spec);

}  // namespace rootbound

#endif  // ROOTBOUND_CONCAVITY_HPP
