#include <algorithm>

#include "parallel.hpp"
#include "rootbound/cli/cli.hpp"
#include "rootbound/oracle.hpp"

namespace rootbound::cli {

bool VerifyResult::consistent() const {
  return membership_mismatches == 0 && rank_mismatches == 0 && theorem_main_violations == 0 &&
         maximum_prop_violations == 0 && transversality_failures == 0;
}

VerifyResult& VerifyResult::operator+=(const VerifyResult& other) {
  instances_checked += other.instances_checked;
  membership_mismatches += other.membership_mismatches;
  rank_mismatches += other.rank_mismatches;
  theorem_main_violations += other.theorem_main_violations;
  maximum_prop_violations += other.maximum_prop_violations;
  transversality_failures += other.transversality_failures;
  paper_formula_mismatches.insert(paper_formula_mismatches.end(), other.paper_formula_mismatches.begin(),
                                  other.paper_formula_mismatches.end());
  failing_instances.insert(failing_instances.end(), other.failing_instances.begin(),
                           other.failing_instances.end());
  return *this;
}

std::vector<ConcavityReport> sweep(const std::vector<DomainSpec>& specs) {
  return detail::parallel_map(specs.size(), [&](std::size_t i) { return report(specs[i]); });
}

std::uint64_t trial_seed(std::uint64_t seed, const DomainSpec& spec, std::uint64_t trial) {
  if (const auto* s = std::get_if<SuSpec>(&spec))
    return oracle::derive_seed({seed, 1, std::uint64_t(s->p), std::uint64_t(s->p_prime),
                                std::uint64_t(s->r), std::uint64_t(s->r_prime), trial});
  const auto& s = std::get<SpSpec>(spec);
  return oracle::derive_seed(
      {seed, 2, std::uint64_t(s.n), std::uint64_t(s.p), std::uint64_t(s.q), trial});
}

VerifyResult verify_instance(const DomainSpec& spec, int trials, std::uint64_t seed) {
  VerifyResult res;
  res.instances_checked = 1;

  const RootPartition part = partition(spec);
  const oracle::RootSpaceBasis basis = oracle::build_basis(spec);
  const RationalMatrix frame = oracle::base_point_frame(spec);

  for (const Root& delta : part.system.roots())
    if (oracle::q0_member(delta, basis, frame) != part.lambda_q0.contains(delta)) ++res.membership_mismatches;

  const MinAttractiveness dma = min_attractiveness(part);
  const oracle::Linearization lin(part, basis);

  std::optional<std::size_t> min_coordinate_codim;
  for (const Root& alpha : part.phi) {
    const std::size_t codim = oracle::s_hat_codim(oracle::Functional::coordinate(alpha), lin);
    if (codim != attractiveness(alpha, part).size()) ++res.rank_mismatches;
    if (!oracle::transversality_check(alpha, part, lin)) ++res.transversality_failures;
    min_coordinate_codim = std::min(min_coordinate_codim.value_or(codim), codim);
  }

  if (!part.phi.empty()) {
    for (int t = 0; t < trials; ++t) {
      const auto l = oracle::random_functional(trial_seed(seed, spec, std::uint64_t(t)), part);
      const std::size_t codim = oracle::s_hat_codim(l, lin);
      if (codim < static_cast<std::size_t>(dma.value)) ++res.theorem_main_violations;
      if (codim < *min_coordinate_codim) ++res.maximum_prop_violations;
    }
  }

  const int bound = closed_form_bound(spec);
  if (dma.value != bound) res.paper_formula_mismatches.push_back({spec, dma.value, bound});
  if (!res.consistent()) res.failing_instances.push_back(label(spec));
  return res;
}

VerifyResult verify(const std::vector<DomainSpec>& specs, int trials, std::uint64_t seed) {
  const auto parts = detail::parallel_map(
      specs.size(), [&](std::size_t i) { return verify_instance(specs[i], trials, seed); });
  VerifyResult total;
  for (const auto& r : parts) total += r;
  return total;
}

Json verify_json(const std::string& family, int max_n, int trials, std::uint64_t seed,
                 const VerifyResult& result) {
  Json mismatches = Json::array();
  for (const auto& m : result.paper_formula_mismatches)
    mismatches.push_back({{"params", params_json(m.spec)}, {"d_ma", m.d_ma}, {"paper_bound", m.paper_bound}});
  return {
      {"family", family},
      {"max_n", max_n},
      {"trials", trials},
      {"seed", seed},
      {"instances_checked", result.instances_checked},
      {"membership_mismatches", result.membership_mismatches},
      {"rank_mismatches", result.rank_mismatches},
      {"theorem_main_violations", result.theorem_main_violations},
      {"maximum_prop_violations", result.maximum_prop_violations},
      {"transversality_failures", result.transversality_failures},
      {"paper_formula_mismatches", std::move(mismatches)},
      {"failing_instances", result.failing_instances},
      {"consistent", result.consistent()},
  };
}

}  // namespace rootbound::cli
