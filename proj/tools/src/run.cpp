#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include "rootbound/cli/cli.hpp"

namespace rootbound::cli {

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"md", OutputFormat::md}};

struct Selectors {
  SuSpec su;
  SpSpec sp;
  OutputFormat format = OutputFormat::json;
};

// Adds `su` and `sp` leaves with the domain selectors to a command.
std::pair<CLI::App*, CLI::App*> add_family_leaves(CLI::App& parent, Selectors& sel, bool with_spec,
                                                  bool with_format) {
  auto* su = parent.add_subcommand("su", "SU(p,p') flag domain D_{r,r'}");
  auto* sp = parent.add_subcommand("sp", "Sp(2n,R) flag domain of signature (p,q)");
  if (with_spec) {
    su->add_option("--p", sel.su.p, "size of the positive block")->required();
    su->add_option("--p-prime", sel.su.p_prime, "size of the negative block")->required();
    su->add_option("--r", sel.su.r, "positive part of the signature")->required();
    su->add_option("--r-prime", sel.su.r_prime, "negative part of the signature")->required();
    sp->add_option("--n", sel.sp.n, "half the dimension of the symplectic space")->required();
    sp->add_option("--p", sel.sp.p, "positive part of the signature")->required();
    sp->add_option("--q", sel.sp.q, "negative part of the signature")->required();
  }
  if (with_format) {
    for (auto* leaf : {su, sp})
      leaf->add_option("--format", sel.format, "json, csv or md")
          ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  }
  parent.require_subcommand(1);
  return {su, sp};
}

bool print_violations(const DomainSpec& spec, std::ostream& err) {
  const auto violations = validate(spec);
  for (const auto& v : violations) err << "error: " << v << "\n";
  return violations.empty();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-combinatoric pseudoconcavity bounds for SU(p,p') and Sp(2n,R) flag domains",
               "rootbound"};
  app.require_subcommand(1);

  Selectors bound_sel, part_sel, sweep_sel;
  auto* bound = app.add_subcommand("bound", "concavity report for one domain");
  auto [bound_su, bound_sp] = add_family_leaves(*bound, bound_sel, true, true);

  auto* part = app.add_subcommand("partition", "root partition for one domain");
  auto [part_su, part_sp] = add_family_leaves(*part, part_sel, true, true);

  int sweep_max_n = 0;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "reports for every domain up to a size");
  auto [sweep_su, sweep_sp] = add_family_leaves(*sweep_cmd, sweep_sel, false, true);
  for (auto* leaf : {sweep_su, sweep_sp}) {
    leaf->add_option("--max-n", sweep_max_n, "largest n (p + p' for SU)")->required();
    leaf->add_option("--out", sweep_out, "write the table to this path");
  }

  Selectors verify_sel;
  int verify_max_n = 0;
  int trials = 100;
  std::uint64_t seed = 0;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check the engine against the matrix oracle");
  auto [verify_su, verify_sp] = add_family_leaves(*verify_cmd, verify_sel, false, false);
  for (auto* leaf : {verify_su, verify_sp}) {
    leaf->add_option("--max-n", verify_max_n, "largest n (p + p' for SU)")->required();
    leaf->add_option("--trials", trials, "random functionals per instance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    leaf->add_option("--seed", seed, "seed for the random functionals")->capture_default_str();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bound->parsed()) {
      const DomainSpec spec = bound_su->parsed() ? DomainSpec{bound_sel.su} : DomainSpec{bound_sel.sp};
      if (!print_violations(spec, err)) return kExitUsage;
      out << render_report(report(spec), bound_sel.format);
      return kExitOk;
    }
    if (part->parsed()) {
      const DomainSpec spec = part_su->parsed() ? DomainSpec{part_sel.su} : DomainSpec{part_sel.sp};
      if (!print_violations(spec, err)) return kExitUsage;
      out << render_partition(partition(spec), part_sel.format);
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      const std::string family = sweep_su->parsed() ? "su" : "sp";
      const auto specs = family == "su" ? su_range(sweep_max_n) : sp_range(sweep_max_n);
      if (specs.empty()) {
        err << "error: no valid " << family << " domains with max-n " << sweep_max_n << "\n";
        return kExitUsage;
      }
      const std::string table = render_sweep(family, sweep_max_n, sweep(specs), sweep_sel.format);
      if (sweep_out.empty()) {
        out << table;
        return kExitOk;
      }
      std::ofstream file(sweep_out, std::ios::binary);
      if (!file || !(file << table) || !file.flush()) {
        err << "error: cannot write " << sweep_out << "\n";
        return kExitUsage;
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const std::string family = verify_su->parsed() ? "su" : "sp";
      const auto specs = family == "su" ? su_range(verify_max_n) : sp_range(verify_max_n);
      if (specs.empty()) {
        err << "error: no valid " << family << " domains with max-n " << verify_max_n << "\n";
        return kExitUsage;
      }
      const VerifyResult result = verify(specs, trials, seed);
      out << verify_json(family, verify_max_n, trials, seed, result).dump(2) << "\n";
      return result.consistent() ? kExitOk : kExitInconsistent;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace rootbound::cli
