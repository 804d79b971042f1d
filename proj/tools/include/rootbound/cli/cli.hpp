#ifndef ROOTBOUND_CLI_CLI_HPP
#define ROOTBOUND_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rootbound/concavity.hpp"
#include "rootbound/domains.hpp"
#include "rootbound/serialize.hpp"

namespace rootbound::cli {

enum class OutputFormat { json, csv, md };

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInconsistent = 2;

std::string render_report(const ConcavityReport& report, OutputFormat format);
std::string render_partition(const RootPartition& part, OutputFormat format);
/// One row per report, in the order given.
std::string render_sweep(const std::string& family, int max_n, const std::vector<ConcavityReport>& rows,
                         OutputFormat format);

/// CSV header and cells shared by report and sweep renderings.
std::vector<std::string> csv_columns(const std::string& family);
std::vector<std::string> csv_cells(const ConcavityReport& report);

/// Reports for every spec, evaluated concurrently, returned in input order.
std::vector<ConcavityReport> sweep(const std::vector<DomainSpec>& specs);

struct FormulaMismatch {
  DomainSpec spec;
  int d_ma = 0;
  int paper_bound = 0;
};

/// Outcome of the engine/oracle cross-checks over a parameter range.
struct VerifyResult {
  int instances_checked = 0;
  int membership_mismatches = 0;
  int rank_mismatches = 0;
  int theorem_main_violations = 0;
  int maximum_prop_violations = 0;
  int transversality_failures = 0;
  std::vector<FormulaMismatch> paper_formula_mismatches;
  /// Labels of instances with at least one failure (diagnostic only).
  std::vector<std::string> failing_instances;

  bool consistent() const;
  VerifyResult& operator+=(const VerifyResult& other);
};

/// Seed for trial `trial` on `spec`, derived from the run seed.
std::uint64_t trial_seed(std::uint64_t seed, const DomainSpec& spec, std::uint64_t trial);

/// All five checks on one instance with `trials` random functionals.
VerifyResult verify_instance(const DomainSpec& spec, int trials, std::uint64_t seed);

/// verify_instance over every spec, concurrently; aggregation follows input order.
VerifyResult verify(const std::vector<DomainSpec>& specs, int trials, std::uint64_t seed);

Json verify_json(const std::string& family, int max_n, int trials, std::uint64_t seed,
                 const VerifyResult& result);

/// Entry point: args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootbound::cli

#endif  // ROOTBOUND_CLI_CLI_HPP
