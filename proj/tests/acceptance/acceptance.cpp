// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 7   run only criterion 7 (repeatable)
//   acceptance --cli PATH      use the rootbound binary at PATH for criterion 11

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "rootbound/cli/cli.hpp"
#include "rootbound/oracle.hpp"
#include "support/brute_force.hpp"

namespace {

using namespace rootbound;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: no limit stated
  std::function<Verdict()> run;
};

// Range shared by criteria 2-6, 9 and 10: SU with p + p' <= 6, Sp with n <= 5.
std::vector<DomainSpec> oracle_range() {
  auto specs = su_range(6);
  const auto sp = sp_range(5);
  specs.insert(specs.end(), sp.begin(), sp.end());
  return specs;
}

constexpr std::uint64_t kSuiteSeed = 20261019;
constexpr int kTrials = 100;
constexpr int kEscapeTriples = 20;
constexpr int kEscapeAttempts = 5000;

std::string join(const std::vector<std::string>& items, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < items.size() && i < limit; ++i) out += (i ? ", " : "") + items[i];
  if (items.size() > limit) out += ", ... (" + std::to_string(items.size()) + " total)";
  return out;
}

RootSet nonnegative(const RootSet& roots) {
  RootSet out;
  for (const Root& r : roots)
    if (std::all_of(r.coeffs().begin(), r.coeffs().end(), [](int c) { return c >= 0; })) out.insert(r);
  return out;
}

RootSet nonpositive(const RootSet& roots) {
  RootSet out;
  for (const Root& r : roots)
    if (std::all_of(r.coeffs().begin(), r.coeffs().end(), [](int c) { return c <= 0; })) out.insert(r);
  return out;
}

Verdict root_list_fidelity() {
  Verdict v;
  for (const SpSpec s : {SpSpec{3, 1, 1}, SpSpec{4, 1, 2}, SpSpec{5, 2, 2}}) {
    const auto part = partition(s);
    const auto lists = testing::sp_displayed_lists(s.n, s.p, s.q);
    const bool ok = nonnegative(part.lambda_q0) == lists.s_plus_q0 &&
                    nonpositive(part.lambda_q0) == lists.s_minus_q0 && part.lambda_u_minus == lists.u_minus;
    if (!ok) {
      v.pass = false;
      v.detail += label(s) + " differs; ";
    }
  }
  if (v.pass) v.detail = "s+ n q0, s- n q0, u- match at (3,1,1), (4,1,2), (5,2,2)";
  return v;
}

Verdict membership_adjudication() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& spec : oracle_range()) {
    const auto basis = oracle::build_basis(spec);
    const auto frame = oracle::base_point_frame(spec);
    const RootSet q0 = q0_roots(spec);
    for (const auto& [delta, e] : basis.by_root()) {
      ++checked;
      if (oracle::q0_member(delta, basis, frame) != q0.contains(delta))
        bad.push_back(label(spec) + ":" + delta.pretty());
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(checked) + " roots agree" : "mismatches: " + join(bad)};
}

Verdict rank_identity() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& spec : oracle_range()) {
    const auto part = partition(spec);
    const oracle::Linearization lin(part, oracle::build_basis(spec));
    for (const Root& alpha : part.phi) {
      ++checked;
      const auto codim = oracle::s_hat_codim(oracle::Functional::coordinate(alpha), lin);
      if (codim != attractiveness(alpha, part).size()) bad.push_back(label(spec) + ":" + alpha.pretty());
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(checked) + " coordinate functionals" : join(bad)};
}

// Criteria 4 and 5 share the sampling; the flag picks which bound is checked.
Verdict sampled_functionals(bool against_coordinate_minimum) {
  std::vector<std::string> bad;
  std::size_t sampled = 0;
  for (const auto& spec : oracle_range()) {
    const auto part = partition(spec);
    if (part.phi.empty()) continue;
    const oracle::Linearization lin(part, oracle::build_basis(spec));
    std::size_t bound = static_cast<std::size_t>(min_attractiveness(part).value);
    if (against_coordinate_minimum) {
      bound = part.lambda_u_minus.size();
      for (const Root& alpha : part.phi)
        bound = std::min(bound, oracle::s_hat_codim(oracle::Functional::coordinate(alpha), lin));
    }
    for (int t = 0; t < kTrials; ++t) {
      ++sampled;
      const auto l = oracle::random_functional(cli::trial_seed(kSuiteSeed, spec, std::uint64_t(t)), part);
      if (oracle::s_hat_codim(l, lin) < bound) bad.push_back(label(spec) + " trial " + std::to_string(t));
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(sampled) + " functionals, 0 violations"
                                   : std::to_string(bad.size()) + " violations: " + join(bad)};
}

Verdict transversality() {
  std::vector<std::string> bad;
  std::size_t checked = 0;
  for (const auto& spec : oracle_range()) {
    const auto part = partition(spec);
    const oracle::Linearization lin(part, oracle::build_basis(spec));
    for (const Root& alpha : part.phi) {
      ++checked;
      if (!oracle::transversality_check(alpha, part, lin)) bad.push_back(label(spec) + ":" + alpha.pretty());
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(checked) + " roots transversal" : join(bad)};
}

Verdict closed_form_su() {
  Verdict v;
  std::vector<std::string> formula_errors, equal_rank_misses;
  bool saw_reference = false;
  for (const auto& rep : cli::sweep(su_range(6))) {
    const auto& s = std::get<SuSpec>(rep.spec);
    const int printed = std::min(s.r + s.p_prime - s.r_prime, s.p - s.r + s.p_prime);
    if (rep.closed_form_bound != printed) formula_errors.push_back(label(rep.spec));
    if (s.r_prime == s.p_prime && rep.d_ma != printed)
      equal_rank_misses.push_back(label(rep.spec) + " d_ma=" + std::to_string(rep.d_ma) +
                                  " bound=" + std::to_string(printed));
    if (s.p == 1 && s.p_prime == 2 && s.r == 1 && s.r_prime == 1) {
      saw_reference = true;
      if (rep.d_ma != 1 || rep.closed_form_bound != 2 || rep.closed_form_match) {
        v.pass = false;
        v.detail += "SU(1,2;1,1) gave d_ma=" + std::to_string(rep.d_ma) + "; ";
      }
    }
  }
  if (!saw_reference) {
    v.pass = false;
    v.detail += "SU(1,2;1,1) missing from sweep; ";
  }
  if (!formula_errors.empty()) {
    v.pass = false;
    v.detail += "formula evaluated wrongly at " + join(formula_errors) + "; ";
  }
  if (!equal_rank_misses.empty()) {
    v.pass = false;
    v.detail += "r'=p' instances with d_ma != printed formula: " + join(equal_rank_misses);
  }
  if (v.pass) v.detail = "formula evaluated on every instance; r'=p' agree; SU(1,2;1,1): d_ma 1 vs 2";
  return v;
}

Verdict closed_form_sp() {
  Verdict v;
  bool saw_reference = false;
  for (const auto& rep : cli::sweep(sp_range(5))) {
    const auto& s = std::get<SpSpec>(rep.spec);
    if (rep.closed_form_bound != std::min(s.n - s.p, s.n - s.q)) {
      v.pass = false;
      v.detail += "formula evaluated wrongly at " + label(rep.spec) + "; ";
    }
    if (s.n == 3 && s.p == 1 && s.q == 1) {
      saw_reference = true;
      if (rep.d_ma != 1 || rep.closed_form_bound != 2 || rep.closed_form_match) {
        v.pass = false;
        v.detail += "Sp(3;1,1) gave d_ma=" + std::to_string(rep.d_ma) + "; ";
      }
    }
  }
  if (!saw_reference) v = {false, "Sp(3;1,1) missing from sweep"};
  if (v.pass) v.detail = "formula evaluated on every instance; Sp(3;1,1): d_ma 1 vs 2";
  return v;
}

Verdict degenerate_cases() {
  std::vector<std::string> bad;
  int degenerate = 0;
  for (const auto& rep : cli::sweep(oracle_range())) {
    if (rep.dim_u_minus != 0) continue;
    ++degenerate;
    if (rep.d_ma != 0 || !rep.convex_degenerate) bad.push_back(label(rep.spec));
  }
  if (degenerate == 0) return {false, "no degenerate instance in range"};
  return {bad.empty(), bad.empty() ? std::to_string(degenerate) + " degenerate instances report 0" : join(bad)};
}

Verdict first_order_escape() {
  std::vector<std::string> bad;
  int triples = 0, vacuous = 0;
  for (const auto& spec : oracle_range()) {
    const auto part = partition(spec);
    const auto report_ = report(spec);
    bool any_pair = false;
    for (const auto& [alpha, size] : report_.per_alpha) any_pair = any_pair || size > 0;
    if (!any_pair) {
      ++vacuous;
      continue;
    }
    const auto basis = oracle::build_basis(spec);
    const std::vector<Root> gammas(part.gamma.begin(), part.gamma.end());
    int found = 0;
    for (int attempt = 0; attempt < kEscapeAttempts && found < kEscapeTriples; ++attempt) {
      const auto seed = cli::trial_seed(kSuiteSeed + 1, spec, std::uint64_t(attempt));
      const auto xi = oracle::random_u_minus_element(oracle::derive_seed({seed, 1}), part);
      const auto l = oracle::random_functional(oracle::derive_seed({seed, 2}), part);
      const Root& gamma = gammas[oracle::derive_seed({seed, 3}) % gammas.size()];
      const Rational first = l(oracle::bracket(oracle::assemble(xi, basis), basis.at(gamma)), basis);
      if (first == 0) continue;
      ++found;
      const auto poly = oracle::boundary_polynomial(xi, gamma, l, part, basis);
      if (poly.is_zero() || poly.coefficient(1) != first) bad.push_back(label(spec));
    }
    triples += found;
    if (found < kEscapeTriples) bad.push_back(label(spec) + " (only " + std::to_string(found) + " triples)");
  }
  return {bad.empty(), bad.empty() ? std::to_string(triples) + " triples, " + std::to_string(vacuous) +
                                         " instances without attractive roots"
                                   : join(bad)};
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) c.out.append(buf.data(), n);
  const int status = pclose(pipe);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Verdict determinism(const std::string& cli_path) {
  const std::vector<std::string> args{"verify", "sp", "--max-n", "4", "--trials", "50", "--seed", "7"};
  Captured first, second;
  if (cli_path.empty()) {
    auto in_process = [&] {
      std::ostringstream out, err;
      const int code = cli::run(args, out, err);
      return Captured{code, out.str()};
    };
    first = in_process();
    second = in_process();
  } else {
    std::string command = cli_path;
    for (const auto& a : args) command += " " + a;
    first = capture(command);
    second = capture(command);
  }
  if (first.code != 0 || second.code != 0)
    return {false, "exit codes " + std::to_string(first.code) + ", " + std::to_string(second.code)};
  if (first.out.empty() || first.out != second.out) return {false, "outputs differ"};
  return {true, std::to_string(first.out.size()) + " identical bytes" +
                    (cli_path.empty() ? " (in-process)" : " (" + cli_path + ")")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootbound acceptance suite"};
  std::vector<int> selected;
  std::string cli_path;
  app.add_option("--criterion", selected, "criterion number(s) to run")->check(CLI::Range(1, 11));
  app.add_option("--cli", cli_path, "path to the rootbound executable");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "root-list fidelity", 1, root_list_fidelity},
      {2, "membership adjudication", 30, membership_adjudication},
      {3, "rank identity", 60, rank_identity},
      {4, "sampled codim >= d_ma", 300, [] { return sampled_functionals(false); }},
      {5, "sampled codim >= coordinate minimum", 0, [] { return sampled_functionals(true); }},
      {6, "transversality", 0, transversality},
      {7, "closed-form comparison SU", 0, closed_form_su},
      {8, "closed-form comparison Sp", 0, closed_form_sp},
      {9, "degenerate convex cases", 0, degenerate_cases},
      {10, "first-order escape", 0, first_order_escape},
      {11, "determinism", 0, [&] { return determinism(cli_path); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s) {
      v.pass = false;
      v.detail += " [over time limit " + std::to_string(c.time_limit_s) + " s]";
    }
    if (!v.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", seconds);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << "): " << v.detail
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}
