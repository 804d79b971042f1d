#include "rootbound/domains.hpp"

#include <stdexcept>

namespace rootbound {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Position of the +1 and -1 entries of a type A pattern (also e_j - e_k in C).
struct DifferenceIndices {
  std::size_t plus;
  std::size_t minus;
};

std::optional<DifferenceIndices> difference_indices(const Root& root) {
  std::optional<std::size_t> plus, minus;
  for (std::size_t i = 0; i < root.rank(); ++i) {
    if (root[i] == 1) {
      if (plus) return std::nullopt;
      plus = i;
    } else if (root[i] == -1) {
      if (minus) return std::nullopt;
      minus = i;
    } else if (root[i] != 0) {
      return std::nullopt;
    }
  }
  if (!plus || !minus) return std::nullopt;
  return DifferenceIndices{*plus, *minus};
}

// Support j <= k of +-(e_j + e_k) (j == k for +-2e_j), with the sign.
struct SumIndices {
  std::size_t j;
  std::size_t k;
  int sign;
};

SumIndices sum_indices(const Root& root) {
  std::vector<std::size_t> support;
  int sign = 0;
  for (std::size_t i = 0; i < root.rank(); ++i) {
    if (root[i] == 0) continue;
    const int s = root[i] > 0 ? 1 : -1;
    if (sign != 0 && s != sign) throw std::logic_error("mixed-sign root is not a sum root");
    sign = s;
    support.push_back(i);
    if (root[i] == 2 || root[i] == -2) support.push_back(i);
  }
  if (support.size() != 2) throw std::logic_error("malformed sum root");
  return {support[0], support[1], sign};
}

bool su_q0_member(const SuSpec& s, const Root& root) {
  const auto idx = difference_indices(root);
  if (!idx) throw std::invalid_argument("not a type A root: " + root.pretty());
  auto in_s = [&](std::size_t i) {
    const int x = static_cast<int>(i);
    return x < s.r || (x >= s.p && x < s.p + s.r_prime);
  };
  // E_{ij} (root e_i - e_j) sends basis vector j to i.
  return !(in_s(idx->minus) && !in_s(idx->plus));
}

bool sp_q0_member(const SpSpec& s, const Root& root) {
  const int n = s.n, p = s.p, q = s.q;
  if (const auto idx = difference_indices(root)) {
    const int j = static_cast<int>(idx->plus), k = static_cast<int>(idx->minus);
    return (k >= p || j < p) && (j < n - q || k >= n - q);
  }
  const auto [j0, k0, sign] = sum_indices(root);
  const int j = static_cast<int>(j0), k = static_cast<int>(k0);
  if (sign > 0) return k < n - q || j < p;
  return j >= p || k >= n - q;
}

}  // namespace

std::string family_name(const DomainSpec& spec) {
  return std::holds_alternative<SuSpec>(spec) ? "su" : "sp";
}

std::string label(const DomainSpec& spec) {
  return std::visit(
      overloaded{
          [](const SuSpec& s) {
            return "SU(" + std::to_string(s.p) + "," + std::to_string(s.p_prime) + ";" +
                   std::to_string(s.r) + "," + std::to_string(s.r_prime) + ")";
          },
          [](const SpSpec& s) {
            return "Sp(" + std::to_string(s.n) + ";" + std::to_string(s.p) + "," +
                   std::to_string(s.q) + ")";
          },
      },
      spec);
}

Family root_family(const DomainSpec& spec) {
  return std::holds_alternative<SuSpec>(spec) ? Family::TypeA : Family::TypeC;
}

std::size_t root_rank(const DomainSpec& spec) {
  return std::visit(overloaded{[](const SuSpec& s) { return static_cast<std::size_t>(s.n()); },
                               [](const SpSpec& s) { return static_cast<std::size_t>(s.n); }},
                    spec);
}

std::vector<std::string> validate(const DomainSpec& spec) {
  std::vector<std::string> out;
  std::visit(overloaded{
                 [&](const SuSpec& s) {
                   if (s.p < 1) out.push_back("p must be positive");
                   if (s.p_prime < 1) out.push_back("p_prime must be positive");
                   if (s.r < 0) out.push_back("r must be non-negative");
                   if (s.r > s.p) out.push_back("r exceeds p");
                   if (s.r_prime < 0) out.push_back("r_prime must be non-negative");
                   if (s.r_prime > s.p_prime) out.push_back("r_prime exceeds p_prime");
                   if (s.k() < 1 || s.k() > s.n() - 1)
                     out.push_back("r + r_prime must lie in [1, n-1] with n = p + p_prime");
                 },
                 [&](const SpSpec& s) {
                   if (s.n < 1) out.push_back("n must be positive");
                   if (s.p < 0) out.push_back("p must be non-negative");
                   if (s.q < 0) out.push_back("q must be non-negative");
                   if (s.k() < 1) out.push_back("p + q must be at least 1");
                   if (s.k() >= s.n) out.push_back("p + q must be less than n");
                 },
             },
             spec);
  return out;
}

void require_valid(const DomainSpec& spec) {
  const auto violations = validate(spec);
  if (violations.empty()) return;
  std::string msg = "invalid domain " + label(spec) + ":";
  for (const auto& v : violations) msg += " " + v + ";";
  throw std::invalid_argument(msg);
}

BasePoint base_point(const DomainSpec& spec) {
  require_valid(spec);
  BasePoint bp;
  std::visit(overloaded{
                 [&](const SuSpec& s) {
                   for (int i = 0; i < s.r; ++i) bp.index_set.push_back(i);
                   for (int i = 0; i < s.r_prime; ++i) bp.index_set.push_back(s.p + i);
                 },
                 [&](const SpSpec& s) {
                   for (int j = 0; j < s.p; ++j) bp.plus_indices.push_back(j);
                   for (int j = s.n - s.q; j < s.n; ++j) bp.conj_indices.push_back(j);
                   if (!bp.plus_indices.empty() && !bp.conj_indices.empty() &&
                       bp.plus_indices.back() >= bp.conj_indices.front())
                     throw std::logic_error("base point index ranges overlap");
                 },
             },
             spec);
  return bp;
}

RootSet k_roots(const DomainSpec& spec) {
  require_valid(spec);
  const RootSystem system = build_root_system(root_family(spec), root_rank(spec));
  RootSet out;
  std::visit(overloaded{
                 [&](const SuSpec& s) {
                   for (const Root& r : system.roots()) {
                     const auto idx = difference_indices(r);
                     const bool a = static_cast<int>(idx->plus) < s.p;
                     const bool b = static_cast<int>(idx->minus) < s.p;
                     if (a == b) out.insert(r);
                   }
                 },
                 [&](const SpSpec&) {
                   for (const Root& r : system.roots())
                     if (difference_indices(r)) out.insert(r);
                 },
             },
             spec);
  return out;
}

RootSet q0_roots(const DomainSpec& spec) {
  require_valid(spec);
  const RootSystem system = build_root_system(root_family(spec), root_rank(spec));
  RootSet out;
  for (const Root& r : system.roots()) {
    const bool member = std::visit(
        overloaded{[&](const SuSpec& s) { return su_q0_member(s, r); },
                   [&](const SpSpec& s) { return sp_q0_member(s, r); }},
        spec);
    if (member) out.insert(r);
  }
  return out;
}

RootPartition partition(const DomainSpec& spec) {
  RootPartition part{build_root_system(root_family(spec), root_rank(spec)),
                     k_roots(spec), q0_roots(spec), {}, {}, {}};
  for (const Root& r : part.system.roots()) {
    const bool in_k = part.lambda_k.contains(r);
    const bool in_q0 = part.lambda_q0.contains(r);
    if (in_k && !in_q0) part.lambda_u_minus.insert(r);
    if (in_q0 && !in_k) part.gamma.insert(r);
    if (!in_k && !in_q0) part.phi.insert(r);
  }
  return part;
}

bool is_convex_degenerate(const RootPartition& part) { return part.lambda_u_minus.empty(); }

std::vector<DomainSpec> su_range(int max_n) {
  std::vector<DomainSpec> out;
  for (int p = 1; p < max_n; ++p)
    for (int pp = 1; p + pp <= max_n; ++pp)
      for (int r = 0; r <= p; ++r)
        for (int rp = 0; rp <= pp; ++rp) {
          DomainSpec spec = SuSpec{p, pp, r, rp};
          if (validate(spec).empty()) out.push_back(spec);
        }
  return out;
}

std::vector<DomainSpec> sp_range(int max_n) {
  std::vector<DomainSpec> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        DomainSpec spec = SpSpec{n, p, q};
        if (validate(spec).empty()) out.push_back(spec);
      }
  return out;
}

}  // namespace rootbound
