#ifndef ROOTBOUND_DOMAINS_HPP
#define ROOTBOUND_DOMAINS_HPP

#include <string>
#include <variant>
#include <vector>

#include "rootbound/roots.hpp"

namespace rootbound {

/// SU(p,p')-flag domain D_{r,r'} in Gr_k(C^n), n = p + p', k = r + r'.
struct SuSpec {
  int p = 0;
  int p_prime = 0;
  int r = 0;
  int r_prime = 0;

  int n() const { return p + p_prime; }
  int k() const { return r + r_prime; }
  auto operator<=>(const SuSpec&) const = default;
};

/// Sp(2n,R)-flag domain of isotropic k-planes of signature (p,q), k = p + q.
struct SpSpec {
  int n = 0;
  int p = 0;
  int q = 0;

  int k() const { return p + q; }
  auto operator<=>(const SpSpec&) const = default;
};

using DomainSpec = std::variant<SuSpec, SpSpec>;

/// "su" or "sp".
std::string family_name(const DomainSpec& spec);
/// Short label, e.g. "SU(2,1;1,1)" or "Sp(3;1,1)".
std::string label(const DomainSpec& spec);
/// Root-system family and rank of the complexified Lie algebra.
Family root_family(const DomainSpec& spec);
std::size_t root_rank(const DomainSpec& spec);

/// Violated invariants as messages; empty iff the spec is valid.
std::vector<std::string> validate(const DomainSpec& spec);

/// Throws std::invalid_argument carrying every violation.
void require_valid(const DomainSpec& spec);

/// Coordinate description of the base point p0. Indices are 0-based.
///
/// SU: p0 is spanned by the standard basis vectors listed in `index_set`
/// (the first r vectors of the positive block and the first r' of the
/// negative block).
/// Sp: p0 is spanned by v_j for j in `plus_indices` and by v_{n+j} for j in
/// `conj_indices`.
struct BasePoint {
  std::vector<int> index_set;
  std::vector<int> plus_indices;
  std::vector<int> conj_indices;
};

BasePoint base_point(const DomainSpec& spec);

/// The five root sets attached to a domain and its base point, taking the
/// cycle stabilizer to be k:
///   lambda_u_minus = lambda_k \ lambda_q0
///   gamma          = lambda_q0 \ lambda_k
///   phi            = roots \ (lambda_k u lambda_q0)
struct RootPartition {
  RootSystem system;
  RootSet lambda_k;
  RootSet lambda_q0;
  RootSet lambda_u_minus;
  RootSet gamma;
  RootSet phi;
};

RootSet k_roots(const DomainSpec& spec);

/// Roots of the isotropy subalgebra q0 at the base point, from closed-form
/// index rules.
RootSet q0_roots(const DomainSpec& spec);

RootPartition partition(const DomainSpec& spec);

/// Lambda(u-) empty: the cycle has no directions to move in and the bound
/// collapses to zero.
bool is_convex_degenerate(const RootPartition& part);

/// All valid SU specs with p + p' <= max_n, sorted by (p, p', r, r').
std::vector<DomainSpec> su_range(int max_n);
/// All valid Sp specs with n <= max_n, sorted by (n, p, q).
std::vector<DomainSpec> sp_range(int max_n);

}  // namespace rootbound

#endif  // ROOTBOUND_DOMAINS_HPP
