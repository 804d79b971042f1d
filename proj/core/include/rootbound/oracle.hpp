#ifndef ROOTBOUND_ORACLE_HPP
#define ROOTBOUND_ORACLE_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "rootbound/concavity.hpp"
#include "rootbound/domains.hpp"
#include "rootbound/exact.hpp"

/// Matrix realizations of sl(n, C) and sp(2n, C) used to check the root
/// combinatorics independently: every quantity here is computed from exact
/// matrix brackets, never from root arithmetic.
namespace rootbound::oracle {

using MatrixElement = RationalMatrix;

/// [[0, I_n], [-I_n, 0]].
RationalMatrix symplectic_form(std::size_t n);

bool is_traceless(const MatrixElement& x);
/// x^T J + J x == 0 for the form J of matching size.
bool is_symplectic(const MatrixElement& x);

/// XY - YX. Throws std::invalid_argument on a size mismatch.
MatrixElement bracket(const MatrixElement& x, const MatrixElement& y);

/// delta(H) for a diagonal H: sum_i delta_i * H_ii over the first rank entries.
Rational root_value(const Root& delta, const MatrixElement& h);

/// Decomposition of a Lie algebra element along the root vectors, plus the
/// diagonal remainder.
struct Expansion {
  std::map<Root, Rational> root_part;  // nonzero coefficients only
  MatrixElement cartan_part;
};

class RootSpaceBasis {
 public:
  RootSpaceBasis(Family family, std::size_t rank, std::map<Root, MatrixElement> by_root,
                 std::vector<MatrixElement> cartan);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  /// Matrix size: n for type A, 2n for type C.
  std::size_t dim() const { return dim_; }
  const std::map<Root, MatrixElement>& by_root() const { return by_root_; }
  const std::vector<MatrixElement>& cartan() const { return cartan_; }

  /// e_delta; throws std::invalid_argument for an unknown root.
  const MatrixElement& at(const Root& delta) const;

  /// Coefficient of e_delta in x, assuming x lies in the algebra.
  Rational coefficient(const MatrixElement& x, const Root& delta) const;

  /// Full decomposition. Throws std::domain_error if x is not in the algebra.
  Expansion expand(const MatrixElement& x) const;

 private:
  Family family_;
  std::size_t rank_;
  std::size_t dim_;
  std::map<Root, MatrixElement> by_root_;
  std::vector<MatrixElement> cartan_;
  // An entry that is nonzero in e_delta and zero in every other basis element.
  std::map<Root, std::pair<std::size_t, std::size_t>> pivots_;
};

RootSpaceBasis build_basis(const DomainSpec& spec);

/// Matrix whose columns span the base point p0 inside C^n or C^{2n}.
RationalMatrix base_point_frame(const DomainSpec& spec);

/// Whether e_delta maps p0 into itself, decided by comparing
/// rank[F | e_delta F] with rank F for the frame F of p0.
bool q0_member(const Root& delta, const DomainSpec& spec);
bool q0_member(const Root& delta, const RootSpaceBasis& basis, const RationalMatrix& frame);

/// L = sum a_alpha f_alpha, where f_alpha is dual to e_alpha on A.
struct Functional {
  std::map<Root, Rational> coeffs;  // nonzero entries only

  static Functional coordinate(const Root& alpha);
  Rational operator()(const MatrixElement& x, const RootSpaceBasis& basis) const;
};

/// Throws std::invalid_argument if L is zero or has support outside Phi.
void require_supported(const Functional& l, const RootPartition& part);

/// Structure data of the linearization: for every (gamma, beta) in
/// Gamma x Lambda(u-), the expansion of [e_beta, e_gamma] along Phi.
class Linearization {
 public:
  Linearization(const RootPartition& part, const RootSpaceBasis& basis);

  const std::vector<Root>& rows() const { return rows_; }  // Gamma, canonical order
  const std::vector<Root>& cols() const { return cols_; }  // Lambda(u-), canonical order

  /// Rows Gamma, columns Lambda(u-); entry L([e_beta, e_gamma]).
  RationalMatrix functional_matrix(const Functional& l) const;

 private:
  const RootPartition* part_;
  std::vector<Root> rows_;
  std::vector<Root> cols_;
  std::vector<std::map<Root, Rational>> entries_;  // rows_.size() * cols_.size(), row-major
};

RationalMatrix functional_matrix(const Functional& l, const RootPartition& part,
                                 const RootSpaceBasis& basis);

/// Codimension of the linearized boundary variety {xi in u- : L([xi, E]) = 0}
/// inside u-, i.e. the rank of the functional matrix.
std::size_t s_hat_codim(const Functional& l, const RootPartition& part, const RootSpaceBasis& basis);
std::size_t s_hat_codim(const Functional& l, const Linearization& lin);

/// Polynomial in t with rational coefficients; coeffs[m] multiplies t^m.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
struct Polynomial {
  std::vector<Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Rational coefficient(std::size_t m) const { return m < coeffs.size() ? coeffs[m] : Rational(0); }
};

/// xi as a map Lambda(u-) -> Q.
using UMinusElement = std::map<Root, Rational>;

MatrixElement assemble(const UMinusElement& xi, const RootSpaceBasis& basis);

/// t -> L(Ad(exp(t xi)) e_gamma) = sum_m t^m / m! * L(ad_xi^m e_gamma).
/// The series terminates because ad_xi is nilpotent on u-.
/// Throws std::invalid_argument if xi leaves Lambda(u-) or gamma is not in
/// Gamma.
Polynomial boundary_polynomial(const UMinusElement& xi, const Root& gamma, const Functional& l,
                               const RootPartition& part, const RootSpaceBasis& basis);

/// R_alpha = span{e_beta : beta in At(alpha)} meets ker of the functional
/// matrix of f_alpha only in 0, and has dimension |At(alpha)|.
bool transversality_check(const Root& alpha, const RootPartition& part, const RootSpaceBasis& basis);
bool transversality_check(const Root& alpha, const RootPartition& part, const Linearization& lin);

/// splitmix64-style combination of seed material.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Integer coefficients uniform in [-9, 9] on every alpha in Phi, resampled
/// until not identically zero. Throws std::invalid_argument if Phi is empty.
Functional random_functional(std::uint64_t seed, const RootPartition& part);

/// Same distribution over Lambda(u-); may be zero only if Lambda(u-) is empty.
UMinusElement random_u_minus_element(std::uint64_t seed, const RootPartition& part);

}  // namespace rootbound::oracle

#endif  // ROOTBOUND_ORACLE_HPP
