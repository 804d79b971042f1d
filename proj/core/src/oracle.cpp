#include "rootbound/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace rootbound::oracle {

namespace {

// Nonzero positions of a root, in increasing order, with multiplicity for +-2.
std::vector<std::size_t> support(const Root& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (int m = 0; m < (r[i] < 0 ? -r[i] : r[i]); ++m) out.push_back(i);
  return out;
}

MatrixElement sp_root_vector(const Root& r) {
  const std::size_t n = r.rank();
  const std::size_t dim = 2 * n;
  const auto idx = support(r);
  if (idx.size() != 2) throw std::invalid_argument("not a type C root: " + r.pretty());
  const std::size_t j = idx[0], k = idx[1];
  const int cj = r[j], ck = r[k];
  if (j != k && cj * ck < 0) {
    // e_a - e_b  ->  E_{a,b} - E_{n+b,n+a}
    const std::size_t a = cj > 0 ? j : k;
    const std::size_t b = cj > 0 ? k : j;
    MatrixElement x = RationalMatrix::unit(dim, a, b);
    x(n + b, n + a) = -1;
    return x;
  }
  if (cj > 0) {
    if (j == k) return RationalMatrix::unit(dim, j, n + j);
    MatrixElement x = RationalMatrix::unit(dim, j, n + k);
    x(k, n + j) = 1;
    return x;
  }
  if (j == k) return RationalMatrix::unit(dim, n + j, j);
  MatrixElement x = RationalMatrix::unit(dim, n + k, j);
  x(n + j, k) = 1;
  return x;
}

std::vector<Root> sorted(const RootSet& s) { return {s.begin(), s.end()}; }

}  // namespace

RationalMatrix symplectic_form(std::size_t n) {
  RationalMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

bool is_traceless(const MatrixElement& x) { return x.trace() == 0; }

bool is_symplectic(const MatrixElement& x) {
  if (!x.is_square() || x.rows() % 2 != 0) return false;
  const RationalMatrix j = symplectic_form(x.rows() / 2);
  return (x.transpose() * j + j * x).is_zero();
}

MatrixElement bracket(const MatrixElement& x, const MatrixElement& y) {
  if (!x.is_square() || x.rows() != y.rows() || y.cols() != y.rows())
    throw std::invalid_argument("bracket: size mismatch");
  return x * y - y * x;
}

Rational root_value(const Root& delta, const MatrixElement& h) {
  Rational v = 0;
  for (std::size_t i = 0; i < delta.rank(); ++i) v += delta[i] * h(i, i);
  return v;
}

RootSpaceBasis::RootSpaceBasis(Family family, std::size_t rank, std::map<Root, MatrixElement> by_root,
                               std::vector<MatrixElement> cartan)
    : family_(family),
      rank_(rank),
      dim_(family == Family::TypeA ? rank : 2 * rank),
      by_root_(std::move(by_root)),
      cartan_(std::move(cartan)) {
  for (const auto& [delta, x] : by_root_) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = 0; i < dim_ && !pivot; ++i)
      for (std::size_t j = 0; j < dim_ && !pivot; ++j)
        if (x(i, j) != 0) pivot = {i, j};
    if (!pivot || pivot->first == pivot->second)
      throw std::logic_error("root vector without an off-diagonal entry");
    for (const auto& [other, y] : by_root_)
      if (other != delta && y(pivot->first, pivot->second) != 0)
        throw std::logic_error("root vectors share a pivot entry");
    pivots_.emplace(delta, *pivot);
  }
}

const MatrixElement& RootSpaceBasis::at(const Root& delta) const {
  const auto it = by_root_.find(delta);
  if (it == by_root_.end()) throw std::invalid_argument("unknown root: " + delta.pretty());
  return it->second;
}

Rational RootSpaceBasis::coefficient(const MatrixElement& x, const Root& delta) const {
  const auto it = pivots_.find(delta);
  if (it == pivots_.end()) throw std::invalid_argument("unknown root: " + delta.pretty());
  const auto [i, j] = it->second;
  return x(i, j) / at(delta)(i, j);
}

Expansion RootSpaceBasis::expand(const MatrixElement& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw std::domain_error("expand: wrong matrix size");
  Expansion e;
  MatrixElement rest = x;
  for (const auto& [delta, v] : by_root_) {
    const Rational c = coefficient(rest, delta);
    if (c == 0) continue;
    rest -= c * v;
    e.root_part.emplace(delta, c);
  }
  if (!rest.is_diagonal()) throw std::domain_error("expand: element is not in the algebra");
  if (family_ == Family::TypeA) {
    if (rest.trace() != 0) throw std::domain_error("expand: diagonal part is not traceless");
  } else {
    for (std::size_t i = 0; i < rank_; ++i)
      if (rest(i, i) + rest(rank_ + i, rank_ + i) != 0)
        throw std::domain_error("expand: diagonal part is not symplectic");
  }
  e.cartan_part = std::move(rest);
  return e;
}

RootSpaceBasis build_basis(const DomainSpec& spec) {
  require_valid(spec);
  const Family family = root_family(spec);
  const std::size_t n = root_rank(spec);
  const RootSystem system = build_root_system(family, n);
  std::map<Root, MatrixElement> by_root;
  std::vector<MatrixElement> cartan;
  if (family == Family::TypeA) {
    for (const Root& r : system.roots()) {
      const auto idx = support(r);
      const std::size_t i = r[idx[0]] > 0 ? idx[0] : idx[1];
      const std::size_t j = r[idx[0]] > 0 ? idx[1] : idx[0];
      by_root.emplace(r, RationalMatrix::unit(n, i, j));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      MatrixElement h = RationalMatrix::unit(n, i, i);
      h(i + 1, i + 1) = -1;
      cartan.push_back(std::move(h));
    }
  } else {
    for (const Root& r : system.roots()) by_root.emplace(r, sp_root_vector(r));
    for (std::size_t i = 0; i < n; ++i) {
      MatrixElement h = RationalMatrix::unit(2 * n, i, i);
      h(n + i, n + i) = -1;
      cartan.push_back(std::move(h));
    }
  }
  return RootSpaceBasis(family, n, std::move(by_root), std::move(cartan));
}

RationalMatrix base_point_frame(const DomainSpec& spec) {
  const BasePoint bp = base_point(spec);
  const std::size_t n = root_rank(spec);
  std::vector<std::size_t> rows;
  if (std::holds_alternative<SuSpec>(spec)) {
    for (int i : bp.index_set) rows.push_back(static_cast<std::size_t>(i));
  } else {
    for (int j : bp.plus_indices) rows.push_back(static_cast<std::size_t>(j));
    for (int j : bp.conj_indices) rows.push_back(n + static_cast<std::size_t>(j));
  }
  const std::size_t dim = std::holds_alternative<SuSpec>(spec) ? n : 2 * n;
  RationalMatrix frame(dim, rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) frame(rows[c], c) = 1;
  return frame;
}

bool q0_member(const Root& delta, const RootSpaceBasis& basis, const RationalMatrix& frame) {
  const MatrixElement& x = basis.at(delta);
  return rank(hstack(frame, x * frame)) == rank(frame);
}

bool q0_member(const Root& delta, const DomainSpec& spec) {
  return q0_member(delta, build_basis(spec), base_point_frame(spec));
}

Functional Functional::coordinate(const Root& alpha) { return Functional{{{alpha, Rational(1)}}}; }

Rational Functional::operator()(const MatrixElement& x, const RootSpaceBasis& basis) const {
  const Expansion e = basis.expand(x);
  Rational v = 0;
  for (const auto& [alpha, a] : coeffs) {
    const auto it = e.root_part.find(alpha);
    if (it != e.root_part.end()) v += a * it->second;
  }
  return v;
}

void require_supported(const Functional& l, const RootPartition& part) {
  bool nonzero = false;
  for (const auto& [alpha, a] : l.coeffs) {
    if (a == 0) continue;
    nonzero = true;
    if (!part.phi.contains(alpha))
      throw std::invalid_argument("functional supported outside Phi at " + alpha.pretty());
  }
  if (!nonzero) throw std::invalid_argument("functional is identically zero");
}

Linearization::Linearization(const RootPartition& part, const RootSpaceBasis& basis)
    : part_(&part), rows_(sorted(part.gamma)), cols_(sorted(part.lambda_u_minus)) {
  entries_.reserve(rows_.size() * cols_.size());
  for (const Root& gamma : rows_) {
    for (const Root& beta : cols_) {
      const Expansion e = basis.expand(bracket(basis.at(beta), basis.at(gamma)));
      std::map<Root, Rational> along_phi;
      for (const auto& [delta, c] : e.root_part)
        if (part.phi.contains(delta)) along_phi.emplace(delta, c);
      entries_.push_back(std::move(along_phi));
    }
  }
}

RationalMatrix Linearization::functional_matrix(const Functional& l) const {
  require_supported(l, *part_);
  RationalMatrix m(rows_.size(), cols_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_.size(); ++j)
      for (const auto& [alpha, c] : entries_[i * cols_.size() + j]) {
        const auto it = l.coeffs.find(alpha);
        if (it != l.coeffs.end()) m(i, j) += it->second * c;
      }
  return m;
}

RationalMatrix functional_matrix(const Functional& l, const RootPartition& part,
                                 const RootSpaceBasis& basis) {
  require_supported(l, part);
  return Linearization(part, basis).functional_matrix(l);
}

std::size_t s_hat_codim(const Functional& l, const RootPartition& part, const RootSpaceBasis& basis) {
  return rank(functional_matrix(l, part, basis));
}

std::size_t s_hat_codim(const Functional& l, const Linearization& lin) {
  return rank(lin.functional_matrix(l));
}

MatrixElement assemble(const UMinusElement& xi, const RootSpaceBasis& basis) {
  MatrixElement x(basis.dim(), basis.dim());
  for (const auto& [beta, c] : xi)
    if (c != 0) x += c * basis.at(beta);
  return x;
}

Polynomial boundary_polynomial(const UMinusElement& xi, const Root& gamma, const Functional& l,
                               const RootPartition& part, const RootSpaceBasis& basis) {
  for (const auto& [beta, c] : xi)
    if (c != 0 && !part.lambda_u_minus.contains(beta))
      throw std::invalid_argument("xi has a component outside Lambda(u-): " + beta.pretty());
  if (!part.gamma.contains(gamma))
    throw std::invalid_argument("gamma is not in Gamma: " + gamma.pretty());

  const MatrixElement x = assemble(xi, basis);
  Polynomial poly;
  MatrixElement term = basis.at(gamma);
  Rational factorial = 1;
  // ad_x is nilpotent of index at most 2 * dim - 1 when x is nilpotent.
  const std::size_t bound = 2 * basis.dim();
  std::size_t m = 0;
  for (; m <= bound && !term.is_zero(); ++m) {
    if (m > 0) factorial *= static_cast<long>(m);
    poly.coeffs.push_back(l(term, basis) / factorial);
    term = bracket(x, term);
  }
  if (!term.is_zero()) throw std::logic_error("boundary_polynomial: ad_xi is not nilpotent");
  while (!poly.coeffs.empty() && poly.coeffs.back() == 0) poly.coeffs.pop_back();
  return poly;
}

bool transversality_check(const Root& alpha, const RootPartition& part, const Linearization& lin) {
  const Attractiveness at = attractiveness(alpha, part);
  const RationalMatrix m = lin.functional_matrix(Functional::coordinate(alpha));
  const RationalMatrix kernel = kernel_basis(m);

  RationalMatrix span(lin.cols().size(), at.size());
  for (std::size_t k = 0; k < at.size(); ++k) {
    const auto& cols = lin.cols();
    const auto pos = std::find(cols.begin(), cols.end(), at.pairs[k].beta) - cols.begin();
    span(static_cast<std::size_t>(pos), k) = 1;
  }
  const std::size_t dim_span = rank(span);
  if (dim_span != at.size()) return false;
  return rank(hstack(span, kernel)) == dim_span + kernel.cols();
}

bool transversality_check(const Root& alpha, const RootPartition& part, const RootSpaceBasis& basis) {
  if (!part.phi.contains(alpha))
    throw std::invalid_argument("transversality_check: " + alpha.pretty() + " is not in Phi");
  return transversality_check(alpha, part, Linearization(part, basis));
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t p : parts) {
    std::uint64_t z = h ^ (p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return h;
}

Functional random_functional(std::uint64_t seed, const RootPartition& part) {
  if (part.phi.empty()) throw std::invalid_argument("random_functional: Phi is empty");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (;;) {
    Functional l;
    for (const Root& alpha : part.phi) {
      const int a = coeff(rng);
      if (a != 0) l.coeffs.emplace(alpha, a);
    }
    if (!l.coeffs.empty()) return l;
  }
}

UMinusElement random_u_minus_element(std::uint64_t seed, const RootPartition& part) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  UMinusElement xi;
  if (part.lambda_u_minus.empty()) return xi;
  while (xi.empty())
    for (const Root& beta : part.lambda_u_minus) {
      const int c = coeff(rng);
      if (c != 0) xi.emplace(beta, c);
    }
  return xi;
}

}  // namespace rootbound::oracle
