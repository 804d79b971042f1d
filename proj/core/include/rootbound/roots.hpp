#ifndef ROOTBOUND_ROOTS_HPP
#define ROOTBOUND_ROOTS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rootbound {

/// Root systems handled by the library.
///
/// TypeA roots live in the n-coordinate gl(n) weight basis (e_i - e_j), so a
/// type A system of parameter n is the root system of sl(n). TypeC is the
/// root system of sp(2n): +-e_j +- e_k and +-2e_l.
enum class Family { TypeA, TypeC };

std::string to_string(Family family);

/// Integer coefficient vector in the e_1..e_n basis.
///
/// A Root carries no family tag; whether it is a root at all is decided by
/// the RootSystem that contains it.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}
  Root(std::initializer_list<int> coeffs) : coeffs_(coeffs) {}

  /// e_i - e_j (0-based indices).
  static Root difference(std::size_t n, std::size_t i, std::size_t j);
  /// sign * (e_i + e_j); i == j gives sign * 2e_i.
  static Root sum(std::size_t n, std::size_t i, std::size_t j, int sign = 1);

  std::size_t rank() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  /// Human-readable form such as "e1-e2" or "2e3".
  std::string pretty() const;

 private:
  std::vector<int> coeffs_;
};

Root negate(const Root& root);

/// Canonically ordered set of roots (lexicographic on coefficients).
using RootSet = std::set<Root>;

class RootSystem {
 public:
  RootSystem(Family family, std::size_t rank, std::vector<Root> roots);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  /// All roots in canonical order.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }

  bool contains(const Root& root) const;

  /// a + b when the sum is again a root of the system.
  /// Throws std::invalid_argument if a or b is not a root of the system.
  std::optional<Root> add_root(const Root& a, const Root& b) const;

 private:
  Family family_;
  std::size_t rank_;
  std::vector<Root> roots_;
};

/// Full root system of the given family. Requires n >= 2 for TypeA and
/// n >= 1 for TypeC; throws std::invalid_argument otherwise.
RootSystem build_root_system(Family family, std::size_t n);

/// True if the coefficient pattern is a root of the family (ignores rank
/// bounds other than the vector length).
bool matches_pattern(Family family, const Root& root);

}  // namespace rootbound

template <>
struct std::hash<rootbound::Root> {
  std::size_t operator()(const rootbound::Root& root) const noexcept;
};

#endif  // ROOTBOUND_ROOTS_HPP
