#ifndef ROOTBOUND_EXACT_HPP
#define ROOTBOUND_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

namespace rootbound {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "num/den" with den > 0 (den omitted never; "3/1" for integers).
std::string to_fraction_string(const Rational& x);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  /// E_{ij}: 1 at (i, j), 0 elsewhere. 0-based.
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;
  Rational trace() const;
  RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q. Rows are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination, so every intermediate quantity is an exact integer.
std::size_t rank(const RationalMatrix& m);

/// Reduced row echelon form over Q together with its pivot columns.
struct RowEchelon {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(RationalMatrix m);

/// Basis of {x : m x = 0}, one column per basis vector.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Columns of a and b side by side; row counts must agree.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace rootbound

#endif  // ROOTBOUND_EXACT_HPP
