// Exact integer and rational linear algebra for lattice checks on toric cones.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace toriclag {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Point of the integer lattice Z^m.
using LatticeVector = std::vector<Int>;
/// Vector with exact rational entries (element of g or g*).
using RationalVector = std::vector<Rat>;

RationalVector to_rational(const LatticeVector& v);

Int dot(const LatticeVector& a, const LatticeVector& b);
Rat dot(const RationalVector& a, const RationalVector& b);
Rat dot(const RationalVector& a, const LatticeVector& b);

bool is_zero(const LatticeVector& v);

/// gcd of all entries (nonnegative); 0 only for the zero vector.
Int content(const LatticeVector& v);

/// v divided by its content; direction preserved. Throws on the zero vector.
LatticeVector primitive_part(const LatticeVector& v);

/// True iff the gcd of the entries is 1. Throws on the zero vector.
bool is_primitive(const LatticeVector& v);

/// Dense rectangular matrix with arbitrary-precision integer entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<LatticeVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// u * a * v == d with u, v unimodular and d diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix u, d, v;
  /// Nonzero diagonal entries of d, in order.
  std::vector<Int> nonzero_divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Rank over Q by exact Gaussian elimination; 0 for an empty list.
int rational_rank(const std::vector<RationalVector>& vs);

/// Exact solution x of a x = b over the integers, if one exists.
std::optional<LatticeVector> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

/// Integer gamma with <row_i, gamma> = 1 for every row of a, if one exists.
std::optional<LatticeVector> solve_all_ones(const IntMatrix& a);

}  // namespace toriclag
