#pragma once

// Exact integer linear algebra over lattices given by a Gram matrix.
//
// Everything here works on 64-bit signed integers. Arithmetic that could
// overflow goes through checked helpers and throws std::overflow_error
// instead of wrapping silently.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace weyl27 {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& diag);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Int k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Int k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(const IntVector& x, const IntMatrix& m);

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Row-major JSON array of arrays, e.g. [[1,0],[0,-1]].
std::string to_json(const IntMatrix& m);

struct GramLattice {
  std::size_t rank = 0;
  IntMatrix gram;

  /// Throws std::invalid_argument unless gram is square and symmetric.
  explicit GramLattice(IntMatrix g);
};

/// x^T * gram * y. Throws std::invalid_argument on a length mismatch.
Int inner_product(const IntVector& x, const IntVector& y, const GramLattice& lattice);

struct SNFResult {
  IntMatrix d;
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... in order.
  IntVector elementary_divisors() const;
};

/// Smith normal form with u * a * v == d.
///
/// Pivot choice is the smallest nonzero absolute value in the remaining
/// block, ties broken by lowest (row, col), so u and v are reproducible.
SNFResult smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row lattice of m. Zero rows are
/// dropped; pivots are positive and entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws std::invalid_argument if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Integral basis (in Hermite normal form) of {x : x * m == 0} for row vectors x.
std::vector<IntVector> left_kernel(const IntMatrix& m);

struct OrthogonalComplement {
  std::vector<IntVector> basis;
  IntMatrix gram_restricted;
};

/// {x in L : <x, g> = 0 for every g in gens}.
OrthogonalComplement orthogonal_complement(const std::vector<IntVector>& gens,
                                           const GramLattice& lattice);

/// True iff every vector has even norm, i.e. every diagonal entry is even.
/// The rank-0 lattice counts as even. Throws on a non-symmetric matrix.
bool is_even(const IntMatrix& gram);

struct CokernelInvariants {
  IntVector torsion;  // invariant factors > 1, in divisibility order
  std::size_t free_rank = 0;

  friend bool operator==(const CokernelInvariants&, const CokernelInvariants&) = default;
};

/// Structure of Z^target_rank / image(a) where a is target_rank x domain_rank
/// acting on column vectors.
CokernelInvariants cokernel_invariants(const IntMatrix& a, std::size_t target_rank);

}  // namespace weyl27
