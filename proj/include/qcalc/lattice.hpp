#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "qcalc/scalars.hpp"

namespace qcalc {

/// Integer exponent tuple (k_1, ..., k_n) of a Laurent monomial. Arithmetic
/// is checked: overflow throws OverflowError instead of wrapping.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t rank) : entries_(rank, 0) {}
  ExponentVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  static ExponentVector unit(std::size_t rank, std::size_t index);

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;

  ExponentVector operator+(const ExponentVector& rhs) const;
  ExponentVector operator-(const ExponentVector& rhs) const;
  ExponentVector operator-() const;
  ExponentVector scaled(std::int64_t factor) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  /// "(1,-1,0)"
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) { return os << v.str(); }

 private:
  std::vector<std::int64_t> entries_;
};

using BigVector = std::vector<BigInt>;

BigVector to_big(const ExponentVector& v);
/// Throws OverflowError when an entry does not fit in 64 bits.
ExponentVector to_exponents(const BigVector& v);

/// Dense rows x cols matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j].
  static IntMatrix from_columns(const std::vector<ExponentVector>& columns, std::size_t rows);
  /// Matrix whose i-th row is rows[i].
  static IntMatrix from_rows(const std::vector<ExponentVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  BigVector row(std::size_t r) const;
  BigVector column(std::size_t c) const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor);
  void negate_row(std::size_t r);

  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend BigVector operator*(const IntMatrix& a, const BigVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_int(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // U
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V
  /// Diagonal entries d_1 | d_2 | ... (zeros included, trailing).
  BigVector diagonal_entries() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite form H = W * M. Each nonzero row has its pivot at its
/// last nonzero column; pivots are positive and strictly decrease from one
/// row to the next, and every other row's entry in a pivot column lies in
/// [0, pivot). Rows past `rank` are zero, and the matching rows of W span the
/// left kernel of M.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row
};

HermiteForm hermite_form(const IntMatrix& m);

/// Z^n / L for the sublattice L spanned by a list of generators.
class LatticeQuotient {
 public:
  LatticeQuotient(std::vector<ExponentVector> generators, std::size_t rank);

  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  /// Rank of L.
  std::size_t sublattice_rank() const noexcept { return hermite_.rank; }
  std::size_t free_rank() const noexcept { return rank_ - hermite_.rank; }
  /// Nonzero Smith diagonal entries; all equal to 1 iff the quotient is free.
  const BigVector& invariant_factors() const noexcept { return invariant_factors_; }
  bool is_free() const;

  const HermiteForm& hermite() const noexcept { return hermite_; }
  const SmithForm& smith() const noexcept { return smith_; }

  /// Canonical coset representative: pivot coordinates are reduced into
  /// [0, pivot), processing the highest pivot column first.
  ExponentVector reduce(const ExponentVector& v) const;
  /// Integer coefficients a with v - reduce(v) = sum_i a_i * generators[i].
  BigVector combination(const ExponentVector& v) const;
  bool contains(const ExponentVector& v) const;
  /// Coefficients c with v = sum_i c_i * (Hermite row i), for v in L.
  /// Throws InvalidArgument otherwise.
  BigVector hermite_coordinates(const ExponentVector& v) const;

  /// Integer relations among the generators: each row r satisfies
  /// sum_i r_i * generators[i] = 0, and together they span all relations.
  std::vector<BigVector> relations() const;

 private:
  struct Reduction {
    BigVector representative;
    BigVector hermite_coefficients;
  };
  Reduction reduce_big(const ExponentVector& v) const;

  std::vector<ExponentVector> generators_;
  std::size_t rank_;
  HermiteForm hermite_;
  SmithForm smith_;
  BigVector invariant_factors_;
};

LatticeQuotient lattice_quotient(const std::vector<ExponentVector>& generators, std::size_t rank);

/// The unique integer vector x with a * x = k. Throws NotUnimodular when
/// |det a| != 1.
ExponentVector solve_unimodular(const IntMatrix& a, const ExponentVector& k);
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace qcalc
