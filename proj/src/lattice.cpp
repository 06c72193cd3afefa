#include "qcalc/lattice.hpp"

#include <limits>
#include <sstream>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt trunc_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector ExponentVector::unit(std::size_t rank, std::size_t index) {
  ExponentVector v(rank);
  v.entries_.at(index) = 1;
  return v;
}

bool ExponentVector::is_zero() const noexcept {
  for (auto e : entries_)
    if (e != 0) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
  if (size() != rhs.size()) throw ShapeError("exponent vectors of different length");
  ExponentVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = checked_add(entries_[i], rhs.entries_[i]);
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& rhs) const { return *this + (-rhs); }

ExponentVector ExponentVector::operator-() const { return scaled(-1); }

ExponentVector ExponentVector::scaled(std::int64_t factor) const {
  ExponentVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = checked_mul(entries_[i], factor);
  return out;
}

std::string ExponentVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

BigVector to_big(const ExponentVector& v) {
  BigVector out;
  out.reserve(v.size());
  for (auto e : v) out.emplace_back(static_cast<long>(e));
  return out;
}

ExponentVector to_exponents(const BigVector& v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.fits_slong_p()) throw OverflowError("exponent does not fit in 64 bits");
    out.push_back(e.get_si());
  }
  return ExponentVector(std::move(out));
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<ExponentVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ShapeError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = static_cast<long>(columns[j][i]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ExponentVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

BigVector IntMatrix::row(std::size_t r) const {
  return BigVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

BigVector IntMatrix::column(std::size_t c) const {
  BigVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

BigVector operator*(const IntMatrix& a, const BigVector& v) {
  if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
  BigVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ",";
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << (*this)(r, c).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Determinant

BigInt det_int(const IntMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  BigInt d = det_int(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Smith normal form

BigVector SmithForm::diagonal_entries() const {
  BigVector out;
  const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    u.swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    v.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t target, std::size_t source, const BigInt& f) {
    d.add_row_multiple(target, source, f);
    u.add_row_multiple(target, source, f);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const BigInt& f) {
    d.add_col_multiple(target, source, f);
    v.add_col_multiple(target, source, f);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    BigInt best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d(i, j) == 0) continue;
        BigInt a = abs(d(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    row_swap(t, pr);
    col_swap(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -trunc_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -trunc_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce that the pivot divides the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          BigInt r;
          mpz_tdiv_r(r.get_mpz_t(), d(i, j).get_mpz_t(), d(t, t).get_mpz_t());
          if (r != 0) {
            row_add(t, i, BigInt(1));
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(u), std::move(d), std::move(v)};
}

// ---------------------------------------------------------------------------
// Hermite normal form (pivot = last nonzero column of each row)

HermiteForm hermite_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix h = m;
  IntMatrix w = IntMatrix::identity(rows);
  std::vector<std::size_t> pivots;

  std::size_t row = 0;
  for (std::size_t step = 0; step < cols && row < rows; ++step) {
    const std::size_t col = cols - 1 - step;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = row; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        if (best == rows || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == rows) break;
      h.swap_rows(row, best);
      w.swap_rows(row, best);
      bool clean = true;
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (h(i, col) == 0) continue;
        BigInt q = -floor_div(h(i, col), h(row, col));
        h.add_row_multiple(i, row, q);
        w.add_row_multiple(i, row, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (row < rows && h(row, col) != 0) {
      if (h(row, col) < 0) {
        h.negate_row(row);
        w.negate_row(row);
      }
      for (std::size_t i = 0; i < row; ++i) {
        BigInt q = -floor_div(h(i, col), h(row, col));
        h.add_row_multiple(i, row, q);
        w.add_row_multiple(i, row, q);
      }
      pivots.push_back(col);
      ++row;
    }
  }
  return HermiteForm{std::move(h), std::move(w), row, std::move(pivots)};
}

// ---------------------------------------------------------------------------
// LatticeQuotient

LatticeQuotient::LatticeQuotient(std::vector<ExponentVector> generators, std::size_t rank)
    : generators_(std::move(generators)), rank_(rank) {
  IntMatrix g = IntMatrix::from_rows(generators_, rank_);
  hermite_ = hermite_form(g);
  smith_ = smith_normal_form(g);
  for (const auto& d : smith_.diagonal_entries())
    if (d != 0) invariant_factors_.push_back(d);
}

bool LatticeQuotient::is_free() const {
  for (const auto& d : invariant_factors_)
    if (d != 1) return false;
  return true;
}

LatticeQuotient::Reduction LatticeQuotient::reduce_big(const ExponentVector& v) const {
  if (v.size() != rank_) throw ShapeError("vector length does not match lattice rank");
  Reduction out{to_big(v), BigVector(hermite_.rank)};
  const IntMatrix& h = hermite_.form;
  for (std::size_t i = 0; i < hermite_.rank; ++i) {
    const std::size_t p = hermite_.pivot_columns[i];
    BigInt q = floor_div(out.representative[p], h(i, p));
    if (q == 0) continue;
    for (std::size_t c = 0; c < rank_; ++c) out.representative[c] -= q * h(i, c);
    out.hermite_coefficients[i] = q;
  }
  return out;
}

ExponentVector LatticeQuotient::reduce(const ExponentVector& v) const {
  return to_exponents(reduce_big(v).representative);
}

BigVector LatticeQuotient::combination(const ExponentVector& v) const {
  Reduction r = reduce_big(v);
  BigVector a(generators_.size());
  for (std::size_t i = 0; i < hermite_.rank; ++i) {
    if (r.hermite_coefficients[i] == 0) continue;
    for (std::size_t g = 0; g < generators_.size(); ++g)
      a[g] += r.hermite_coefficients[i] * hermite_.transform(i, g);
  }
  return a;
}

bool LatticeQuotient::contains(const ExponentVector& v) const {
  for (const auto& e : reduce_big(v).representative)
    if (e != 0) return false;
  return true;
}

BigVector LatticeQuotient::hermite_coordinates(const ExponentVector& v) const {
  Reduction r = reduce_big(v);
  for (const auto& e : r.representative)
    if (e != 0) throw InvalidArgument("vector " + v.str() + " is not in the sublattice");
  return r.hermite_coefficients;
}

std::vector<BigVector> LatticeQuotient::relations() const {
  std::vector<BigVector> out;
  for (std::size_t i = hermite_.rank; i < generators_.size(); ++i) out.push_back(hermite_.transform.row(i));
  return out;
}

LatticeQuotient lattice_quotient(const std::vector<ExponentVector>& generators, std::size_t rank) {
  for (const auto& g : generators)
    if (g.size() != rank) throw ShapeError("generator length does not match rank");
  return LatticeQuotient(generators, rank);
}

// ---------------------------------------------------------------------------
// Unimodular systems

namespace {

void require_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw ShapeError("unimodular solve needs a square matrix");
  BigInt d = det_int(a);
  if (d != 1 && d != -1)
    throw NotUnimodular("matrix is not unimodular (determinant " + d.get_str() + ")", d.get_str());
}

// Gauss-Jordan over Q; exact, and integral because det = +-1.
std::vector<BigVector> solve_columns(const IntMatrix& a, const std::vector<BigVector>& rhs) {
  const std::size_t n = a.rows();
  const std::size_t k = rhs.size();
  std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(n + k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    for (std::size_t c = 0; c < k; ++c) aug[i][n + c] = rhs[c][i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    mpq_class inv = 1 / aug[col][col];
    for (auto& e : aug[col]) e *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      mpq_class f = aug[i][col];
      for (std::size_t j = 0; j < n + k; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<BigVector> out(k, BigVector(n));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i) out[c][i] = aug[i][n + c].get_num();
  return out;
}

}  // namespace

ExponentVector solve_unimodular(const IntMatrix& a, const ExponentVector& k) {
  require_unimodular(a);
  if (k.size() != a.rows()) throw ShapeError("right-hand side length does not match matrix");
  return to_exponents(solve_columns(a, {to_big(k)}).front());
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  require_unimodular(a);
  const std::size_t n = a.rows();
  std::vector<BigVector> units;
  for (std::size_t j = 0; j < n; ++j) {
    BigVector e(n);
    e[j] = 1;
    units.push_back(std::move(e));
  }
  auto cols = solve_columns(a, units);
  IntMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = cols[j][i];
  return inv;
}

}  // namespace qcalc
