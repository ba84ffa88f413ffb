#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qvar {

/// Exact rational number. mpq_class keeps numerator/denominator in lowest
/// terms with a positive denominator after every arithmetic operation.
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Shape mismatch in a matrix operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse "p", "-p" or "p/q" (q may be unnormalized, must be nonzero).
Rational parse_rational(std::string_view text);
/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Dense row-major matrix over Q. Zero rows or zero columns are legal.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_columns(std::size_t rows, std::span<const RatVector> columns);
  static RatMatrix column_vector(const RatVector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector column(std::size_t c) const;
  RatVector row(std::size_t r) const;
  RatMatrix transpose() const;
  RatMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  RatMatrix select_columns(std::span<const std::size_t> cols) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix compose(const RatMatrix& a, const RatMatrix& b);  // a * b
RatMatrix add(const RatMatrix& a, const RatMatrix& b);
RatMatrix subtract(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const Rational& s, const RatMatrix& m);
RatVector apply(const RatMatrix& m, const RatVector& v);

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return compose(a, b); }
inline RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) { return add(a, b); }
inline RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return subtract(a, b); }
inline RatMatrix operator*(const Rational& s, const RatMatrix& m) { return scale(s, m); }

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

/// A sub-block placed at (row, col) inside a larger matrix.
struct Block {
  std::size_t row = 0;
  std::size_t col = 0;
  RatMatrix matrix;
};

/// Assemble a rows x cols matrix from blocks; uncovered entries are zero and
/// overlapping blocks accumulate. Throws DimensionError naming the first
/// block that does not fit.
RatMatrix block_assemble(std::size_t rows, std::size_t cols, std::span<const Block> blocks);

/// Reduced row echelon form with the pivot column of each nonzero row.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; the pivot of each column is the first nonzero
/// entry scanning down from the current row.
Echelon row_reduce(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
/// Right null space: one vector per free column in ascending order, with
/// that free coordinate equal to 1 and the other free coordinates 0.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
/// Columns of m at the pivot positions of its echelon form.
std::vector<RatVector> image_basis(const RatMatrix& m);
/// Nonzero rows of the reduced echelon form.
RatMatrix row_space_basis(const RatMatrix& m);

/// Among `candidates`, the ones not in span(base) + span(earlier candidates),
/// chosen greedily in order (pivot columns of [base | candidates]).
std::vector<RatVector> complement_in(std::span<const RatVector> base,
                                     std::span<const RatVector> candidates);

/// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rational determinant(const RatMatrix& m);

/// Left inverse L (L * m = identity) of a matrix with full column rank.
RatMatrix left_inverse(const RatMatrix& m);

}  // namespace qvar
