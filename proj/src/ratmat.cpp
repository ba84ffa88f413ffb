#include "qvar/ratmat.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

namespace qvar {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, std::span<const RatVector> columns) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: column " + std::to_string(c) + " has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::column_vector(const RatVector& v) {
  RatMatrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionError("submatrix out of range");
  RatMatrix s(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
  return s;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> cols) const {
  RatMatrix s(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) s(r, k) = (*this)(r, cols[k]);
  return s;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix compose(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("compose: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "add");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

RatMatrix subtract(const RatMatrix& a, const RatMatrix& b) {
  require_same_shape(a, b, "subtract");
  RatMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

RatMatrix scale(const Rational& s, const RatMatrix& m) {
  RatMatrix c = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) *= s;
  return c;
}

RatVector apply(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw DimensionError("apply: vector length mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  RatMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  RatMatrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

RatMatrix block_assemble(std::size_t rows, std::size_t cols, std::span<const Block> blocks) {
  RatMatrix out(rows, cols);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    if (b.row + b.matrix.rows() > rows || b.col + b.matrix.cols() > cols) {
      throw DimensionError("block_assemble: block " + std::to_string(k) + " (" + std::to_string(b.matrix.rows()) + "x" +
                           std::to_string(b.matrix.cols()) + " at " + std::to_string(b.row) + "," +
                           std::to_string(b.col) + ") exceeds " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    for (std::size_t i = 0; i < b.matrix.rows(); ++i)
      for (std::size_t j = 0; j < b.matrix.cols(); ++j) out(b.row + i, b.col + j) += b.matrix(i, j);
  }
  return out;
}

Echelon row_reduce(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = col; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> image_basis(const RatMatrix& m) {
  std::vector<RatVector> basis;
  for (auto p : row_reduce(m).pivots) basis.push_back(m.column(p));
  return basis;
}

RatMatrix row_space_basis(const RatMatrix& m) {
  Echelon e = row_reduce(m);
  return e.reduced.submatrix(0, 0, e.pivots.size(), m.cols());
}

std::vector<RatVector> complement_in(std::span<const RatVector> base, std::span<const RatVector> candidates) {
  if (candidates.empty()) return {};
  std::size_t n = candidates.front().size();
  std::vector<RatVector> all(base.begin(), base.end());
  all.insert(all.end(), candidates.begin(), candidates.end());
  Echelon e = row_reduce(RatMatrix::from_columns(n, all));
  std::vector<RatVector> out;
  for (auto p : e.pivots)
    if (p >= base.size()) out.push_back(candidates[p - base.size()]);
  return out;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Echelon e = row_reduce(hstack(m, RatMatrix::column_vector(b)));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

RatMatrix left_inverse(const RatMatrix& m) {
  // Row-reduce [m | I]; the first cols(m) rows of the right half give L.
  std::size_t n = m.rows();
  Echelon e = row_reduce(hstack(m, RatMatrix::identity(n)));
  if (e.pivots.size() < m.cols() || (m.cols() > 0 && e.pivots[m.cols() - 1] != m.cols() - 1)) {
    throw DimensionError("left_inverse: matrix does not have full column rank");
  }
  return e.reduced.submatrix(0, m.cols(), m.cols(), n);
}

}  // namespace qvar
