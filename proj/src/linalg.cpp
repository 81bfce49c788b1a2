#include "liext/linalg.hpp"

#include <algorithm>

#include "liext/error.hpp"

namespace liext {

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw IntegrityError("column has the wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vec> Matrix::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_ && cols_ && right.cols_) throw IntegrityError("hstack: row mismatch");
  const std::size_t r = cols_ ? rows_ : right.rows_;
  Matrix m(r, cols_ + right.cols_);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_ && rows_ && below.rows_) throw IntegrityError("vstack: column mismatch");
  const std::size_t c = rows_ ? cols_ : below.cols_;
  Matrix m(rows_ + below.rows_, c);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < below.rows_; ++i)
    for (std::size_t j = 0; j < c; ++j) m(rows_ + i, j) = below(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw IntegrityError("matrix product: shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) m(i, j) += a * o(k, j);
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw IntegrityError("matrix-vector product: shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw IntegrityError("solve: right-hand side has the wrong length");
  Matrix aug = a.hstack(Matrix::from_columns({b}, a.rows()));
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& gens, std::size_t dim) {
  if (gens.empty()) return {};
  Echelon e = rref(Matrix::from_columns(gens, dim));
  std::vector<Vec> out;
  for (auto p : e.pivots) out.push_back(gens[p]);
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Matrix::from_columns(basis, dim), v).has_value();
}

Quotient::Quotient(const std::vector<Vec>& z_gens, const std::vector<Vec>& b_gens, std::size_t dim)
    : ambient_(dim) {
  z_ = independent_subset(z_gens, dim);
  b_ = independent_subset(b_gens, dim);
  for (const auto& b : b_)
    if (!in_span(z_, b, dim)) throw IntegrityError("a coboundary is not a cocycle");
  // representatives: pivots among the Z columns of [B | Z]
  std::vector<Vec> all = b_;
  all.insert(all.end(), z_.begin(), z_.end());
  if (!all.empty()) {
    Echelon e = rref(Matrix::from_columns(all, dim));
    for (auto p : e.pivots)
      if (p >= b_.size()) reps_.push_back(all[p]);
  }
  std::vector<Vec> sys = b_;
  sys.insert(sys.end(), reps_.begin(), reps_.end());
  system_ = Matrix::from_columns(sys, dim);
  if (sys.empty()) system_ = Matrix(dim, 0);
}

bool Quotient::contains(const Vec& v) const { return project(v).has_value(); }

std::optional<Vec> Quotient::project(const Vec& v) const {
  if (v.size() != ambient_) throw IntegrityError("project: vector has the wrong length");
  if (system_.cols() == 0) {
    if (is_zero(v)) return Vec{};
    return std::nullopt;
  }
  auto x = solve(system_, v);
  if (!x) return std::nullopt;
  return Vec(x->begin() + static_cast<std::ptrdiff_t>(b_.size()), x->end());
}

}  // namespace liext
