#pragma once

// Dense exact linear algebra over the rationals. Pivots are always chosen at
// the lowest available row and column, so every basis below is reproducible.

#include <optional>
#include <vector>

#include "liext/scalar.hpp"

namespace liext {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  std::vector<Vec> columns() const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// One basis vector per free column, with a 1 in that column.
std::vector<Vec> nullspace(const Matrix& m);
// Some solution of a x = b (free variables set to zero).
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// The members of `gens` that are not combinations of earlier ones.
std::vector<Vec> independent_subset(const std::vector<Vec>& gens, std::size_t dim);
bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim);
bool is_zero(const Vec& v);

// Z / B for subspaces B of Z of a coordinate space of dimension `dim`.
class Quotient {
 public:
  Quotient() = default;
  // Throws IntegrityError unless every generator of B lies in span(Z).
  Quotient(const std::vector<Vec>& z_gens, const std::vector<Vec>& b_gens, std::size_t dim);

  std::size_t dim() const { return reps_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& cycles() const { return z_; }
  const std::vector<Vec>& boundaries() const { return b_; }
  // Representatives of a basis of the quotient, chosen among the Z basis.
  const std::vector<Vec>& representatives() const { return reps_; }

  bool contains(const Vec& v) const;
  // Class coordinates; nullopt when v is not in Z.
  std::optional<Vec> project(const Vec& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> z_, b_, reps_;
  Matrix system_;  // [B | reps]
};

}  // namespace liext
