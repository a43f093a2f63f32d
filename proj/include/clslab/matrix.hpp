#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clslab/rational.hpp"

namespace clslab {

// Sorted, duplicate-free set of 0-based indices.
using IndexSet = std::vector<std::size_t>;

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n, const Rational& fill = Rational(0)) : data_(n, fill) {}
  QVector(std::initializer_list<Rational> init) : data_(init) {}
  explicit QVector(std::vector<Rational> data) : data_(std::move(data)) {}

  std::size_t size() const { return data_.size(); }
  const Rational& operator[](std::size_t i) const { return data_[i]; }
  Rational& operator[](std::size_t i) { return data_[i]; }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }
  std::span<const Rational> span() const { return data_; }

  bool is_zero() const;
  std::string str() const;  // "(a, b, c)"

  friend bool operator==(const QVector&, const QVector&) = default;

  friend QVector operator+(const QVector& a, const QVector& b);
  friend QVector operator-(const QVector& a, const QVector& b);
  friend QVector operator*(const Rational& k, const QVector& v);

 private:
  std::vector<Rational> data_;
};

// Concatenation, used for points of a product space.
QVector concat(const QVector& a, const QVector& b);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;
  QMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  QMatrix operator-() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;
  friend QVector operator*(const QMatrix& a, const QVector& x);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
// Throws DimensionError on non-square input.
Rational mat_det(const QMatrix& a);

// Exact solution of a.x = b, or nullopt when a is singular.
// Throws DimensionError on shape mismatch.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);

// Exact inverse, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

// Determinant of the principal submatrix on `s` (0-based, any order; it is
// sorted and deduplicated). Throws PreconditionError on an empty or
// out-of-range set and DimensionError on a non-square matrix.
Rational principal_minor(const QMatrix& m, const IndexSet& s);

// 1-based "{1,3}" form of an index set.
std::string format_index_set(const IndexSet& s);

}  // namespace clslab
