#include "clslab/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "clslab/errors.hpp"

namespace clslab {

bool QVector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string QVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) out += ", ";
    out += data_[i].str();
  }
  return out + ")";
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in +");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in -");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator*(const Rational& k, const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = k * v[i];
  return r;
}

QVector concat(const QVector& a, const QVector& b) {
  std::vector<Rational> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return QVector(std::move(out));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  QVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  QMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

QMatrix QMatrix::operator-() const {
  QMatrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  QVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational acc;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

Rational mat_det(const QMatrix& a) {
  if (!a.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  QMatrix w = a;
  int sign = 1;
  Rational prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && w(p, k).is_zero()) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(w(k, c), w(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity keeps this division exact.
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Rational d = w(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

namespace {

// Reduces [a | rhs] to [I | a^{-1} rhs] in place; false when a is singular.
bool gauss_jordan(QMatrix& a, QMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return false;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      for (std::size_t c = 0; c < rhs.cols(); ++c) std::swap(rhs(k, c), rhs(p, c));
    }
    const Rational pivot = a(k, k);
    for (std::size_t c = k; c < n; ++c) a(k, c) /= pivot;
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(k, c) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(i, c) -= f * rhs(k, c);
    }
  }
  return true;
}

}  // namespace

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  if (!a.square()) throw DimensionError("solve_linear needs a square matrix");
  if (b.size() != a.rows()) throw DimensionError("solve_linear rhs length mismatch");
  QMatrix w = a;
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (!gauss_jordan(w, rhs)) return std::nullopt;
  return rhs.column(0);
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (!a.square()) throw DimensionError("inverse of non-square matrix");
  QMatrix w = a;
  QMatrix rhs = QMatrix::identity(a.rows());
  if (!gauss_jordan(w, rhs)) return std::nullopt;
  return rhs;
}

Rational principal_minor(const QMatrix& m, const IndexSet& s) {
  if (!m.square()) throw DimensionError("principal minor of non-square matrix");
  if (s.empty()) throw PreconditionError("principal minor needs a nonempty index set");
  IndexSet idx = s;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.back() >= m.rows())
    throw PreconditionError("principal minor index " + std::to_string(idx.back() + 1) +
                            " out of range for dimension " + std::to_string(m.rows()));
  return mat_det(m.submatrix(idx, idx));
}

std::string format_index_set(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << '}';
  return os.str();
}

}  // namespace clslab
