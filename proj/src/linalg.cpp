#include "rootkit/linalg.hpp"

#include <utility>

namespace rootkit {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

// Reduces [a | rhs] in place to [I | a^{-1} rhs]. False when a is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(pivot, j), rhs(col, j));
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  return true;
}

}  // namespace

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix work = a;
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  RatVector x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  RatMatrix work = a;
  RatMatrix rhs = RatMatrix::identity(a.rows());
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  return rhs;
}

bool is_positive_definite(const RatMatrix& a) {
  if (!a.is_symmetric()) return false;
  // Symmetric elimination without pivoting; every pivot is the ratio of
  // consecutive leading minors.
  RatMatrix m = a;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(r, j) -= f * m(k, j);
    }
  }
  return true;
}

}  // namespace rootkit
