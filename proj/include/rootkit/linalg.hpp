#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rootkit/rational.hpp"

namespace rootkit {

/// Small dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  RatVector operator*(const RatVector& v) const;
  RatMatrix transpose() const;
  bool is_symmetric() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Gauss-Jordan elimination with exact pivots. Returns nullopt when the
/// square matrix `a` is singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Positive definite iff every leading principal minor is positive.
bool is_positive_definite(const RatMatrix& a);

}  // namespace rootkit
