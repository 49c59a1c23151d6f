#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rootkit {

using Rational = mpq_class;

/// Formats as "p/q" with q > 0 always present ("3/1", "0/1", "-1/2").
std::string to_pq(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

/// True iff q has denominator 1.
bool is_integer(const Rational& q);

/// Exact coordinate vector over Q.
class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : coords_(dim) {}
  explicit RatVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RatVector(std::initializer_list<long> ints);

  static RatVector unit(std::size_t dim, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  bool is_zero() const;

  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  const std::vector<Rational>& coords() const noexcept { return coords_; }

  RatVector& operator+=(const RatVector& other);
  RatVector& operator-=(const RatVector& other);
  RatVector& operator*=(const Rational& c);
  /// this += c * other
  RatVector& add_scaled(const Rational& c, const RatVector& other);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& c, RatVector a) { return a *= c; }
  friend RatVector operator-(RatVector a);

  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates, then on dimension.
  friend std::strong_ordering operator<=>(const RatVector& a, const RatVector& b);

  /// "(1, -1, 0)" with canonical rationals ("1/2", not "1/2/1").
  std::string to_string() const;
  /// Coordinates in "p/q" form.
  std::vector<std::string> to_pq_strings() const;
  static RatVector from_pq_strings(const std::vector<std::string>& parts);

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RatVector& v);

/// Euclidean dot product; the engine's bilinear forms go through RootSystem.
Rational dot(const RatVector& a, const RatVector& b);

struct RatVectorHash {
  std::size_t operator()(const RatVector& v) const noexcept;
};

}  // namespace rootkit
