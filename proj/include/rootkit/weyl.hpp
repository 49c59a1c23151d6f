#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rootkit/rational.hpp"
#include "rootkit/root_system.hpp"

namespace rootkit {

/// A product s_{l0} s_{l1} ... s_{lk} of simple reflections. Acting on a
/// vector, the last letter is applied first.
struct WeylWord {
  std::vector<std::size_t> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }
  bool avoids(std::size_t i) const;
  /// "[1, 0, 2]" (0-based letters).
  std::string to_string() const;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// A set of simple indices generating a parabolic subgroup.
class SimpleSubset {
 public:
  /// Throws Error(BadIndex) for indices >= rank.
  SimpleSubset(std::size_t rank, std::vector<std::size_t> indices);

  /// The full base.
  static SimpleSubset all(std::size_t rank);
  /// The Levi base with index i removed.
  static SimpleSubset without(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  bool contains(std::size_t i) const;

  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  std::size_t rank_;
  std::vector<std::size_t> indices_;
};

struct Orbit {
  std::vector<RatVector> elements;
  SimpleSubset generators;

  bool contains(const RatVector& v) const;
};

struct DominantResult {
  RatVector vector;
  /// apply_word(word, seed) == vector
  WeylWord word;
};

/// v - <v, alpha_i^v> alpha_i. Throws Error(BadIndex).
RatVector reflect(const RootSystem& s, std::size_t i, const RatVector& v);

/// apply_word(w1 w2, v) == apply_word(w1, apply_word(w2, v)).
RatVector apply_word(const RootSystem& s, const WeylWord& w, const RatVector& v);

/// The intermediate vectors of apply_word: v, then one entry per letter,
/// ending at apply_word(w, v).
std::vector<RatVector> replay(const RootSystem& s, const WeylWord& w, const RatVector& v);

/// BFS closure of {v} under the reflections of `subset`, in visit order.
Orbit orbit(const RootSystem& s, const RatVector& v, const SimpleSubset& subset);

bool is_dominant(const RootSystem& s, const RatVector& v, const SimpleSubset& subset);

/// Reflects at the lowest index with negative pairing until none is left.
DominantResult dominant_rep(const RootSystem& s, const RatVector& v, const SimpleSubset& subset);

}  // namespace rootkit
