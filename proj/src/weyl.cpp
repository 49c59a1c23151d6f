#include "rootkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "rootkit/error.hpp"

namespace rootkit {

bool WeylWord::avoids(std::size_t i) const {
  return std::find(letters.begin(), letters.end(), i) == letters.end();
}

std::string WeylWord::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ", ";
    os << letters[k];
  }
  os << ']';
  return os.str();
}

SimpleSubset::SimpleSubset(std::size_t rank, std::vector<std::size_t> indices)
    : rank_(rank), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (!indices_.empty() && indices_.back() >= rank_) {
    throw Error(ErrorCode::BadIndex, "simple index " + std::to_string(indices_.back()) +
                                         " out of range (rank " + std::to_string(rank_) + ")");
  }
}

SimpleSubset SimpleSubset::all(std::size_t rank) {
  std::vector<std::size_t> idx(rank);
  for (std::size_t i = 0; i < rank; ++i) idx[i] = i;
  return SimpleSubset(rank, std::move(idx));
}

SimpleSubset SimpleSubset::without(std::size_t rank, std::size_t i) {
  if (i >= rank) {
    throw Error(ErrorCode::BadIndex, "simple index " + std::to_string(i) + " out of range (rank " +
                                         std::to_string(rank) + ")");
  }
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < rank; ++j) {
    if (j != i) idx.push_back(j);
  }
  return SimpleSubset(rank, std::move(idx));
}

bool SimpleSubset::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

bool Orbit::contains(const RatVector& v) const {
  return std::find(elements.begin(), elements.end(), v) != elements.end();
}

namespace {

void check_dim(const RootSystem& s, const RatVector& v) {
  if (v.size() != s.dim()) {
    throw std::invalid_argument("vector of dimension " + std::to_string(v.size()) +
                                " used with " + s.name() + " (dimension " +
                                std::to_string(s.dim()) + ")");
  }
}

void check_subset(const RootSystem& s, const SimpleSubset& subset) {
  if (subset.rank() != s.rank()) {
    throw Error(ErrorCode::BadIndex, "subset built for rank " + std::to_string(subset.rank()) +
                                         " used with " + s.name());
  }
}

}  // namespace

RatVector reflect(const RootSystem& s, std::size_t i, const RatVector& v) {
  check_dim(s, v);
  const Rational p = s.simple_pairing(v, i);
  RatVector out = v;
  if (p != 0) out.add_scaled(-p, s.simple(i));
  return out;
}

RatVector apply_word(const RootSystem& s, const WeylWord& w, const RatVector& v) {
  RatVector cur = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) cur = reflect(s, *it, cur);
  return cur;
}

std::vector<RatVector> replay(const RootSystem& s, const WeylWord& w, const RatVector& v) {
  std::vector<RatVector> trace{v};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    trace.push_back(reflect(s, *it, trace.back()));
  }
  return trace;
}

Orbit orbit(const RootSystem& s, const RatVector& v, const SimpleSubset& subset) {
  check_dim(s, v);
  check_subset(s, subset);
  Orbit result{{v}, subset};
  std::unordered_set<RatVector, RatVectorHash> seen{v};
  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (std::size_t i : subset.indices()) {
      RatVector next = reflect(s, i, result.elements[head]);
      if (seen.insert(next).second) result.elements.push_back(std::move(next));
    }
  }
  return result;
}

bool is_dominant(const RootSystem& s, const RatVector& v, const SimpleSubset& subset) {
  check_dim(s, v);
  check_subset(s, subset);
  return std::all_of(subset.indices().begin(), subset.indices().end(),
                     [&](std::size_t i) { return s.simple_pairing(v, i) >= 0; });
}

DominantResult dominant_rep(const RootSystem& s, const RatVector& v, const SimpleSubset& subset) {
  check_dim(s, v);
  check_subset(s, subset);
  RatVector cur = v;
  std::vector<std::size_t> steps;
  for (;;) {
    bool moved = false;
    for (std::size_t i : subset.indices()) {
      const Rational p = s.simple_pairing(cur, i);
      if (p < 0) {
        cur.add_scaled(-p, s.simple(i));
        steps.push_back(i);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // steps were applied first-to-last; the word applies its last letter first.
  std::reverse(steps.begin(), steps.end());
  return DominantResult{std::move(cur), WeylWord{std::move(steps)}};
}

}  // namespace rootkit
