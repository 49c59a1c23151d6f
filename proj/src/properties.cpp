#include <unordered_set>

#include "rootkit/classify.hpp"

namespace rootkit {

std::vector<PairingCounterexample> unique_pairing_counterexamples(const RootSystem& s) {
  std::vector<PairingCounterexample> found;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const RatVector& alpha = s.simple(i);
    for (RootIndex r : s.positives()) {
      const RatVector& beta = s.root(r);
      if (beta == alpha || length_class(s, beta) != LengthClass::Long) continue;
      if (s.simple_coefficients(r)[i] > 1) continue;
      bool non_positive = true;
      for (std::size_t j = 0; j < s.rank() && non_positive; ++j) {
        if (j != i && s.inner(beta, s.simple(j)) > 0) non_positive = false;
      }
      if (non_positive) found.push_back({i, beta});
    }
  }
  return found;
}

std::vector<PairingCounterexample> positive_pairing_violations(const RootSystem& s) {
  std::vector<PairingCounterexample> found;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    for (RootIndex r : s.positives()) {
      const RatVector& beta = s.root(r);
      bool others_non_positive = true;
      for (std::size_t j = 0; j < s.rank() && others_non_positive; ++j) {
        if (j != i && s.inner(beta, s.simple(j)) > 0) others_non_positive = false;
      }
      if (others_non_positive && s.inner(beta, s.simple(i)) <= 0) found.push_back({i, beta});
    }
  }
  return found;
}

std::vector<LeviMultiplicityViolation> levi_multiplicity_violations(const RootSystem& s) {
  std::vector<LeviMultiplicityViolation> found;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    const SimpleSubset levi = SimpleSubset::without(s.rank(), i);
    std::unordered_set<RatVector, RatVectorHash> visited;
    for (const auto& beta : s.roots()) {
      if (visited.count(beta)) continue;
      const long m = multiplicities(s, beta).on_simples[i];
      for (const auto& gamma : orbit(s, beta, levi).elements) {
        visited.insert(gamma);
        if (multiplicities(s, gamma).on_simples[i] != m) found.push_back({i, beta, gamma});
      }
    }
  }
  return found;
}

}  // namespace rootkit
