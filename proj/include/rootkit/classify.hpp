#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rootkit/rational.hpp"
#include "rootkit/root_system.hpp"
#include "rootkit/weyl.hpp"

namespace rootkit {

/// beta on the base and beta^v on the simple coroots.
struct MultiplicityProfile {
  std::vector<long> on_simples;
  std::vector<long> on_simple_coroots;
};

struct HighestRoots {
  /// The dominant long root.
  RatVector highest;
  /// Dual of the highest coroot; equals `highest` iff simply-laced.
  RatVector highest_short;
};

struct ClassificationRow {
  std::size_t simple_index = 0;
  long m = 0;
  long m_dual = 0;
  bool special = false;
  bool cospecial = false;
  bool quasi_constant = false;
  bool dom_eq_levi_dom = false;
  /// Present iff dom_eq_levi_dom; avoids simple_index and maps the simple
  /// root to its dominant conjugate.
  std::optional<WeylWord> witness;

  bool equivalent() const {
    const bool p2 = special || cospecial;
    return quasi_constant == p2 && p2 == dom_eq_levi_dom;
  }
};

struct TheoremReport {
  CartanType ctype;
  std::vector<ClassificationRow> rows;
  bool all_equivalent = false;
  RatVector highest_root;
  RatVector highest_short;
  /// Positive roots in storage order with their heights.
  std::vector<std::pair<RatVector, long>> heights;
};

/// Throws Error(NotARoot) or Error(NonIntegralSolution).
MultiplicityProfile multiplicities(const RootSystem& s, const RatVector& beta);

HighestRoots highest_roots(const RootSystem& s);

/// Throws Error(NotPositiveRoot) (or NotARoot).
long height(const RootSystem& s, const RatVector& beta);

bool is_special(const RootSystem& s, std::size_t i);
bool is_cospecial(const RootSystem& s, std::size_t i);

/// Dual basis to the simple coroots, inside the span of the roots.
RatVector fundamental_weight(const RootSystem& s, std::size_t i);

/// Within each length class, every nonzero |<chi, gamma^v>| is the same.
bool is_quasi_constant(const RootSystem& s, const RatVector& chi);

ClassificationRow theorem_row(const RootSystem& s, std::size_t i);
TheoremReport verify_theorem(const RootSystem& s);

/// A long positive root other than the simple root, which it meets at most
/// once, and which pairs non-positively with every other simple root.
struct PairingCounterexample {
  std::size_t simple_index;
  RatVector root;
};

/// Exhaustive search for the configuration above. Expected empty.
std::vector<PairingCounterexample> unique_pairing_counterexamples(const RootSystem& s);

/// Positive roots that pair non-positively with every simple root except
/// alpha_i, yet do not pair positively with alpha_i. Expected empty.
std::vector<PairingCounterexample> positive_pairing_violations(const RootSystem& s);

struct LeviMultiplicityViolation {
  std::size_t simple_index;
  RatVector root;
  RatVector conjugate;
};

/// Walks every W_alpha orbit of roots and reports pairs whose coefficient of
/// alpha differs. Expected empty.
std::vector<LeviMultiplicityViolation> levi_multiplicity_violations(const RootSystem& s);

}  // namespace rootkit
