#pragma once

#include <cstddef>

#include "rootkit/rational.hpp"
#include "rootkit/root_system.hpp"
#include "rootkit/weyl.hpp"

namespace rootkit {

struct WitnessResult {
  /// Contains no letter equal to `avoided`.
  WeylWord word;
  std::size_t avoided = 0;
  RatVector source;
  /// apply_word(word, source) == target
  RatVector target;
};

/// A word in the Levi generators mapping alpha_i onto the long positive root
/// beta. Descends beta by the lowest-index reflection that lowers its height.
///
/// Throws NotSpecial, NotLong, MultiplicityZero, NotARoot, NotPositiveRoot.
WitnessResult levi_conjugator(const RootSystem& s, std::size_t i, const RatVector& beta);

/// A word in the Levi generators mapping alpha_i onto dom(alpha_i). Special
/// roots are conjugated to the highest root directly; co-special ones are
/// handled in the dual system and the word is reused on alpha_i.
///
/// Throws Error(NeitherSpecialNorCospecial).
WitnessResult dominant_witness(const RootSystem& s, std::size_t i);

}  // namespace rootkit
