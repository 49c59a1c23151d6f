#include "rootkit/witness.hpp"

#include <stdexcept>

#include "rootkit/classify.hpp"
#include "rootkit/error.hpp"

namespace rootkit {

WitnessResult levi_conjugator(const RootSystem& s, std::size_t i, const RatVector& beta) {
  const RatVector& alpha = s.simple(i);
  const RootIndex r = s.index_of(beta);
  if (!is_special(s, i)) {
    throw Error(ErrorCode::NotSpecial, "simple root " + std::to_string(i) + " of " + s.name() +
                                           " is not special");
  }
  if (length_class(s, beta) != LengthClass::Long) {
    throw Error(ErrorCode::NotLong, beta.to_string() + " is not a long root");
  }
  if (s.simple_coefficients(r)[i] == 0) {
    throw Error(ErrorCode::MultiplicityZero, "simple root " + std::to_string(i) +
                                                 " does not appear in " + beta.to_string());
  }
  if (!s.is_positive(r)) {
    throw Error(ErrorCode::NotPositiveRoot, beta.to_string() + " is a negative root");
  }

  // Each step reflects at a Levi generator pairing positively with the
  // current root, which lowers its height while keeping it long and positive.
  std::vector<std::size_t> letters;
  RatVector cur = beta;
  const long max_steps = s.abs_height(r);
  while (cur != alpha) {
    std::size_t next = s.rank();
    for (std::size_t j = 0; j < s.rank(); ++j) {
      if (j != i && s.inner(cur, s.simple(j)) > 0) {
        next = j;
        break;
      }
    }
    if (next == s.rank() || static_cast<long>(letters.size()) >= max_steps) {
      throw std::logic_error("height descent stalled at " + cur.to_string() + " in " + s.name());
    }
    cur = reflect(s, next, cur);
    letters.push_back(next);
  }
  // s_{jk} ... s_{j1} beta = alpha, so beta = s_{j1} ... s_{jk} alpha.
  WitnessResult result{WeylWord{std::move(letters)}, i, alpha, beta};
  if (apply_word(s, result.word, alpha) != beta) {
    throw std::logic_error("levi conjugator failed replay in " + s.name());
  }
  return result;
}

WitnessResult dominant_witness(const RootSystem& s, std::size_t i) {
  const RatVector& alpha = s.simple(i);
  const HighestRoots h = highest_roots(s);
  const MultiplicityProfile top = multiplicities(s, h.highest);
  const MultiplicityProfile top_short = multiplicities(s, h.highest_short);

  if (top.on_simples[i] == 1) return levi_conjugator(s, i, h.highest);

  if (top_short.on_simple_coroots[i] == 1) {
    // alpha^v is special in the dual, and simple reflections act identically
    // in both systems, so the dual word carries alpha to alpha^{h2}.
    const RootSystem dual = dual_system(s);
    const WitnessResult in_dual = levi_conjugator(dual, i, coroot(s, h.highest_short));
    WitnessResult result{in_dual.word, i, alpha, apply_word(s, in_dual.word, alpha)};
    if (result.target != h.highest_short) {
      throw std::logic_error("dual witness does not reach the highest short root in " + s.name());
    }
    return result;
  }

  throw Error(ErrorCode::NeitherSpecialNorCospecial,
              "simple root " + std::to_string(i) + " of " + s.name() +
                  " is neither special nor co-special; no Levi word maps it to dom");
}

}  // namespace rootkit
