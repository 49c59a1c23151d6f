// Brute-force reference computations used only by the tests. Nothing here
// calls into weyl.cpp or classify.cpp; reflections are recomputed from the
// bilinear form directly.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "rootkit/classify.hpp"
#include "rootkit/root_system.hpp"

namespace rootkit::oracle {

inline RatVector reflect_by(const RootSystem& s, const RatVector& gamma, const RatVector& v) {
  const Rational num = Rational(2) * dot(v, s.form() * gamma);
  const Rational den = dot(gamma, s.form() * gamma);
  const Rational c = num / den;
  RatVector out = v;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= c * gamma[k];
  return out;
}

inline std::set<RatVector> orbit_under(const RootSystem& s, const RatVector& v,
                                       const std::vector<RatVector>& mirrors) {
  std::set<RatVector> seen{v};
  std::vector<RatVector> frontier{v};
  while (!frontier.empty()) {
    std::vector<RatVector> next;
    for (const auto& x : frontier) {
      for (const auto& g : mirrors) {
        RatVector y = reflect_by(s, g, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<RatVector> simple_mirrors(const RootSystem& s,
                                             const std::vector<std::size_t>& subset) {
  std::vector<RatVector> out;
  for (std::size_t i : subset) out.push_back(s.simples()[i]);
  return out;
}

/// All dominant elements of the fully enumerated orbit; a correct engine
/// yields exactly one.
inline std::vector<RatVector> dominant_elements(const RootSystem& s, const RatVector& v,
                                                const std::vector<std::size_t>& subset) {
  std::vector<RatVector> out;
  for (const auto& x : orbit_under(s, v, simple_mirrors(s, subset))) {
    bool dominant = true;
    for (std::size_t i : subset) {
      const RatVector& a = s.simples()[i];
      if (dot(x, s.form() * a) < 0) dominant = false;
    }
    if (dominant) out.push_back(x);
  }
  return out;
}

inline RatVector coroot_of(const RootSystem& s, const RatVector& beta) {
  const Rational scale = Rational(2) / dot(beta, s.form() * beta);
  RatVector out = beta;
  out *= scale;
  return out;
}

/// <chi, x> for a coroot x, i.e. (chi, x) under the form.
inline Rational eval(const RootSystem& s, const RatVector& chi, const RatVector& x) {
  return dot(chi, s.form() * x);
}

/// Literal quasi-constancy: for every root alpha with <chi, alpha^v> != 0 and
/// every coroot in the W-orbit of alpha^v (W generated by all root
/// reflections), the ratio lies in {-1, 0, 1}.
inline bool quasi_constant(const RootSystem& s, const RatVector& chi) {
  for (const auto& alpha : s.roots()) {
    const RatVector a_vee = coroot_of(s, alpha);
    const Rational base = eval(s, chi, a_vee);
    if (base == 0) continue;
    for (const auto& g : orbit_under(s, a_vee, s.roots())) {
      const Rational ratio = eval(s, chi, g) / base;
      if (ratio != 0 && ratio != 1 && ratio != -1) return false;
    }
  }
  return true;
}

/// Random element of the weight lattice with coefficients in [-bound, bound].
inline RatVector random_weight(const RootSystem& s, std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RatVector v(s.dim());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    v.add_scaled(Rational(dist(rng)), fundamental_weight(s, i));
  }
  return v;
}

}  // namespace rootkit::oracle
