#include "rootkit/classify.hpp"

#include <set>
#include <stdexcept>

#include "rootkit/error.hpp"

namespace rootkit {

namespace {

RatVector dominant_long_root(const RootSystem& s) {
  const SimpleSubset full = SimpleSubset::all(s.rank());
  for (const auto& r : s.roots()) {
    if (s.inner(r, r) == s.max_sq_length() && is_dominant(s, r, full)) return r;
  }
  throw std::logic_error("no dominant long root in " + s.name());
}

bool special_in(const RootSystem& s, const HighestRoots& h, std::size_t i) {
  return multiplicities(s, h.highest).on_simples.at(i) == 1;
}

bool cospecial_in(const RootSystem& s, const HighestRoots& h, std::size_t i) {
  return multiplicities(s, h.highest_short).on_simple_coroots.at(i) == 1;
}

ClassificationRow make_row(const RootSystem& s, const HighestRoots& h, std::size_t i) {
  const RatVector& alpha = s.simple(i);
  ClassificationRow row;
  row.simple_index = i;
  row.m = multiplicities(s, h.highest).on_simples[i];
  row.m_dual = multiplicities(s, h.highest_short).on_simple_coroots[i];
  row.special = row.m == 1;
  row.cospecial = row.m_dual == 1;
  row.quasi_constant = is_quasi_constant(s, fundamental_weight(s, i));

  const DominantResult full = dominant_rep(s, alpha, SimpleSubset::all(s.rank()));
  const DominantResult levi = dominant_rep(s, alpha, SimpleSubset::without(s.rank(), i));
  row.dom_eq_levi_dom = full.vector == levi.vector;
  if (row.dom_eq_levi_dom) row.witness = levi.word;
  return row;
}

}  // namespace

MultiplicityProfile multiplicities(const RootSystem& s, const RatVector& beta) {
  s.index_of(beta);
  MultiplicityProfile p;
  p.on_simples = s.simple_decomposer().integer_coefficients(beta);
  p.on_simple_coroots = s.simple_coroot_decomposer().integer_coefficients(coroot(s, beta));
  return p;
}

HighestRoots highest_roots(const RootSystem& s) {
  HighestRoots h;
  h.highest = dominant_long_root(s);
  const RootSystem dual = dual_system(s);
  const RatVector highest_coroot = dominant_long_root(dual);
  h.highest_short = coroot(dual, highest_coroot);
  return h;
}

long height(const RootSystem& s, const RatVector& beta) {
  const RootIndex r = s.index_of(beta);
  if (!s.is_positive(r)) {
    throw Error(ErrorCode::NotPositiveRoot, beta.to_string() + " is a negative root");
  }
  return s.abs_height(r);
}

bool is_special(const RootSystem& s, std::size_t i) {
  s.simple(i);
  return special_in(s, highest_roots(s), i);
}

bool is_cospecial(const RootSystem& s, std::size_t i) {
  s.simple(i);
  return cospecial_in(s, highest_roots(s), i);
}

RatVector fundamental_weight(const RootSystem& s, std::size_t i) {
  s.simple(i);
  const std::size_t n = s.rank();
  RatMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram(a, b) = s.inner(s.simple(a), s.simple(b));
  // (eta, alpha_j) = delta_ij (alpha_j, alpha_j) / 2 with eta on the base.
  RatVector rhs(n);
  rhs[i] = gram(i, i) / 2;
  const auto c = solve(gram, rhs);
  if (!c) throw std::logic_error("singular Gram matrix for " + s.name());
  RatVector eta(s.dim());
  for (std::size_t a = 0; a < n; ++a) eta.add_scaled((*c)[a], s.simple(a));
  return eta;
}

bool is_quasi_constant(const RootSystem& s, const RatVector& chi) {
  if (chi.size() != s.dim()) throw std::invalid_argument("character has wrong dimension");
  // Coroot orbits under W are exactly the length classes.
  std::set<Rational> long_values;
  std::set<Rational> short_values;
  for (const auto& r : s.roots()) {
    const Rational p = abs(Rational(2) * s.inner(chi, r) / s.inner(r, r));
    if (p == 0) continue;
    auto& bucket = s.inner(r, r) == s.max_sq_length() ? long_values : short_values;
    bucket.insert(p);
    if (bucket.size() > 1) return false;
  }
  return true;
}

ClassificationRow theorem_row(const RootSystem& s, std::size_t i) {
  s.simple(i);
  return make_row(s, highest_roots(s), i);
}

TheoremReport verify_theorem(const RootSystem& s) {
  const HighestRoots h = highest_roots(s);
  TheoremReport report{s.ctype(), {}, true, h.highest, h.highest_short, {}};
  for (std::size_t i = 0; i < s.rank(); ++i) {
    report.rows.push_back(make_row(s, h, i));
    report.all_equivalent = report.all_equivalent && report.rows.back().equivalent();
  }
  for (RootIndex r : s.positives()) report.heights.emplace_back(s.root(r), s.abs_height(r));
  return report;
}

}  // namespace rootkit
