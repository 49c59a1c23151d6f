#include "rootkit/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "rootkit/error.hpp"

namespace rootkit {

namespace {

Rational bilinear(const RatMatrix& form, const RatVector& u, const RatVector& v) {
  return dot(u, form * v);
}

// 2 F alpha / (alpha, alpha): dotting with v gives <v, alpha^v>.
RatVector pairing_functional(const RatMatrix& form, const RatVector& alpha) {
  RatVector f = form * alpha;
  const Rational scale = Rational(2) / dot(alpha, f);
  f *= scale;
  return f;
}

// Primitive representative of the line through v, used to detect
// non-reduced root sets.
RatVector direction_key(const RatVector& v) {
  RatVector key = v;
  for (const auto& c : v) {
    if (c != 0) {
      const Rational scale = 1 / c;
      key *= scale;
      break;
    }
  }
  return key;
}

}  // namespace

BasisDecomposer::BasisDecomposer(std::vector<RatVector> basis, const RatMatrix& form)
    : basis_(std::move(basis)), form_(form) {
  const std::size_t k = basis_.size();
  RatMatrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) gram(a, b) = bilinear(form_, basis_[a], basis_[b]);
  auto inv = inverse(gram);
  if (!inv) throw std::invalid_argument("basis vectors are linearly dependent");
  gram_inverse_ = std::move(*inv);
}

std::optional<std::vector<Rational>> BasisDecomposer::coefficients(const RatVector& v) const {
  const std::size_t k = basis_.size();
  const RatVector fv = form_ * v;
  RatVector rhs(k);
  for (std::size_t a = 0; a < k; ++a) rhs[a] = dot(basis_[a], fv);
  const RatVector c = gram_inverse_ * rhs;
  RatVector rebuilt(v.size());
  for (std::size_t a = 0; a < k; ++a) rebuilt.add_scaled(c[a], basis_[a]);
  if (rebuilt != v) return std::nullopt;
  return c.coords();
}

std::vector<long> BasisDecomposer::integer_coefficients(const RatVector& v) const {
  auto c = coefficients(v);
  if (!c) {
    throw Error(ErrorCode::NonIntegralSolution, v.to_string() + " is outside the span of the basis");
  }
  std::vector<long> out;
  out.reserve(c->size());
  for (const auto& q : *c) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) {
      throw Error(ErrorCode::NonIntegralSolution,
                  v.to_string() + " has non-integral coefficient " + q.get_str());
    }
    out.push_back(q.get_num().get_si());
  }
  return out;
}

std::vector<RatVector> reflection_closure(const std::vector<RatVector>& simples,
                                          const RatMatrix& form) {
  std::vector<RatVector> functionals;
  functionals.reserve(simples.size());
  for (const auto& a : simples) functionals.push_back(pairing_functional(form, a));

  std::vector<RatVector> found;
  std::unordered_set<RatVector, RatVectorHash> seen;
  std::deque<std::size_t> queue;
  for (const auto& a : simples) {
    if (seen.insert(a).second) {
      found.push_back(a);
      queue.push_back(found.size() - 1);
    }
  }
  while (!queue.empty()) {
    const RatVector cur = found[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < simples.size(); ++i) {
      const Rational p = dot(functionals[i], cur);
      if (p == 0) continue;
      RatVector next = cur;
      next.add_scaled(-p, simples[i]);
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        queue.push_back(found.size() - 1);
      }
    }
  }
  return found;
}

RatMatrix symmetrized_form(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::vector<Rational> d(n, 0);
  std::vector<bool> done(n, false);
  std::deque<std::size_t> queue{0};
  d[0] = 1;
  done[0] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || cartan[i][j] == 0) continue;
      d[j] = Rational(cartan[j][i]) * d[i] / cartan[i][j];
      done[j] = true;
      queue.push_back(j);
    }
  }
  if (!std::all_of(done.begin(), done.end(), [](bool b) { return b; })) {
    throw std::invalid_argument("Cartan matrix is not connected");
  }
  mpz_class den_lcm = 1;
  for (const auto& q : d) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (auto& q : d) {
    q *= den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  for (auto& q : d) q /= num_gcd;

  RatMatrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) form(i, j) = Rational(cartan[i][j]) * d[j];
  if (!form.is_symmetric()) throw std::invalid_argument("Cartan matrix is not symmetrizable");
  return form;
}

RootSystem RootSystem::assemble(CartanType ctype, bool dual, Model model, RatMatrix form,
                                std::vector<RatVector> simples, std::vector<RatVector> roots) {
  const std::size_t dim = form.rows();
  if (form.cols() != dim || !form.is_symmetric()) {
    throw std::invalid_argument("form must be a symmetric square matrix");
  }
  for (const auto& a : simples) {
    if (a.size() != dim) throw std::invalid_argument("simple root has wrong dimension");
  }
  if (roots.empty()) roots = reflection_closure(simples, form);

  RootSystem s;
  s.ctype_ = ctype;
  s.dual_ = dual;
  s.model_ = model;
  s.form_ = std::move(form);
  s.simples_ = std::move(simples);

  RatMatrix simple_gram(s.rank(), s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j)
      simple_gram(i, j) = bilinear(s.form_, s.simples_[i], s.simples_[j]);
  if (!is_positive_definite(simple_gram)) {
    throw std::invalid_argument("form is not positive definite on the span of the roots");
  }
  s.simple_basis_ = BasisDecomposer(s.simples_, s.form_);

  // Every root is a sign-uniform integer combination of the base, nonzero,
  // and its line meets the root set in exactly {beta, -beta}.
  std::unordered_set<RatVector, RatVectorHash> root_set(roots.begin(), roots.end());
  if (root_set.size() != roots.size()) throw std::invalid_argument("duplicate roots");
  std::map<RatVector, int> per_line;
  struct Entry {
    RatVector v;
    std::vector<long> c;
    long h;
  };
  std::vector<Entry> entries;
  entries.reserve(roots.size());
  for (auto& r : roots) {
    if (r.size() != dim || r.is_zero()) throw std::invalid_argument("invalid root vector");
    if (!root_set.count(-r)) throw std::invalid_argument("root set is not symmetric");
    ++per_line[direction_key(r)];
    auto c = s.simple_basis_.integer_coefficients(r);
    const bool nonneg = std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
    if (!nonneg && !nonpos) throw std::invalid_argument("root has mixed-sign coefficients");
    long h = 0;
    for (long x : c) h += std::abs(x);
    entries.push_back({std::move(r), std::move(c), h});
  }
  for (const auto& [line, count] : per_line) {
    if (count != 2) throw std::invalid_argument("root system is not reduced");
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.v < b.v;
  });

  const std::size_t n = entries.size();
  s.roots_.reserve(n);
  s.coeffs_.reserve(n);
  s.positive_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = entries[k].c;
    s.positive_[k] = std::any_of(c.begin(), c.end(), [](long x) { return x > 0; });
    s.lookup_.emplace(entries[k].v, k);
    s.roots_.push_back(std::move(entries[k].v));
    s.coeffs_.push_back(std::move(entries[k].c));
  }
  s.neg_.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.neg_[k] = s.lookup_.at(-s.roots_[k]);
  for (const auto& a : s.simples_) {
    auto it = s.lookup_.find(a);
    if (it == s.lookup_.end()) throw std::invalid_argument("simple root missing from root set");
    s.simple_idx_.push_back(it->second);
  }

  for (const auto& a : s.simples_) {
    const Rational scale = Rational(2) / s.inner(a, a);
    s.simple_coroots_.push_back(scale * a);
    s.pairing_functionals_.push_back(pairing_functional(s.form_, a));
  }
  s.coroot_basis_ = BasisDecomposer(s.simple_coroots_, s.form_);

  s.max_sq_length_ = 0;
  std::optional<Rational> first;
  for (const auto& r : s.roots_) {
    const Rational len = s.inner(r, r);
    if (len > s.max_sq_length_) s.max_sq_length_ = len;
    if (!first) first = len;
    if (len != *first) s.simply_laced_ = false;
  }
  return s;
}

std::string RootSystem::name() const { return ctype_.to_string() + (dual_ ? "^v" : ""); }

const RatVector& RootSystem::simple(std::size_t i) const {
  if (i >= rank()) {
    throw Error(ErrorCode::BadIndex, "simple index " + std::to_string(i) + " out of range for " +
                                         name() + " (rank " + std::to_string(rank()) + ")");
  }
  return simples_[i];
}

const RatVector& RootSystem::simple_coroot(std::size_t i) const {
  simple(i);
  return simple_coroots_[i];
}

RootIndex RootSystem::simple_index(std::size_t i) const {
  simple(i);
  return RootIndex{simple_idx_[i]};
}

std::vector<RootIndex> RootSystem::positives() const {
  std::vector<RootIndex> out;
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    if (positive_[k]) out.push_back(RootIndex{k});
  }
  return out;
}

std::optional<RootIndex> RootSystem::find(const RatVector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return RootIndex{it->second};
}

RootIndex RootSystem::index_of(const RatVector& v) const {
  auto r = find(v);
  if (!r) throw Error(ErrorCode::NotARoot, v.to_string() + " is not a root of " + name());
  return *r;
}

long RootSystem::abs_height(RootIndex r) const {
  long h = 0;
  for (long x : coeffs_.at(r.idx)) h += std::abs(x);
  return h;
}

Rational RootSystem::inner(const RatVector& u, const RatVector& v) const {
  return bilinear(form_, u, v);
}

Rational RootSystem::simple_pairing(const RatVector& v, std::size_t i) const {
  simple(i);
  return dot(pairing_functionals_[i], v);
}

RatVector coroot(const RootSystem& s, const RatVector& beta) {
  s.index_of(beta);
  const Rational scale = Rational(2) / s.inner(beta, beta);
  return scale * beta;
}

Rational pairing(const RootSystem& s, const RatVector& chi, const RatVector& beta) {
  s.index_of(beta);
  return Rational(2) * s.inner(chi, beta) / s.inner(beta, beta);
}

RootSystem dual_system(const RootSystem& s) {
  std::vector<RatVector> coroots;
  coroots.reserve(s.roots().size());
  for (const auto& r : s.roots()) coroots.push_back(coroot(s, r));
  std::vector<RatVector> simple_coroots;
  for (std::size_t i = 0; i < s.rank(); ++i) simple_coroots.push_back(s.simple_coroot(i));
  return RootSystem::assemble(s.ctype(), !s.is_dual(), s.model(), s.form(),
                              std::move(simple_coroots), std::move(coroots));
}

LengthClass length_class(const RootSystem& s, const RatVector& beta) {
  s.index_of(beta);
  return s.inner(beta, beta) == s.max_sq_length() ? LengthClass::Long : LengthClass::Short;
}

IntMatrix cartan_matrix(const RootSystem& s) {
  const std::size_t n = s.rank();
  IntMatrix a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational p = s.simple_pairing(s.simple(i), j);
      if (!is_integer(p)) throw Error(ErrorCode::NonIntegralSolution, "non-integral Cartan entry");
      a[i][j] = p.get_num().get_si();
    }
  return a;
}

// ---------------------------------------------------------------------------
// Canonical models

namespace {

RatVector e(std::size_t dim, std::size_t i) { return RatVector::unit(dim, i); }

// +-e_i +- e_j for i < j, optionally only the differences.
void add_pair_roots(std::vector<RatVector>& out, std::size_t n, bool with_sums) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      out.push_back(e(n, i) - e(n, j));
      if (with_sums && i < j) {
        out.push_back(e(n, i) + e(n, j));
        out.push_back(-(e(n, i) + e(n, j)));
      }
    }
}

std::vector<RatVector> chain_simples(std::size_t dim, std::size_t count) {
  std::vector<RatVector> simples;
  for (std::size_t i = 0; i < count; ++i) simples.push_back(e(dim, i) - e(dim, i + 1));
  return simples;
}

RootSystem coordinate_model(const CartanType& ctype) {
  const auto n = static_cast<std::size_t>(ctype.rank());
  std::vector<RatVector> roots;
  std::vector<RatVector> simples;
  std::size_t dim = n;
  switch (ctype.family()) {
    case Family::A:
      dim = n + 1;
      add_pair_roots(roots, dim, false);
      simples = chain_simples(dim, n);
      break;
    case Family::B:
      add_pair_roots(roots, n, true);
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(e(n, i));
        roots.push_back(-e(n, i));
      }
      simples = chain_simples(n, n - 1);
      simples.push_back(e(n, n - 1));
      break;
    case Family::C:
      add_pair_roots(roots, n, true);
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(Rational(2) * e(n, i));
        roots.push_back(Rational(-2) * e(n, i));
      }
      simples = chain_simples(n, n - 1);
      simples.push_back(Rational(2) * e(n, n - 1));
      break;
    case Family::D:
      add_pair_roots(roots, n, true);
      simples = chain_simples(n, n - 1);
      simples.push_back(e(n, n - 2) + e(n, n - 1));
      break;
    case Family::G: {
      dim = 3;
      add_pair_roots(roots, 3, false);
      for (std::size_t i = 0; i < 3; ++i) {
        RatVector v = Rational(3) * e(3, i) - RatVector{1, 1, 1};
        roots.push_back(v);
        roots.push_back(-v);
      }
      simples = {RatVector{1, -1, 0}, RatVector{-2, 1, 1}};
      break;
    }
    case Family::E:
    case Family::F:
      throw std::logic_error("no coordinate model for " + ctype.to_string());
  }
  return RootSystem::assemble(ctype, false, Model::Coordinate, RatMatrix::identity(dim),
                              std::move(simples), std::move(roots));
}

}  // namespace

RootSystem build_closure_system(const CartanType& ctype) {
  const IntMatrix cartan = standard_cartan_matrix(ctype);
  const auto n = static_cast<std::size_t>(ctype.rank());
  std::vector<RatVector> simples;
  for (std::size_t i = 0; i < n; ++i) simples.push_back(RatVector::unit(n, i));
  return RootSystem::assemble(ctype, false, Model::Closure, symmetrized_form(cartan),
                              std::move(simples));
}

RootSystem build_system(const CartanType& ctype) {
  switch (ctype.family()) {
    case Family::E:
    case Family::F:
      return build_closure_system(ctype);
    default:
      return coordinate_model(ctype);
  }
}

}  // namespace rootkit
