#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootkit/cartan_type.hpp"
#include "rootkit/linalg.hpp"
#include "rootkit/rational.hpp"

namespace rootkit {

struct RootIndex {
  std::size_t idx = 0;
  friend auto operator<=>(const RootIndex&, const RootIndex&) = default;
};

enum class LengthClass { Long, Short };

/// How the ambient coordinates were produced.
enum class Model {
  /// Explicit e_i coordinates (classical families and G2).
  Coordinate,
  /// Simple-root coordinates with the symmetrized Cartan matrix as form.
  Closure,
};

/// Writes vectors of a fixed span as integer combinations of a basis.
/// The basis Gram matrix is inverted once up front.
class BasisDecomposer {
 public:
  BasisDecomposer() = default;
  BasisDecomposer(std::vector<RatVector> basis, const RatMatrix& form);

  /// Exact coefficients; nullopt if v is outside the span.
  std::optional<std::vector<Rational>> coefficients(const RatVector& v) const;
  /// Throws Error(NonIntegralSolution) if v is outside the span or the
  /// coefficients are not integers.
  std::vector<long> integer_coefficients(const RatVector& v) const;

 private:
  std::vector<RatVector> basis_;
  RatMatrix form_;
  RatMatrix gram_inverse_;
};

/// An immutable reduced irreducible root system together with a base.
///
/// Roots are stored sorted by (height of +-beta, lexicographic coordinates),
/// so indices and iteration order are reproducible.
class RootSystem {
 public:
  /// Validates the data and indexes it. When `roots` is empty the root set is
  /// the reflection closure of `simples`.
  static RootSystem assemble(CartanType ctype, bool dual, Model model, RatMatrix form,
                             std::vector<RatVector> simples, std::vector<RatVector> roots = {});

  const CartanType& ctype() const noexcept { return ctype_; }
  /// True when this system was produced by dual_system from ctype().
  bool is_dual() const noexcept { return dual_; }
  Model model() const noexcept { return model_; }
  /// "B3", or "B3^v" for the dual.
  std::string name() const;

  std::size_t rank() const noexcept { return simples_.size(); }
  std::size_t dim() const noexcept { return form_.rows(); }

  const std::vector<RatVector>& roots() const noexcept { return roots_; }
  const RatVector& root(RootIndex r) const { return roots_.at(r.idx); }
  const std::vector<RatVector>& simples() const noexcept { return simples_; }
  /// Throws Error(BadIndex).
  const RatVector& simple(std::size_t i) const;
  const RatVector& simple_coroot(std::size_t i) const;
  RootIndex simple_index(std::size_t i) const;

  std::vector<RootIndex> positives() const;
  bool is_positive(RootIndex r) const { return positive_.at(r.idx); }
  RootIndex neg(RootIndex r) const { return RootIndex{neg_.at(r.idx)}; }

  std::optional<RootIndex> find(const RatVector& v) const;
  /// Throws Error(NotARoot).
  RootIndex index_of(const RatVector& v) const;
  bool contains(const RatVector& v) const { return find(v).has_value(); }

  /// Coefficients of a root on the base; cached at construction.
  const std::vector<long>& simple_coefficients(RootIndex r) const { return coeffs_.at(r.idx); }
  /// Sum of base coefficients of the positive root +-root(r).
  long abs_height(RootIndex r) const;

  const RatMatrix& form() const noexcept { return form_; }
  Rational inner(const RatVector& u, const RatVector& v) const;
  /// <v, alpha_i^v> for a simple root, through a cached linear functional.
  Rational simple_pairing(const RatVector& v, std::size_t i) const;

  const BasisDecomposer& simple_decomposer() const noexcept { return simple_basis_; }
  const BasisDecomposer& simple_coroot_decomposer() const noexcept { return coroot_basis_; }

  const Rational& max_sq_length() const noexcept { return max_sq_length_; }
  bool is_simply_laced() const noexcept { return simply_laced_; }

 private:
  RootSystem() = default;

  CartanType ctype_ = CartanType::make(Family::A, 1);
  bool dual_ = false;
  Model model_ = Model::Coordinate;
  RatMatrix form_;
  std::vector<RatVector> simples_;
  std::vector<RatVector> simple_coroots_;
  std::vector<RatVector> pairing_functionals_;
  std::vector<RatVector> roots_;
  std::vector<bool> positive_;
  std::vector<std::size_t> neg_;
  std::vector<std::vector<long>> coeffs_;
  std::vector<std::size_t> simple_idx_;
  std::unordered_map<RatVector, std::size_t, RatVectorHash> lookup_;
  BasisDecomposer simple_basis_;
  BasisDecomposer coroot_basis_;
  Rational max_sq_length_;
  bool simply_laced_ = true;
};

/// Canonical model: explicit coordinates for A/B/C/D/G, closure from the
/// Cartan matrix for E/F.
RootSystem build_system(const CartanType& ctype);
/// Closure model from the Cartan matrix, for any admissible type.
RootSystem build_closure_system(const CartanType& ctype);

/// Closure of the simple roots under simple reflections (BFS, insertion order).
std::vector<RatVector> reflection_closure(const std::vector<RatVector>& simples,
                                          const RatMatrix& form);

/// Smallest positive integers d_i with d_i * a(i, j) symmetric in the sense
/// a(i, j) * d_j == a(j, i) * d_i; the Gram matrix is then a(i, j) * d_j.
RatMatrix symmetrized_form(const IntMatrix& cartan);

/// 2 beta / (beta, beta). Throws Error(NotARoot).
RatVector coroot(const RootSystem& s, const RatVector& beta);
/// <chi, beta^v> = 2 (chi, beta) / (beta, beta). Throws Error(NotARoot).
Rational pairing(const RootSystem& s, const RatVector& chi, const RatVector& beta);
/// Coroots with the same form; base is the simple coroots in matching order.
RootSystem dual_system(const RootSystem& s);
/// Simply-laced systems report Long for every root. Throws Error(NotARoot).
LengthClass length_class(const RootSystem& s, const RatVector& beta);
/// Entry (i, j) = <alpha_i, alpha_j^v>.
IntMatrix cartan_matrix(const RootSystem& s);

}  // namespace rootkit
