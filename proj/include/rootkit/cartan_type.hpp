#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rootkit {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Cartan matrix as integers, entry (i, j) = <alpha_i, alpha_j^v>.
using IntMatrix = std::vector<std::vector<long>>;

/// An irreducible reduced type with admissible rank:
/// A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F4, G2.
class CartanType {
 public:
  /// Throws Error(InadmissibleRank).
  static CartanType make(Family family, int rank);
  /// Grammar ^[A-G][0-9]+$. Throws Error(ParseError) or Error(InadmissibleRank).
  static CartanType parse(std::string_view text);

  static bool admissible(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool simply_laced() const noexcept;

  std::string to_string() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  CartanType(Family family, int rank) : family_(family), rank_(rank) {}

  Family family_;
  int rank_;
};

/// All admissible types of rank <= max_rank, ordered by family then rank.
std::vector<CartanType> admissible_types(int max_rank);

/// Bourbaki-numbered Cartan matrix, read off the Dynkin diagram.
IntMatrix standard_cartan_matrix(const CartanType& ctype);

}  // namespace rootkit
