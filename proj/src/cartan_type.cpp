#include "rootkit/cartan_type.hpp"

#include <utility>

#include "rootkit/error.hpp"

namespace rootkit {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

bool CartanType::admissible(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

CartanType CartanType::make(Family family, int rank) {
  if (!admissible(family, rank)) {
    throw Error(ErrorCode::InadmissibleRank, std::string("inadmissible rank ") +
                                                 std::to_string(rank) + " for type " +
                                                 family_letter(family));
  }
  return CartanType(family, rank);
}

CartanType CartanType::parse(std::string_view text) {
  const auto bad = [&] {
    return Error(ErrorCode::ParseError,
                 "cannot parse type '" + std::string(text) + "' (expected e.g. A3, G2)");
  };
  if (text.size() < 2 || text[0] < 'A' || text[0] > 'G') throw bad();
  int rank = 0;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw bad();
    if (rank > 10000) throw Error(ErrorCode::InadmissibleRank, "rank too large");
    rank = rank * 10 + (text[k] - '0');
  }
  return make(static_cast<Family>(text[0] - 'A'), rank);
}

bool CartanType::simply_laced() const noexcept {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

std::string CartanType::to_string() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

std::vector<CartanType> admissible_types(int max_rank) {
  std::vector<CartanType> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f) {
    for (int r = 1; r <= max_rank; ++r) {
      if (CartanType::admissible(static_cast<Family>(f), r)) {
        out.push_back(CartanType::make(static_cast<Family>(f), r));
      }
    }
  }
  return out;
}

IntMatrix standard_cartan_matrix(const CartanType& ctype) {
  const auto n = static_cast<std::size_t>(ctype.rank());
  IntMatrix a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  const auto simple_edge = [&](std::size_t i, std::size_t j) {
    a[i][j] = -1;
    a[j][i] = -1;
  };
  // lng is the long end; ratio is the squared-length ratio.
  const auto multi_edge = [&](std::size_t lng, std::size_t shrt, long ratio) {
    a[lng][shrt] = -ratio;
    a[shrt][lng] = -1;
  };

  switch (ctype.family()) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multi_edge(n - 2, n - 1, 2);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      multi_edge(n - 1, n - 2, 2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) simple_edge(i, i + 1);
      simple_edge(n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 hanging off 4 (1-based).
      simple_edge(0, 2);
      simple_edge(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) simple_edge(i, i + 1);
      break;
    case Family::F:
      simple_edge(0, 1);
      multi_edge(1, 2, 2);
      simple_edge(2, 3);
      break;
    case Family::G:
      multi_edge(1, 0, 3);
      break;
  }
  return a;
}

}  // namespace rootkit
