#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rootkit/classify.hpp"
#include "rootkit/error.hpp"

using namespace rootkit;

namespace {

RootSystem sys(const char* name) { return build_system(CartanType::parse(name)); }

RatVector e(std::size_t dim, std::size_t i) { return RatVector::unit(dim, i); }

std::vector<std::size_t> special_indices(const RootSystem& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (is_special(s, i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> cospecial_indices(const RootSystem& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (is_cospecial(s, i)) out.push_back(i);
  return out;
}

}  // namespace

TEST(Multiplicities, G2HighestRoot) {
  const RootSystem g2 = sys("G2");
  const MultiplicityProfile p = multiplicities(g2, RatVector{-1, -1, 2});
  EXPECT_EQ(p.on_simples, (std::vector<long>{3, 2}));
}

TEST(Multiplicities, SimpleRootsAreUnitVectors) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    for (std::size_t i = 0; i < s.rank(); ++i) {
      std::vector<long> unit(s.rank(), 0);
      unit[i] = 1;
      const MultiplicityProfile p = multiplicities(s, s.simple(i));
      EXPECT_EQ(p.on_simples, unit);
      EXPECT_EQ(p.on_simple_coroots, unit);
    }
  }
}

TEST(Multiplicities, B3HighestCoroot) {
  const RootSystem b3 = sys("B3");
  const MultiplicityProfile p = multiplicities(b3, highest_roots(b3).highest_short);
  EXPECT_EQ(p.on_simple_coroots, (std::vector<long>{2, 2, 1}));
  EXPECT_EQ(p.on_simples, (std::vector<long>{1, 1, 1}));
}

TEST(Multiplicities, ReconstructsRootsAndCoroots) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    for (const auto& beta : s.roots()) {
      const MultiplicityProfile p = multiplicities(s, beta);
      RatVector on_roots(s.dim()), on_coroots(s.dim());
      for (std::size_t i = 0; i < s.rank(); ++i) {
        on_roots.add_scaled(p.on_simples[i], s.simple(i));
        on_coroots.add_scaled(p.on_simple_coroots[i], s.simple_coroot(i));
      }
      EXPECT_EQ(on_roots, beta);
      EXPECT_EQ(on_coroots, coroot(s, beta));
    }
  }
}

TEST(Multiplicities, NotARoot) {
  const RootSystem s = sys("A2");
  try {
    multiplicities(s, RatVector{1, 1, -2});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotARoot);
  }
}

TEST(HighestRoots, ClassicalFamilies) {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem a = build_system(CartanType::make(Family::A, n));
    const HighestRoots h = highest_roots(a);
    EXPECT_EQ(h.highest, e(n + 1, 0) - e(n + 1, n));
    EXPECT_EQ(h.highest_short, h.highest);
  }
  for (int n = 2; n <= 8; ++n) {
    const HighestRoots h = highest_roots(build_system(CartanType::make(Family::B, n)));
    EXPECT_EQ(h.highest, e(n, 0) + e(n, 1));
    EXPECT_EQ(h.highest_short, e(n, 0));
  }
  for (int n = 3; n <= 8; ++n) {
    const HighestRoots h = highest_roots(build_system(CartanType::make(Family::C, n)));
    EXPECT_EQ(h.highest, Rational(2) * e(n, 0));
    EXPECT_EQ(h.highest_short, e(n, 0) + e(n, 1));
  }
  for (int n = 4; n <= 8; ++n) {
    const HighestRoots h = highest_roots(build_system(CartanType::make(Family::D, n)));
    EXPECT_EQ(h.highest, e(n, 0) + e(n, 1));
    EXPECT_EQ(h.highest_short, h.highest);
  }
}

TEST(HighestRoots, MaximalityAndLaceEquality) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    const HighestRoots h = highest_roots(s);
    EXPECT_EQ(h.highest == h.highest_short, s.is_simply_laced());
    EXPECT_EQ(length_class(s, h.highest), LengthClass::Long);
    const auto top = multiplicities(s, h.highest).on_simples;
    for (RootIndex r : s.positives()) {
      const auto& c = s.simple_coefficients(r);
      for (std::size_t i = 0; i < s.rank(); ++i) EXPECT_GE(top[i], c[i]);
    }
    if (!s.is_simply_laced()) {
      // highest short root: maximal among short positive roots
      EXPECT_EQ(length_class(s, h.highest_short), LengthClass::Short);
      const auto top_short = multiplicities(s, h.highest_short).on_simples;
      for (RootIndex r : s.positives()) {
        if (length_class(s, s.root(r)) != LengthClass::Short) continue;
        for (std::size_t i = 0; i < s.rank(); ++i)
          EXPECT_GE(top_short[i], s.simple_coefficients(r)[i]);
      }
    }
  }
}

TEST(Height, Examples) {
  const RootSystem g2 = sys("G2");
  EXPECT_EQ(height(g2, g2.simple(0)), 1);
  EXPECT_EQ(height(g2, g2.simple(1)), 1);
  EXPECT_EQ(height(g2, RatVector{-1, -1, 2}), 5);
  EXPECT_EQ(height(sys("A2"), RatVector{1, 0, -1}), 2);
  try {
    height(g2, -g2.simple(0));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotPositiveRoot);
  }
}

TEST(Special, Censuses) {
  for (int n = 1; n <= 8; ++n) {
    const RootSystem a = build_system(CartanType::make(Family::A, n));
    EXPECT_EQ(special_indices(a).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(cospecial_indices(a).size(), static_cast<std::size_t>(n));
  }
  for (int n = 4; n <= 8; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const RootSystem d = build_system(CartanType::make(Family::D, n));
    EXPECT_EQ(special_indices(d), (std::vector<std::size_t>{0, k - 2, k - 1}));
    EXPECT_EQ(d.simple(k - 2), e(k, k - 2) - e(k, k - 1));
    EXPECT_EQ(d.simple(k - 1), e(k, k - 2) + e(k, k - 1));
  }
  for (int n = 2; n <= 8; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const RootSystem b = build_system(CartanType::make(Family::B, n));
    EXPECT_EQ(special_indices(b), std::vector<std::size_t>{0});
    EXPECT_EQ(cospecial_indices(b), std::vector<std::size_t>{k - 1});
  }
  for (int n = 3; n <= 8; ++n) {
    const auto k = static_cast<std::size_t>(n);
    const RootSystem c = build_system(CartanType::make(Family::C, n));
    EXPECT_EQ(special_indices(c), std::vector<std::size_t>{k - 1});
    EXPECT_EQ(c.simple(k - 1), Rational(2) * e(k, k - 1));
    EXPECT_EQ(cospecial_indices(c), std::vector<std::size_t>{0});
  }
  EXPECT_TRUE(special_indices(sys("G2")).empty());
  EXPECT_TRUE(cospecial_indices(sys("G2")).empty());
  EXPECT_THROW(is_special(sys("G2"), 2), Error);
}

TEST(Special, DualityLaw) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    const RootSystem d = dual_system(s);
    for (std::size_t i = 0; i < s.rank(); ++i) {
      EXPECT_EQ(is_special(s, i), is_cospecial(d, i)) << t.to_string() << " " << i;
      EXPECT_EQ(is_cospecial(s, i), is_special(d, i)) << t.to_string() << " " << i;
    }
  }
}

TEST(FundamentalWeight, DualBasis) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    for (std::size_t i = 0; i < s.rank(); ++i) {
      const RatVector eta = fundamental_weight(s, i);
      for (std::size_t j = 0; j < s.rank(); ++j) {
        EXPECT_EQ(s.simple_pairing(eta, j), i == j ? 1 : 0);
      }
      EXPECT_TRUE(s.simple_decomposer().coefficients(eta).has_value());
    }
  }
}

TEST(FundamentalWeight, Examples) {
  const RootSystem a1 = sys("A1");
  EXPECT_EQ(fundamental_weight(a1, 0), Rational(1, 2) * a1.simple(0));
  // <e1, (e1-e2)^v> = 1 and <e1, e2^v> = 2*0/1 = 0.
  EXPECT_EQ(fundamental_weight(sys("B2"), 0), (RatVector{1, 0}));
  EXPECT_THROW(fundamental_weight(a1, 1), Error);
}

TEST(QuasiConstant, Examples) {
  const RootSystem b4 = sys("B4");
  EXPECT_TRUE(is_quasi_constant(b4, RatVector(4)));
  EXPECT_TRUE(is_quasi_constant(b4, fundamental_weight(b4, 0)));
  const RootSystem g2 = sys("G2");
  for (std::size_t i = 0; i < 2; ++i) {
    const RatVector eta = fundamental_weight(g2, i);
    EXPECT_FALSE(oracle::quasi_constant(g2, eta));
    EXPECT_FALSE(is_quasi_constant(g2, eta));
  }
}

TEST(QuasiConstant, ScaleInvariant) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-5, 5);
  for (const auto& t : admissible_types(6)) {
    const RootSystem s = build_system(t);
    for (int trial = 0; trial < 10; ++trial) {
      const RatVector chi = trial < static_cast<int>(s.rank())
                                ? fundamental_weight(s, static_cast<std::size_t>(trial))
                                : oracle::random_weight(s, rng, 1);
      int num = d(rng);
      if (num == 0) num = 3;
      Rational c(num, 1 + std::abs(d(rng)));
      c.canonicalize();
      EXPECT_EQ(is_quasi_constant(s, chi), is_quasi_constant(s, c * chi));
    }
  }
}

TEST(QuasiConstant, AgreesWithLiteralDefinitionOnRandomCharacters) {
  std::mt19937 rng(29);
  for (const auto& t : admissible_types(3)) {
    const RootSystem s = build_system(t);
    for (int trial = 0; trial < 15; ++trial) {
      const RatVector chi = oracle::random_weight(s, rng, 2);
      EXPECT_EQ(is_quasi_constant(s, chi), oracle::quasi_constant(s, chi)) << chi;
    }
  }
}

TEST(TheoremRow, Examples) {
  for (int n = 1; n <= 6; ++n) {
    const RootSystem a = build_system(CartanType::make(Family::A, n));
    for (std::size_t i = 0; i < a.rank(); ++i) {
      const ClassificationRow row = theorem_row(a, i);
      EXPECT_TRUE(row.quasi_constant && row.special && row.cospecial && row.dom_eq_levi_dom);
    }
  }
  for (int n = 4; n <= 7; ++n) {
    const RootSystem d = build_system(CartanType::make(Family::D, n));
    for (std::size_t i = 1; i + 2 < d.rank(); ++i) {
      const ClassificationRow row = theorem_row(d, i);
      EXPECT_FALSE(row.quasi_constant || row.special || row.cospecial || row.dom_eq_levi_dom);
      EXPECT_EQ(row.m, 2);
      EXPECT_EQ(row.m_dual, 2);
      EXPECT_FALSE(row.witness);
    }
  }
  const RootSystem g2 = sys("G2");
  for (std::size_t i = 0; i < 2; ++i) {
    const ClassificationRow row = theorem_row(g2, i);
    EXPECT_FALSE(row.quasi_constant || row.special || row.cospecial || row.dom_eq_levi_dom);
  }
}

TEST(VerifyTheorem, EveryTypeUpToRankEight) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    const TheoremReport rep = verify_theorem(s);
    EXPECT_TRUE(rep.all_equivalent) << t.to_string();
    ASSERT_EQ(rep.rows.size(), s.rank());
    EXPECT_EQ(rep.heights.size(), s.positives().size());
    for (const auto& row : rep.rows) {
      EXPECT_EQ(row.special, row.m == 1);
      EXPECT_EQ(row.cospecial, row.m_dual == 1);
      EXPECT_EQ(row.witness.has_value(), row.dom_eq_levi_dom);
      if (row.witness) {
        EXPECT_TRUE(row.witness->avoids(row.simple_index));
        EXPECT_EQ(apply_word(s, *row.witness, s.simple(row.simple_index)),
                  dominant_rep(s, s.simple(row.simple_index), SimpleSubset::all(s.rank())).vector);
      }
    }
  }
}

TEST(VerifyTheorem, CnAndRankTwo) {
  const RootSystem c5 = sys("C5");
  const TheoremReport rep = verify_theorem(c5);
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.special, row.simple_index == 4);
    EXPECT_EQ(row.cospecial, row.simple_index == 0);
  }
  const TheoremReport b2 = verify_theorem(sys("B2"));
  for (const auto& row : b2.rows) {
    EXPECT_TRUE(row.special || row.cospecial);
    EXPECT_TRUE(row.dom_eq_levi_dom);
    EXPECT_TRUE(row.quasi_constant);
  }
}

TEST(PropertySuites, NoCounterexamplesUpToRankEight) {
  for (const auto& t : admissible_types(8)) {
    const RootSystem s = build_system(t);
    EXPECT_TRUE(unique_pairing_counterexamples(s).empty()) << t.to_string();
    EXPECT_TRUE(positive_pairing_violations(s).empty()) << t.to_string();
  }
  for (const auto& t : admissible_types(6)) {
    EXPECT_TRUE(levi_multiplicity_violations(build_system(t)).empty()) << t.to_string();
  }
}

TEST(PropertySuites, SearchIsNotVacuous) {
  // Without the multiplicity bound the D4 highest root qualifies for the
  // branch node (index 1), the only simple root it pairs positively with.
  const RootSystem d4 = sys("D4");
  const RatVector top = highest_roots(d4).highest;
  std::size_t positive_partners = 0;
  for (std::size_t j = 0; j < 4; ++j) positive_partners += d4.inner(top, d4.simple(j)) > 0;
  EXPECT_EQ(positive_partners, 1u);
  EXPECT_EQ(multiplicities(d4, top).on_simples[1], 2);
}
