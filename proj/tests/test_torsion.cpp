#include <gtest/gtest.h>

#include "ellab/catalog.hpp"
#include "ellab/error.hpp"
#include "ellab/isogeny.hpp"
#include "ellab/torsion.hpp"
#include "oracles.hpp"

using namespace ellab;

namespace {

FiberConfig cfg(std::vector<int> k) { return FiberConfig::with_default_labels(std::move(k)); }

}  // namespace

TEST(TorsionSufficient, Examples) {
  EXPECT_TRUE(torsion_sufficient(cfg({4, 4, 2, 2}), 2));
  EXPECT_TRUE(torsion_sufficient(cfg({3, 3, 3, 2, 1}), 3));
  EXPECT_FALSE(torsion_sufficient(cfg({1, 1, 8, 1, 1}), 2));
  EXPECT_FALSE(torsion_sufficient(cfg({5, 3, 2, 1, 1}), 2));
}

TEST(TorsionSufficient, FourExceptions) {
  // Four indices prime to 5 with product 8, a non-residue mod 5.
  EXPECT_TRUE(torsion_sufficient(cfg({2, 2, 2, 1, 5}), 5));
  // Four indices prime to 5 with product 4 = 2^2.
  EXPECT_FALSE(torsion_sufficient(cfg({4, 1, 1, 1, 5}), 5));
  // p = 2, n = 5: -(3*3*1*1) = 7 mod 8, while (4-1) = 3.
  EXPECT_TRUE(torsion_sufficient(cfg({3, 3, 1, 1, 4}), 2));
  // Five exceptions leave no choice of E.
  EXPECT_FALSE(torsion_sufficient(cfg({1, 1, 1, 2, 6, 1}), 3));
}

namespace {

bool is_square_mod(long a, int p) {
  for (long x = 1; x < p; ++x)
    if ((x * x - a) % p == 0) return true;
  return false;
}

// Literal reading of the criterion: some 4-element position set E holds
// every index prime to p, and the arithmetic condition holds for that E.
bool sufficient_oracle(const std::vector<int>& k, int p) {
  const std::size_t n = k.size();
  std::size_t coprime = 0;
  for (int v : k) coprime += (v % p != 0);
  if (coprime <= 3) return true;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != 4) continue;
    bool covers = true;
    long prod = 1, others = 1;
    bool rest_div4 = true;
    for (std::size_t i = 0; i < n; ++i) {
      const bool in_e = mask & (std::size_t{1} << i);
      if (!in_e && k[i] % p != 0) covers = false;
      if (in_e) {
        prod *= k[i];
      } else {
        others *= k[i] - 1;
        if (k[i] % 4 != 0) rest_div4 = false;
      }
    }
    if (!covers) continue;
    if (p == 2) {
      const long lhs = (n % 2 == 0 ? prod : -prod);
      if (rest_div4 && ((lhs - others) % 8 + 8) % 8 != 0) return true;
    } else if (prod % p != 0 && !is_square_mod(prod % p, p)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST(TorsionSufficient, AgreesWithSubsetOracle) {
  int checked = 0;
  for (int parts = 4; parts <= 8; ++parts) {
    for (const auto& part : oracle::partitions(12, parts)) {
      for (int p : {2, 3, 5, 7, 11}) {
        EXPECT_EQ(torsion_sufficient(cfg(part), p), sufficient_oracle(part, p))
            << compact_indices(part) << " p=" << p;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(TorsionSufficient, RejectsComposite) {
  try {
    torsion_sufficient(cfg({3, 3, 3, 3}), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(ExcludesTwoTorsion, Examples) {
  EXPECT_TRUE(excludes_two_torsion(cfg({3, 3, 1, 1, 1, 1, 1, 1})));
  EXPECT_FALSE(excludes_two_torsion(cfg({1, 1, 8, 1, 1})));
  EXPECT_FALSE(excludes_two_torsion(cfg({4, 4, 2, 2})));
}

TEST(TorsionStatus, Examples) {
  const auto a = torsion_status(cfg({1, 1, 8, 1, 1}), 2);
  EXPECT_EQ(a.answer, TorsionAnswer::Yes);
  EXPECT_EQ(a.provenance, Provenance::CatalogTable);

  const auto b = torsion_status(cfg({7, 2, 1, 1, 1}), 2);
  EXPECT_EQ(b.answer, TorsionAnswer::No);
  EXPECT_EQ(b.provenance, Provenance::MoveNonexistence);

  const auto c = torsion_status(cfg({3, 3, 3, 3}), 3);
  EXPECT_EQ(c.answer, TorsionAnswer::Yes);
  EXPECT_EQ(c.provenance, Provenance::SufficientCriterion);

  const auto d = torsion_status(cfg({5, 3, 2, 1, 1}), 2);
  EXPECT_EQ(d.answer, TorsionAnswer::No);
  EXPECT_EQ(d.provenance, Provenance::MoveNonexistence);
}

TEST(TorsionStatus, NecessaryCriterionReportsBothArguments) {
  const auto s = torsion_status(cfg({3, 3, 1, 1, 1, 1, 1, 1}), 2);
  EXPECT_EQ(s.answer, TorsionAnswer::No);
  EXPECT_EQ(s.provenance, Provenance::NecessaryCriterion);
  EXPECT_FALSE(s.has_yes_evidence());
}

TEST(TorsionStatus, UnknownBeyondCatalog) {
  EXPECT_EQ(torsion_status(cfg({2, 2, 2, 2, 2, 2}), 2).answer, TorsionAnswer::Yes);
  // The only raw move lands on seven fibers, outside the tables.
  const auto u = torsion_status(cfg({4, 2, 2, 1, 1, 1, 1}), 2);
  EXPECT_EQ(u.answer, TorsionAnswer::Unknown);
  EXPECT_FALSE(u.provenance);
}

TEST(TorsionStatus, UnsupportedPrimes) {
  for (int p : {7, 11, 4, 1}) {
    try {
      torsion_status(cfg({3, 3, 3, 3}), p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedPrime) << p;
    }
  }
}

TEST(TorsionStatus, NoConfigHasBothVerdicts) {
  for (const auto& col : all_classes()) {
    for (const auto& row : col.rows) {
      for (int p : kIsogenyPrimes) {
        const auto s = torsion_status(cfg(row), p);
        EXPECT_FALSE(s.has_yes_evidence() && s.has_no_evidence()) << compact_indices(row) << " p=" << p;
        EXPECT_EQ(s.answer == TorsionAnswer::Unknown, !s.provenance.has_value());
      }
    }
  }
}
