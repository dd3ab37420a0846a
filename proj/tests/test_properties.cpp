#include <gtest/gtest.h>

#include <random>

#include "ellab/catalog.hpp"
#include "ellab/correspondence.hpp"
#include "ellab/isogeny.hpp"
#include "ellab/kummer.hpp"
#include "ellab/product.hpp"
#include "ellab/serialize.hpp"
#include "ellab/torsion.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace ellab;

namespace {

FiberConfig cfg(std::vector<int> k) { return FiberConfig::with_default_labels(std::move(k)); }

std::vector<std::vector<int>> all_arrangements(int min_parts, int max_parts) {
  std::vector<std::vector<int>> out;
  for (int n = min_parts; n <= max_parts; ++n)
    for (const auto& p : oracle::partitions(12, n))
      for (auto& t : oracle::permutations(p)) out.push_back(std::move(t));
  return out;
}

std::vector<std::vector<int>> catalog_rows() {
  std::vector<std::vector<int>> out;
  for (const auto& col : all_classes())
    for (const auto& r : col.rows) out.push_back(r);
  return out;
}

}  // namespace

TEST(Property, ParseRenderRoundTrip) {
  std::mt19937 rng(101);
  for (int i = 0; i < 500; ++i) {
    const auto t = gen::catalog_tuple(rng);
    const FiberConfig plain = cfg(t);
    EXPECT_EQ(parse_config(render_config(plain)), plain);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < t.size(); ++k) labels.push_back("L" + std::to_string(gen::below(rng, 90)) + "k" + std::to_string(k));
    const FiberConfig named(labels, t);
    EXPECT_EQ(parse_config(render_config(named)), named);
  }
}

TEST(Property, MovesSumTo12AndDualIsInvolution) {
  for (const auto& row : all_arrangements(4, 5)) {
    for (int p : kIsogenyPrimes) {
      for (const auto& m : enumerate_moves(cfg(row), p)) {
        int sum = 0;
        for (int k : m.target.indices()) sum += k;
        EXPECT_EQ(sum, 12);
        for (std::size_t i : m.divided) EXPECT_EQ(m.source[i] % p, 0);
        const auto d = dual_move(m);
        EXPECT_TRUE(is_valid_move(d));
        EXPECT_EQ(dual_move(d), m);
      }
    }
  }
}

TEST(Property, SufficientImpliesYes) {
  for (const auto& t : all_arrangements(4, 6)) {
    for (int p : kIsogenyPrimes) {
      if (torsion_sufficient(cfg(t), p)) {
        EXPECT_EQ(torsion_status(cfg(t), p).answer, TorsionAnswer::Yes) << compact_indices(t);
      }
    }
  }
}

TEST(Property, ManyOddIndicesMeanNoTwoTorsion) {
  int seen = 0;
  for (int n = 5; n <= 12; ++n) {
    for (const auto& part : oracle::partitions(12, n)) {
      const auto c = cfg(part);
      if (!excludes_two_torsion(c)) continue;
      ++seen;
      EXPECT_EQ(torsion_status(c, 2).answer, TorsionAnswer::No);
      EXPECT_TRUE(candidate_moves(c, 2).empty());
      for (const auto& m : enumerate_moves(c, 2)) {
        EXPECT_NE(admissible(partition_of(m.target)), Admissibility::Admissible);
      }
    }
  }
  EXPECT_GT(seen, 0);
}

// Splitting a multiple of p into two multiples of p adds a p-divisible index
// and must keep the at-most-three-exceptions condition satisfied.
TEST(Property, ConditionOneMonotone) {
  for (int n = 4; n <= 11; ++n) {
    for (const auto& part : oracle::partitions(12, n)) {
      for (int p : kIsogenyPrimes) {
        const auto coprime = std::count_if(part.begin(), part.end(), [p](int k) { return k % p != 0; });
        if (coprime > 3) continue;
        ASSERT_TRUE(torsion_sufficient(cfg(part), p));
        for (std::size_t i = 0; i < part.size(); ++i) {
          if (part[i] % p != 0 || part[i] < 2 * p) continue;
          auto grown = part;
          grown[i] = p;
          grown.push_back(part[i] - p);
          EXPECT_TRUE(torsion_sufficient(cfg(grown), p)) << compact_indices(grown);
        }
      }
    }
  }
}

TEST(Property, TorsionNeverBothWays) {
  for (const auto& t : all_arrangements(4, 5)) {
    if (admissible(partition_of(t)) != Admissibility::Admissible) continue;
    for (int p : kIsogenyPrimes) {
      const auto s = torsion_status(cfg(t), p);
      EXPECT_FALSE(s.has_yes_evidence() && s.has_no_evidence()) << compact_indices(t) << " p=" << p;
    }
  }
}

TEST(Property, FixedPointsSymmetricAndBounded) {
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      const int g = fiber_fixed_points(a, b);
      EXPECT_TRUE(g == 9 || g == 12 || g == 16);
      EXPECT_EQ(g, fiber_fixed_points(b, a));
      EXPECT_EQ(g, factor_fixed_points(a) * factor_fixed_points(b));
    }
  }
}

TEST(Property, EulerLinearInDelta) {
  std::mt19937 rng(202);
  for (int i = 0; i < 200; ++i) {
    const auto d = gen::catalog_product(rng);
    KummerInput in{d, 0, {}, {}, {}};
    const int e0 = branch_curve_euler(in);
    for (int delta = 1; delta <= 6; ++delta) {
      in.node_count = delta;
      EXPECT_EQ(branch_curve_euler(in), e0 + delta);
    }
  }
}

TEST(Property, ComponentIntervalInvariants) {
  std::vector<std::vector<int>> all;
  for (int parts = 1; parts <= 4; ++parts)
    for (const auto& p : oracle::partitions(4, parts)) all.push_back(p);
  ASSERT_EQ(all.size(), 5u);
  for (const auto& l : all) {
    for (const auto& r : all) {
      const auto [lo, hi] = component_interval(l, r);
      EXPECT_EQ(lo, static_cast<int>(l.size() * r.size()));
      EXPECT_GE(hi, lo);
      bool shared_factor = false;
      for (int a : l)
        for (int b : r) shared_factor = shared_factor || std::gcd(a, b) >= 2;
      EXPECT_EQ(hi == lo, !shared_factor);
      EXPECT_EQ(component_interval(r, l), std::make_pair(lo, hi));
    }
  }
}

TEST(Property, ForcedAtTwiceMaximum) {
  for (int c = 1; c <= 100; ++c) {
    for (int lo = 1; lo <= c; lo += 7) EXPECT_EQ(rationality_verdict(2 * c, lo, c), Rationality::Forced);
  }
}

TEST(Property, ApplyMovePreservesCounts) {
  std::mt19937 rng(20261014);
  int applied = 0;
  while (applied < 1000) {
    const auto d = gen::catalog_product(rng);
    const Side side = gen::below(rng, 2) == 0 ? Side::Left : Side::Right;
    const auto proj = d.projection(side);
    std::vector<IsogenyMove> moves;
    for (int p : kIsogenyPrimes)
      for (auto& m : enumerate_moves(proj, p)) moves.push_back(std::move(m));
    if (moves.empty()) continue;
    const auto& m = moves[gen::below(rng, moves.size())];
    const auto after = apply_move(d, side, m);
    EXPECT_EQ(after.singular_count(), d.singular_count());
    EXPECT_EQ(common_singular_count(after), common_singular_count(d));
    int ls = 0, rs = 0;
    for (auto [a, b] : after.pairs()) {
      ls += a;
      rs += b;
    }
    EXPECT_EQ(ls, 12);
    EXPECT_EQ(rs, 12);
    EXPECT_EQ(after.projection(side), m.target);
    EXPECT_EQ(after.projection(side == Side::Left ? Side::Right : Side::Left),
              d.projection(side == Side::Left ? Side::Right : Side::Left));
    ++applied;
  }
}

TEST(Property, PartnerSearchSwapAndRelabel) {
  std::mt19937 rng(303);
  for (int i = 0; i < 300; ++i) {
    const auto d = gen::catalog_product(rng);
    const auto r = find_rigid_partner(d);
    const auto s = find_rigid_partner(d.swapped());
    ASSERT_EQ(r.has_value(), s.has_value());
    const auto x = find_rigid_partner(gen::relabeled(rng, d));
    ASSERT_EQ(r.has_value(), x.has_value());
    if (!r) continue;
    EXPECT_TRUE(meets_rigidity_criterion(r->diagram));
    EXPECT_EQ(r->diagram.swapped().pairs(), s->diagram.pairs()) << format_diagram_inline(d);
    EXPECT_EQ(r->path.size(), s->path.size());
    EXPECT_EQ(r->diagram.pairs(), x->diagram.pairs());
  }
}

TEST(Property, CertifyInvariance) {
  std::mt19937 rng(404);
  int certified = 0;
  for (int i = 0; i < 400; ++i) {
    const auto d = gen::catalog_product(rng);
    if (classify_hypotheses(d).kind == HypothesisKind::NotApplicable) continue;
    const auto c = certify(d);
    const auto s = certify(d.swapped());
    const auto x = certify(gen::relabeled(rng, d));
    EXPECT_EQ(c.kind, s.kind);
    EXPECT_EQ(c.kind, x.kind);
    if (c.kind == CertificateKind::RigidProductPartner) {
      EXPECT_TRUE(meets_rigidity_criterion(*c.partner));
      EXPECT_EQ(c.partner->swapped().pairs(), s.partner->pairs());
      EXPECT_EQ(c.partner->pairs(), x.partner->pairs());
    }
    if (c.kind == CertificateKind::RigidKummer) {
      EXPECT_TRUE(c.kummer->rigid);
      EXPECT_EQ(c.kummer->euler, s.kummer->euler);
      EXPECT_EQ(*c.kummer, *x.kummer);
    }
    ++certified;
  }
  EXPECT_GT(certified, 10);
}

TEST(Property, DiagramJsonRoundTrip) {
  std::mt19937 rng(505);
  for (int i = 0; i < 200; ++i) {
    const auto d = gen::catalog_product(rng);
    const auto r = find_rigid_partner(d);
    const ProductDiagram& withlog = r ? r->diagram : d;
    const auto back = diagram_from_json(nlohmann::json::parse(dump_document(to_json(withlog))));
    EXPECT_EQ(back, withlog);
  }
}
