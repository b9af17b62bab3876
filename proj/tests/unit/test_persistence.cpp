#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "topopush/errors.hpp"
#include "topopush/persistence.hpp"
#include "topopush/union_find.hpp"

using namespace topopush;
using topopush::oracle::brute_components;
using topopush::oracle::brute_mst_deaths;
using topopush::oracle::random_points;

TEST(UnionFind, MergesAndCountsSets) {
  UnionFind uf(5);
  EXPECT_EQ(uf.num_sets(), 5u);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(1, 4));
  EXPECT_EQ(uf.num_sets(), 2u);
  EXPECT_EQ(uf.find(0), uf.find(3));
  EXPECT_NE(uf.find(2), uf.find(0));
}

TEST(Persistence, CollinearExample) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {3, 0}};
  const auto d = zero_dim_persistence(pts);
  EXPECT_EQ(d.deaths, (std::vector<double>{1.0, 2.0}));
  EXPECT_EQ(d.essential_count, 1);
  EXPECT_EQ(d.point_count(), 3u);
}

TEST(Persistence, SinglePointHasOnlyTheEssentialClass) {
  const std::vector<Point2> pts{{0.2, 0.2}};
  const auto d = zero_dim_persistence(pts);
  EXPECT_TRUE(d.deaths.empty());
  EXPECT_EQ(d.essential_count, 1);
}

TEST(Persistence, TwoPointsDieAtTheirDistance) {
  const std::vector<Point2> pts{{0.1, 0.2}, {0.4, 0.6}};
  EXPECT_EQ(zero_dim_persistence(pts).deaths, (std::vector<double>{std::hypot(0.3, 0.4)}));
}

TEST(Persistence, EmptyAndDuplicateInputsAreRejected) {
  EXPECT_THROW(zero_dim_persistence(std::vector<Point2>{}), DomainError);
  const std::vector<Point2> dup{{0.1, 0.1}, {0.5, 0.5}, {0.1, 0.1}};
  EXPECT_THROW(zero_dim_persistence(dup), DomainError);
}

TEST(Persistence, MatchesBruteForceKruskal) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> n_dist(1, 25);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = random_points(rng, n_dist(rng));
    const auto d = zero_dim_persistence(pts);
    EXPECT_EQ(d.deaths, brute_mst_deaths(pts));
    EXPECT_EQ(d.deaths.size(), pts.size() - 1);
    EXPECT_TRUE(std::is_sorted(d.deaths.begin(), d.deaths.end()));
  }
}

TEST(Persistence, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto pts = random_points(rng, 10);
    const auto before = zero_dim_persistence(pts).deaths;
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_EQ(zero_dim_persistence(pts).deaths, before);
  }
}

TEST(Components, CollinearExample) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {3, 0}};
  const auto part = components_at(pts, 1.5);
  EXPECT_EQ(part.components, (std::vector<std::vector<std::size_t>>{{0, 1}, {2}}));
  EXPECT_EQ(part.radius, 1.5);
}

TEST(Components, ZeroRadiusGivesSingletonsAndMaxDeathGivesOne) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto pts = random_points(rng, 9);
    EXPECT_EQ(components_at(pts, 0.0).components.size(), pts.size());
    const double top = zero_dim_persistence(pts).deaths.back();
    EXPECT_EQ(components_at(pts, top).components.size(), 1u);
  }
}

TEST(Components, MatchBruteForceFloodFill) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ur(0.0, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = random_points(rng, 12);
    const double r = ur(rng);
    EXPECT_EQ(components_at(pts, r).components, brute_components(pts, r));
  }
}

TEST(Components, CountEqualsOnePlusDeathsAboveRadius) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ur(0.0, 0.6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pts = random_points(rng, 10);
    const auto deaths = zero_dim_persistence(pts).deaths;
    const double r = ur(rng);
    const auto above = std::count_if(deaths.begin(), deaths.end(), [&](double d) { return d > r; });
    EXPECT_EQ(components_at(pts, r).components.size(), static_cast<std::size_t>(above) + 1);
  }
}

TEST(PersistentRadii, WorkedExampleSets) {
  const PersistenceDiagram d{{0.064, 0.086, 0.121, 0.14}, 1};
  EXPECT_EQ(persistent_radii(d, 0.015, 0.08).radii, (std::vector<double>{0.086, 0.121, 0.14}));
  EXPECT_EQ(persistent_radii(d, 0.015, 0.0).radii, (std::vector<double>{0.064, 0.086, 0.121, 0.14}));
}

TEST(PersistentRadii, FallbackWhenNothingQualifies) {
  EXPECT_EQ(persistent_radii({{0.05}, 1}, 0.01, 0.08).radii, (std::vector<double>{0.08}));
  EXPECT_EQ(persistent_radii({{}, 1}, 0.01, 0.08).radii, (std::vector<double>{0.08}));
}

TEST(PersistentRadii, ShortLivedDeathsAreDropped) {
  const PersistenceDiagram d{{0.09, 0.10, 0.20}, 1};
  EXPECT_EQ(persistent_radii(d, 0.015, 0.08).radii, (std::vector<double>{0.10, 0.20}));
}

TEST(PersistentRadii, RejectsBadParameters) {
  const PersistenceDiagram d{{0.1}, 1};
  EXPECT_THROW(persistent_radii(d, 0.0, 0.08), DomainError);
  EXPECT_THROW(persistent_radii(d, 0.015, -1.0), DomainError);
}

TEST(PersistentRadii, DefinitionHoldsOnRandomDiagrams) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> nu_d(0.005, 0.05), h_d(0.0, 0.3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = random_points(rng, 12);
    const auto diag = zero_dim_persistence(pts);
    const double nu = nu_d(rng), h = h_d(rng);
    const auto r = persistent_radii(diag, nu, h);
    ASSERT_FALSE(r.radii.empty());
    EXPECT_TRUE(std::is_sorted(r.radii.begin(), r.radii.end()));
    for (double x : r.radii) EXPECT_GE(x, h);
    // Independent membership check over every death.
    std::vector<double> expect;
    for (double d : diag.deaths) {
      if (d < h) continue;
      const bool lonely = std::none_of(diag.deaths.begin(), diag.deaths.end(),
                                       [&](double e) { return e > d && e <= d + nu; });
      if (lonely) expect.push_back(d);
    }
    if (expect.empty()) expect.push_back(std::max(h, diag.deaths.back()));
    EXPECT_EQ(r.radii, expect);
  }
}

TEST(GripperClearance, Examples) {
  Workspace ws;
  ws.gripper_width = 0.06;
  ws.object_radius = 0.01;
  EXPECT_NEAR(gripper_clearance_h(ws), 0.086, 1e-15);
  ws.gripper_width = 0.0;
  ws.object_radius = 0.04;
  EXPECT_NEAR(gripper_clearance_h(ws), 0.08, 1e-15);
}

TEST(ClosestComponent, Examples) {
  const Pose2 g{{0.0, 0.0}, 0.0};
  const std::vector<Point2> pts{{1, 0}, {2, 0}};
  const auto part = components_at(pts, 0.5);
  EXPECT_EQ(closest_component(part, pts, g), (std::vector<std::size_t>{0}));

  const auto one = components_at(pts, 2.0);
  EXPECT_EQ(closest_component(one, pts, g), (std::vector<std::size_t>{0, 1}));

  const std::vector<Point2> sym{{0, 1}, {0, -1}};
  EXPECT_EQ(closest_component(components_at(sym, 0.5), sym, g), (std::vector<std::size_t>{0}));
}

TEST(DiagramCsv, RowsSortedWithEssentialLast) {
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {3, 0}};
  EXPECT_EQ(diagram_to_csv(zero_dim_persistence(pts)), "birth,death\n0,1\n0,2\n0,inf\n");
}
