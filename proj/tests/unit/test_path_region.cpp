#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/fixtures.hpp"
#include "topopush/errors.hpp"
#include "topopush/path_region.hpp"

using namespace topopush;
using topopush::oracle::make_config;
using topopush::oracle::oracle_members;

TEST(PathRegion, AxisAlignedCorridorForCentredTarget) {
  const auto c = make_config({{0.2, 0.3}, {0.2, 0.5}, {0.54, 0.3}}, {0.45, 0.3});
  const PathRegion pr = path_region(c);
  EXPECT_EQ(pr.frame_angle, 0.0);
  EXPECT_EQ(pr.corridor.lo.x, 0.0);
  EXPECT_EQ(pr.corridor.hi.x, 0.45);
  EXPECT_NEAR(pr.corridor.lo.y, 0.18, 1e-15);
  EXPECT_NEAR(pr.corridor.hi.y, 0.42, 1e-15);
  EXPECT_EQ(pr.members, (std::vector<std::size_t>{0}));
}

TEST(PathRegion, ObstacleOnMidlineBlocksTarget) {
  const auto c = make_config({{0.2, 0.3}}, {0.45, 0.3});
  EXPECT_FALSE(is_cleared(c));
}

TEST(PathRegion, ObstacleLevelWithTargetIsExcluded) {
  Workspace ws;
  ws.depth = 0.8;
  const auto c = make_config({{0.45, 0.39}}, {0.45, 0.3}, {{0.0, 0.3}, 0.0}, ws);
  EXPECT_TRUE(is_cleared(c));
}

TEST(PathRegion, CorridorBoundsAreClosedInY) {
  const auto c = make_config({{0.2, 0.42}, {0.3, 0.18}}, {0.45, 0.3});
  EXPECT_EQ(path_region(c).members, (std::vector<std::size_t>{0, 1}));
}

TEST(PathRegion, CorridorStartsAtGripper) {
  const auto c = make_config({{0.1, 0.3}, {0.3, 0.3}}, {0.5, 0.3}, {{0.2, 0.3}, 0.0});
  EXPECT_EQ(path_region(c).members, (std::vector<std::size_t>{1}));
}

TEST(PathRegion, EmptyShelfIsCleared) {
  EXPECT_TRUE(is_cleared(make_config({}, {0.5, 0.3})));
}

TEST(PathRegion, InfeasibleConfigurationIsRejected) {
  EXPECT_THROW(path_region(make_config({{0.2, 0.3}, {0.21, 0.3}}, {0.5, 0.3})), DomainError);
}

TEST(PathRegion, NearWallTargetUsesRotatedFrame) {
  const auto c = make_config({{0.2, 0.4}}, {0.4, 0.55});
  const PathRegion pr = path_region(c);
  EXPECT_NEAR(pr.frame_angle, 0.7646198190387659, 1e-10);
  const Point2 t = pr.to_frame(c.target);
  EXPECT_NEAR(t.y, 0.12, 1e-9);
  EXPECT_NEAR(pr.corridor.height(), 0.24, 1e-12);
  EXPECT_EQ(pr.members, oracle_members(c));
}

TEST(PathRegion, FrameRoundTrip) {
  const auto c = make_config({}, {0.4, 0.05});
  const PathRegion pr = path_region(c);
  const Point2 p{0.31, 0.17};
  const Point2 q = pr.to_world(pr.to_frame(p));
  EXPECT_NEAR(q.x, p.x, 1e-15);
  EXPECT_NEAR(q.y, p.y, 1e-15);
}

namespace {

Configuration random_scene(std::mt19937_64& rng, bool near_wall) {
  const Workspace ws;
  std::uniform_real_distribution<double> ux(0.35, 0.57), uy(0.03, 0.57), ud(0.03, 0.11);
  std::bernoulli_distribution north(0.5);
  Point2 t{ux(rng), uy(rng)};
  if (near_wall) t.y = north(rng) ? ws.width - ud(rng) : ud(rng);
  std::uniform_real_distribution<double> ox(0.03, 0.57);
  std::vector<Point2> obs;
  for (int tries = 0; obs.size() < 8 && tries < 2000; ++tries) {
    const Point2 p{ox(rng), uy(rng)};
    auto clear = [&](Point2 q) { return std::hypot(p.x - q.x, p.y - q.y) >= 0.06; };
    if (clear(t) && std::all_of(obs.begin(), obs.end(), clear)) obs.push_back(p);
  }
  return make_config(obs, t);
}

}  // namespace

TEST(PathRegion, MembershipMatchesRotatedOracle) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const auto c = random_scene(rng, i % 2 == 0);
    EXPECT_EQ(path_region(c).members, oracle_members(c)) << "instance " << i;
  }
}

TEST(PathRegion, CorridorHeightIsTwiceArmWidth) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    EXPECT_NEAR(path_region(random_scene(rng, i % 2 == 0)).corridor.height(), 0.24, 1e-12);
  }
}

TEST(PathRegion, MembershipIsASetUnderRelabelling) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    auto c = random_scene(rng, i % 2 == 0);
    const auto before = path_region(c).members;
    std::vector<std::size_t> perm(c.obstacles.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    Configuration shuffled = c;
    for (std::size_t k = 0; k < perm.size(); ++k) shuffled.obstacles[k] = c.obstacles[perm[k]];
    std::vector<std::size_t> mapped;
    for (std::size_t k : path_region(shuffled).members) mapped.push_back(perm[k]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, before);
  }
}
