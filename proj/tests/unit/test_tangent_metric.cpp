#include <gtest/gtest.h>

#include "focal/errors.hpp"
#include "focal/tangent_metric.hpp"

using namespace focal;

TEST(TangentMetric, Classes) {
  EXPECT_EQ(tangent_metric(MVector{0, 1, 0}, MVector{0, 0, 1}).cls, MetricClass::Riemannian);
  EXPECT_EQ(tangent_metric(MVector{1, 0, 0}, MVector{0, 1, 0}).cls, MetricClass::Lorentzian);
  EXPECT_EQ(tangent_metric(MVector{1, 0, 0}, MVector{0, 1, 0}).gram.det(), -1.0);
  EXPECT_EQ(tangent_metric(MVector{0, 1, 0, 0}, MVector{0, 0, 1, 1}).cls, MetricClass::Riemannian);
}

TEST(TangentMetric, DegenerateKernel) {
  const TangentMetric m = tangent_metric(MVector{1, 1, 0}, MVector{0, 0, 3});
  EXPECT_EQ(m.cls, MetricClass::Degenerate);
  EXPECT_TRUE(m.full_rank);
  ASSERT_TRUE(m.lightlike_direction.has_value());
  EXPECT_EQ(*m.lightlike_direction, (MVector{1, 1, 0}));
  const TangentMetric n = tangent_metric(MVector{2, 2, 1}, MVector{-1, -1, 0});
  ASSERT_TRUE(n.lightlike_direction.has_value());
  EXPECT_EQ(*n.lightlike_direction, (MVector{1, 1, 0}));
}

TEST(TangentMetric, RankDeficient) {
  EXPECT_EQ(tangent_metric(MVector{0, 1, 0}, MVector{0, 2, 0}).cls, MetricClass::Undefined);
  EXPECT_FALSE(tangent_metric(MVector{0, 1, 0}, MVector{0, 2, 1e-15}).full_rank);
  EXPECT_EQ(tangent_metric(MVector{0, 0, 0}, MVector{0, 2, 0}).cls, MetricClass::Undefined);
  EXPECT_EQ(tangent_metric(MVector{1e-17, 3e-17, 0}, MVector{0, 2, 1}).cls, MetricClass::Undefined);
}

TEST(TangentMetric, NormaliseMaxComponent) {
  EXPECT_EQ(normalise_max_component(MVector{-2, -2, 1}), (MVector{1, 1, -0.5}));
  EXPECT_THROW(normalise_max_component(MVector{0, 0, 0}), DegenerateError);
}
