#include <gtest/gtest.h>

#include "mdred/decomposition.hpp"
#include "support.hpp"

namespace mdred {
namespace {

using namespace mdred::testing;

std::vector<Bag> path_bags(int n) {
  std::vector<Bag> bags;
  for (int v = 0; v + 1 < n; ++v) bags.push_back({v, v + 1});
  return bags;
}

TEST(PathDecomposition, SingleBagHoldingEverything) {
  const LabeledGraph g = complete_graph(5);
  const std::vector<Bag> bags = {{0, 1, 2, 3, 4}};
  const auto check = validate_path_decomposition(g, bags);
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(*check.width, 4);
}

TEST(PathDecomposition, PathHasWidthOne) {
  const auto check = validate_path_decomposition(path_graph(7), path_bags(7));
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(*check.width, 1);
}

TEST(PathDecomposition, NamedFaults) {
  const LabeledGraph g = path_graph(4);
  auto fault = [&](std::vector<Bag> bags) {
    const auto check = validate_path_decomposition(g, bags);
    EXPECT_FALSE(check.ok());
    return check.violation ? check.violation->fault : DecompositionFault::NoBags;
  };
  EXPECT_EQ(fault({}), DecompositionFault::NoBags);
  EXPECT_EQ(fault({{0, 1}, {1, 2}, {2, 9}}), DecompositionFault::UnknownVertex);
  EXPECT_EQ(fault({{0, 1, 1}, {1, 2}, {2, 3}}), DecompositionFault::RepeatedInBag);
  EXPECT_EQ(fault({{0, 1}, {1, 2}}), DecompositionFault::MissingVertex);
  EXPECT_EQ(fault({{0, 1}, {1, 2}, {2, 3}, {1}}), DecompositionFault::NotContiguous);
  EXPECT_EQ(fault({{0, 1}, {2}, {1, 3}}), DecompositionFault::NotContiguous);
  EXPECT_EQ(fault({{0, 1}, {1}, {2}, {3}}), DecompositionFault::UncoveredEdge);

  const auto check = validate_path_decomposition(g, std::vector<Bag>{{0, 1}, {1, 2}, {3}});
  ASSERT_TRUE(check.violation.has_value());
  EXPECT_EQ(check.violation->u, 2);
  EXPECT_EQ(check.violation->w, 3);
}

TEST(PathDecomposition, EmptyBagsAllowed) {
  const auto check = validate_path_decomposition(path_graph(3), std::vector<Bag>{{}, {0, 1}, {1, 2}, {}});
  ASSERT_TRUE(check.ok());
  EXPECT_EQ(*check.width, 1);
}

}  // namespace
}  // namespace mdred
