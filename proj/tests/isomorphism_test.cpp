#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "xjoin/automorphism.hpp"
#include "xjoin/isomorphism.hpp"
#include "xjoin/named_graphs.hpp"

namespace xjoin {
namespace {

TEST(IsomorphismTest, FindsRelabelings) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 8, 0.5, rng);
    std::vector<Vertex> relabel(g.order());
    std::iota(relabel.begin(), relabel.end(), Vertex{0});
    std::shuffle(relabel.begin(), relabel.end(), rng);
    const Graph h = testing::relabeled(g, relabel);
    std::vector<std::uint64_t> lg(g.order());
    for (auto& l : lg) l = rng() % 2;
    std::vector<std::uint64_t> lh(g.order());
    for (Vertex v = 0; v < g.order(); ++v) lh[relabel[v]] = lg[v];

    const auto phi = find_isomorphism(g, lg, h, lh);
    ASSERT_TRUE(phi);
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(lg[v], lh[(*phi)(v)]);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        EXPECT_EQ(g.adjacent(u, v), h.adjacent((*phi)(u), (*phi)(v)));
      }
    }
  }
}

TEST(IsomorphismTest, LabelsAndStructureMustMatch) {
  const Graph p3 = named::path(3);
  const std::vector<std::uint64_t> mid{0, 1, 0};
  const std::vector<std::uint64_t> end{1, 0, 0};
  EXPECT_FALSE(find_isomorphism(p3, mid, p3, end));
  EXPECT_TRUE(find_isomorphism(p3, end, p3, std::vector<std::uint64_t>{0, 0, 1}));
  const std::vector<std::uint64_t> five(5, 0);
  EXPECT_FALSE(find_isomorphism(named::cycle(5), five, named::path(5), five));
  EXPECT_THROW(find_isomorphism(p3, five, p3, mid), std::invalid_argument);
}

}  // namespace
}  // namespace xjoin
