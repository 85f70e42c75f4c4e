#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "xjoin/automorphism.hpp"
#include "xjoin/construction.hpp"
#include "xjoin/errors.hpp"
#include "xjoin/named_graphs.hpp"

namespace xjoin {
namespace {

using Kind = FiberKind;

TEST(PermutationTest, Basics) {
  const Permutation p({1, 2, 0});
  const Permutation q = Permutation::transposition(3, 0, 1);
  EXPECT_EQ((p * q).images()[0], p(q(0)));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(to_cycle_string(p), "(0 1 2)");
  EXPECT_EQ(to_cycle_string(Permutation::identity(4)), "()");
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST(PermutationTest, ClosureSize) {
  const std::vector<Permutation> s4{Permutation::transposition(4, 0, 1), Permutation({1, 2, 3, 0})};
  EXPECT_EQ(group_closure_size(s4, 4, 1000), 24u);
  EXPECT_EQ(group_closure_size(s4, 4, 10), std::nullopt);
  EXPECT_EQ(group_closure_size({}, 3, 10), 1u);
}

TEST(VerifyAutomorphismTest, Examples) {
  const Graph c4 = named::cycle(4);
  EXPECT_TRUE(verify_automorphism(c4, Permutation::identity(4)));
  EXPECT_TRUE(verify_automorphism(c4, Permutation({1, 2, 3, 0})));
  const Graph p3 = named::path(3);
  EXPECT_TRUE(verify_automorphism(p3, Permutation::transposition(3, 0, 2)));
  EXPECT_FALSE(verify_automorphism(p3, Permutation::transposition(3, 0, 1)));
  EXPECT_THROW(verify_automorphism(p3, Permutation::identity(4)), std::invalid_argument);
}

TEST(BruteForceAutTest, Examples) {
  EXPECT_EQ(brute_force_aut(named::cycle(5)).order, 10);
  EXPECT_EQ(brute_force_aut(named::petersen()).order, 120);
  EXPECT_EQ(brute_force_aut(named::complete_bipartite(3, 3)).order, 72);
  EXPECT_EQ(brute_force_aut(named::complete(10)).order, factorial(10));
  EXPECT_EQ(brute_force_aut(Graph(0)).order, 1);
}

TEST(BruteForceAutTest, MatchesNaiveEnumeration) {
  for (std::size_t n = 1; n <= 5; ++n) {
    testing::for_each_graph(n, [](const Graph& g) {
      ASSERT_EQ(brute_force_aut(g).order, testing::naive_automorphism_count(g));
    });
  }
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::random_graph(6 + trial % 2, 0.2 + 0.6 * (trial % 5) / 4.0, rng);
    EXPECT_EQ(brute_force_aut(g).order, testing::naive_automorphism_count(g));
  }
}

TEST(BruteForceAutTest, GeneratorsGenerateTheGroup) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(2 + trial % 8, 0.5, rng);
    const auto result = brute_force_aut(g);
    for (const auto& p : result.generators) EXPECT_TRUE(verify_automorphism(g, p));
    EXPECT_EQ(group_closure_size(result.generators, g.order(), 100000),
              static_cast<std::size_t>(result.order));
  }
}

TEST(BruteForceAutTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 10, 0.1 + 0.8 * (trial % 7) / 6.0, rng);
    const auto parallel = brute_force_aut(g);
    const auto serial = brute_force_aut_serial(g);
    EXPECT_EQ(parallel.order, serial.order);
    EXPECT_EQ(parallel.generators, serial.generators);
  }
}

TEST(BruteForceAutTest, SizeLimit) {
  EXPECT_THROW(brute_force_aut(named::cycle(13)), SizeLimitError);
  EXPECT_EQ(brute_force_aut(named::cycle(20), {.max_vertices = 20}).order, 40);
  EXPECT_THROW(brute_force_aut(named::cycle(65), {.max_vertices = 100}), SizeLimitError);
}

TEST(ColorAutTest, Examples) {
  const Graph k2 = named::complete(2);
  EXPECT_EQ(color_aut(k2, std::vector<Color>{0, 0}).order, 2);
  EXPECT_EQ(color_aut(k2, std::vector<Color>{0, 1}).order, 1);
  EXPECT_EQ(color_aut(named::cycle(5), std::vector<Color>(5, 0)).order, 10);
  EXPECT_THROW(color_aut(k2, std::vector<Color>{0}), std::invalid_argument);
}

TEST(ColorAutTest, MatchesNaiveEnumerationWithColours) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = testing::random_graph(n, 0.5, rng);
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng() % 3);
    const auto result = color_aut(g, colors);
    EXPECT_EQ(result.order, testing::naive_automorphism_count(g, colors));
    EXPECT_EQ(color_aut_serial(g, colors).generators, result.generators);
    for (const auto& p : result.generators) {
      for (Vertex v = 0; v < n; ++v) EXPECT_EQ(colors[p(v)], colors[v]);
    }
  }
}

TEST(ColorAutTest, AllDistinctColoursGiveTrivialGroup) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 10, 0.5, rng);
    std::vector<Color> colors(g.order());
    std::iota(colors.begin(), colors.end(), Color{0});
    EXPECT_EQ(color_aut(g, colors).order, 1);
  }
}

TEST(AutFromDecompositionTest, Examples) {
  const auto k33 = aut_from_decomposition(decompose(named::complete_bipartite(3, 3)));
  EXPECT_EQ(k33.order, 72);
  EXPECT_EQ(k33.kernel_order, 36);
  EXPECT_EQ(k33.quotient_group_order, 2);
  EXPECT_EQ(k33.kernel_generators.size(), 4u);

  const auto c4 = aut_from_decomposition(decompose(named::cycle(4)));
  EXPECT_EQ(c4.order, 8);
  EXPECT_EQ(c4.kernel_order, 4);
  EXPECT_EQ(c4.quotient_group_order, 2);

  const Graph c5k2 = lex_product(named::cycle(5), named::complete(2));
  const auto wreath = aut_from_decomposition(decompose(c5k2));
  EXPECT_EQ(wreath.order, 320);
  EXPECT_EQ(brute_force_aut(c5k2).order, 320);

  const auto pet = aut_from_decomposition(decompose(named::petersen()));
  EXPECT_EQ(pet.order, 120);
  EXPECT_EQ(pet.kernel_order, 1);
  EXPECT_TRUE(pet.kernel_generators.empty());
}

TEST(AutFromDecompositionTest, ComplementGeneratorsPermuteWholeFibers) {
  const Graph g = x_join(named::cycle(6), parse_fiber_spec("i2 c3 i2 c3 i2 c3")).graph;
  const auto c = decompose(g);
  const auto group = aut_from_decomposition(c);
  EXPECT_EQ(group.order, brute_force_aut(g, {.max_vertices = 15}).order);
  for (const auto& s : group.complement_generators) {
    EXPECT_TRUE(verify_automorphism(g, s));
    for (Vertex b = 0; b < c.quotient.order(); ++b) {
      const Vertex target = c.class_of[s(c.members(b).front())];
      EXPECT_EQ(c.colors[target], c.colors[b]);
      for (Vertex v : c.members(b)) EXPECT_EQ(c.class_of[s(v)], target);
    }
    for (const auto& t : group.kernel_generators) {
      EXPECT_TRUE(fixes_fibers_setwise(s * t * s.inverse(), c.class_of));
    }
  }
}

TEST(AutFromDecompositionTest, ComplementMeetsKernelTrivially) {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph base = testing::random_graph(2 + trial % 5, 0.5, rng);
    FiberSpec spec;
    for (std::size_t x = 0; x < base.order(); ++x) spec.push_back({2, Kind::Independent});
    // Uniform fibers over a symmetric base give a nontrivial complement.
    const Graph g = trial % 2 ? x_join(base, spec).graph : base;
    const auto c = decompose(g);
    const auto group = aut_from_decomposition(c);
    const auto complement = group_closure(group.complement_generators, g.order(), 100000);
    ASSERT_TRUE(complement);
    EXPECT_EQ(BigInt(complement->size()), group.quotient_group_order);
    for (const auto& p : *complement) {
      if (fixes_fibers_setwise(p, c.class_of)) EXPECT_TRUE(p.is_identity());
    }
  }
}

TEST(AutFromDecompositionTest, LargeFibersOnlyCostFactorials) {
  const Graph g = x_join(named::path(4), parse_fiber_spec("i20 c30 c25 i40")).graph;
  const auto group = aut_from_decomposition(decompose(g));
  EXPECT_EQ(group.order, factorial(20) * factorial(30) * factorial(25) * factorial(40));
  EXPECT_EQ(group.quotient_group_order, 1);
}

TEST(AutFromDecompositionTest, QuotientSizeLimit) {
  EXPECT_THROW(aut_from_decomposition(decompose(named::cycle(13))), SizeLimitError);
}

TEST(WreathOrderTest, Examples) {
  EXPECT_EQ(wreath_order(named::cycle(5), 2, Kind::Clique), 320);
  EXPECT_EQ(wreath_order(named::path(4), 3, Kind::Independent), 2592);
  const Graph p4i3 = x_join(named::path(4), parse_fiber_spec("i3 i3 i3 i3")).graph;
  EXPECT_EQ(brute_force_aut(p4i3).order, 2592);
  EXPECT_EQ(aut_from_decomposition(decompose(p4i3)).order, 2592);
  EXPECT_EQ(wreath_order(named::petersen(), 1, Kind::Singleton), 120);
  EXPECT_EQ(wreath_order(named::cycle(5), 1, Kind::Clique), 10);
  EXPECT_THROW(wreath_order(named::complete(2), 2, Kind::Clique), NotReducedError);
  EXPECT_THROW(wreath_order(named::complete(3), 1, Kind::Singleton), NotReducedError);
}

}  // namespace
}  // namespace xjoin
