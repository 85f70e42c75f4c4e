// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All sampling is seeded; every check is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "xjoin/automorphism.hpp"
#include "xjoin/construction.hpp"
#include "xjoin/decomposition.hpp"
#include "xjoin/io.hpp"
#include "xjoin/isomorphism.hpp"
#include "xjoin/named_graphs.hpp"

namespace {

using namespace xjoin;
using Kind = FiberKind;

constexpr std::uint64_t kSeed = 0x5eed2026;
constexpr std::size_t kRandomPerOrder = 500;
constexpr std::size_t kClosureCap = 100000;

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = describe();
  }
};

int report(int id, const std::string& name, const Tally& t, double seconds) {
  const bool pass = t.failures == 0 && t.checked > 0;
  std::printf("[%s] criterion %d: %s (%zu checks, %zu failures, %.1fs)%s%s\n",
              pass ? "PASS" : "FAIL", id, name.c_str(), t.checked, t.failures, seconds,
              t.first_failure.empty() ? "" : " first failure: ", t.first_failure.c_str());
  std::fflush(stdout);
  return pass ? 0 : 1;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Criterion 1's suites: every graph on n <= 6 vertices, then 500 seeded
// random graphs for each n in 7..10.
std::vector<Graph> theorem_suite() {
  std::vector<Graph> graphs;
  for (std::size_t n = 0; n <= 6; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  }
  std::mt19937_64 rng(kSeed);
  const double densities[] = {0.15, 0.3, 0.5, 0.7, 0.85};
  for (std::size_t n = 7; n <= 10; ++n) {
    for (std::size_t i = 0; i < kRandomPerOrder; ++i) {
      graphs.push_back(testing::random_graph(n, densities[i % 5], rng));
    }
  }
  return graphs;
}

std::string g6(const Graph& g) { return emit_graph6(g); }

int criteria_1_3_6(const std::vector<Graph>& suite) {
  Tally oracle;
  Tally validity;
  Tally structure;
  double t1 = 0, t3 = 0, t6 = 0;
  for (const Graph& g : suite) {
    Stopwatch w3;
    const auto c = decompose(g);
    bool valid = is_reduced(c);
    std::vector<int> hits(g.order(), 0);
    for (const auto& cls : c.partition.classes) {
      for (Vertex v : cls.vertices) ++hits[v];
      const bool shaped = cls.kind == Kind::Independent ? is_independent(g, cls.vertices)
                                                        : is_clique(g, cls.vertices);
      valid = valid && shaped && externally_related(g, cls.vertices);
    }
    for (int h : hits) valid = valid && h == 1;
    validity.expect(valid, [&] { return g6(g); });
    t3 += w3.seconds();

    Stopwatch w1;
    const auto group = aut_from_decomposition(c);
    const auto brute = brute_force_aut(g);
    oracle.expect(group.order == brute.order, [&] {
      return g6(g) + " theorem " + group.order.str() + " oracle " + brute.order.str();
    });
    t1 += w1.seconds();

    Stopwatch w6;
    bool sound = true;
    std::vector<Permutation> all = group.kernel_generators;
    all.insert(all.end(), group.complement_generators.begin(), group.complement_generators.end());
    for (const auto& p : all) sound = sound && verify_automorphism(g, p);
    for (const auto& s : group.complement_generators) {
      const auto s_inv = s.inverse();
      for (const auto& t : group.kernel_generators) {
        sound = sound && fixes_fibers_setwise(s * t * s_inv, c.class_of);
      }
    }
    if (group.order <= kClosureCap) {
      const auto size = group_closure_size(all, g.order(), kClosureCap);
      sound = sound && size && BigInt(*size) == group.order;
    }
    structure.expect(sound, [&] { return g6(g); });
    t6 += w6.seconds();
  }
  int failed = 0;
  failed += report(1, "main-theorem order equals brute-force order (n<=6 exhaustive, 500 random each n=7..10)",
                   oracle, t1);
  failed += report(3, "decomposition is a reduced partition into complete/independent externally related classes",
                   validity, t3);
  failed += report(6, "generators are automorphisms, kernel is normal, closure matches order (<=1e5)",
                   structure, t6);
  return failed;
}

int criterion_2() {
  Stopwatch w;
  Tally t;
  auto check = [&](const std::string& name, const Graph& g, const BigInt& expected,
                   std::optional<BigInt> wreath) {
    const auto theorem = aut_from_decomposition(decompose(g)).order;
    t.expect(theorem == expected, [&] { return name + " theorem " + theorem.str(); });
    if (g.order() <= 12) {
      const auto brute = brute_force_aut(g).order;
      t.expect(brute == expected, [&] { return name + " oracle " + brute.str(); });
    }
    if (wreath) t.expect(*wreath == expected, [&] { return name + " wreath " + wreath->str(); });
  };
  check("K_{3,3}", named::complete_bipartite(3, 3), 72, wreath_order(named::complete(2), 3, Kind::Independent));
  check("C_4", named::cycle(4), 8, wreath_order(named::complete(2), 2, Kind::Independent));
  check("Petersen", named::petersen(), 120, wreath_order(named::petersen(), 1, Kind::Singleton));
  for (std::size_t n = 1; n <= 10; ++n) {
    check("K_" + std::to_string(n), named::complete(n), factorial(n),
          wreath_order(named::complete(1), n, Kind::Clique));
  }
  check("C_5 o K_2", lex_product(named::cycle(5), named::complete(2)), 320,
        wreath_order(named::cycle(5), 2, Kind::Clique));
  check("P_4 join i3", x_join(named::path(4), FiberSpec(4, {3, Kind::Independent})).graph, 2592,
        wreath_order(named::path(4), 3, Kind::Independent));
  return report(2, "named fixtures (72, 8, 120, n!, 320, 2592) by theorem, oracle and wreath formula", t,
                w.seconds());
}

int criterion_4() {
  Stopwatch w;
  Tally t;
  std::mt19937_64 rng(kSeed + 4);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::size_t sampled = 0;
  while (sampled < 1000) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = testing::random_graph(n, density(rng), rng);
    if (!is_connected(g)) continue;
    ++sampled;
    std::vector<VertexSet> classes;
    for (const auto& cls : twin_classes(g).classes) classes.push_back(cls.vertices);
    t.expect(cem_oracle(g) == classes, [&] { return g6(g); });
  }
  return report(4, "twin classes equal brute-force maximal CE_m sets (1000 connected graphs, n<=7)", t,
                w.seconds());
}

int criterion_5() {
  Stopwatch w;
  Tally t;
  std::mt19937_64 rng(kSeed + 5);
  auto random_fiber = [&]() -> Fiber {
    const std::size_t size = 1 + rng() % 3;
    if (size == 1) return {1, Kind::Singleton};
    return {size, rng() % 2 ? Kind::Clique : Kind::Independent};
  };
  auto labels = [](std::span<const Fiber> fibers) {
    std::vector<std::uint64_t> out;
    for (const auto& f : fibers) out.push_back(f.size * 4 + static_cast<std::uint64_t>(f.kind));
    return out;
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& base) {
      if (!is_connected(base)) return;
      for (int k = 0; k < 20; ++k) {
        FiberSpec spec;
        do {
          spec.clear();
          for (std::size_t x = 0; x < n; ++x) spec.push_back(random_fiber());
        } while (!join_is_reduced(base, spec));
        const auto c = decompose(x_join(base, spec).graph);
        const bool iso = find_isomorphism(base, labels(spec), c.quotient, labels(c.fibers)).has_value();
        t.expect(iso, [&] { return g6(base) + " spec \"" + format_fiber_spec(spec) + "\""; });
      }
    });
  }
  return report(5, "round trip: decompose(x_join(x, reduced spec)) recovers x (connected n<=5, 20 specs each)",
                t, w.seconds());
}

int criterion_7() {
  Stopwatch w;
  Tally t;
  for (std::size_t n = 2; n <= 6; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
          t.expect(pair_externally_related(g, x, y) == externally_related(g, {x, y}),
                   [&] { return g6(g) + " pair " + std::to_string(x) + "," + std::to_string(y); });
        }
      }
    });
  }
  return report(7, "pair_externally_related agrees with externally_related on pairs (n<=6 exhaustive)", t,
                w.seconds());
}

int criterion_8() {
  Stopwatch w;
  Tally t;
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testing::random_graph(rng() % 41, density(rng), rng);
    t.expect(parse_graph6(emit_graph6(g)) == g, [&] { return g6(g); });
  }
  t.expect(parse_graph6("A_") == named::complete(2), [] { return std::string("A_"); });
  t.expect(parse_graph6("Bw") == named::complete(3), [] { return std::string("Bw"); });
  t.expect(parse_graph6("D??") == named::edgeless(5), [] { return std::string("D??"); });
  return report(8, "graph6 round trip (1000 random, n<=40) and fixtures A_, Bw, D??", t, w.seconds());
}

}  // namespace

int main() {
  int failed = 0;
  const auto suite = theorem_suite();
  std::printf("theorem suite: %zu graphs\n", suite.size());
  failed += criteria_1_3_6(suite);
  failed += criterion_2();
  failed += criterion_4();
  failed += criterion_5();
  failed += criterion_7();
  failed += criterion_8();
  std::printf("%s: %d criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
  return failed == 0 ? 0 : 1;
}
