#include "xjoin/automorphism.hpp"

#include <stdexcept>
#include <string>

#include "aut_search.hpp"
#include "xjoin/construction.hpp"
#include "xjoin/errors.hpp"

namespace xjoin {

BigInt factorial(std::size_t n) {
  BigInt out = 1;
  for (std::size_t k = 2; k <= n; ++k) out *= k;
  return out;
}

bool verify_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw std::invalid_argument("permutation degree " + std::to_string(p.degree()) +
                                " does not match graph order " + std::to_string(g.order()));
  }
  // A bijection that maps edges to edges preserves non-edges too, because
  // the edge count is finite and unchanged.
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

AutResult brute_force_aut(const Graph& g, SearchLimits limits) {
  return detail::search_automorphisms(g, {}, limits, detail::Execution::Parallel);
}

AutResult brute_force_aut_serial(const Graph& g, SearchLimits limits) {
  return detail::search_automorphisms(g, {}, limits, detail::Execution::Serial);
}

AutResult color_aut(const Graph& x, std::span<const Color> colors, SearchLimits limits) {
  if (colors.size() != x.order()) {
    throw std::invalid_argument("colour list length does not match graph order");
  }
  return detail::search_automorphisms(x, colors, limits, detail::Execution::Parallel);
}

AutResult color_aut_serial(const Graph& x, std::span<const Color> colors, SearchLimits limits) {
  if (colors.size() != x.order()) {
    throw std::invalid_argument("colour list length does not match graph order");
  }
  return detail::search_automorphisms(x, colors, limits, detail::Execution::Serial);
}

Permutation lift_quotient_automorphism(const CharacteristicGraph& c, const Permutation& f) {
  const std::size_t n = c.class_of.size();
  std::vector<Vertex> images(n);
  for (Vertex b = 0; b < c.quotient.order(); ++b) {
    const auto& from = c.members(b);
    const auto& to = c.members(f(b));
    if (from.size() != to.size()) {
      throw InvariantError("quotient automorphism maps fibers of different sizes");
    }
    for (std::size_t i = 0; i < from.size(); ++i) images[from[i]] = to[i];
  }
  return Permutation(std::move(images));
}

GroupDescription aut_from_decomposition(const CharacteristicGraph& c, SearchLimits limits) {
  GroupDescription out;
  out.degree = c.class_of.size();
  out.kernel_order = 1;
  for (Vertex b = 0; b < c.quotient.order(); ++b) {
    const auto& fiber = c.members(b);
    out.kernel_order *= factorial(fiber.size());
    for (std::size_t i = 0; i + 1 < fiber.size(); ++i) {
      out.kernel_generators.push_back(Permutation::transposition(out.degree, fiber[i], fiber[i + 1]));
    }
  }

  const auto quotient_group = color_aut(c.quotient, c.colors, limits);
  out.quotient_group_order = quotient_group.order;
  for (const auto& f : quotient_group.generators) {
    out.complement_generators.push_back(lift_quotient_automorphism(c, f));
  }
  out.order = out.kernel_order * out.quotient_group_order;
  return out;
}

BigInt wreath_order(const Graph& x, std::size_t fiber_size, FiberKind kind, SearchLimits limits) {
  if (fiber_size == 1) kind = FiberKind::Singleton;
  const FiberSpec spec(x.order(), Fiber{fiber_size, kind});
  if (!join_is_reduced(x, spec)) {
    throw NotReducedError("uniform " + std::string(to_string(kind)) + " fibers of size " +
                          std::to_string(fiber_size) + " do not give a reduced join");
  }
  BigInt base = pow(factorial(fiber_size), static_cast<unsigned>(x.order()));
  return base * brute_force_aut(x, limits).order;
}

bool fixes_fibers_setwise(const Permutation& p, std::span<const Vertex> class_of) {
  if (p.degree() != class_of.size()) throw std::invalid_argument("degree mismatch");
  for (Vertex v = 0; v < p.degree(); ++v) {
    if (class_of[p(v)] != class_of[v]) return false;
  }
  return true;
}

}  // namespace xjoin
