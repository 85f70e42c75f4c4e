#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xjoin/graph.hpp"

namespace xjoin {

/// Bijection on 0..degree()-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, Vertex a, Vertex b);

  std::size_t degree() const noexcept { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// (p * q)(v) == p(q(v)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Elements of the group generated by `generators`, by breadth-first closure
/// from the identity (which comes first). std::nullopt once more than `cap`
/// elements have been found.
std::optional<std::vector<Permutation>> group_closure(std::span<const Permutation> generators,
                                                      std::size_t degree, std::size_t cap);

/// Size of the group generated by `generators`, by breadth-first closure from
/// the identity. std::nullopt once more than `cap` elements have been found.
std::optional<std::size_t> group_closure_size(std::span<const Permutation> generators,
                                              std::size_t degree, std::size_t cap);

}  // namespace xjoin
