#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hermdig/digraph.hpp"

namespace hermdig {

/// Canonical forms are computed by exhaustive search over the labelings
/// compatible with an equitable colour refinement, so the cost is
/// exponential in the size of the largest colour class. Gated to small orders.
inline constexpr int kMaxCanonicalOrder = 8;

/// Fixed-capacity digraph used on the hot paths of canonical labelling and
/// enumeration. rel[u][v] is the pair state as seen from u.
struct SmallDigraph {
  int n = 0;
  std::array<std::array<std::uint8_t, kMaxCanonicalOrder>, kMaxCanonicalOrder> rel{};

  static SmallDigraph from(const Digraph& x);
  Digraph to_digraph() const;

  /// Pair states packed 2 bits each in table order, first pair most significant.
  std::uint64_t packed() const noexcept;
  static SmallDigraph unpack(int n, std::uint64_t code) noexcept;

  void set(int u, int v, PairState s) noexcept {
    rel[u][v] = static_cast<std::uint8_t>(s);
    rel[v][u] = static_cast<std::uint8_t>(flipped(s));
  }
};

/// Labelling perm such that permuted(x, perm) is the canonical form.
std::vector<Vertex> canonical_labeling(const Digraph& x);
Digraph canonical_form(const Digraph& x);

/// Packed pair-state code of the canonical form. Two digraphs of the same
/// order are isomorphic iff their canonical codes agree.
std::uint64_t canonical_code(const Digraph& x);
std::uint64_t canonical_code(const SmallDigraph& x);

bool isomorphic(const Digraph& x, const Digraph& y);

}  // namespace hermdig
