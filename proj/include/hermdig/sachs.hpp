#pragma once

#include <functional>
#include <vector>

#include "hermdig/digraph.hpp"
#include "hermdig/gaussian_int.hpp"

namespace hermdig {

/// A single edge (two vertices) or a cycle of the underlying graph, the
/// latter recorded as a vertex sequence in a fixed traversal direction.
struct BasicComponent {
  enum class Kind { Edge, Cycle };
  Kind kind;
  std::vector<Vertex> vertices;
};

/// Vertex-disjoint union of edges and cycles whose cycles each carry an
/// even number of non-digon arcs.
struct BasicSubgraph {
  std::vector<BasicComponent> components;
  int order = 0;

  int cycle_count() const;
};

/// Calls `visit` once for every basic subgraph of the given order.
/// Exponential; practical up to about n = 16.
void for_each_basic_subgraph(const Digraph& x, int order,
                             const std::function<void(const BasicSubgraph&)>& visit);
std::vector<BasicSubgraph> basic_subgraphs(const Digraph& x, int order);

/// Half the difference between forward and backward non-digon arcs met when
/// walking the cycle in the given order. Throws std::logic_error if the
/// non-digon arc count is odd.
int cycle_r(const Digraph& x, const std::vector<Vertex>& cycle);

/// Coefficient of t^j in det(tI - H(X)) from the basic subgraphs of order
/// n - j: sum over B of (-1)^(r(B) + w(B)) 2^c(B), with w(B) the number of
/// components and c(B) the number of cycles.
BigInt sachs_coefficient(const Digraph& x, int j);

/// Induced triangles by type: x1 one digon with its two arcs running the
/// same way around the triangle (weight -1); x2 one digon with both arcs
/// into the third vertex; x3 one digon with both arcs out of it; x4 three
/// digons.
struct TriangleCensus {
  long long x1 = 0, x2 = 0, x3 = 0, x4 = 0;

  long long trace_h3() const { return 6 * (x2 + x3 + x4 - x1); }
  friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

TriangleCensus triangle_census(const Digraph& x);

}  // namespace hermdig
