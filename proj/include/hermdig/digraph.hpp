#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hermdig {

/// State of an unordered vertex pair {i, j} with i < j.
enum class PairState : std::uint8_t {
  None = 0,   // no arc
  Fwd = 1,    // arc i -> j
  Bwd = 2,    // arc j -> i
  Digon = 3,  // both arcs
};

/// The state of the pair as seen from its other end.
constexpr PairState flipped(PairState s) noexcept {
  switch (s) {
    case PairState::Fwd: return PairState::Bwd;
    case PairState::Bwd: return PairState::Fwd;
    default: return s;
  }
}

using Vertex = int;

class Graph;

/// Simple loopless digraph stored as a table of pair states, one entry per
/// unordered pair in the order (0,1),(0,2),...,(0,n-1),(1,2),...
///
/// Library operations never modify their inputs; they return new digraphs.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return pairs_.size(); }

  /// Relation between u and v as seen from u: Fwd means arc u -> v.
  PairState state(Vertex u, Vertex v) const;
  void set_state(Vertex u, Vertex v, PairState s);

  /// Adds the arc u -> v, turning an existing v -> u into a digon.
  void add_arc(Vertex u, Vertex v);
  void add_digon(Vertex u, Vertex v) { set_state(u, v, PairState::Digon); }

  bool has_arc(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return state(u, v) != PairState::None; }

  std::span<const PairState> pairs() const noexcept { return pairs_; }

  std::size_t arc_count() const noexcept;
  std::size_t edge_count() const noexcept;   // edges of the underlying graph
  std::size_t digon_count() const noexcept;

  bool is_oriented() const noexcept { return digon_count() == 0; }
  /// Every arc lies in a digon.
  bool is_graph() const noexcept;

  friend bool operator==(const Digraph&, const Digraph&) = default;

  static std::size_t pair_index(int n, Vertex i, Vertex j) noexcept {
    // i < j
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<PairState> pairs_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {}

  int order() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  int degree(Vertex v) const;
  int max_degree() const;
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  std::vector<Vertex> neighbours(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

struct DegreeProfile {
  std::vector<int> degree;      // in the underlying graph
  std::vector<int> in_degree;
  std::vector<int> out_degree;

  int max_degree() const;
  int max_in_degree() const;
  int max_out_degree() const;
};

DegreeProfile degree_profile(const Digraph& x);

Graph underlying_graph(const Digraph& x);
Digraph converse(const Digraph& x);

/// Graph formed by the digons of x.
Graph symmetric_part(const Digraph& x);
/// Digraph formed by the arcs of x that are not in a digon.
Digraph asymmetric_part(const Digraph& x);

/// Digraph of a graph: every edge becomes a digon.
Digraph digraph_of(const Graph& g);

/// Vertices (x, y) are numbered x * |V(Y)| + y.
Digraph cartesian_product(const Digraph& x, const Digraph& y);

/// Subdigraph induced on `subset`, relabelled 0..|S|-1 in increasing order
/// of the original labels. Throws std::invalid_argument on a bad subset.
Digraph induced_subdigraph(const Digraph& x, std::span<const Vertex> subset);

/// Removes vertex v.
Digraph delete_vertex(const Digraph& x, Vertex v);

/// Relabels so that new vertex k is old vertex perm[k].
Digraph permuted(const Digraph& x, std::span<const Vertex> perm);

/// Disjoint union; vertices of y are shifted by |V(x)|.
Digraph disjoint_union(const Digraph& x, const Digraph& y);

bool is_weakly_connected(const Digraph& x);
bool is_strongly_connected(const Digraph& x);
/// Vertex sets of the weak components, each sorted, ordered by first vertex.
std::vector<std::vector<Vertex>> weak_components(const Digraph& x);

bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace hermdig
