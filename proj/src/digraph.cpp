#include "hermdig/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hermdig {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  pairs_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, PairState::None);
}

void Digraph::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

PairState Digraph::state(Vertex u, Vertex v) const {
  check_pair(u, v);
  if (u < v) return pairs_[pair_index(n_, u, v)];
  return flipped(pairs_[pair_index(n_, v, u)]);
}

void Digraph::set_state(Vertex u, Vertex v, PairState s) {
  check_pair(u, v);
  if (u < v)
    pairs_[pair_index(n_, u, v)] = s;
  else
    pairs_[pair_index(n_, v, u)] = flipped(s);
}

void Digraph::add_arc(Vertex u, Vertex v) {
  switch (state(u, v)) {
    case PairState::None: set_state(u, v, PairState::Fwd); break;
    case PairState::Bwd: set_state(u, v, PairState::Digon); break;
    default: break;
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const PairState s = state(u, v);
  return s == PairState::Fwd || s == PairState::Digon;
}

std::size_t Digraph::arc_count() const noexcept {
  std::size_t c = 0;
  for (PairState s : pairs_) c += s == PairState::Digon ? 2 : (s == PairState::None ? 0 : 1);
  return c;
}

std::size_t Digraph::edge_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(), [](PairState s) { return s != PairState::None; }));
}

std::size_t Digraph::digon_count() const noexcept {
  return static_cast<std::size_t>(std::count(pairs_.begin(), pairs_.end(), PairState::Digon));
}

bool Digraph::is_graph() const noexcept {
  return std::all_of(pairs_.begin(), pairs_.end(), [](PairState s) {
    return s == PairState::None || s == PairState::Digon;
  });
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[index(u, v)] = adj_[index(v, u)] = 1;
}

void Graph::remove_edge(Vertex u, Vertex v) { adj_[index(u, v)] = adj_[index(v, u)] = 0; }

int Graph::degree(Vertex v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[index(v, u)];
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) c += adj_[index(u, v)];
  return c;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[index(u, v)]) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[index(v, u)]) out.push_back(u);
  return out;
}

int DegreeProfile::max_degree() const {
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}
int DegreeProfile::max_in_degree() const {
  return in_degree.empty() ? 0 : *std::max_element(in_degree.begin(), in_degree.end());
}
int DegreeProfile::max_out_degree() const {
  return out_degree.empty() ? 0 : *std::max_element(out_degree.begin(), out_degree.end());
}

DegreeProfile degree_profile(const Digraph& x) {
  const int n = x.order();
  DegreeProfile p{std::vector<int>(n, 0), std::vector<int>(n, 0), std::vector<int>(n, 0)};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const PairState s = x.state(u, v);
      if (s == PairState::None) continue;
      ++p.degree[u];
      ++p.degree[v];
      if (s == PairState::Fwd || s == PairState::Digon) {
        ++p.out_degree[u];
        ++p.in_degree[v];
      }
      if (s == PairState::Bwd || s == PairState::Digon) {
        ++p.out_degree[v];
        ++p.in_degree[u];
      }
    }
  }
  return p;
}

Graph underlying_graph(const Digraph& x) {
  Graph g(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v)
      if (x.adjacent(u, v)) g.add_edge(u, v);
  return g;
}

Digraph converse(const Digraph& x) {
  Digraph c(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v) c.set_state(u, v, flipped(x.state(u, v)));
  return c;
}

Graph symmetric_part(const Digraph& x) {
  Graph g(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v)
      if (x.state(u, v) == PairState::Digon) g.add_edge(u, v);
  return g;
}

Digraph asymmetric_part(const Digraph& x) {
  Digraph d(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v) {
      const PairState s = x.state(u, v);
      if (s == PairState::Fwd || s == PairState::Bwd) d.set_state(u, v, s);
    }
  return d;
}

Digraph digraph_of(const Graph& g) {
  Digraph d(g.order());
  for (auto [u, v] : g.edges()) d.add_digon(u, v);
  return d;
}

Digraph cartesian_product(const Digraph& x, const Digraph& y) {
  const int nx = x.order(), ny = y.order();
  Digraph p(nx * ny);
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < ny; ++b)
      for (int c = b + 1; c < ny; ++c) p.set_state(a * ny + b, a * ny + c, y.state(b, c));
  for (int b = 0; b < ny; ++b)
    for (int a = 0; a < nx; ++a)
      for (int c = a + 1; c < nx; ++c) p.set_state(a * ny + b, c * ny + b, x.state(a, c));
  return p;
}

Digraph induced_subdigraph(const Digraph& x, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("subset contains a repeated vertex");
  for (Vertex v : s)
    if (v < 0 || v >= x.order())
      throw std::invalid_argument("subset vertex " + std::to_string(v) + " not in digraph");
  const int m = static_cast<int>(s.size());
  Digraph d(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) d.set_state(i, j, x.state(s[i], s[j]));
  return d;
}

Digraph delete_vertex(const Digraph& x, Vertex v) {
  std::vector<Vertex> keep;
  for (int u = 0; u < x.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subdigraph(x, keep);
}

Digraph permuted(const Digraph& x, std::span<const Vertex> perm) {
  const int n = x.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.set_state(i, j, x.state(perm[i], perm[j]));
  return d;
}

Digraph disjoint_union(const Digraph& x, const Digraph& y) {
  const int nx = x.order();
  Digraph d(nx + y.order());
  for (int u = 0; u < nx; ++u)
    for (int v = u + 1; v < nx; ++v) d.set_state(u, v, x.state(u, v));
  for (int u = 0; u < y.order(); ++u)
    for (int v = u + 1; v < y.order(); ++v) d.set_state(nx + u, nx + v, y.state(u, v));
  return d;
}

std::vector<std::vector<Vertex>> weak_components(const Digraph& x) {
  const int n = x.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      out.back().push_back(u);
      for (int v = 0; v < n; ++v)
        if (v != u && comp[v] < 0 && x.adjacent(u, v)) {
          comp[v] = id;
          q.push(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_weakly_connected(const Digraph& x) { return weak_components(x).size() <= 1; }

namespace {

int reach_count(const Digraph& x, bool forward) {
  const int n = x.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (v == u || seen[v]) continue;
      if (forward ? x.has_arc(u, v) : x.has_arc(v, u)) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& x) {
  if (x.order() <= 1) return true;
  return reach_count(x, true) == x.order() && reach_count(x, false) == x.order();
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbours(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return is_weakly_connected(digraph_of(g));
}

}  // namespace hermdig
