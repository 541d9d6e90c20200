#include "hermdig/sachs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hermdig {

int BasicSubgraph::cycle_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const BasicComponent& c) {
    return c.kind == BasicComponent::Kind::Cycle;
  }));
}

int cycle_r(const Digraph& x, const std::vector<Vertex>& cycle) {
  int f = 0, b = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const PairState s = x.state(cycle[k], cycle[(k + 1) % cycle.size()]);
    if (s == PairState::Fwd) ++f;
    else if (s == PairState::Bwd) ++b;
    else if (s == PairState::None) throw std::invalid_argument("not a cycle of the underlying graph");
  }
  if ((f + b) % 2 != 0) throw std::logic_error("cycle with an odd number of non-digon arcs");
  return std::abs(f - b) / 2;
}

namespace {

struct CycleRecord {
  std::vector<Vertex> seq;
  std::uint64_t mask;
};

// Each cycle once: DFS from its minimum vertex through larger vertices,
// keeping the direction whose second vertex is smaller than the last.
std::vector<std::vector<CycleRecord>> admissible_cycles(const Digraph& x) {
  const int n = x.order();
  std::vector<std::vector<CycleRecord>> by_min(n);
  std::vector<Vertex> path;
  std::function<void(Vertex, Vertex, std::uint64_t, int)> dfs = [&](Vertex s, Vertex v, std::uint64_t used,
                                                                    int arcs) {
    for (Vertex w = s; w < n; ++w) {
      if (w == v || !x.adjacent(v, w)) continue;
      const int a = arcs + (x.state(v, w) == PairState::Digon ? 0 : 1);
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back() && a % 2 == 0) by_min[s].push_back({path, used});
        continue;
      }
      if (used >> w & 1u) continue;
      path.push_back(w);
      dfs(s, w, used | (std::uint64_t{1} << w), a);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    dfs(s, s, std::uint64_t{1} << s, 0);
  }
  return by_min;
}

struct Enumerator {
  const Digraph& x;
  int target;
  const std::vector<std::vector<CycleRecord>>& cycles;
  const std::function<void(const BasicSubgraph&)>& visit;
  BasicSubgraph current;

  void run(Vertex v, std::uint64_t used, int covered) {
    const int n = x.order();
    if (covered == target) {
      current.order = covered;
      visit(current);
      return;
    }
    if (v >= n || covered + (n - v) < target) return;
    if (used >> v & 1u) {
      run(v + 1, used, covered);
      return;
    }
    // v left uncovered
    run(v + 1, used, covered);
    // v covered by an edge to a larger vertex
    for (Vertex w = v + 1; w < n && covered + 2 <= target; ++w) {
      if ((used >> w & 1u) || !x.adjacent(v, w)) continue;
      current.components.push_back({BasicComponent::Kind::Edge, {v, w}});
      run(v + 1, used | (std::uint64_t{1} << v) | (std::uint64_t{1} << w), covered + 2);
      current.components.pop_back();
    }
    // v is the minimum vertex of a cycle
    for (const CycleRecord& c : cycles[v]) {
      const int len = static_cast<int>(c.seq.size());
      if ((used & c.mask) != 0 || covered + len > target) continue;
      current.components.push_back({BasicComponent::Kind::Cycle, c.seq});
      run(v + 1, used | c.mask, covered + len);
      current.components.pop_back();
    }
  }
};

}  // namespace

void for_each_basic_subgraph(const Digraph& x, int order,
                             const std::function<void(const BasicSubgraph&)>& visit) {
  if (order < 0 || order > x.order()) throw std::invalid_argument("basic subgraph order out of range");
  if (x.order() > 64) throw std::invalid_argument("basic subgraph enumeration is limited to 64 vertices");
  const auto cycles = admissible_cycles(x);
  Enumerator e{x, order, cycles, visit, {}};
  e.run(0, 0, 0);
}

std::vector<BasicSubgraph> basic_subgraphs(const Digraph& x, int order) {
  std::vector<BasicSubgraph> out;
  for_each_basic_subgraph(x, order, [&](const BasicSubgraph& b) { out.push_back(b); });
  return out;
}

BigInt sachs_coefficient(const Digraph& x, int j) {
  const int n = x.order();
  if (j < 0 || j > n) throw std::invalid_argument("coefficient index out of range");
  BigInt total = 0;
  for_each_basic_subgraph(x, n - j, [&](const BasicSubgraph& b) {
    int r = 0;
    int cycles = 0;
    for (const BasicComponent& c : b.components) {
      if (c.kind != BasicComponent::Kind::Cycle) continue;
      ++cycles;
      const int fwd = cycle_r(x, c.vertices);
      std::vector<Vertex> rev(c.vertices.rbegin(), c.vertices.rend());
      if ((fwd - cycle_r(x, rev)) % 2 != 0) throw std::logic_error("r(B) depends on the cycle orientation");
      r += fwd;
    }
    const int w = static_cast<int>(b.components.size());
    BigInt term = BigInt(1) << cycles;
    total += ((r + w) % 2 == 0) ? term : BigInt(-term);
  });
  return total;
}

TriangleCensus triangle_census(const Digraph& x) {
  // reference triangles on vertices 0, 1, 2 with the digon on {0, 1}
  std::array<Digraph, 4> ref{Digraph(3), Digraph(3), Digraph(3), Digraph(3)};
  ref[0].add_digon(0, 1);
  ref[0].add_arc(0, 2);
  ref[0].add_arc(2, 1);
  ref[1].add_digon(0, 1);
  ref[1].add_arc(0, 2);
  ref[1].add_arc(1, 2);
  ref[2].add_digon(0, 1);
  ref[2].add_arc(2, 0);
  ref[2].add_arc(2, 1);
  ref[3].add_digon(0, 1);
  ref[3].add_digon(1, 2);
  ref[3].add_digon(0, 2);

  TriangleCensus t;
  const int n = x.order();
  std::array<int, 3> perm{};
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!x.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!x.adjacent(a, c) || !x.adjacent(b, c)) continue;
        const std::array<Vertex, 3> tri{a, b, c};
        for (int k = 0; k < 4; ++k) {
          perm = {0, 1, 2};
          bool match = false;
          do {
            match = true;
            for (int i = 0; i < 3 && match; ++i)
              for (int j = 0; j < 3 && match; ++j)
                if (i != j && ref[k].state(i, j) != x.state(tri[perm[i]], tri[perm[j]])) match = false;
          } while (!match && std::next_permutation(perm.begin(), perm.end()));
          if (!match) continue;
          (k == 0 ? t.x1 : k == 1 ? t.x2 : k == 2 ? t.x3 : t.x4) += 1;
          break;
        }
      }
    }
  return t;
}

}  // namespace hermdig
