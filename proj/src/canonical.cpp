#include "hermdig/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hermdig {

SmallDigraph SmallDigraph::from(const Digraph& x) {
  if (x.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labelling is limited to order " +
                                std::to_string(kMaxCanonicalOrder));
  SmallDigraph s;
  s.n = x.order();
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v) s.set(u, v, x.state(u, v));
  return s;
}

Digraph SmallDigraph::to_digraph() const {
  Digraph d(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) d.set_state(u, v, static_cast<PairState>(rel[u][v]));
  return d;
}

std::uint64_t SmallDigraph::packed() const noexcept {
  std::uint64_t code = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) code = (code << 2) | rel[u][v];
  return code;
}

SmallDigraph SmallDigraph::unpack(int n, std::uint64_t code) noexcept {
  SmallDigraph s;
  s.n = n;
  int shift = n * (n - 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      shift -= 2;
      s.set(u, v, static_cast<PairState>((code >> shift) & 3));
    }
  return s;
}

namespace {

constexpr int kMaxPairs = kMaxCanonicalOrder * (kMaxCanonicalOrder - 1) / 2;

// Equitable colour refinement; colours are ranks of isomorphism-invariant
// signatures, so equal-coloured vertices are the only candidates for swaps.
std::array<int, kMaxCanonicalOrder> refine(const SmallDigraph& g) {
  const int n = g.n;
  std::array<int, kMaxCanonicalOrder> colour{};
  int classes = 1;
  using Signature = std::array<std::uint8_t, kMaxCanonicalOrder + 1>;
  std::array<Signature, kMaxCanonicalOrder> sig{};
  std::array<int, kMaxCanonicalOrder> order{};
  for (;;) {
    for (int v = 0; v < n; ++v) {
      Signature& s = sig[v];
      s.fill(255);
      s[0] = static_cast<std::uint8_t>(colour[v]);
      int k = 1;
      for (int u = 0; u < n; ++u)
        if (u != v && g.rel[v][u] != 0)
          s[k++] = static_cast<std::uint8_t>(colour[u] * 4 + g.rel[v][u]);
      std::sort(s.begin() + 1, s.begin() + k);
    }
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return sig[a] < sig[b]; });
    std::array<int, kMaxCanonicalOrder> next{};
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    const int now = n == 0 ? 0 : rank + 1;
    colour = next;
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

struct Search {
  const SmallDigraph& g;
  int n;
  std::array<int, kMaxCanonicalOrder> colour{};
  std::array<int, kMaxCanonicalOrder> slot_colour{};
  std::array<int, kMaxCanonicalOrder> perm{};
  std::array<int, kMaxCanonicalOrder> best_perm{};
  // pair codes in colex order: (0,1),(0,2),(1,2),(0,3),...
  std::array<std::uint8_t, kMaxPairs> code{};
  std::array<std::uint8_t, kMaxPairs> best{};
  bool have_best = false;
  unsigned used = 0;

  // `better`: the prefix placed so far is smaller than the same prefix of
  // best. Returns true if best was replaced, after which the prefix equals
  // best's and later siblings must compare again.
  bool run(int pos, bool better) {
    if (pos == n) {
      if (better || !have_best) {
        best = code;
        best_perm = perm;
        have_best = true;
        return true;
      }
      return false;
    }
    bool replaced = false;
    const int base = pos * (pos - 1) / 2;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u || colour[v] != slot_colour[pos]) continue;
      bool now_better = better || !have_best;
      bool worse = false;
      for (int i = 0; i < pos; ++i) {
        const std::uint8_t c = g.rel[perm[i]][v];
        code[base + i] = c;
        if (!now_better && !worse) {
          if (c < best[base + i]) now_better = true;
          else if (c > best[base + i]) worse = true;
        }
      }
      if (worse) continue;
      perm[pos] = v;
      used |= 1u << v;
      if (run(pos + 1, now_better)) {
        replaced = true;
        better = false;
      }
      used &= ~(1u << v);
    }
    return replaced;
  }
};

std::array<int, kMaxCanonicalOrder> canonical_perm(const SmallDigraph& g) {
  Search s{g, g.n};
  s.colour = refine(g);
  std::array<int, kMaxCanonicalOrder> sorted{};
  for (int v = 0; v < g.n; ++v) sorted[v] = s.colour[v];
  std::sort(sorted.begin(), sorted.begin() + g.n);
  s.slot_colour = sorted;
  s.run(0, false);
  return s.best_perm;
}

}  // namespace

std::uint64_t canonical_code(const SmallDigraph& g) {
  const auto perm = canonical_perm(g);
  SmallDigraph c;
  c.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) c.rel[i][j] = g.rel[perm[i]][perm[j]];
  return c.packed();
}

std::uint64_t canonical_code(const Digraph& x) { return canonical_code(SmallDigraph::from(x)); }

std::vector<Vertex> canonical_labeling(const Digraph& x) {
  const SmallDigraph g = SmallDigraph::from(x);
  const auto perm = canonical_perm(g);
  return {perm.begin(), perm.begin() + g.n};
}

Digraph canonical_form(const Digraph& x) {
  const auto perm = canonical_labeling(x);
  return permuted(x, perm);
}

bool isomorphic(const Digraph& x, const Digraph& y) {
  if (x.order() != y.order() || x.edge_count() != y.edge_count() ||
      x.digon_count() != y.digon_count())
    return false;
  return canonical_code(x) == canonical_code(y);
}

}  // namespace hermdig
