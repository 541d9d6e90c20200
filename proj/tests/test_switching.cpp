#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hermdig/canonical.hpp"
#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/switching.hpp"
#include "support.hpp"

using namespace hermdig;

namespace {

std::vector<Vertex> random_subset(std::mt19937& rng, int n) {
  std::vector<Vertex> s;
  for (int v = 0; v < n; ++v)
    if (rng() & 1u) s.push_back(v);
  return s;
}

// Four-way switching written out from the rule list, for comparison with
// the matrix-conjugation implementation. Returns false if inadmissible.
bool rule_list_switch(const Digraph& x, const QuaternaryPartition& p, Digraph& out) {
  auto idx = [](Quaternary q) { return static_cast<int>(q); };  // 1, -1, i, -i
  enum : int { P1 = 0, M1 = 1, PI = 2, MI = 3 };
  out = Digraph(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = u + 1; v < x.order(); ++v) {
      const PairState s = x.state(u, v);
      if (s == PairState::None) continue;
      const int a = idx(p[u]), b = idx(p[v]);
      if (s == PairState::Digon) {
        auto is = [&](int j, int k) { return (a == j && b == k) || (a == k && b == j); };
        if (is(P1, M1) || is(PI, MI)) return false;
        auto arc_from = [&](int from) { out.add_arc(a == from ? u : v, a == from ? v : u); };
        if (is(P1, PI)) arc_from(P1);
        else if (is(M1, MI)) arc_from(M1);
        else if (is(P1, MI)) arc_from(MI);
        else if (is(M1, PI)) arc_from(PI);
        else out.add_digon(u, v);
        continue;
      }
      const int tail = s == PairState::Fwd ? u : v, head = s == PairState::Fwd ? v : u;
      const int j = idx(p[tail]), k = idx(p[head]);
      auto type = [&](int jj, int kk) { return j == jj && k == kk; };
      if (type(P1, PI) || type(PI, M1) || type(M1, MI) || type(MI, P1)) return false;
      if (type(P1, M1) || type(M1, P1) || type(PI, MI) || type(MI, PI)) out.add_arc(head, tail);
      else if (type(P1, MI) || type(M1, PI) || type(PI, P1) || type(MI, M1)) out.add_digon(u, v);
      else out.add_arc(tail, head);
    }
  return true;
}

}  // namespace

TEST_CASE("local reversal") {
  const Digraph x = reversed_cycle(5);
  CHECK(local_reversal(x, std::vector<Vertex>{}) == x);
  CHECK(local_reversal(x, std::vector<Vertex>{0, 1, 2, 3, 4}) == x);

  // reversing at the middle vertex of the transitive triangle
  const Digraph d3 = local_reversal(reversed_cycle(3), std::vector<Vertex>{1});
  CHECK(char_poly(d3).to_string() == "t^3 - 3t");
  CHECK(oracle::brute_isomorphic(d3, directed_cycle(3)));

  try {
    local_reversal(k3_prime(), std::vector<Vertex>{1});
    FAIL("expected DigonInCut");
  } catch (const SwitchError& e) {
    CHECK(e.kind() == SwitchError::Kind::DigonInCut);
    CHECK(e.pairs() == std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Digraph y = asymmetric_part(oracle::random_digraph(rng, 6));
    const auto s = random_subset(rng, 6);
    CHECK(local_reversal(local_reversal(y, s), s) == y);
  }
}

TEST_CASE("digon cut replacement") {
  const Digraph k5 = complete_digraph(5);
  CHECK(digon_cut_replace(k5, std::vector<Vertex>{}) == k5);
  CHECK(digon_cut_replace(k5, std::vector<Vertex>{2, 3, 4}) == y_kn(2, 3));
  CHECK_THROWS_AS(digon_cut_replace(k3_prime(), std::vector<Vertex>{0}), SwitchError);

  // a digon tree cut repeatedly stays cospectral with its underlying graph
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 6;
    Digraph x(n);
    for (int v = 1; v < n; ++v) x.add_digon(static_cast<int>(rng() % v), v);
    const CharPoly p = underlying_char_poly(x);
    for (int k = 0; k < 4; ++k) {
      // cut at the subtree of a random vertex v (edge to its parent)
      const int v = 1 + static_cast<int>(rng() % (n - 1));
      std::vector<Vertex> side{v};
      std::vector<bool> in(n);
      in[v] = true;
      for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (in[a] && !in[b] && x.adjacent(a, b) && b > a && b != v) {
              in[b] = true;
              side.push_back(b);
              grew = true;
            }
      }
      try {
        x = digon_cut_replace(x, side);
      } catch (const SwitchError&) {
      }
      CHECK(char_poly(x) == p);
    }
  }
}

TEST_CASE("four-way switching") {
  std::mt19937 rng(11);
  const Digraph x = oracle::random_digraph(rng, 6);
  CHECK(four_way_switch(x, QuaternaryPartition(6, Quaternary::One)) == x);
  CHECK(four_way_switch(x, QuaternaryPartition(6, Quaternary::MinusOne)) == x);

  Digraph dg(2);
  dg.add_digon(0, 1);
  const Digraph sw = four_way_switch(dg, {Quaternary::One, Quaternary::I});
  CHECK(sw.state(0, 1) == PairState::Fwd);

  try {
    four_way_switch(dg, {Quaternary::One, Quaternary::MinusOne});
    FAIL("expected Inadmissible");
  } catch (const SwitchError& e) {
    CHECK(e.kind() == SwitchError::Kind::Inadmissible);
  }

  int admissible = 0;
  for (int t = 0; t < 3000; ++t) {
    const int n = 2 + t % 6;
    const Digraph y = oracle::random_digraph(rng, n, 0.4);
    QuaternaryPartition p(n);
    for (auto& q : p) q = static_cast<Quaternary>(rng() % 4);
    Digraph expect;
    const bool ok = rule_list_switch(y, p, expect);
    if (!ok) {
      CHECK_THROWS_AS(four_way_switch(y, p), SwitchError);
      continue;
    }
    ++admissible;
    const Digraph z = four_way_switch(y, p);
    CHECK(z == expect);
    CHECK(char_poly(z) == char_poly(y));
    QuaternaryPartition back(p);
    for (auto& q : back) q = conjugate(q);
    CHECK(four_way_switch(z, back) == y);
  }
  CHECK(admissible > 300);
}

TEST_CASE("complete digraph class") {
  for (int n = 1; n <= 7; ++n) {
    const auto cls = kn_cospectral_class(n);
    REQUIRE(cls.size() == static_cast<std::size_t>(n));
    std::set<std::uint64_t> codes;
    for (const Digraph& d : cls) {
      CHECK(char_poly(d) == char_poly(complete_digraph(n)));
      codes.insert(canonical_code(d));
    }
    CHECK(codes.size() == static_cast<std::size_t>(n));
  }
  const auto k5 = kn_cospectral_class(5);
  CHECK(std::find(k5.begin(), k5.end(), y_kn(2, 3)) != k5.end());
  const auto k2 = kn_cospectral_class(2);
  CHECK(char_poly(k2[1]).to_string() == "t^2 - 1");
  CHECK(k2[1].arc_count() == 1);
}

TEST_CASE("cycle normal forms") {
  for (int n = 3; n <= 8; ++n) {
    const Digraph base = cycle_digraph(n);
    int total = 1;
    for (int k = 0; k < n; ++k) total *= 3;
    std::map<CharPoly, std::set<CycleForm>> seen;
    for (int code = 0; code < total; ++code) {
      Digraph x = base;
      for (int k = 0, c = code; k < n; ++k, c /= 3) x.set_state(k, (k + 1) % n, static_cast<PairState>(1 + c % 3));
      const CycleNormalForm f = cycle_normal_form(x);
      Digraph replay = x;
      for (const SwitchStep& s : f.witness) replay = apply(replay, s);
      CHECK(replay == f.normalized);
      CHECK(char_poly(x) == char_poly(f.representative));
      seen[char_poly(x)].insert(f.form);
    }
    // three spectra, each with a single tag
    CHECK(seen.size() == 3);
    std::set<CycleForm> tags;
    for (const auto& [p, forms] : seen) {
      CHECK(forms.size() == 1);
      tags.insert(*forms.begin());
    }
    CHECK(tags.size() == 3);
  }
  // orientations of odd cycles share the directed-cycle polynomial
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    Digraph x(5);
    for (int k = 0; k < 5; ++k) x.set_state(k, (k + 1) % 5, (rng() & 1u) ? PairState::Fwd : PairState::Bwd);
    const CycleNormalForm f = cycle_normal_form(x);
    CHECK(oracle::brute_isomorphic(f.normalized, directed_cycle(5)));
  }
  // larger orders: the named members and random mixtures
  for (int n = 9; n <= 12; ++n) {
    for (const Digraph& x : {directed_cycle(n), reversed_cycle(n), digon_cycle(n), reversed_digon_cycle(n), cycle_digraph(n)})
      CHECK(char_poly(cycle_normal_form(x).representative) == char_poly(x));
    for (int t = 0; t < 50; ++t) {
      Digraph x(n);
      for (int k = 0; k < n; ++k) x.set_state(k, (k + 1) % n, static_cast<PairState>(1 + rng() % 3));
      CHECK(char_poly(cycle_normal_form(x).representative) == char_poly(x));
    }
  }
  CHECK_THROWS_AS(cycle_normal_form(path_digraph(4)), SwitchError);
  CHECK_THROWS_AS(cycle_normal_form(disjoint_union(cycle_digraph(3), cycle_digraph(3))), SwitchError);
}
