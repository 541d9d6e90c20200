#include <random>

#include "doctest.h"
#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/sachs.hpp"
#include "support.hpp"

using namespace hermdig;

TEST_CASE("order-2 basic subgraphs are the edges") {
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Digraph x = oracle::random_digraph(rng, 6);
    CHECK(basic_subgraphs(x, 2).size() == x.edge_count());
  }
}

TEST_CASE("triangles with an odd arc count are not basic") {
  CHECK(basic_subgraphs(reversed_cycle(3), 3).empty());
  CHECK(basic_subgraphs(directed_cycle(3), 3).empty());
  const auto k3 = basic_subgraphs(k3_prime(), 3);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].cycle_count() == 1);
  CHECK(cycle_r(k3_prime(), k3[0].components[0].vertices) == 1);
}

TEST_CASE("coefficients of the reversed 4-cycle") {
  const Digraph c4 = reversed_cycle(4);
  const std::vector<long long> want{4, 0, -4, 0, 1};
  for (int j = 0; j <= 4; ++j) CHECK(sachs_coefficient(c4, j) == want[j]);
}

TEST_CASE("coefficients agree with the exact characteristic polynomial") {
  for (int n = 1; n <= 4; ++n)
    for (const Digraph& x : oracle::all_labelled(n)) {
      const CharPoly p = char_poly(x);
      for (int j = 0; j <= n; ++j) CHECK(sachs_coefficient(x, j) == p[j]);
    }
  std::mt19937 rng(13);
  for (int t = 0; t < 60; ++t) {
    const int n = 5 + t % 4;
    const Digraph x = oracle::random_digraph(rng, n);
    const CharPoly p = char_poly(x);
    for (int j = 0; j <= n; ++j) CHECK(sachs_coefficient(x, j) == p[j]);
    CHECK(sachs_coefficient(x, n - 2) == -static_cast<long long>(x.edge_count()));
  }
}

TEST_CASE("cycle r is independent of the traversal direction") {
  std::mt19937 rng(19);
  for (int t = 0; t < 50; ++t) {
    const Digraph x = oracle::random_digraph(rng, 7, 0.6);
    for (int k = 3; k <= 7; ++k)
      for (const BasicSubgraph& b : basic_subgraphs(x, k))
        for (const BasicComponent& c : b.components) {
          if (c.kind != BasicComponent::Kind::Cycle) continue;
          std::vector<Vertex> rev(c.vertices.rbegin(), c.vertices.rend());
          CHECK(cycle_r(x, c.vertices) % 2 == cycle_r(x, rev) % 2);
        }
  }
}

TEST_CASE("triangle census") {
  CHECK(triangle_census(complete_digraph(3)) == TriangleCensus{0, 0, 0, 1});
  CHECK(triangle_census(k3_prime()) == TriangleCensus{1, 0, 0, 0});
  CHECK(triangle_census(k3_prime()).trace_h3() == -6);
  CHECK(triangle_census(reversed_cycle(3)) == TriangleCensus{});

  Digraph in(3), out(3);
  in.add_digon(1, 2);
  in.add_arc(1, 0);
  in.add_arc(2, 0);
  out.add_digon(0, 2);
  out.add_arc(1, 0);
  out.add_arc(1, 2);
  CHECK(triangle_census(in) == TriangleCensus{0, 1, 0, 0});
  CHECK(triangle_census(out) == TriangleCensus{0, 0, 1, 0});

  // tr H^3 from exact matrix powers
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    const Digraph x = oracle::random_digraph(rng, 3 + t % 6, 0.7);
    const HermitianMatrix h = hermitian_matrix(x);
    BigGaussian tr;
    for (int u = 0; u < x.order(); ++u) tr += power_entry(h, 3, u, u);
    CHECK(tr.im == 0);
    CHECK(tr.re == triangle_census(x).trace_h3());
  }
}
