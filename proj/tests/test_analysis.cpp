#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hermdig/analysis.hpp"
#include "hermdig/families.hpp"
#include "support.hpp"

using namespace hermdig;

namespace {

std::vector<double> descending(const Eigen::VectorXd& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int brute_alpha(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1u) && (mask >> v & 1u) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// Every odd cycle, as a cyclic vertex order, has an even number of digons.
bool brute_odd_parity(const Digraph& x) {
  const int n = x.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 3; k <= n; k += 2) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) s.push_back(v);
      do {
        bool cycle = true;
        int digons = 0;
        for (int j = 0; j < k && cycle; ++j) {
          const int u = s[j], v = s[(j + 1) % k];
          if (!x.adjacent(u, v)) cycle = false;
          else if (x.state(u, v) == PairState::Digon) ++digons;
        }
        if (cycle && digons % 2 == 1) return false;
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
  return true;
}

double reference_rho(const Digraph& x) {
  const Eigen::VectorXd e = oracle::eigen_reference(x);
  return std::max(std::abs(e.minCoeff()), std::abs(e.maxCoeff()));
}

}  // namespace

TEST_CASE("interlacing of induced subdigraphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const Digraph x = oracle::random_digraph(rng, n);
    const auto parent = descending(oracle::eigen_reference(x));
    for (Vertex v = 0; v < n; ++v)
      CHECK(check_interlacing(parent, descending(oracle::eigen_reference(delete_vertex(x, v)))));
    const Spectrum s = spectrum(x);
    CHECK(check_interlacing(s, s));
  }
  CHECK_FALSE(check_interlacing(std::vector<double>{1, -1}, std::vector<double>{std::sqrt(2.0)}));
  CHECK_THROWS_AS(check_interlacing(std::vector<double>{1}, std::vector<double>{1, 1}), AnalysisError);
}

TEST_CASE("eta bounds") {
  Digraph three_digons(6);
  for (int k = 0; k < 3; ++k) three_digons.add_digon(2 * k, 2 * k + 1);
  EtaBounds e = eta_bounds_check(three_digons);
  CHECK(e.alpha == 3);
  CHECK(e.eta_plus == 3);
  CHECK(e.eta_minus == 3);
  CHECK(e.ok());

  e = eta_bounds_check(complete_digraph(3));
  CHECK(e.alpha == 1);
  CHECK(e.eta_plus == 1);
  CHECK(e.digon_free == 1);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 9;
    const Digraph x = oracle::random_digraph(rng, n, 0.6);
    const EtaBounds r = eta_bounds_check(x);
    CHECK(r.alpha == brute_alpha(underlying_graph(x)));
    CHECK(r.digon_free == brute_alpha(symmetric_part(x)));
    const auto ev = oracle::eigen_reference(x);
    CHECK(r.eta_plus == (ev.array() >= -1e-9).count());
    CHECK(r.eta_minus == (ev.array() <= 1e-9).count());
    CHECK(r.ok());
    if (x.is_oriented()) CHECK(r.digon_free == n);
  }
}

TEST_CASE("tournament bound") {
  TournamentBound t = tournament_bound_check(transitive_tournament(3));
  CHECK(t.lambda1 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(t.tight);

  t = tournament_bound_check(directed_cycle(4));
  CHECK(t.lambda1 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(t.bound == doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(t.tight);
  CHECK(t.ok);

  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 5; ++v)
      if (rng() % 2) s.push_back(v);
    CHECK(tournament_bound_check(local_reversal(transitive_tournament(5), s)).tight);
  }
  for (int trial = 0; trial < 300; ++trial) {
    Digraph x = oracle::random_digraph(rng, 2 + trial % 7);
    x = asymmetric_part(x);
    CHECK(tournament_bound_check(x).ok);
  }
  CHECK_THROWS_AS(tournament_bound_check(complete_digraph(3)), AnalysisError);
}

TEST_CASE("quotient matrices") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      std::vector<std::vector<Vertex>> blocks(3);
      for (int j = 0; j < a; ++j) blocks[0].push_back(j), blocks[1].push_back(a + j);
      for (int l = 0; l < b; ++l) blocks[2].push_back(2 * a + l);
      const PartitionQuotient q = quotient(x_ab(a, b), blocks);
      CHECK(q.equitable);
      const Eigen::MatrixXcd m = q.matrix();
      using C = std::complex<double>;
      const C want[3][3] = {{0, 1, C(0, b)}, {1, 0, C(0, -b)}, {C(0, -a), C(0, a), 0}};
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) CHECK(std::abs(m(j, k) - want[j][k]) < 1e-12);
      CHECK(q.interlaces);
      CHECK(q.contained);
    }

  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Digraph x = oracle::random_digraph(rng, n);
    std::vector<std::vector<Vertex>> singles(n);
    for (int v = 0; v < n; ++v) singles[v] = {v};
    const PartitionQuotient s = quotient(x, singles);
    CHECK(s.equitable);
    const auto h = oracle::h_entries(x);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(std::abs(s.entry(u, v) - std::complex<double>(h[u][v].real(), h[u][v].imag())) < 1e-12);

    const int m = 1 + static_cast<int>(rng() % n);
    std::vector<std::vector<Vertex>> blocks(m);
    for (int v = 0; v < n; ++v) blocks[v < m ? v : rng() % m].push_back(v);
    const PartitionQuotient q = quotient(x, blocks);
    CHECK(q.interlaces);
    CHECK(q.contained);
  }

  // Regular digon graph plus an eulerian oriented part: one block, B = [2].
  Digraph y = cycle_digraph(6);
  for (int k : {0, 1}) {
    y.add_arc(k, k + 2);
    y.add_arc(k + 2, k + 4);
    y.add_arc(k + 4, k);
  }
  const PartitionQuotient one = quotient(y, {{0, 1, 2, 3, 4, 5}});
  CHECK(one.equitable);
  CHECK(std::abs(one.entry(0, 0) - 2.0) < 1e-12);
  CHECK(one.contained);

  CHECK_THROWS_AS(quotient(y, {{0, 1, 2}, {3, 4}}), AnalysisError);
  CHECK_THROWS_AS(quotient(y, {{0, 1, 2}, {2, 3, 4, 5}}), AnalysisError);
  CHECK_THROWS_AS(quotient(y, {{0, 1, 2, 3, 4, 5}, {}}), AnalysisError);
}

TEST_CASE("radius certificates") {
  using K = RadiusCertificate::Kind;
  for (int n = 2; n <= 6; ++n) {
    const RadiusCertificate c = radius_certificate(complete_digraph(n));
    CHECK(c.kind == K::PositiveEquality);
    for (Quaternary q : c.partition) CHECK(q == Quaternary::One);
  }
  RadiusCertificate c = radius_certificate(k4_prime());
  CHECK(c.kind == K::NegativeEquality);
  CHECK(satisfies_radius_partition(k4_prime(), c.partition, K::NegativeEquality));
  c = radius_certificate(reversed_cycle(3));
  CHECK(c.kind == K::NoEquality);
  CHECK(c.rho == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(radius_certificate(empty_digraph(2)), AnalysisError);

  // Round trip: orient a regular graph from random labels.
  std::mt19937 rng(3);
  const Gaussian units[4] = {Gaussian(1), Gaussian(-1), Gaussian(0, 1), Gaussian(0, -1)};
  std::vector<Graph> graphs;
  for (int n = 3; n <= 8; ++n) {
    Graph g(n);
    for (int k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n);
    graphs.push_back(g);
  }
  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  graphs.push_back(k4);
  Graph cube(8);
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (u < (u ^ (1 << b))) cube.add_edge(u, u ^ (1 << b));
  graphs.push_back(cube);

  int built = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph& g = graphs[trial % graphs.size()];
    const bool positive = trial % 2 == 0;
    std::vector<Gaussian> lab(g.order());
    for (auto& l : lab) l = units[rng() % 4];
    Digraph x(g.order());
    bool ok = true;
    for (auto [u, v] : g.edges()) {
      // ratio L(v) / L(u) = L(v) * conj(L(u))
      const Gaussian r = lab[v] * conj(lab[u]);
      if (positive) {
        if (r == Gaussian(1)) x.add_digon(u, v);
        else if (r == Gaussian(0, -1)) x.add_arc(u, v);
        else if (r == Gaussian(0, 1)) x.add_arc(v, u);
        else ok = false;
      } else {
        if (r == Gaussian(-1)) x.add_digon(u, v);
        else if (r == Gaussian(0, 1)) x.add_arc(u, v);
        else if (r == Gaussian(0, -1)) x.add_arc(v, u);
        else ok = false;
      }
    }
    if (!ok) continue;
    ++built;
    const int delta = g.max_degree();
    const double rho = reference_rho(x);
    CHECK(rho == doctest::Approx(delta).epsilon(1e-9));
    const RadiusCertificate rc = radius_certificate(x);
    CHECK(rc.kind != K::NoEquality);
    CHECK(satisfies_radius_partition(x, rc.partition, rc.kind));
  }
  CHECK(built > 100);

  for (int trial = 0; trial < 500; ++trial) {
    const Digraph x = oracle::random_digraph(rng, 2 + trial % 6, 0.7);
    if (!is_weakly_connected(x)) continue;
    const RadiusCertificate rc = radius_certificate(x);
    const bool equal = std::abs(reference_rho(x) - rc.delta) < 1e-7;
    CHECK(equal == (rc.kind != K::NoEquality));
  }
}

TEST_CASE("radius inequalities") {
  const Digraph k = k4_prime();
  const RadiusInequalities r = radius_inequalities(cartesian_product(k, k));
  CHECK(r.rho == doctest::Approx(6.0));
  CHECK(r.lambda1 == doctest::Approx(2.0));
  CHECK(r.rho / r.lambda1 == doctest::Approx(3.0));
  CHECK(r.ok);

  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const Digraph x = oracle::random_digraph(rng, 2 + trial % 7);
    if (x.arc_count() == 0) continue;
    const RadiusInequalities ri = radius_inequalities(x);
    CHECK(ri.ok);
    CHECK(ri.rho == doctest::Approx(reference_rho(x)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(radius_inequalities(empty_digraph(3)), AnalysisError);
}

TEST_CASE("symmetric spectrum conditions") {
  const Digraph d = oracle::from_arcs(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 0}, {2, 3}, {3, 2}});
  SymmetricConditions s = symmetric_sufficient_conditions(d);
  CHECK_FALSE(s.bipartite);
  CHECK_FALSE(s.oriented);
  CHECK_FALSE(s.odd_cycle_digon_parity);
  CHECK(s.spectrum_symmetric);

  s = symmetric_sufficient_conditions(reversed_cycle(3));
  CHECK(s.oriented);
  CHECK(s.spectrum_symmetric);
  s = symmetric_sufficient_conditions(cycle_digraph(6));
  CHECK(s.bipartite);
  CHECK(s.spectrum_symmetric);

  for (int n = 1; n <= 4; ++n)
    for (const Digraph& x : oracle::all_labelled(n)) {
      const SymmetricConditions c = symmetric_sufficient_conditions(x);
      CHECK(c.consistent());
      CHECK(c.odd_cycle_digon_parity == brute_odd_parity(x));
    }
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Digraph x = oracle::random_digraph(rng, 5 + trial % 3);
    const SymmetricConditions c = symmetric_sufficient_conditions(x);
    CHECK(c.consistent());
    CHECK(c.odd_cycle_digon_parity == brute_odd_parity(x));
  }
}

TEST_CASE("small spectral radius") {
  Digraph three(6);
  for (int k = 0; k < 3; ++k) three.add_digon(2 * k, 2 * k + 1);
  CHECK(classify_small_radius(three).spectral == RadiusClass::PM1);
  CHECK(classify_small_radius(three).agree());

  Digraph mixed(5);
  mixed.add_arc(0, 1);
  mixed.add_digon(2, 3);
  CHECK(classify_small_radius(mixed).spectral == RadiusClass::LT_SQRT2);
  CHECK(classify_small_radius(mixed).agree());

  CHECK(classify_small_radius(reversed_cycle(4)).spectral == RadiusClass::LT_SQRT3);
  CHECK(classify_small_radius(reversed_cycle(4)).agree());
  for (const Digraph& r : two_digon_c4_references()) {
    CHECK(r.digon_count() == 2);
    CHECK(is_strongly_connected(r));
    CHECK(char_poly(r) == char_poly(reversed_cycle(4)));
  }

  CHECK(roots_within(Polynomial{0, -3, 0, 1}, 4));
  CHECK_FALSE(roots_within(Polynomial{0, -3, 0, 1}, 3));

  for (int n = 1; n <= 4; ++n)
    for (const Digraph& x : oracle::all_labelled(n)) {
      const SmallRadiusReport r = classify_small_radius(x);
      CHECK(r.agree());
      const auto ev = oracle::eigen_reference(x);
      const double rho = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
      if (r.spectral == RadiusClass::LT_SQRT3) CHECK(rho < std::sqrt(3.0));
      if (r.spectral == RadiusClass::NONE) CHECK(rho >= std::sqrt(3.0) - 1e-9);
    }
  std::mt19937 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const Digraph x = oracle::random_digraph(rng, 5 + trial % 4, 0.3);
    CHECK(classify_small_radius(x).agree());
  }
}

TEST_CASE("closed-form spectra") {
  auto compare = [](FamilyId id, std::vector<int> params) {
    const ClosedFormSpectrum c = closed_form_spectrum(id, params);
    const auto ref = descending(oracle::eigen_reference(family(id, params)));
    REQUIRE(ref.size() == c.values.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ref[k] - c.values[k]) < 1e-9);
    if (!c.char_poly.is_zero()) CHECK(c.char_poly == char_poly(family(id, params)));
  };
  for (int n = 3; n <= 24; ++n) {
    compare(FamilyId::DirectedCycle, {n});
    compare(FamilyId::ReversedCycle, {n});
    compare(FamilyId::Cycle, {n});
    compare(FamilyId::TransitiveTournament, {n});
    compare(FamilyId::Complete, {n});
  }
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      compare(FamilyId::Xab, {a, b});
      compare(FamilyId::Ykn, {a, b});
    }
  for (int n = 3; n <= 6; ++n) compare(FamilyId::Necklace, {n});
  compare(FamilyId::DigonCycle, {4});
  compare(FamilyId::ReversedDigonCycle, {5});

  const ClosedFormSpectrum d6 = closed_form_spectrum(FamilyId::DirectedCycle, std::vector<int>{6});
  const double r3 = std::sqrt(3.0);
  const std::vector<double> want_d6{r3, r3, 0, 0, -r3, -r3};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(d6.values[k] - want_d6[k]) < 1e-12);
  const ClosedFormSpectrum c6 = closed_form_spectrum(FamilyId::ReversedCycle, std::vector<int>{6});
  const std::vector<double> want_c6{2, 1, 1, -1, -1, -2};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(c6.values[k] - want_c6[k]) < 1e-12);

  CHECK(tournament_char_poly(4) == Polynomial{1, 0, -6, 0, 1});
  // (t + i)^n + (t - i)^n over 2, expanded independently.
  for (int n = 1; n <= 32; ++n) {
    std::vector<std::complex<double>> c{1};
    for (int k = 0; k < n; ++k) {
      std::vector<std::complex<double>> next(c.size() + 1);
      for (std::size_t j = 0; j < c.size(); ++j) {
        next[j] += c[j] * std::complex<double>(0, 1);
        next[j + 1] += c[j];
      }
      c = next;
    }
    const Polynomial p = tournament_char_poly(n);
    for (int j = 0; j <= n; ++j) CHECK(static_cast<double>(p[j]) == doctest::Approx(c[j].real()));
  }
  CHECK_THROWS_AS(closed_form_spectrum(FamilyId::Star, std::vector<int>{3}), AnalysisError);
  CHECK_THROWS_AS(closed_form_spectrum(FamilyId::DigonCycle, std::vector<int>{5}), AnalysisError);
}
