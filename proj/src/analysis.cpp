#include "hermdig/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numbers>

#include "hermdig/canonical.hpp"
#include "hermdig/encoding.hpp"

namespace hermdig {

namespace {

using Mask = std::uint64_t;

int max_independent(const std::vector<Mask>& adj, Mask p) {
  if (p == 0) return 0;
  // Vertices of degree 0 or 1 inside p can always be taken.
  int best_v = -1, best_deg = -1;
  for (Mask q = p; q; q &= q - 1) {
    const int v = std::countr_zero(q);
    const int d = std::popcount(adj[v] & p);
    if (d <= 1) return 1 + max_independent(adj, p & ~(adj[v] | (Mask{1} << v)));
    if (d > best_deg) best_deg = d, best_v = v;
  }
  const Mask bit = Mask{1} << best_v;
  const int with = 1 + max_independent(adj, p & ~(adj[best_v] | bit));
  const int without = max_independent(adj, p & ~bit);
  return std::max(with, without);
}

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(g.order());
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

double spectral_radius(const std::vector<double>& desc) {
  return desc.empty() ? 0.0 : std::max(std::abs(desc.front()), std::abs(desc.back()));
}

// Label factor carried across the pair (u, v) seen from u.
Gaussian radius_factor(PairState s, RadiusCertificate::Kind kind) {
  const bool pos = kind == RadiusCertificate::Kind::PositiveEquality;
  switch (s) {
    case PairState::Digon: return pos ? Gaussian(1) : Gaussian(-1);
    case PairState::Fwd: return pos ? Gaussian(0, -1) : Gaussian(0, 1);
    case PairState::Bwd: return pos ? Gaussian(0, 1) : Gaussian(0, -1);
    case PairState::None: break;
  }
  return Gaussian(0);
}

bool propagate(const Digraph& x, RadiusCertificate::Kind kind, QuaternaryPartition& out) {
  const int n = x.order();
  std::vector<Gaussian> label(n, Gaussian(0));
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  label[0] = Gaussian(1);
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || !x.adjacent(u, w)) continue;
      const Gaussian want = radius_factor(x.state(u, w), kind) * label[u];
      if (!seen[w]) {
        seen[w] = true;
        label[w] = want;
        queue.push_back(w);
      } else if (label[w] != want) {
        return false;
      }
    }
  }
  out.resize(n);
  for (int v = 0; v < n; ++v) out[v] = from_unit(label[v]);
  return true;
}

bool is_path(const Digraph& y) {
  const Graph g = underlying_graph(y);
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.order())) return false;
  return g.max_degree() <= 2;
}

bool is_four_cycle(const Digraph& y) {
  const Graph g = underlying_graph(y);
  if (g.order() != 4 || g.edge_count() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

bool check_interlacing(const std::vector<double>& parent, const std::vector<double>& child, double tol) {
  if (child.size() > parent.size())
    throw AnalysisError(AnalysisError::Kind::DimensionMismatch, "child spectrum is larger than the parent's");
  const std::size_t t = parent.size() - child.size();
  for (std::size_t s = 0; s < child.size(); ++s)
    if (child[s] > parent[s] + tol || child[s] < parent[s + t] - tol) return false;
  return true;
}

bool check_interlacing(const Spectrum& parent, const Spectrum& child, double tol) {
  return check_interlacing(parent.values, child.values, tol);
}

int independence_number(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("independence_number: order above 64");
  const int n = g.order();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return max_independent(masks_of(g), all);
}

EtaBounds eta_bounds_check(const Digraph& x) {
  EtaBounds r;
  r.digon_free = independence_number(symmetric_part(x));
  r.alpha = independence_number(underlying_graph(x));
  const CharPoly p = char_poly(x);
  r.eta_plus = eta_plus(p);
  r.eta_minus = eta_minus(p);
  const int half = (r.digon_free + 1) / 2;
  r.digon_free_bound = r.eta_plus >= half && r.eta_minus >= half;
  r.alpha_bound = r.eta_plus >= r.alpha && r.eta_minus >= r.alpha;
  return r;
}

TournamentBound tournament_bound_check(const Digraph& x, double tol) {
  if (!x.is_oriented()) throw AnalysisError(AnalysisError::Kind::HasDigon, "tournament bound needs an oriented graph");
  TournamentBound r;
  const int n = x.order();
  if (n == 0) return r;
  r.lambda1 = spectrum(x).values.front();
  r.bound = 1.0 / std::tan(std::numbers::pi / (2.0 * n));
  if (n == 1) r.bound = 0.0;
  r.tight = std::abs(r.lambda1 - r.bound) < tol;
  r.ok = r.lambda1 <= r.bound + tol;
  return r;
}

Eigen::MatrixXcd PartitionQuotient::matrix() const {
  const Eigen::Index m = static_cast<Eigen::Index>(sizes.size());
  Eigen::MatrixXcd b(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index k = 0; k < m; ++k) b(j, k) = entry(static_cast<int>(j), static_cast<int>(k));
  return b;
}

std::complex<double> PartitionQuotient::entry(int j, int k) const {
  const Gaussian& s = block_sums(j, k);
  return {static_cast<double>(s.re) / sizes[j], static_cast<double>(s.im) / sizes[j]};
}

PartitionQuotient quotient(const Digraph& x, const std::vector<std::vector<Vertex>>& blocks, double tol) {
  const int n = x.order();
  std::vector<int> block_of(n, -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw AnalysisError(AnalysisError::Kind::InvalidPartition, "empty block");
    for (Vertex v : blocks[j]) {
      if (v < 0 || v >= n || block_of[v] != -1)
        throw AnalysisError(AnalysisError::Kind::InvalidPartition,
                            "vertex " + std::to_string(v) + " out of range or repeated");
      block_of[v] = static_cast<int>(j);
    }
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0)
    throw AnalysisError(AnalysisError::Kind::InvalidPartition, "blocks do not cover every vertex");

  const HermitianMatrix h = hermitian_matrix(x);
  const int m = static_cast<int>(blocks.size());
  PartitionQuotient q;
  q.partition = blocks;
  q.block_sums = GaussianMatrix<std::int64_t>::Zero(m, m);
  q.equitable = true;
  for (int j = 0; j < m; ++j) {
    q.sizes.push_back(static_cast<int>(blocks[j].size()));
    for (int k = 0; k < m; ++k) {
      Gaussian first(0);
      for (std::size_t r = 0; r < blocks[j].size(); ++r) {
        Gaussian row(0);
        for (Vertex v : blocks[k]) row += h(blocks[j][r], v);
        if (r == 0) first = row;
        else if (row != first) q.equitable = false;
        q.block_sums(j, k) += row;
      }
    }
  }

  // D^(1/2) B D^(-1/2) is Hermitian and has the eigenvalues of B.
  Eigen::MatrixXcd sym(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const Gaussian& s = q.block_sums(j, k);
      sym(j, k) = std::complex<double>(static_cast<double>(s.re), static_cast<double>(s.im)) /
                  std::sqrt(static_cast<double>(q.sizes[j]) * q.sizes[k]);
    }
  q.eigenvalues = jacobi_eigenvalues(sym);
  const std::vector<double> hv = jacobi_eigenvalues(to_complex(h));
  q.interlaces = check_interlacing(hv, q.eigenvalues, tol);

  q.contained = true;
  if (q.equitable) {
    const Spectrum bs = make_spectrum(q.eigenvalues, 0, tol);
    for (std::size_t k = 0; k < bs.distinct.size(); ++k) {
      const auto hits = std::count_if(hv.begin(), hv.end(),
                                      [&](double l) { return std::abs(l - bs.distinct[k]) <= tol * 10; });
      if (hits < bs.multiplicities[k]) q.contained = false;
    }
  }
  return q;
}

std::string_view radius_kind_name(RadiusCertificate::Kind k) {
  switch (k) {
    case RadiusCertificate::Kind::PositiveEquality: return "PositiveEquality";
    case RadiusCertificate::Kind::NegativeEquality: return "NegativeEquality";
    case RadiusCertificate::Kind::NoEquality: return "NoEquality";
  }
  return "?";
}

bool satisfies_radius_partition(const Digraph& x, const QuaternaryPartition& p, RadiusCertificate::Kind kind) {
  if (kind == RadiusCertificate::Kind::NoEquality || static_cast<int>(p.size()) != x.order()) return false;
  for (Vertex u = 0; u < x.order(); ++u)
    for (Vertex v = u + 1; v < x.order(); ++v) {
      const PairState s = x.state(u, v);
      if (s == PairState::None) continue;
      if (radius_factor(s, kind) * unit(p[u]) != unit(p[v])) return false;
    }
  return true;
}

RadiusCertificate radius_certificate(const Digraph& x) {
  if (x.order() == 0 || !is_weakly_connected(x))
    throw AnalysisError(AnalysisError::Kind::NotWeaklyConnected, "radius certificate needs a weakly connected digraph");
  RadiusCertificate c;
  c.delta = degree_profile(x).max_degree();
  c.rho = spectral_radius(spectrum(x).values);
  const CharPoly p = char_poly(x);
  using K = RadiusCertificate::Kind;
  for (K kind : {K::PositiveEquality, K::NegativeEquality}) {
    const BigInt root = kind == K::PositiveEquality ? BigInt(c.delta) : BigInt(-c.delta);
    if (sign_at(p, Rational{root, 1}) != 0) continue;
    QuaternaryPartition part;
    if (!propagate(x, kind, part) || !satisfies_radius_partition(x, part, kind))
      throw std::logic_error("radius_certificate: labels inconsistent although the radius equals the degree");
    c.kind = kind;
    c.partition = std::move(part);
    return c;
  }
  return c;
}

RadiusInequalities radius_inequalities(const Digraph& x, double tol) {
  if (x.arc_count() == 0) throw AnalysisError(AnalysisError::Kind::EmptyDigraph, "digraph has no arcs");
  RadiusInequalities r;
  const std::vector<double> h = spectrum(x).values;
  r.rho = spectral_radius(h);
  r.lambda1 = h.front();
  r.rho_underlying = spectral_radius(jacobi_eigenvalues(to_complex(underlying_matrix(x))));
  r.ok = r.lambda1 <= r.rho + tol && r.rho <= 3 * r.lambda1 + tol && r.rho <= r.rho_underlying + tol;
  return r;
}

SymmetricConditions symmetric_sufficient_conditions(const Digraph& x) {
  SymmetricConditions c;
  const Graph g = underlying_graph(x);
  c.bipartite = is_bipartite(g);
  c.oriented = x.is_oriented();
  c.spectrum_symmetric = symmetric_about_zero(char_poly(x));

  // Every simple cycle is met from its least vertex, once per direction.
  const int n = x.order();
  bool violated = false;
  std::vector<bool> on_path(n, false);
  auto dfs = [&](auto&& self, Vertex start, Vertex u, int length, int digons) -> void {
    for (Vertex w = start; w < n && !violated; ++w) {
      if (w == u || !x.adjacent(u, w)) continue;
      const int d = digons + (x.state(u, w) == PairState::Digon ? 1 : 0);
      if (w == start) {
        if (length >= 2 && (length + 1) % 2 == 1 && d % 2 == 1) violated = true;
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      self(self, start, w, length + 1, d);
      on_path[w] = false;
    }
  };
  for (Vertex s = 0; s < n && !violated; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s, 0, 0);
    on_path[s] = false;
  }
  c.odd_cycle_digon_parity = !violated;
  return c;
}

std::string_view radius_class_name(RadiusClass c) {
  switch (c) {
    case RadiusClass::PM1: return "PM1";
    case RadiusClass::LT_SQRT2: return "LT_SQRT2";
    case RadiusClass::LT_SQRT3: return "LT_SQRT3";
    case RadiusClass::NONE: return "NONE";
  }
  return "?";
}

bool roots_within(const Polynomial& p, long long a_squared) {
  // (-1)^n p(t) p(-t) = prod (t^2 - r^2), so q(u) has roots r^2 >= 0.
  Polynomial q = p * reflect(p);
  if (p.degree() % 2 == 1) q = -q;
  q = even_part_in_square(q);
  const int n = p.degree();
  const Rational top{a_squared, 1};
  return sign_at(q, top) != 0 && count_roots(q, Rational{-1, 1}, top) == n;
}

RadiusClass spectral_radius_class(const Digraph& x) {
  const CharPoly p = char_poly(x);
  const int n = x.order();
  // Spectrum in {-1, 1}: q(u) = (u - 1)^n.
  Polynomial target{1};
  for (int k = 0; k < n; ++k) target = target * Polynomial{-1, 1};
  Polynomial q = p * reflect(p);
  if (n % 2 == 1) q = -q;
  if (n > 0 && even_part_in_square(q) == target) return RadiusClass::PM1;
  if (roots_within(p, 2)) return RadiusClass::LT_SQRT2;
  if (roots_within(p, 3)) return RadiusClass::LT_SQRT3;
  return RadiusClass::NONE;
}

const std::vector<Digraph>& two_digon_c4_references() {
  static const std::vector<Digraph> refs{decode("CcN"), decode("CFs")};
  return refs;
}

RadiusClass structural_radius_class(const Digraph& x) {
  const int n = x.order();
  const DegreeProfile dp = degree_profile(x);
  if (n > 0 && std::all_of(dp.degree.begin(), dp.degree.end(), [](int d) { return d == 1; })) return RadiusClass::PM1;
  if (dp.max_degree() <= 1) return RadiusClass::LT_SQRT2;
  const std::uint64_t ctilde = canonical_code(reversed_cycle(4));
  for (const auto& comp : weak_components(x)) {
    const Digraph y = induced_subdigraph(x, comp);
    if (is_path(y) && y.order() <= 4) continue;
    if (is_four_cycle(y)) {
      const std::uint64_t code = canonical_code(y);
      if (code == ctilde) continue;
      const auto& refs = two_digon_c4_references();
      if (std::any_of(refs.begin(), refs.end(), [&](const Digraph& r) { return canonical_code(r) == code; })) continue;
    }
    return RadiusClass::NONE;
  }
  return RadiusClass::LT_SQRT3;
}

SmallRadiusReport classify_small_radius(const Digraph& x) {
  return {spectral_radius_class(x), structural_radius_class(x)};
}

Polynomial tournament_char_poly(int n) {
  std::vector<BigInt> c(n + 1);
  BigInt binom = 1;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    if (k % 2 == 0) c[n - k] = (k / 2) % 2 == 0 ? binom : BigInt(-binom);
    binom = binom * (n - k) / (k + 1);
  }
  return Polynomial(std::move(c));
}

ClosedFormSpectrum closed_form_spectrum(FamilyId id, std::span<const int> params) {
  using std::numbers::pi;
  ClosedFormSpectrum r{id, {params.begin(), params.end()}, {}, {}};
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw FamilyError(std::string(family_name(id)) + ": wrong number of parameters");
  };
  auto unknown = [&] {
    return AnalysisError(AnalysisError::Kind::UnknownFamily,
                         "no closed form for " + std::string(family_name(id)));
  };
  std::vector<double>& v = r.values;
  switch (id) {
    case FamilyId::DirectedCycle: {
      need(1);
      const int n = params[0];
      for (int k = 0; k < n; ++k) v.push_back(2 * std::sin(2 * pi * k / n));
      break;
    }
    case FamilyId::ReversedCycle: {
      need(1);
      const int n = params[0];
      for (int j = 0; j < n; ++j) v.push_back(2 * std::sin((2 * j + 1) * pi / n));
      break;
    }
    case FamilyId::Cycle: {
      need(1);
      const int n = params[0];
      for (int k = 0; k < n; ++k) v.push_back(2 * std::cos(2 * pi * k / n));
      break;
    }
    case FamilyId::DigonCycle: {
      need(1);
      if (params[0] != 4) throw unknown();
      for (double s : {1.0, -1.0})
        for (double u : {1.0, -1.0}) v.push_back(s * std::sqrt(2 + u * std::sqrt(2.0)));
      r.char_poly = Polynomial{2, 0, -4, 0, 1};
      break;
    }
    case FamilyId::ReversedDigonCycle: {
      need(1);
      if (params[0] != 5) throw unknown();
      const double s5 = std::sqrt(5.0);
      v = {-2, (1 + s5) / 2, (1 + s5) / 2, (1 - s5) / 2, (1 - s5) / 2};
      r.char_poly = Polynomial{2, 5, 0, -5, 0, 1};
      break;
    }
    case FamilyId::TransitiveTournament: {
      need(1);
      const int n = params[0];
      for (int j = 0; j < n; ++j) {
        double s = n % 2 == 0 ? (j % 2 == 0 ? 1.0 : -1.0) : 0.0;
        for (int k = 1; k <= (n - 1) / 2; ++k) s += 2 * std::sin(k * (2 * j + 1) * pi / n);
        v.push_back(s);
      }
      r.char_poly = tournament_char_poly(n);
      break;
    }
    case FamilyId::Xab: {
      need(2);
      const int a = params[0], b = params[1];
      const double d = std::sqrt(1.0 + 8.0 * a * b);
      v.push_back((-1 + d) / 2);
      v.push_back((-1 - d) / 2);
      v.insert(v.end(), a, 1.0);
      v.insert(v.end(), b - 1, 0.0);
      v.insert(v.end(), a - 1, -1.0);
      break;
    }
    case FamilyId::Necklace: {
      need(1);
      const int n = params[0];
      v.insert(v.end(), n, 2.0);
      v.insert(v.end(), n, 0.0);
      v.insert(v.end(), n, -2.0);
      break;
    }
    case FamilyId::Complete: {
      need(1);
      const int n = params[0];
      v.push_back(n - 1);
      v.insert(v.end(), n - 1, -1.0);
      break;
    }
    case FamilyId::Ykn: {
      need(2);
      const int n = params[0] + params[1];
      v.push_back(n - 1);
      v.insert(v.end(), n - 1, -1.0);
      break;
    }
    default:
      throw unknown();
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return r;
}

}  // namespace hermdig
