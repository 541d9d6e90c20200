#pragma once

// Independent reference implementations used as test oracles. Nothing here
// shares code with the library beyond the Digraph container.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hermdig/digraph.hpp"

namespace oracle {

using hermdig::Digraph;
using hermdig::PairState;

inline Digraph random_digraph(std::mt19937& rng, int n, double density = 0.5) {
  Digraph d(n);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> kind(1, 3);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < density) d.set_state(u, v, static_cast<PairState>(kind(rng)));
  return d;
}

/// Every labelled digraph of order n (4^(n(n-1)/2) of them).
inline std::vector<Digraph> all_labelled(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Digraph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * pairs)); ++code) {
    Digraph d(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++k) d.set_state(u, v, static_cast<PairState>((code >> (2 * k)) & 3));
    out.push_back(d);
  }
  return out;
}

/// Gaussian integer pair (re, im) entries of H written out from the
/// definition, independent of the library's builder.
using CInt = std::complex<long long>;

inline std::vector<std::vector<CInt>> h_entries(const Digraph& x) {
  const int n = x.order();
  std::vector<std::vector<CInt>> h(n, std::vector<CInt>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool uv = x.has_arc(u, v), vu = x.has_arc(v, u);
      if (uv && vu) h[u][v] = 1;
      else if (uv) h[u][v] = CInt(0, 1);
      else if (vu) h[u][v] = CInt(0, -1);
    }
  return h;
}

inline std::vector<std::vector<CInt>> a_entries(const Digraph& x) {
  const int n = x.order();
  std::vector<std::vector<CInt>> a(n, std::vector<CInt>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && x.has_arc(u, v)) a[u][v] = 1;
  return a;
}

inline int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// det(tI - M) from the principal-minor expansion: the coefficient of
/// t^(n-k) is (-1)^k times the sum of all k x k principal minors, each
/// minor expanded over permutations. Exact; practical for n <= 8.
inline std::vector<long long> char_poly_by_minors(const std::vector<std::vector<CInt>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<CInt> coeff(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) s.push_back(v);
    const int k = static_cast<int>(s.size());
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    CInt minor = 0;
    do {
      CInt term = permutation_sign(p);
      for (int i = 0; i < k && term != CInt(0); ++i) term *= m[s[i]][s[p[i]]];
      minor += term;
    } while (std::next_permutation(p.begin(), p.end()));
    coeff[n - k] += (k % 2 == 0 ? minor : -minor);
  }
  std::vector<long long> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (coeff[k].imag() != 0) throw std::logic_error("non-real coefficient");
    out[k] = coeff[k].real();
  }
  return out;
}

/// Eigen's own Hermitian solver, ascending.
inline Eigen::VectorXd eigen_reference(const Digraph& x) {
  const auto h = h_entries(x);
  const int n = x.order();
  Eigen::MatrixXcd m(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m(u, v) = {double(h[u][v].real()), double(h[u][v].imag())};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Descartes' rule: sign changes in the coefficient sequence bound the
/// positive roots and equal them when every root is real.
inline int sign_changes(const std::vector<long long>& ascending) {
  int changes = 0, last = 0;
  for (long long c : ascending) {
    if (c == 0) continue;
    const int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Isomorphism by trying every bijection.
inline bool brute_isomorphic(const Digraph& x, const Digraph& y) {
  if (x.order() != y.order()) return false;
  const int n = x.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (u != v && x.has_arc(u, v) != y.has_arc(p[u], p[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Digraph relabel(const Digraph& x, const std::vector<int>& to) {
  // vertex v of x becomes to[v]
  Digraph d(x.order());
  for (int u = 0; u < x.order(); ++u)
    for (int v = 0; v < x.order(); ++v)
      if (u != v && x.has_arc(u, v)) d.add_arc(to[u], to[v]);
  return d;
}

inline Digraph from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) d.add_arc(u, v);
  return d;
}

}  // namespace oracle
