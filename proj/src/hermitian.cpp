#include "hermdig/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hermdig {

namespace {

const Gaussian kI{0, 1};
const Gaussian kMinusI{0, -1};

template <class Fn>
GaussianMatrix<std::int64_t> build(const Digraph& x, Fn entry) {
  const int n = x.order();
  GaussianMatrix<std::int64_t> m = GaussianMatrix<std::int64_t>::Constant(n, n, Gaussian{});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) m(u, v) = entry(x.state(u, v));
  return m;
}

}  // namespace

HermitianMatrix hermitian_matrix(const Digraph& x) {
  return build(x, [](PairState s) {
    switch (s) {
      case PairState::Fwd: return kI;
      case PairState::Bwd: return kMinusI;
      case PairState::Digon: return Gaussian{1, 0};
      default: return Gaussian{};
    }
  });
}

GaussianMatrix<std::int64_t> adjacency_matrix(const Digraph& x) {
  return build(x, [](PairState s) {
    return (s == PairState::Fwd || s == PairState::Digon) ? Gaussian{1, 0} : Gaussian{};
  });
}

GaussianMatrix<std::int64_t> underlying_matrix(const Digraph& x) {
  return build(x, [](PairState s) { return s != PairState::None ? Gaussian{1, 0} : Gaussian{}; });
}

GaussianMatrix<std::int64_t> matrix_of(const Digraph& x, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Hermitian: return hermitian_matrix(x);
    case MatrixKind::Adjacency: return adjacency_matrix(x);
    case MatrixKind::Underlying: return underlying_matrix(x);
  }
  throw std::invalid_argument("unknown matrix kind");
}

Eigen::MatrixXcd to_complex(const GaussianMatrix<std::int64_t>& m) {
  Eigen::MatrixXcd c(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      c(i, j) = {static_cast<double>(m(i, j).re), static_cast<double>(m(i, j).im)};
  return c;
}

namespace {

struct Entry {
  int col;
  std::int64_t re, im;
};

using SparseRows = std::vector<std::vector<Entry>>;

SparseRows sparse_rows(const GaussianMatrix<std::int64_t>& m) {
  SparseRows rows(m.rows());
  for (Eigen::Index u = 0; u < m.rows(); ++u)
    for (Eigen::Index v = 0; v < m.cols(); ++v)
      if (!m(u, v).is_zero()) rows[u].push_back({static_cast<int>(v), m(u, v).re, m(u, v).im});
  return rows;
}

// acc += (re + im i) * (xr + xi i), with additions only for unit factors
template <class Int>
inline void mul_add(Int& ar, Int& ai, const Entry& e, const Int& xr, const Int& xi) {
  if (e.im == 0) {
    if (e.re == 1) { ar += xr; ai += xi; return; }
    if (e.re == -1) { ar -= xr; ai -= xi; return; }
  } else if (e.re == 0) {
    if (e.im == 1) { ar -= xi; ai += xr; return; }
    if (e.im == -1) { ar += xi; ai -= xr; return; }
  }
  ar += xr * Int(e.re) - xi * Int(e.im);
  ai += xr * Int(e.im) + xi * Int(e.re);
}

template <class Int>
std::vector<Int> faddeev_leverrier(const SparseRows& rows) {
  const int n = static_cast<int>(rows.size());
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  std::vector<Int> mr(nn, Int(0)), mi(nn, Int(0));  // M_k
  std::vector<Int> nr(nn, Int(0)), ni(nn, Int(0));
  std::vector<Int> coeff(n + 1, Int(0));
  coeff[n] = 1;
  Int cr = 1, ci = 0;  // c_{n-k+1}
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c I
    std::fill(nr.begin(), nr.end(), Int(0));
    std::fill(ni.begin(), ni.end(), Int(0));
    for (int u = 0; u < n; ++u)
      for (const Entry& e : rows[u]) {
        const std::size_t src = static_cast<std::size_t>(e.col) * n;
        const std::size_t dst = static_cast<std::size_t>(u) * n;
        for (int v = 0; v < n; ++v) mul_add(nr[dst + v], ni[dst + v], e, mr[src + v], mi[src + v]);
      }
    for (int u = 0; u < n; ++u) {
      nr[static_cast<std::size_t>(u) * n + u] += cr;
      ni[static_cast<std::size_t>(u) * n + u] += ci;
    }
    std::swap(mr, nr);
    std::swap(mi, ni);
    // c_{n-k} = -tr(A M_k) / k
    Int tr = 0, ti = 0;
    for (int u = 0; u < n; ++u)
      for (const Entry& e : rows[u]) {
        const std::size_t at = static_cast<std::size_t>(e.col) * n + u;
        mul_add(tr, ti, e, mr[at], mi[at]);
      }
    if (tr % k != 0 || ti % k != 0) throw std::logic_error("inexact division in Faddeev-LeVerrier");
    cr = -tr / k;
    ci = -ti / k;
    if (ci != 0) throw std::logic_error("characteristic polynomial has a non-real coefficient");
    coeff[n - k] = cr;
  }
  return coeff;
}

// Every |entry| <= 1 keeps the intermediates of order n <= 12 below 2^62.
constexpr int kInt64Order = 12;

bool unit_entries(const SparseRows& rows) {
  for (const auto& r : rows)
    for (const Entry& e : r)
      if (std::abs(e.re) + std::abs(e.im) > 1) return false;
  return true;
}

}  // namespace

CharPoly char_poly(const GaussianMatrix<std::int64_t>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const SparseRows rows = sparse_rows(m);
  if (m.rows() <= kInt64Order && unit_entries(rows)) {
    const auto c = faddeev_leverrier<std::int64_t>(rows);
    return CharPoly(std::vector<BigInt>(c.begin(), c.end()));
  }
  return CharPoly(faddeev_leverrier<BigInt>(rows));
}

CharPoly char_poly(const Digraph& x, MatrixKind kind) { return char_poly(matrix_of(x, kind)); }

std::vector<std::int64_t> char_poly_small(const SmallDigraph& g, MatrixKind kind) {
  SparseRows rows(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      const auto s = static_cast<PairState>(g.rel[u][v]);
      if (s == PairState::None) continue;
      switch (kind) {
        case MatrixKind::Hermitian:
          if (s == PairState::Digon) rows[u].push_back({v, 1, 0});
          else rows[u].push_back({v, 0, s == PairState::Fwd ? 1 : -1});
          break;
        case MatrixKind::Adjacency:
          if (s != PairState::Bwd) rows[u].push_back({v, 1, 0});
          break;
        case MatrixKind::Underlying:
          rows[u].push_back({v, 1, 0});
          break;
      }
    }
  return faddeev_leverrier<std::int64_t>(rows);
}

BigGaussian power_entry(const HermitianMatrix& m, int k, Vertex u, Vertex v) {
  if (k < 0) throw std::invalid_argument("negative matrix power");
  const int n = static_cast<int>(m.rows());
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex out of range");
  // row vector e_u^T M^k
  std::vector<BigGaussian> row(n), next(n);
  row[u] = BigGaussian(1);
  for (int step = 0; step < k; ++step) {
    std::fill(next.begin(), next.end(), BigGaussian{});
    for (int w = 0; w < n; ++w) {
      if (row[w].is_zero()) continue;
      for (int t = 0; t < n; ++t)
        if (!m(w, t).is_zero()) next[t] += row[w] * BigGaussian(m(w, t));
    }
    std::swap(row, next);
  }
  return row[v];
}

std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  const Eigen::Index N = 2 * n;
  Eigen::MatrixXd a(N, N);
  a.topLeftCorner(n, n) = h.real();
  a.topRightCorner(n, n) = -h.imag();
  a.bottomLeftCorner(n, n) = h.imag();
  a.bottomRightCorner(n, n) = h.real();

  constexpr int kMaxSweeps = 100;
  constexpr double kThreshold = 1e-12;
  int sweep = 0;
  for (;; ++sweep) {
    double off = 0;
    for (Eigen::Index p = 0; p < N; ++p)
      for (Eigen::Index q = p + 1; q < N; ++q) off += 2 * a(p, q) * a(p, q);
    if (std::sqrt(off) < kThreshold) break;
    if (sweep == kMaxSweeps) throw std::runtime_error("Jacobi eigenvalue iteration did not converge");
    for (Eigen::Index p = 0; p < N; ++p)
      for (Eigen::Index q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (Eigen::Index k = 0; k < N; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < N; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> doubled(N);
  for (Eigen::Index k = 0; k < N; ++k) doubled[k] = a(k, k);
  std::sort(doubled.begin(), doubled.end(), std::greater<>());
  std::vector<double> values(n);
  for (Eigen::Index k = 0; k < n; ++k) values[k] = doubled[2 * k];
  return values;
}

Spectrum make_spectrum(std::vector<double> values, int zero_mult, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::sort(values.begin(), values.end(), std::greater<>());
  if (zero_mult > 0) {
    std::vector<std::size_t> idx(values.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::partial_sort(idx.begin(), idx.begin() + zero_mult, idx.end(),
                      [&](std::size_t a, std::size_t b) { return std::abs(values[a]) < std::abs(values[b]); });
    for (int k = 0; k < zero_mult; ++k) values[idx[k]] = 0.0;
    std::sort(values.begin(), values.end(), std::greater<>());
  }
  Spectrum s;
  s.values = values;
  s.zero_mult = zero_mult;
  s.tolerance = tol;
  for (std::size_t k = 0; k < values.size();) {
    std::size_t j = k + 1;
    double sum = values[k];
    while (j < values.size() && values[j - 1] - values[j] <= tol) sum += values[j++];
    s.distinct.push_back(sum / static_cast<double>(j - k));
    s.multiplicities.push_back(static_cast<int>(j - k));
    k = j;
  }
  return s;
}

Spectrum eigenvalues(const HermitianMatrix& m, double tol) {
  return make_spectrum(jacobi_eigenvalues(to_complex(m)), zero_multiplicity(char_poly(m)), tol);
}

Spectrum spectrum(const Digraph& x, double tol) { return eigenvalues(hermitian_matrix(x), tol); }

bool symmetric_about_zero(const CharPoly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if ((p.degree() - k) % 2 == 1 && p.coeffs()[k] != 0) return false;
  return true;
}

int eta_plus(const CharPoly& p) {
  const int z = zero_multiplicity(p);
  return z + count_positive_roots(shift_down(p, z));
}

int eta_minus(const CharPoly& p) {
  const int z = zero_multiplicity(p);
  return z + count_negative_roots(shift_down(p, z));
}

SpectralStats spectral_stats(const Digraph& x) {
  const HermitianMatrix h = hermitian_matrix(x);
  const CharPoly p = char_poly(h);
  SpectralStats st;
  if (x.order() == 0) {
    st.symmetric_about_zero = true;
    return st;
  }
  const Spectrum s = make_spectrum(jacobi_eigenvalues(to_complex(h)), zero_multiplicity(p), kDefaultTolerance);
  st.lambda1 = s.values.front();
  st.lambda_n = s.values.back();
  st.rho = std::max(std::abs(st.lambda1), std::abs(st.lambda_n));
  st.zero_mult = s.zero_mult;
  st.eta_plus = eta_plus(p);
  st.eta_minus = eta_minus(p);
  st.symmetric_about_zero = symmetric_about_zero(p);
  return st;
}

}  // namespace hermdig
