#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "hermdig/canonical.hpp"
#include "hermdig/digraph.hpp"
#include "hermdig/gaussian_int.hpp"
#include "hermdig/polynomial.hpp"

namespace hermdig {

/// Entries of H(X) lie in {0, 1, i, -i}, so 64-bit parts are plenty for
/// storage; arithmetic on powers and coefficients is promoted as needed.
using HermitianMatrix = GaussianMatrix<std::int64_t>;

enum class MatrixKind {
  Hermitian,   // H(X)
  Adjacency,   // A(X), 0/1 and not symmetric in general
  Underlying,  // A(Gamma(X))
};

HermitianMatrix hermitian_matrix(const Digraph& x);
GaussianMatrix<std::int64_t> adjacency_matrix(const Digraph& x);
GaussianMatrix<std::int64_t> underlying_matrix(const Digraph& x);
GaussianMatrix<std::int64_t> matrix_of(const Digraph& x, MatrixKind kind);

/// Complex double copy of an integer matrix.
Eigen::MatrixXcd to_complex(const GaussianMatrix<std::int64_t>& m);

/// Exact characteristic polynomial det(tI - M) by the Faddeev-LeVerrier
/// recurrence over Z[i]. Throws std::logic_error if a coefficient comes out
/// non-real or a division is inexact, which would mean an internal error.
CharPoly char_poly(const GaussianMatrix<std::int64_t>& m);

CharPoly char_poly(const Digraph& x, MatrixKind kind = MatrixKind::Hermitian);
inline CharPoly adjacency_char_poly(const Digraph& x) { return char_poly(x, MatrixKind::Adjacency); }
inline CharPoly underlying_char_poly(const Digraph& x) { return char_poly(x, MatrixKind::Underlying); }

/// Census fast path: ascending int64 coefficients.
std::vector<std::int64_t> char_poly_small(const SmallDigraph& g, MatrixKind kind);

/// (M^k)_{uv}, exact. Throws std::invalid_argument for k < 0.
BigGaussian power_entry(const HermitianMatrix& m, int k, Vertex u, Vertex v);

struct Spectrum {
  std::vector<double> values;       // all eigenvalues, descending
  std::vector<double> distinct;     // cluster means, descending
  std::vector<int> multiplicities;  // parallel to distinct
  int zero_mult = 0;                // exact, from the characteristic polynomial
  double tolerance = 1e-9;

  int size() const { return static_cast<int>(values.size()); }
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
/// symmetric embedding [[Re, -Im], [Im, Re]], descending. Throws
/// std::runtime_error if the sweep limit is reached.
std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXcd& h);

Spectrum eigenvalues(const HermitianMatrix& m, double tol = kDefaultTolerance);
Spectrum spectrum(const Digraph& x, double tol = kDefaultTolerance);

/// Clusters a descending list of eigenvalues; zero_mult values nearest 0 are
/// snapped to exactly 0.
Spectrum make_spectrum(std::vector<double> values, int zero_mult, double tol);

struct SpectralStats {
  double lambda1 = 0;
  double lambda_n = 0;
  double rho = 0;
  int eta_plus = 0;   // non-negative eigenvalues, exact
  int eta_minus = 0;  // non-positive eigenvalues, exact
  int zero_mult = 0;
  bool symmetric_about_zero = false;
};

SpectralStats spectral_stats(const Digraph& x);

/// Exact test: c_k = 0 whenever deg - k is odd.
bool symmetric_about_zero(const CharPoly& p);
/// Exact non-negative / non-positive root counts with multiplicity.
int eta_plus(const CharPoly& p);
int eta_minus(const CharPoly& p);

}  // namespace hermdig
