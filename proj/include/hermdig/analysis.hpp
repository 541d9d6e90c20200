#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hermdig/digraph.hpp"
#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/polynomial.hpp"
#include "hermdig/switching.hpp"

namespace hermdig {

class AnalysisError : public std::invalid_argument {
 public:
  enum class Kind { DimensionMismatch, HasDigon, InvalidPartition, NotWeaklyConnected, EmptyDigraph, UnknownFamily };
  AnalysisError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// True iff lambda_s >= kappa_s >= lambda_{s+t} for s = 1..n-t, with
/// t = n - |child|. Throws DimensionMismatch if the child is larger.
bool check_interlacing(const Spectrum& parent, const Spectrum& child, double tol = kDefaultTolerance);
bool check_interlacing(const std::vector<double>& parent, const std::vector<double>& child,
                       double tol = kDefaultTolerance);

struct EtaBounds {
  int digon_free = 0;  // largest vertex set spanning no digon
  int alpha = 0;       // independence number of the underlying graph
  int eta_plus = 0;
  int eta_minus = 0;
  bool digon_free_bound = false;  // both eta >= ceil(digon_free / 2)
  bool alpha_bound = false;       // both eta >= alpha
  bool ok() const { return digon_free_bound && alpha_bound; }
};

/// Exact branch and bound, exponential in n; limited to n <= 64.
EtaBounds eta_bounds_check(const Digraph& x);

/// Size of a maximum independent set of g.
int independence_number(const Graph& g);

struct TournamentBound {
  double lambda1 = 0;
  double bound = 0;  // cot(pi / 2n)
  bool tight = false;
  bool ok = false;   // lambda1 <= bound
};

/// Throws HasDigon for a digraph that is not oriented.
TournamentBound tournament_bound_check(const Digraph& x, double tol = kDefaultTolerance);

/// Quotient of H(X) for a vertex partition. B(j, k) is the average row sum
/// of block (j, k), stored exactly as block_sums(j, k) / sizes[j].
struct PartitionQuotient {
  std::vector<std::vector<Vertex>> partition;
  GaussianMatrix<std::int64_t> block_sums;
  std::vector<int> sizes;
  bool equitable = false;
  std::vector<double> eigenvalues;  // of B, descending
  bool interlaces = false;          // eigenvalues of B interlace those of H
  bool contained = false;           // equitable: every B-eigenvalue is an H-eigenvalue with
                                    // at least its multiplicity (vacuously true otherwise)

  Eigen::MatrixXcd matrix() const;
  std::complex<double> entry(int j, int k) const;
};

/// Throws InvalidPartition unless the blocks are nonempty and partition V.
PartitionQuotient quotient(const Digraph& x, const std::vector<std::vector<Vertex>>& blocks,
                           double tol = kDefaultTolerance);

struct RadiusCertificate {
  enum class Kind { PositiveEquality, NegativeEquality, NoEquality };
  Kind kind = Kind::NoEquality;
  QuaternaryPartition partition;  // empty for NoEquality
  int delta = 0;
  double rho = 0;
};

std::string_view radius_kind_name(RadiusCertificate::Kind k);

/// Decides rho(X) = Delta(Gamma(X)) exactly from the characteristic
/// polynomial and, on equality, recovers the vertex labels by propagation
/// from vertex 0. Throws NotWeaklyConnected.
RadiusCertificate radius_certificate(const Digraph& x);

/// Arc-type constraints of the positive (labels L, digon neighbours L,
/// out-neighbours -iL) or negative (digon -L, out-neighbours iL) equality
/// case.
bool satisfies_radius_partition(const Digraph& x, const QuaternaryPartition& p, RadiusCertificate::Kind kind);

struct RadiusInequalities {
  double rho = 0;
  double lambda1 = 0;
  double rho_underlying = 0;
  bool ok = false;  // lambda1 <= rho <= 3 lambda1 and rho <= rho_underlying
};

/// Throws EmptyDigraph for a digraph with no arcs.
RadiusInequalities radius_inequalities(const Digraph& x, double tol = kDefaultTolerance);

struct SymmetricConditions {
  bool bipartite = false;
  bool oriented = false;
  bool odd_cycle_digon_parity = false;  // every odd cycle of Gamma has an even number of digons
  bool spectrum_symmetric = false;
  bool consistent() const {
    return spectrum_symmetric || !(bipartite || oriented || odd_cycle_digon_parity);
  }
};

/// Odd-cycle parity walks every simple cycle of the underlying graph, so
/// the cost is exponential in dense digraphs.
SymmetricConditions symmetric_sufficient_conditions(const Digraph& x);

/// Smallest bound on the spectrum that applies: PM1 (spectrum in {-1, 1}),
/// LT_SQRT2 (in (-sqrt2, sqrt2)), LT_SQRT3, NONE.
enum class RadiusClass { PM1, LT_SQRT2, LT_SQRT3, NONE };

std::string_view radius_class_name(RadiusClass c);

/// From the exact characteristic polynomial.
RadiusClass spectral_radius_class(const Digraph& x);
/// From the component structure.
RadiusClass structural_radius_class(const Digraph& x);

struct SmallRadiusReport {
  RadiusClass spectral = RadiusClass::NONE;
  RadiusClass structural = RadiusClass::NONE;
  bool agree() const { return spectral == structural; }
};

SmallRadiusReport classify_small_radius(const Digraph& x);

/// True iff every root of p lies in (-a, a) where a^2 = a_squared.
bool roots_within(const Polynomial& p, long long a_squared);

/// The two strongly connected two-digon digraphs on C4 cospectral with
/// CTilde 4, in canonical form.
const std::vector<Digraph>& two_digon_c4_references();

struct ClosedFormSpectrum {
  FamilyId family;
  std::vector<int> params;
  std::vector<double> values;  // descending
  Polynomial char_poly;        // set where a closed form is known, else zero
};

/// Closed-form spectra for DirectedCycle, ReversedCycle, DigonCycle (n = 4),
/// TransitiveTournament, Xab, Necklace, Complete (the Kn class), Cycle and
/// the three C5 spectra. Throws UnknownFamily otherwise.
ClosedFormSpectrum closed_form_spectrum(FamilyId id, std::span<const int> params);

/// sum_j (-1)^j C(n, 2j) t^(n - 2j)
Polynomial tournament_char_poly(int n);

}  // namespace hermdig
