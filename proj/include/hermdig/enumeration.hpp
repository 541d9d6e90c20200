#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermdig/canonical.hpp"
#include "hermdig/digraph.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/polynomial.hpp"

namespace hermdig {

/// Generation is exhaustive in the number of one-vertex extensions, so
/// n = 6 takes seconds and n = 7 is out of practical reach.
inline constexpr int kMaxEnumerationOrder = 7;

class EnumerationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical codes (see canonical_code) of one digraph per isomorphism
/// class of order n, sorted ascending. Each representative of order n - 1
/// is extended by every pair-state assignment to a new vertex; the results
/// are canonicalised and deduplicated. `jobs` worker threads split the
/// parents. Throws EnumerationError unless 1 <= n <= kMaxEnumerationOrder.
std::vector<std::uint64_t> nonisomorphic_codes(int n, int jobs = 1);

/// The same representatives as digraphs in canonical form.
std::vector<Digraph> generate_nonisomorphic(int n, int jobs = 1);

Digraph from_code(int n, std::uint64_t code);

/// Every pair of a labelled digraph is a digon.
bool code_is_graph(int n, std::uint64_t code);

struct CospectralClass {
  CharPoly key;
  std::vector<std::uint64_t> members;  // canonical codes, ascending
  bool contains_graph = false;
  bool all_graphs = false;
  bool irreducible = false;
  bool squarefree = false;

  int size() const { return static_cast<int>(members.size()); }
};

struct CensusRow {
  int n = 0;
  long long digraph_count = 0;
  int distinct_charpolys = 0;
  int irreducible_classes = 0;
  int squarefree_classes = 0;
  int max_class_size = 0;
  int determined_by_spectrum = 0;  // classes of size one
  int classes_no_graphs = 0;
  int classes_only_graphs = 0;
  int classes_mixed = 0;
  // Same two properties counted over digraphs instead of classes.
  long long irreducible_digraphs = 0;
  long long squarefree_digraphs = 0;
};

struct Census {
  int n = 0;
  MatrixKind kind = MatrixKind::Hermitian;
  CensusRow row;
  std::vector<CospectralClass> classes;  // ordered by key
};

/// kind is Hermitian or Adjacency.
Census census(int n, MatrixKind kind, int jobs = 1);
/// Census over a precomputed list of representatives.
Census census_of(int n, MatrixKind kind, const std::vector<std::uint64_t>& codes, int jobs = 1);

const CospectralClass* find_class(const Census& c, const CharPoly& key);

/// A class whose members include a strongly connected digraph, a weakly
/// but not strongly connected one and a disconnected one.
struct ConnectivityTriple {
  CharPoly key;
  Digraph strong, weak, disconnected;
};

std::vector<ConnectivityTriple> connectivity_demo(const Census& h_census);

/// Classes holding two members with non-isomorphic underlying graphs.
int classes_with_distinct_underlying(const Census& h_census);

struct ClassificationReport {
  int n = 0;
  // Digraphs of order n with spectrum {-(n-1), 1^(n-1)}.
  std::vector<Digraph> extremal;
  bool extremal_ok = false;
  // Members of the class of the complete digraph.
  int kn_class_size = 0;
  bool kn_class_ok = false;
  // Order-3 table (only evaluated for n = 3).
  bool order3_ok = true;
  // Cycle tables: every orientation of C_n lands on one of the three
  // printed polynomials and each polynomial is attained (n = 4, 5).
  bool cycle_table_ok = true;
  std::vector<std::string> messages;

  bool ok() const { return extremal_ok && kn_class_ok && order3_ok && cycle_table_ok; }
};

ClassificationReport verify_classification(const Census& h_census);

/// The order-3 table, each row a polynomial with its members.
std::vector<std::pair<CharPoly, std::vector<Digraph>>> order3_table();

}  // namespace hermdig
