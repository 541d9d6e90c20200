#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermdig/digraph.hpp"
#include "hermdig/gaussian_int.hpp"

namespace hermdig {

class SwitchError : public std::invalid_argument {
 public:
  enum class Kind { DigonInCut, NonDigonInCut, Inadmissible, UnderlyingNotCycle, BadSet };

  SwitchError(Kind kind, const std::string& what, std::vector<std::pair<Vertex, Vertex>> pairs = {})
      : std::invalid_argument(what), kind_(kind), pairs_(std::move(pairs)) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending vertex pairs, where applicable.
  const std::vector<std::pair<Vertex, Vertex>>& pairs() const noexcept { return pairs_; }

 private:
  Kind kind_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

/// Reverses every arc with exactly one end in S. The cut must hold no digon.
Digraph local_reversal(const Digraph& x, std::span<const Vertex> s);

/// Replaces every digon with exactly one end in S by the arc pointing into
/// S. The cut must consist of digons only.
Digraph digon_cut_replace(const Digraph& x, std::span<const Vertex> s);

enum class Quaternary : std::uint8_t { One, MinusOne, I, MinusI };

Gaussian unit(Quaternary q);
Quaternary conjugate(Quaternary q);
Quaternary from_unit(const Gaussian& g);

/// Label per vertex.
using QuaternaryPartition = std::vector<Quaternary>;

/// The digraph whose Hermitian matrix is S^-1 H S for S = diag(labels).
/// Throws SwitchError::Inadmissible naming the first pair that would get
/// the entry -1.
Digraph four_way_switch(const Digraph& x, const QuaternaryPartition& p);

/// The complete digraph followed by Y(a, n-a) for a = 1..n-1, each obtained
/// from the complete digraph by a digon cut.
std::vector<Digraph> kn_cospectral_class(int n);

/// The three H-spectra on an n-cycle are told apart by Re of the product
/// of H-entries around the cycle (1, 0 or -1). C, CTilde and CTildePrime
/// (even n) or CTildeDoublePrime (odd n) are preferred as representatives,
/// but they miss a class when n = 2 or 3 mod 4, so D and the other digon
/// form are also used.
enum class CycleForm {
  C,                  // digraph of the n-cycle
  CTilde,             // directed cycle with one arc reversed
  CTildePrime,        // directed cycle with one arc made a digon
  CTildeDoublePrime,  // one arc reversed and the next made a digon
  D,                  // directed cycle
};

std::string_view cycle_form_name(CycleForm f);

struct SwitchStep {
  enum class Op { LocalReversal, DigonCut };
  Op op;
  std::vector<Vertex> set;
};

struct CycleNormalForm {
  CycleForm form;
  Digraph representative;  // family member with the tagged form
  Digraph normalized;      // x after applying the witness steps
  std::vector<SwitchStep> witness;
};

/// Reduces a digraph whose underlying graph is a cycle by digon cuts and
/// local reversals, then tags it by exact comparison of characteristic
/// polynomials with the representatives of the normal forms.
CycleNormalForm cycle_normal_form(const Digraph& x);

Digraph apply(const Digraph& x, const SwitchStep& step);

}  // namespace hermdig
