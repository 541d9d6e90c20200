#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hermdig/digraph.hpp"

namespace hermdig {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named digraph families. Vertex numbering is fixed:
///
///   DirectedCycle n          arcs k -> k+1 (mod n), n >= 3
///   ReversedCycle n          directed cycle with the arc n-1 -> 0 reversed
///   DigonCycle n             directed cycle with the arc n-1 -> 0 made a digon
///   ReversedDigonCycle n     directed cycle with n-2 -> n-1 reversed and
///                            n-1 -> 0 made a digon
///   Necklace n               v_j = j (0 <= j < 2n), w_k = 2n + k; arcs
///                            v_j -> v_{j+1}, v_{2k} -> w_k, v_{2k+2} -> w_k
///   Xab a b                  x_j = j, y_j = a + j, z_l = 2a + l; digons
///                            {x_j, y_j}, arcs x_j -> z_l -> y_j
///   Ykn a b                  digon cliques on 0..a-1 and a..a+b-1, all arcs
///                            from the first clique to the second
///   K3Prime                  digon {1,2}, arcs 1 -> 0 -> 2
///   K4Prime                  digons {0,2},{1,3}, arcs 1 -> 0 -> 3 -> 2 -> 1
///   TransitiveTournament n   arcs i -> j for i < j
///   Complete n, Cycle n, Path n, Star m (centre 0, leaves 1..m), Empty n:
///                            digraphs of the corresponding graphs
enum class FamilyId {
  DirectedCycle,
  ReversedCycle,
  DigonCycle,
  ReversedDigonCycle,
  Necklace,
  Xab,
  Ykn,
  K3Prime,
  K4Prime,
  TransitiveTournament,
  Complete,
  Cycle,
  Path,
  Star,
  Empty,
};

Digraph family(FamilyId id, std::span<const int> params = {});

/// Parses "Name" or "Name:p1,p2". Accepted names include D, CTilde,
/// CTildePrime, CTildeDoublePrime, Necklace (N), Xab (X), Y, K3prime,
/// K4prime, T, K, C, P, Star, E.
Digraph family_from_spec(std::string_view spec);

std::string_view family_name(FamilyId id);
std::vector<std::string_view> family_names();

inline Digraph directed_cycle(int n) { const int p[] = {n}; return family(FamilyId::DirectedCycle, p); }
inline Digraph reversed_cycle(int n) { const int p[] = {n}; return family(FamilyId::ReversedCycle, p); }
inline Digraph digon_cycle(int n) { const int p[] = {n}; return family(FamilyId::DigonCycle, p); }
inline Digraph reversed_digon_cycle(int n) { const int p[] = {n}; return family(FamilyId::ReversedDigonCycle, p); }
inline Digraph necklace(int n) { const int p[] = {n}; return family(FamilyId::Necklace, p); }
inline Digraph x_ab(int a, int b) { const int p[] = {a, b}; return family(FamilyId::Xab, p); }
inline Digraph y_kn(int a, int b) { const int p[] = {a, b}; return family(FamilyId::Ykn, p); }
inline Digraph k3_prime() { return family(FamilyId::K3Prime); }
inline Digraph k4_prime() { return family(FamilyId::K4Prime); }
inline Digraph transitive_tournament(int n) { const int p[] = {n}; return family(FamilyId::TransitiveTournament, p); }
inline Digraph complete_digraph(int n) { const int p[] = {n}; return family(FamilyId::Complete, p); }
inline Digraph cycle_digraph(int n) { const int p[] = {n}; return family(FamilyId::Cycle, p); }
inline Digraph path_digraph(int n) { const int p[] = {n}; return family(FamilyId::Path, p); }
inline Digraph star_digraph(int leaves) { const int p[] = {leaves}; return family(FamilyId::Star, p); }
inline Digraph empty_digraph(int n) { const int p[] = {n}; return family(FamilyId::Empty, p); }

}  // namespace hermdig
