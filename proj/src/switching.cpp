#include "hermdig/switching.hpp"

#include <algorithm>
#include <string>

#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"

namespace hermdig {

namespace {

std::vector<bool> membership(const Digraph& x, std::span<const Vertex> s) {
  std::vector<bool> in(x.order(), false);
  for (Vertex v : s) {
    if (v < 0 || v >= x.order()) throw SwitchError(SwitchError::Kind::BadSet, "vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  return in;
}

std::string list_pairs(const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::string s;
  for (auto [u, v] : pairs) s += (s.empty() ? "" : ", ") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

}  // namespace

Digraph local_reversal(const Digraph& x, std::span<const Vertex> s) {
  const auto in = membership(x, s);
  Digraph y = x;
  std::vector<std::pair<Vertex, Vertex>> bad;
  for (Vertex u = 0; u < x.order(); ++u)
    for (Vertex v = u + 1; v < x.order(); ++v) {
      if (in[u] == in[v]) continue;
      const PairState st = x.state(u, v);
      if (st == PairState::Digon) bad.emplace_back(u, v);
      else y.set_state(u, v, flipped(st));
    }
  if (!bad.empty())
    throw SwitchError(SwitchError::Kind::DigonInCut, "digons in the cut: " + list_pairs(bad), bad);
  return y;
}

Digraph digon_cut_replace(const Digraph& x, std::span<const Vertex> s) {
  const auto in = membership(x, s);
  Digraph y = x;
  std::vector<std::pair<Vertex, Vertex>> bad;
  for (Vertex u = 0; u < x.order(); ++u)
    for (Vertex v = u + 1; v < x.order(); ++v) {
      if (in[u] == in[v]) continue;
      const PairState st = x.state(u, v);
      if (st == PairState::None) continue;
      if (st != PairState::Digon) {
        bad.emplace_back(u, v);
        continue;
      }
      y.set_state(u, v, in[v] ? PairState::Fwd : PairState::Bwd);
    }
  if (!bad.empty())
    throw SwitchError(SwitchError::Kind::NonDigonInCut, "arcs in the cut: " + list_pairs(bad), bad);
  return y;
}

Gaussian unit(Quaternary q) {
  switch (q) {
    case Quaternary::One: return {1, 0};
    case Quaternary::MinusOne: return {-1, 0};
    case Quaternary::I: return {0, 1};
    case Quaternary::MinusI: return {0, -1};
  }
  return {};
}

Quaternary conjugate(Quaternary q) {
  switch (q) {
    case Quaternary::I: return Quaternary::MinusI;
    case Quaternary::MinusI: return Quaternary::I;
    default: return q;
  }
}

Quaternary from_unit(const Gaussian& g) {
  if (g == Gaussian{1, 0}) return Quaternary::One;
  if (g == Gaussian{-1, 0}) return Quaternary::MinusOne;
  if (g == Gaussian{0, 1}) return Quaternary::I;
  if (g == Gaussian{0, -1}) return Quaternary::MinusI;
  throw std::invalid_argument("not a unit of Z[i]");
}

Digraph four_way_switch(const Digraph& x, const QuaternaryPartition& p) {
  if (static_cast<int>(p.size()) != x.order())
    throw SwitchError(SwitchError::Kind::BadSet, "partition size does not match the order");
  const HermitianMatrix h = hermitian_matrix(x);
  Digraph y(x.order());
  for (Vertex u = 0; u < x.order(); ++u)
    for (Vertex v = u + 1; v < x.order(); ++v) {
      if (h(u, v).is_zero()) continue;
      // H'(u,v) = conj(s_u) H(u,v) s_v
      const Gaussian e = conj(unit(p[u])) * h(u, v) * unit(p[v]);
      if (e == Gaussian{1, 0}) y.set_state(u, v, PairState::Digon);
      else if (e == Gaussian{0, 1}) y.set_state(u, v, PairState::Fwd);
      else if (e == Gaussian{0, -1}) y.set_state(u, v, PairState::Bwd);
      else {
        const bool digon = x.state(u, v) == PairState::Digon;
        throw SwitchError(SwitchError::Kind::Inadmissible,
                          std::string(digon ? "condition (a): digon between opposite parts"
                                            : "condition (b): arc that must lie in a digon") +
                              " at " + std::to_string(u) + "-" + std::to_string(v),
                          {{u, v}});
      }
    }
  return y;
}

std::vector<Digraph> kn_cospectral_class(int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  const Digraph k = complete_digraph(n);
  std::vector<Digraph> out{k};
  for (int a = 1; a < n; ++a) {
    std::vector<Vertex> s;
    for (Vertex v = a; v < n; ++v) s.push_back(v);
    out.push_back(digon_cut_replace(k, s));
  }
  return out;
}

std::string_view cycle_form_name(CycleForm f) {
  switch (f) {
    case CycleForm::C: return "C";
    case CycleForm::CTilde: return "CTilde";
    case CycleForm::CTildePrime: return "CTildePrime";
    case CycleForm::CTildeDoublePrime: return "CTildeDoublePrime";
    case CycleForm::D: return "D";
  }
  return "?";
}

Digraph apply(const Digraph& x, const SwitchStep& step) {
  return step.op == SwitchStep::Op::LocalReversal ? local_reversal(x, step.set) : digon_cut_replace(x, step.set);
}

namespace {

// Vertices in cyclic order starting at 0, or empty if the underlying graph
// is not a cycle.
std::vector<Vertex> cyclic_order(const Digraph& x) {
  const int n = x.order();
  if (n < 3 || !is_weakly_connected(x)) return {};
  const auto deg = degree_profile(x);
  for (int d : deg.degree)
    if (d != 2) return {};
  std::vector<Vertex> order{0};
  Vertex prev = -1, cur = 0;
  while (static_cast<int>(order.size()) < n) {
    Vertex next = -1;
    for (Vertex w = 0; w < n && next < 0; ++w)
      if (w != cur && w != prev && x.adjacent(cur, w)) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace

CycleNormalForm cycle_normal_form(const Digraph& x) {
  std::vector<Vertex> c = cyclic_order(x);
  if (c.empty()) throw SwitchError(SwitchError::Kind::UnderlyingNotCycle, "underlying graph is not a cycle");
  const int n = x.order();
  CycleNormalForm out{CycleForm::C, Digraph(), x, {}};
  auto step = [&](SwitchStep::Op op, std::vector<Vertex> set) {
    std::sort(set.begin(), set.end());
    SwitchStep s{op, std::move(set)};
    out.normalized = apply(out.normalized, s);
    out.witness.push_back(std::move(s));
  };
  auto edge_state = [&](int k) { return out.normalized.state(c[k], c[(k + 1) % n]); };

  // pairs of digons become directed cuts
  for (;;) {
    std::vector<int> digons;
    for (int k = 0; k < n; ++k)
      if (edge_state(k) == PairState::Digon) digons.push_back(k);
    if (digons.size() < 2) break;
    std::vector<Vertex> seg(c.begin() + digons[0] + 1, c.begin() + digons[1] + 1);
    step(SwitchStep::Op::DigonCut, seg);
  }

  // put a remaining digon on the closing edge (c[n-1], c[0])
  int digon_edge = -1;
  for (int k = 0; k < n; ++k)
    if (edge_state(k) == PairState::Digon) digon_edge = k;
  if (digon_edge >= 0) std::rotate(c.begin(), c.begin() + (digon_edge + 1) % n, c.end());

  // sweep: make c[j-1] -> c[j] for each j whose next edge is an arc
  const int last = digon_edge >= 0 ? n - 2 : n - 1;
  for (int j = 1; j <= last; ++j)
    if (out.normalized.state(c[j], c[j - 1]) == PairState::Fwd) step(SwitchStep::Op::LocalReversal, {c[j]});

  // odd oriented cycle with the closing arc reversed: reverse at even positions
  if (digon_edge < 0 && n % 2 == 1 && out.normalized.state(c[0], c[n - 1]) == PairState::Fwd) {
    std::vector<Vertex> even;
    for (int j = 1; j < n; j += 2) even.push_back(c[j]);
    step(SwitchStep::Op::LocalReversal, even);
  }

  const CharPoly p = char_poly(out.normalized);
  const std::pair<CycleForm, Digraph> prime{CycleForm::CTildePrime, digon_cycle(n)};
  const std::pair<CycleForm, Digraph> double_prime{CycleForm::CTildeDoublePrime, reversed_digon_cycle(n)};
  const std::pair<CycleForm, Digraph> reps[] = {
      {CycleForm::C, cycle_digraph(n)},
      {CycleForm::CTilde, reversed_cycle(n)},
      n % 2 == 0 ? prime : double_prime,
      {CycleForm::D, directed_cycle(n)},
      n % 2 == 0 ? double_prime : prime,
  };
  for (const auto& [form, rep] : reps)
    if (char_poly(rep) == p) {
      out.form = form;
      out.representative = rep;
      return out;
    }
  throw std::logic_error("cycle digraph matches no normal form");
}

}  // namespace hermdig
