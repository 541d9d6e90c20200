#include "hermdig/families.hpp"

#include <array>
#include <charconv>
#include <utility>

namespace hermdig {

namespace {

struct FamilyInfo {
  FamilyId id;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<FamilyInfo, 15> kFamilies{{
    {FamilyId::DirectedCycle, "D", 1},
    {FamilyId::ReversedCycle, "CTilde", 1},
    {FamilyId::DigonCycle, "CTildePrime", 1},
    {FamilyId::ReversedDigonCycle, "CTildeDoublePrime", 1},
    {FamilyId::Necklace, "Necklace", 1},
    {FamilyId::Xab, "Xab", 2},
    {FamilyId::Ykn, "Y", 2},
    {FamilyId::K3Prime, "K3prime", 0},
    {FamilyId::K4Prime, "K4prime", 0},
    {FamilyId::TransitiveTournament, "T", 1},
    {FamilyId::Complete, "K", 1},
    {FamilyId::Cycle, "C", 1},
    {FamilyId::Path, "P", 1},
    {FamilyId::Star, "Star", 1},
    {FamilyId::Empty, "E", 1},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kAliases{{
    {"N", "Necklace"},
    {"X", "Xab"},
    {"Tournament", "T"},
}};

const FamilyInfo& info(FamilyId id) {
  for (const auto& f : kFamilies)
    if (f.id == id) return f;
  throw FamilyError("unknown family");
}

void require(bool ok, std::string_view name, const char* what) {
  if (!ok) throw FamilyError(std::string(name) + ": " + what);
}

Digraph cycle_base(int n) {
  Digraph d(n);
  for (int k = 0; k < n; ++k) d.set_state(k, (k + 1) % n, PairState::Fwd);
  return d;
}

}  // namespace

std::string_view family_name(FamilyId id) { return info(id).name; }

std::vector<std::string_view> family_names() {
  std::vector<std::string_view> out;
  for (const auto& f : kFamilies) out.push_back(f.name);
  return out;
}

Digraph family(FamilyId id, std::span<const int> params) {
  const FamilyInfo& fi = info(id);
  require(params.size() == fi.arity, fi.name, "wrong number of parameters");
  const int p0 = params.empty() ? 0 : params[0];

  switch (id) {
    case FamilyId::DirectedCycle:
      require(p0 >= 3, fi.name, "needs n >= 3");
      return cycle_base(p0);
    case FamilyId::ReversedCycle: {
      require(p0 >= 3, fi.name, "needs n >= 3");
      Digraph d = cycle_base(p0);
      d.set_state(0, p0 - 1, PairState::Fwd);
      return d;
    }
    case FamilyId::DigonCycle: {
      require(p0 >= 3, fi.name, "needs n >= 3");
      Digraph d = cycle_base(p0);
      d.set_state(0, p0 - 1, PairState::Digon);
      return d;
    }
    case FamilyId::ReversedDigonCycle: {
      require(p0 >= 3, fi.name, "needs n >= 3");
      Digraph d = cycle_base(p0);
      d.set_state(p0 - 1, p0 - 2, PairState::Fwd);
      d.set_state(0, p0 - 1, PairState::Digon);
      return d;
    }
    case FamilyId::Necklace: {
      require(p0 >= 3, fi.name, "needs n >= 3");
      const int n = p0;
      Digraph d(3 * n);
      for (int j = 0; j < 2 * n; ++j) d.set_state(j, (j + 1) % (2 * n), PairState::Fwd);
      for (int k = 0; k < n; ++k) {
        d.set_state(2 * k, 2 * n + k, PairState::Fwd);
        d.set_state((2 * k + 2) % (2 * n), 2 * n + k, PairState::Fwd);
      }
      return d;
    }
    case FamilyId::Xab: {
      const int a = params[0], b = params[1];
      require(a >= 1 && b >= 1, fi.name, "needs a, b >= 1");
      Digraph d(2 * a + b);
      for (int j = 0; j < a; ++j) {
        d.add_digon(j, a + j);
        for (int l = 0; l < b; ++l) {
          d.set_state(j, 2 * a + l, PairState::Fwd);
          d.set_state(2 * a + l, a + j, PairState::Fwd);
        }
      }
      return d;
    }
    case FamilyId::Ykn: {
      const int a = params[0], b = params[1];
      require(a >= 1 && b >= 1, fi.name, "needs a, b >= 1");
      Digraph d(a + b);
      for (int u = 0; u < a + b; ++u)
        for (int v = u + 1; v < a + b; ++v)
          d.set_state(u, v, (u < a && v >= a) ? PairState::Fwd : PairState::Digon);
      return d;
    }
    case FamilyId::K3Prime: {
      Digraph d(3);
      d.add_digon(1, 2);
      d.set_state(1, 0, PairState::Fwd);
      d.set_state(0, 2, PairState::Fwd);
      return d;
    }
    case FamilyId::K4Prime: {
      Digraph d(4);
      d.add_digon(0, 2);
      d.add_digon(1, 3);
      d.set_state(1, 0, PairState::Fwd);
      d.set_state(0, 3, PairState::Fwd);
      d.set_state(3, 2, PairState::Fwd);
      d.set_state(2, 1, PairState::Fwd);
      return d;
    }
    case FamilyId::TransitiveTournament: {
      require(p0 >= 1, fi.name, "needs n >= 1");
      Digraph d(p0);
      for (int u = 0; u < p0; ++u)
        for (int v = u + 1; v < p0; ++v) d.set_state(u, v, PairState::Fwd);
      return d;
    }
    case FamilyId::Complete: {
      require(p0 >= 1, fi.name, "needs n >= 1");
      Digraph d(p0);
      for (int u = 0; u < p0; ++u)
        for (int v = u + 1; v < p0; ++v) d.add_digon(u, v);
      return d;
    }
    case FamilyId::Cycle: {
      require(p0 >= 3, fi.name, "needs n >= 3");
      Digraph d(p0);
      for (int k = 0; k < p0; ++k) d.add_digon(k, (k + 1) % p0);
      return d;
    }
    case FamilyId::Path: {
      require(p0 >= 1, fi.name, "needs n >= 1");
      Digraph d(p0);
      for (int k = 0; k + 1 < p0; ++k) d.add_digon(k, k + 1);
      return d;
    }
    case FamilyId::Star: {
      require(p0 >= 1, fi.name, "needs at least one leaf");
      Digraph d(p0 + 1);
      for (int k = 1; k <= p0; ++k) d.add_digon(0, k);
      return d;
    }
    case FamilyId::Empty:
      require(p0 >= 0, fi.name, "needs n >= 0");
      return Digraph(p0);
  }
  throw FamilyError("unknown family");
}

Digraph family_from_spec(std::string_view spec) {
  std::string_view name = spec;
  std::vector<int> params;
  if (const auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw FamilyError("bad family parameter '" + std::string(tok) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  for (const auto& [alias, target] : kAliases)
    if (name == alias) name = target;
  for (const auto& f : kFamilies)
    if (f.name == name) return family(f.id, params);
  throw FamilyError("unknown family '" + std::string(name) + "'");
}

}  // namespace hermdig
