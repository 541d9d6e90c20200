#include "hermdig/enumeration.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "hermdig/families.hpp"

namespace hermdig {

namespace {

template <class Fn>
void run_workers(int jobs, Fn&& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    fn(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back([&, w] { fn(w, jobs); });
  for (auto& t : pool) t.join();
}

using Key = std::vector<std::int64_t>;

Polynomial to_polynomial(const Key& k) {
  std::vector<BigInt> c(k.begin(), k.end());
  return Polynomial(std::move(c));
}

std::set<std::uint64_t> codes_of(const std::vector<Digraph>& xs) {
  std::set<std::uint64_t> out;
  for (const auto& x : xs) out.insert(canonical_code(x));
  return out;
}

// Every orientation of the n-cycle: each edge an arc either way or a digon.
std::vector<Digraph> cycle_orientations(int n) {
  std::vector<Digraph> out;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    Digraph d(n);
    int c = code;
    for (int k = 0; k < n; ++k, c /= 3) {
      const int u = k, v = (k + 1) % n;
      if (c % 3 == 0) d.add_arc(u, v);
      else if (c % 3 == 1) d.add_arc(v, u);
      else d.add_digon(u, v);
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> nonisomorphic_codes(int n, int jobs) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw EnumerationError("order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxEnumerationOrder));
  if (n == 1) return {0};
  const std::vector<std::uint64_t> parents = nonisomorphic_codes(n - 1, jobs);
  const std::uint32_t extensions = 1u << (2 * (n - 1));

  std::vector<std::vector<std::uint64_t>> found(std::max(1, jobs));
  run_workers(jobs, [&](int w, int stride) {
    auto& out = found[w];
    for (std::size_t i = w; i < parents.size(); i += stride) {
      SmallDigraph g = SmallDigraph::unpack(n - 1, parents[i]);
      g.n = n;
      const std::size_t mark = out.size();
      for (std::uint32_t e = 0; e < extensions; ++e) {
        for (int v = 0; v < n - 1; ++v) g.set(v, n - 1, static_cast<PairState>((e >> (2 * v)) & 3));
        out.push_back(canonical_code(g));
      }
      std::sort(out.begin() + mark, out.end());
      out.erase(std::unique(out.begin() + mark, out.end()), out.end());
    }
  });

  std::vector<std::uint64_t> all;
  for (auto& f : found) {
    all.insert(all.end(), f.begin(), f.end());
    std::vector<std::uint64_t>().swap(f);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<Digraph> generate_nonisomorphic(int n, int jobs) {
  std::vector<Digraph> out;
  for (std::uint64_t c : nonisomorphic_codes(n, jobs)) out.push_back(from_code(n, c));
  return out;
}

Digraph from_code(int n, std::uint64_t code) { return SmallDigraph::unpack(n, code).to_digraph(); }

bool code_is_graph(int n, std::uint64_t code) {
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    const auto s = (code >> (2 * k)) & 3;
    if (s == 1 || s == 2) return false;
  }
  return true;
}

Census census(int n, MatrixKind kind, int jobs) {
  return census_of(n, kind, nonisomorphic_codes(n, jobs), jobs);
}

Census census_of(int n, MatrixKind kind, const std::vector<std::uint64_t>& codes, int jobs) {
  if (kind == MatrixKind::Underlying) throw std::invalid_argument("census: matrix must be H or A");
  std::vector<std::map<Key, std::vector<std::uint64_t>>> parts(std::max(1, jobs));
  run_workers(jobs, [&](int w, int stride) {
    for (std::size_t i = w; i < codes.size(); i += stride)
      parts[w][char_poly_small(SmallDigraph::unpack(n, codes[i]), kind)].push_back(codes[i]);
  });
  std::map<Key, std::vector<std::uint64_t>> merged = std::move(parts[0]);
  for (std::size_t w = 1; w < parts.size(); ++w)
    for (auto& [k, v] : parts[w]) {
      auto& dst = merged[k];
      dst.insert(dst.end(), v.begin(), v.end());
    }

  Census c;
  c.n = n;
  c.kind = kind;
  for (auto& [k, v] : merged) {
    CospectralClass cls;
    cls.key = to_polynomial(k);
    cls.members = std::move(v);
    std::sort(cls.members.begin(), cls.members.end());
    const auto graphs = std::count_if(cls.members.begin(), cls.members.end(),
                                      [&](std::uint64_t m) { return code_is_graph(n, m); });
    cls.contains_graph = graphs > 0;
    cls.all_graphs = graphs == cls.size();
    c.classes.push_back(std::move(cls));
  }
  run_workers(jobs, [&](int w, int stride) {
    for (std::size_t i = w; i < c.classes.size(); i += stride) {
      auto& cls = c.classes[i];
      cls.squarefree = is_squarefree(cls.key);
      cls.irreducible = is_irreducible(cls.key);
    }
  });
  std::sort(c.classes.begin(), c.classes.end(),
            [](const CospectralClass& a, const CospectralClass& b) { return a.key < b.key; });

  CensusRow& r = c.row;
  r.n = n;
  r.digraph_count = static_cast<long long>(codes.size());
  r.distinct_charpolys = static_cast<int>(c.classes.size());
  for (const auto& cls : c.classes) {
    r.irreducible_classes += cls.irreducible;
    r.squarefree_classes += cls.squarefree;
    if (cls.irreducible) r.irreducible_digraphs += cls.size();
    if (cls.squarefree) r.squarefree_digraphs += cls.size();
    r.max_class_size = std::max(r.max_class_size, cls.size());
    r.determined_by_spectrum += cls.size() == 1;
    if (!cls.contains_graph) ++r.classes_no_graphs;
    else if (cls.all_graphs) ++r.classes_only_graphs;
    else ++r.classes_mixed;
  }
  return c;
}

const CospectralClass* find_class(const Census& c, const CharPoly& key) {
  auto it = std::lower_bound(c.classes.begin(), c.classes.end(), key,
                             [](const CospectralClass& cls, const CharPoly& k) { return cls.key < k; });
  return it != c.classes.end() && it->key == key ? &*it : nullptr;
}

std::vector<ConnectivityTriple> connectivity_demo(const Census& h) {
  std::vector<ConnectivityTriple> out;
  for (const auto& cls : h.classes) {
    std::optional<Digraph> strong, weak, disconnected;
    for (std::uint64_t m : cls.members) {
      const Digraph x = from_code(h.n, m);
      if (!is_weakly_connected(x)) {
        if (!disconnected) disconnected = x;
      } else if (is_strongly_connected(x)) {
        if (!strong) strong = x;
      } else if (!weak) {
        weak = x;
      }
    }
    if (strong && weak && disconnected) out.push_back({cls.key, *strong, *weak, *disconnected});
  }
  return out;
}

int classes_with_distinct_underlying(const Census& h) {
  int count = 0;
  for (const auto& cls : h.classes) {
    std::set<std::uint64_t> shapes;
    for (std::uint64_t m : cls.members)
      shapes.insert(canonical_code(digraph_of(underlying_graph(from_code(h.n, m)))));
    count += shapes.size() > 1;
  }
  return count;
}

std::vector<std::pair<CharPoly, std::vector<Digraph>>> order3_table() {
  auto p3 = [](PairState a, PairState b) {
    Digraph d(3);
    d.set_state(0, 1, a);
    d.set_state(1, 2, b);
    return d;
  };
  using S = PairState;
  Digraph digon_iso(3), arc_iso(3), z7(3);
  digon_iso.add_digon(0, 1);
  arc_iso.add_arc(0, 1);
  z7.add_digon(0, 1);
  z7.add_digon(1, 2);
  z7.add_arc(0, 2);
  return {
      {Polynomial{0, -2, 0, 1},
       {p3(S::Digon, S::Digon), p3(S::Digon, S::Fwd), p3(S::Digon, S::Bwd), p3(S::Fwd, S::Fwd),
        p3(S::Fwd, S::Bwd), p3(S::Bwd, S::Fwd)}},
      {Polynomial{2, -3, 0, 1}, {k3_prime()}},
      {Polynomial{0, 0, 0, 1}, {empty_digraph(3)}},
      {Polynomial{-2, -3, 0, 1}, {complete_digraph(3), y_kn(2, 1), y_kn(1, 2)}},
      {Polynomial{0, -1, 0, 1}, {digon_iso, arc_iso}},
      {Polynomial{0, -3, 0, 1}, {z7, directed_cycle(3), reversed_cycle(3)}},
  };
}

ClassificationReport verify_classification(const Census& h) {
  ClassificationReport r;
  const int n = h.n;
  r.n = n;

  Polynomial target{1};
  target = target * Polynomial{n - 1, 1};
  for (int k = 0; k < n - 1; ++k) target = target * Polynomial{-1, 1};
  if (const CospectralClass* cls = find_class(h, target))
    for (std::uint64_t m : cls->members) r.extremal.push_back(from_code(n, m));
  std::vector<Digraph> expected;
  if (n == 1) expected = {empty_digraph(1)};
  if (n == 2) expected = {complete_digraph(2), transitive_tournament(2)};
  if (n == 3) expected = {k3_prime()};
  if (n == 4) expected = {k4_prime()};
  r.extremal_ok = codes_of(r.extremal) == codes_of(expected);
  if (!r.extremal_ok) r.messages.push_back("spectrum {-(n-1), 1^(n-1)}: " + std::to_string(r.extremal.size()) + " digraphs");

  const CospectralClass* kn = find_class(h, char_poly(complete_digraph(n)));
  r.kn_class_size = kn ? kn->size() : 0;
  r.kn_class_ok = r.kn_class_size == n;
  if (!r.kn_class_ok) r.messages.push_back("complete digraph class has " + std::to_string(r.kn_class_size) + " members");

  if (n == 3) {
    const auto table = order3_table();
    r.order3_ok = h.classes.size() == table.size();
    for (const auto& [key, members] : table) {
      const CospectralClass* cls = find_class(h, key);
      const bool row_ok = cls && std::set<std::uint64_t>(cls->members.begin(), cls->members.end()) == codes_of(members);
      if (!row_ok) r.messages.push_back("order-3 row " + key.to_string() + " differs");
      r.order3_ok = r.order3_ok && row_ok;
    }
  }

  if (n == 4 || n == 5) {
    const std::set<Polynomial> printed =
        n == 4 ? std::set<Polynomial>{Polynomial{0, 0, -4, 0, 1}, Polynomial{4, 0, -4, 0, 1}, Polynomial{2, 0, -4, 0, 1}}
               : std::set<Polynomial>{Polynomial{-2, 5, 0, -5, 0, 1}, Polynomial{0, 5, 0, -5, 0, 1},
                                      Polynomial{2, 5, 0, -5, 0, 1}};
    std::set<Polynomial> seen;
    for (const Digraph& x : cycle_orientations(n)) {
      const CharPoly p = char_poly(x);
      if (!printed.count(p)) {
        r.cycle_table_ok = false;
        r.messages.push_back("cycle orientation with polynomial " + p.to_string());
      }
      seen.insert(p);
    }
    if (seen != printed) {
      r.cycle_table_ok = false;
      r.messages.push_back("not every printed cycle polynomial occurs");
    }
  }
  return r;
}

}  // namespace hermdig
