#include "hermdig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hermdig/analysis.hpp"
#include "hermdig/encoding.hpp"
#include "hermdig/enumeration.hpp"
#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/sachs.hpp"
#include "hermdig/switching.hpp"

namespace hermdig {

namespace {

constexpr std::size_t kKeptFailures = 20;
constexpr double kTol = 1e-9;

class Collector {
 public:
  explicit Collector(SuiteResult& r) : r_(r) {}
  void count(long long k = 1) {
    std::lock_guard lock(m_);
    r_.instances += k;
  }
  void fail(const Digraph& x, std::string detail) {
    std::lock_guard lock(m_);
    ++r_.failure_count;
    r_.failures.push_back({encode(x), std::move(detail)});
  }
  void finish() {
    std::sort(r_.failures.begin(), r_.failures.end(), [](const SuiteFailure& a, const SuiteFailure& b) {
      return std::tie(a.hd6, a.detail) < std::tie(b.hd6, b.detail);
    });
    if (r_.failures.size() > kKeptFailures) r_.failures.resize(kKeptFailures);
  }

 private:
  SuiteResult& r_;
  std::mutex m_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Runs check on one representative per isomorphism class, orders 1..n.
void exhaustive(int n, int jobs, Collector& out, const std::function<void(const Digraph&)>& check) {
  for (int k = 1; k <= n; ++k) {
    const std::vector<std::uint64_t> codes = nonisomorphic_codes(k, jobs);
    const int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    auto work = [&](int w) {
      for (std::size_t i = w; i < codes.size(); i += workers) check(from_code(k, codes[i]));
    };
    if (workers == 1) work(0);
    else {
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    out.count(static_cast<long long>(codes.size()));
  }
}

double rho_of(const std::vector<double>& desc) { return std::max(std::abs(desc.front()), std::abs(desc.back())); }

void suite_interlacing(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    const Spectrum s = spectrum(x);
    for (Vertex v = 0; v < x.order(); ++v)
      if (!check_interlacing(s, spectrum(delete_vertex(x, v))))
        out.fail(x, "deleting vertex " + std::to_string(v) + " breaks interlacing");
  });
}

void suite_radius(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    const double rho = rho_of(spectrum(x).values);
    const int delta = degree_profile(x).max_degree();
    if (rho > delta + kTol) out.fail(x, "rho " + fmt(rho) + " > Delta " + std::to_string(delta));
    if (x.arc_count() > 0) {
      const RadiusInequalities r = radius_inequalities(x);
      if (!r.ok)
        out.fail(x, "lambda1 " + fmt(r.lambda1) + ", rho " + fmt(r.rho) + ", rho(Gamma) " + fmt(r.rho_underlying));
    }
    if (is_weakly_connected(x)) {
      const RadiusCertificate c = radius_certificate(x);
      const bool equal = std::abs(rho - delta) < 1e-7;
      if (equal != (c.kind != RadiusCertificate::Kind::NoEquality))
        out.fail(x, "certificate " + std::string(radius_kind_name(c.kind)) + " but rho " + fmt(rho));
      else if (equal && !satisfies_radius_partition(x, c.partition, c.kind))
        out.fail(x, "certificate partition violates the arc constraints");
    }
  });
}

void suite_symmetric(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    const SymmetricConditions c = symmetric_sufficient_conditions(x);
    if (!c.consistent()) out.fail(x, "sufficient condition holds but the spectrum is not symmetric");
  });
}

void suite_small_radius(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    const SmallRadiusReport r = classify_small_radius(x);
    if (!r.agree())
      out.fail(x, "spectral " + std::string(radius_class_name(r.spectral)) + ", structural " +
                      std::string(radius_class_name(r.structural)));
  });
}

void suite_eta(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    const EtaBounds e = eta_bounds_check(x);
    if (!e.ok())
      out.fail(x, "eta+ " + std::to_string(e.eta_plus) + ", eta- " + std::to_string(e.eta_minus) + ", digon-free " +
                      std::to_string(e.digon_free) + ", alpha " + std::to_string(e.alpha));
  });
}

void suite_tournament(int n, int jobs, Collector& out) {
  exhaustive(n, jobs, out, [&](const Digraph& x) {
    if (!x.is_oriented()) return;
    const TournamentBound t = tournament_bound_check(x);
    if (!t.ok) out.fail(x, "lambda1 " + fmt(t.lambda1) + " above cot bound " + fmt(t.bound));
  });
  for (int k = 2; k <= n; ++k) {
    const Digraph t = transitive_tournament(k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Vertex> s;
      for (Vertex v = 0; v < k; ++v)
        if (mask >> v & 1u) s.push_back(v);
      const Digraph y = local_reversal(t, s);
      out.count();
      if (!tournament_bound_check(y).tight) out.fail(y, "switched transitive tournament is not tight");
    }
  }
}

void suite_classification(int n, int jobs, Collector& out) {
  for (int k = 1; k <= n; ++k) {
    const Census c = census(k, MatrixKind::Hermitian, jobs);
    const ClassificationReport r = verify_classification(c);
    out.count();
    for (const auto& m : r.messages) out.fail(empty_digraph(k), m);
  }
}

std::vector<Vertex> random_subset(std::mt19937& rng, int n) {
  std::vector<Vertex> s;
  for (Vertex v = 0; v < n; ++v)
    if (rng() % 2) s.push_back(v);
  return s;
}

Digraph random_digraph(std::mt19937& rng, int n) {
  Digraph x(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) x.set_state(u, v, static_cast<PairState>(rng() % 4));
  return x;
}

void suite_sachs(int n, int jobs, Collector& out) {
  auto check = [&](const Digraph& x) {
    const CharPoly p = char_poly(x);
    for (int j = 0; j <= x.order(); ++j)
      if (sachs_coefficient(x, j) != p[j]) out.fail(x, "coefficient of t^" + std::to_string(j));
  };
  exhaustive(std::min(n, 5), jobs, out, check);
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const Digraph x = random_digraph(rng, 6 + trial % 3);
    out.count();
    check(x);
  }
}

void suite_switching(int, int, Collector& out) {
  std::mt19937 rng(7);
  auto same = [&](const Digraph& x, const Digraph& y, const char* op) {
    out.count();
    if (char_poly(x) != char_poly(y)) out.fail(x, std::string(op) + " changed the characteristic polynomial");
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const Digraph x = random_digraph(rng, 2 + trial % 7);
    same(x, converse(x), "converse");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 7;
    Digraph x = random_digraph(rng, k);
    const auto s = random_subset(rng, k);
    std::vector<bool> in(k);
    for (Vertex v : s) in[v] = true;
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v)
        if (in[u] != in[v] && x.state(u, v) == PairState::Digon)
          x.set_state(u, v, rng() % 2 ? PairState::Fwd : PairState::Bwd);
    same(x, local_reversal(x, s), "local reversal");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 7;
    Digraph x = random_digraph(rng, k);
    const auto s = random_subset(rng, k);
    std::vector<bool> in(k);
    for (Vertex v : s) in[v] = true;
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v)
        if (in[u] != in[v] && x.state(u, v) != PairState::None) x.set_state(u, v, PairState::Digon);
    same(x, digon_cut_replace(x, s), "digon cut");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 2 + trial % 7;
    Digraph x = random_digraph(rng, k);
    QuaternaryPartition p(k);
    for (auto& q : p) q = static_cast<Quaternary>(rng() % 4);
    // Drop the pairs the switch would send to -1.
    const HermitianMatrix h = hermitian_matrix(x);
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v)
        if (conj(unit(p[u])) * h(u, v) * unit(p[v]) == Gaussian(-1)) x.set_state(u, v, PairState::None);
    same(x, four_way_switch(x, p), "four-way switch");
  }
}

bool close(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) >= kTol) return false;
  return true;
}

void suite_closed_forms(int, int, Collector& out) {
  auto numeric = [&](FamilyId id, std::vector<int> params) {
    const Digraph x = family(id, params);
    const ClosedFormSpectrum c = closed_form_spectrum(id, params);
    out.count();
    if (!close(c.values, spectrum(x).values)) out.fail(x, std::string(family_name(id)) + " eigenvalues differ");
    if (!c.char_poly.is_zero() && c.char_poly != char_poly(x))
      out.fail(x, std::string(family_name(id)) + " characteristic polynomial differs");
  };
  for (int n = 3; n <= 64; ++n) {
    numeric(FamilyId::DirectedCycle, {n});
    numeric(FamilyId::ReversedCycle, {n});
  }
  for (int n = 1; n <= 32; ++n) numeric(FamilyId::TransitiveTournament, {n});
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= 10; ++b) numeric(FamilyId::Xab, {a, b});
  for (int n = 3; n <= 20; ++n) {
    const Digraph x = necklace(n);
    const HermitianMatrix h = hermitian_matrix(x);
    const HermitianMatrix h3 = h * h * h;
    out.count();
    if (h3 != h * Gaussian(4)) out.fail(x, "H^3 != 4H");
    Polynomial want = Polynomial::monomial(n);
    for (int k = 0; k < n; ++k) want = want * Polynomial{-4, 0, 1};
    if (char_poly(x) != want) out.fail(x, "characteristic polynomial is not t^n (t^2 - 4)^n");
    numeric(FamilyId::Necklace, {n});
  }
  for (int n = 1; n <= 8; ++n) numeric(FamilyId::Complete, {n});
  numeric(FamilyId::DigonCycle, {4});
  numeric(FamilyId::ReversedDigonCycle, {5});
}

struct Suite {
  std::string_view name;
  void (*run)(int, int, Collector&);
};

constexpr Suite kSuites[] = {
    {"interlacing", suite_interlacing},   {"radius", suite_radius},
    {"symmetric", suite_symmetric},       {"small-radius", suite_small_radius},
    {"eta", suite_eta},                   {"tournament", suite_tournament},
    {"classification", suite_classification}, {"sachs", suite_sachs},
    {"switching", suite_switching},       {"closed-forms", suite_closed_forms},
};

}  // namespace

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (const Suite& s : kSuites) out.push_back(s.name);
  return out;
}

SuiteResult run_suite(std::string_view name, int n, int jobs) {
  for (const Suite& s : kSuites) {
    if (s.name != name) continue;
    SuiteResult r;
    r.name = std::string(name);
    r.order = n;
    Collector out(r);
    s.run(n, jobs, out);
    out.finish();
    return r;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace hermdig
