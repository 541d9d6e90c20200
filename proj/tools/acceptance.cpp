// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hermdig/analysis.hpp"
#include "hermdig/canonical.hpp"
#include "hermdig/enumeration.hpp"
#include "hermdig/families.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/verify.hpp"

using namespace hermdig;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

std::string row_string(const CensusRow& r) {
  std::ostringstream os;
  os << "n=" << r.n << " count=" << r.digraph_count << " distinct=" << r.distinct_charpolys
     << " max=" << r.max_class_size << " determined=" << r.determined_by_spectrum << " splits=("
     << r.classes_no_graphs << "," << r.classes_only_graphs << "," << r.classes_mixed << ")";
  return os.str();
}

CharPoly poly(std::initializer_list<long long> ascending) { return CharPoly(ascending); }

// All 3^n digraphs on the labeled n-cycle.
std::set<CharPoly> cycle_polys(int n, bool& ok, const std::set<CharPoly>& allowed) {
  std::set<CharPoly> seen;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (int code = 0; code < total; ++code) {
    Digraph x(n);
    int c = code;
    for (int k = 0; k < n; ++k, c /= 3) {
      const Vertex u = k, v = (k + 1) % n;
      if (c % 3 == 0) x.add_arc(u, v);
      else if (c % 3 == 1) x.add_arc(v, u);
      else x.add_digon(u, v);
    }
    const CharPoly p = char_poly(x);
    if (!allowed.contains(p)) ok = false;
    seen.insert(p);
  }
  return seen;
}

SuiteResult suite(const char* name, int n, int jobs, std::string& detail) {
  SuiteResult r = run_suite(name, n, jobs);
  if (!detail.empty()) detail += ", ";
  detail += std::string(name) + " " + std::to_string(r.instances) + "/" + std::to_string(r.failure_count);
  for (const auto& f : r.failures) std::cout << "  " << name << " " << f.hd6 << " " << f.detail << "\n";
  return r;
}

}  // namespace

int main() {
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HERMDIG_JOBS")) jobs = std::atoi(env);
  if (jobs < 1) jobs = 1;
  std::cout << "jobs=" << jobs << std::endl;

  std::map<int, Census> h;

  // 1
  {
    const auto t0 = Clock::now();
    const std::array<long long, 4> count{3, 16, 218, 9608}, distinct{2, 6, 27, 275}, max{2, 6, 21, 158},
        determined{1, 2, 3, 5};
    const std::array<std::array<long long, 3>, 4> splits{{{0, 1, 1}, {2, 1, 3}, {16, 1, 10}, {242, 1, 32}}};
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 5; ++n) {
      h[n] = census(n, MatrixKind::Hermitian, jobs);
      const CensusRow& r = h[n].row;
      const int k = n - 2;
      ok = ok && r.digraph_count == count[k] && r.distinct_charpolys == distinct[k] &&
           r.max_class_size == max[k] && r.determined_by_spectrum == determined[k] &&
           r.classes_no_graphs == splits[k][0] && r.classes_only_graphs == splits[k][1] &&
           r.classes_mixed == splits[k][2];
      std::cout << "  H " << row_string(r) << "\n";
    }
    const double t = seconds_since(t0);
    ok = ok && t <= 300;
    report(1, ok, "H census n=2..5, " + std::to_string(t) + " s (limit 300 s)");
  }

  // 2
  {
    const auto t0 = Clock::now();
    h[6] = census(6, MatrixKind::Hermitian, jobs);
    const CensusRow& r = h[6].row;
    const double t = seconds_since(t0);
    std::cout << "  H " << row_string(r) << "\n";
    const bool ok = r.digraph_count == 1540944 && r.distinct_charpolys == 10920 && r.max_class_size == 1338 &&
                    r.determined_by_spectrum == 16 && r.classes_no_graphs == 10769 &&
                    r.classes_only_graphs == 1 && r.classes_mixed == 150 && t <= 3600;
    report(2, ok, "H census n=6, " + std::to_string(t) + " s (limit 3600 s)");
  }

  // 3
  {
    const std::array<long long, 4> distinct{2, 7, 46, 718}, determined{1, 5, 23, 166}, max{2, 6, 42, 592};
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
      const CensusRow r = census(n, MatrixKind::Adjacency, jobs).row;
      const int k = n - 2;
      ok = ok && r.distinct_charpolys == distinct[k] && r.determined_by_spectrum == determined[k] &&
           r.max_class_size == max[k];
      std::cout << "  A " << row_string(r) << "\n";
    }
    report(3, ok, "A census n=2..5");
  }

  // 4
  {
    const std::map<CharPoly, long long> printed{
        {poly({0, -2, 0, 1}), 6}, {poly({2, -3, 0, 1}), 1}, {poly({0, 0, 0, 1}), 1},
        {poly({-2, -3, 0, 1}), 3}, {poly({0, -1, 0, 1}), 2}, {poly({0, -3, 0, 1}), 3}};
    const Census& c = h[3];
    bool ok = c.classes.size() == printed.size();
    for (const auto& cls : c.classes) {
      const auto it = printed.find(cls.key);
      ok = ok && it != printed.end() && static_cast<long long>(cls.size()) == it->second;
    }
    for (const auto& [key, members] : order3_table()) {
      const CospectralClass* cls = find_class(c, key);
      std::set<std::uint64_t> expected, got;
      for (const Digraph& m : members) expected.insert(canonical_code(m));
      if (cls) got.insert(cls->members.begin(), cls->members.end());
      ok = ok && cls && expected == got;
    }
    // Z7 = two digons and an arc; D3; the directed triangle with one arc reversed.
    Digraph z7(3);
    z7.add_digon(0, 1);
    z7.add_digon(1, 2);
    z7.add_arc(0, 2);
    const CharPoly t3_3t = poly({0, -3, 0, 1});
    for (const Digraph& m : {z7, directed_cycle(3), reversed_cycle(3)}) ok = ok && char_poly(m) == t3_3t;
    report(4, ok, "order-3 classes, 6 polynomials with printed memberships");
  }

  // 5
  {
    bool ok = true;
    const std::set<CharPoly> c4{poly({0, 0, -4, 0, 1}), poly({4, 0, -4, 0, 1}), poly({2, 0, -4, 0, 1})};
    const std::set<CharPoly> c5{poly({-2, 5, 0, -5, 0, 1}), poly({0, 5, 0, -5, 0, 1}), poly({2, 5, 0, -5, 0, 1})};
    ok = cycle_polys(4, ok, c4) == c4 && ok;
    ok = cycle_polys(5, ok, c5) == c5 && ok;
    report(5, ok, "all 81 + 243 digraphs on C4 and C5");
  }

  // 6
  {
    std::string detail;
    const bool ok = suite("closed-forms", 64, jobs, detail).passed();
    report(6, ok, "closed forms (instances/failures): " + detail);
  }

  // 7
  {
    std::string detail;
    const bool ok = suite("switching", 8, jobs, detail).passed();
    report(7, ok, "switching invariance (instances/failures): " + detail);
  }

  // 8
  {
    std::string detail;
    const bool ok = suite("sachs", 5, jobs, detail).passed();
    report(8, ok, "Sachs coefficients (instances/failures): " + detail);
  }

  // 9
  {
    std::string detail;
    bool ok = true;
    for (const char* name : {"interlacing", "radius", "small-radius", "classification"})
      ok = suite(name, 5, jobs, detail).passed() && ok;
    const ClassificationReport three = verify_classification(h[3]);
    const ClassificationReport four = verify_classification(h[4]);
    ok = ok && three.extremal.size() == 1 && isomorphic(three.extremal[0], family(FamilyId::K3Prime));
    ok = ok && four.extremal.size() == 1 && isomorphic(four.extremal[0], family(FamilyId::K4Prime));
    for (int n = 1; n <= 6; ++n) {
      if (!h.contains(n)) h[n] = census(n, MatrixKind::Hermitian, jobs);
      const CospectralClass* kn = find_class(h[n], char_poly(family(FamilyId::Complete, std::array{n})));
      ok = ok && kn && static_cast<int>(kn->size()) == n;
    }
    report(9, ok, "theorem suites n<=5 (instances/failures): " + detail + "; K3'/K4' unique; Kn class sizes n<=6");
  }

  // 10
  {
    const Digraph k4p = family(FamilyId::K4Prime);
    const CharPoly p = char_poly(cartesian_product(k4p, k4p));
    const BigInt bound = root_bound(p) + 1;
    const Rational two{2, 1}, six{6, 1}, minus_six{-6, 1};
    // lambda1 = 2: a root at 2 and none above; rho = 6: a root at -6 and none below.
    const bool ok = sign_at(p, two) == 0 && count_roots(p, two, Rational{bound, 1}) == 0 &&
                    sign_at(p, minus_six) == 0 && count_roots(p, Rational{-bound, 1}, minus_six) == 1 &&
                    count_roots(p, Rational{-bound, 1}, Rational{bound, 1}) == p.degree() &&
                    sign_at(p, six) != 0;
    report(10, ok, "K4'xK4' has lambda1 = 2 and rho = 6 exactly");
  }

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
