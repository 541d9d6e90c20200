#include "report.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hermdig/encoding.hpp"
#include "hermdig/sachs.hpp"

namespace hermdig::report {

namespace {

double rounded(double v) {
  const double r = std::round(v * 1e10) / 1e10;
  return r == 0 ? 0.0 : r;  // no "-0"
}

ordered_json coefficients(const CharPoly& p) {
  ordered_json a = ordered_json::array();
  for (int k = p.degree(); k >= 0; --k) a.push_back(p[k].str());
  return a;
}

}  // namespace

ordered_json header(const std::vector<std::string>& args) {
  return {{"tool", "hermdig"}, {"version", kVersion}, {"args", args}};
}

std::string format_values(const std::vector<double>& v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << (std::abs(v[k]) < 0.5e-8 ? 0.0 : v[k]);
  os << ']';
  return os.str();
}

ordered_json spectrum(const Digraph& x, MatrixKind kind, double tol) {
  ordered_json j;
  j["n"] = x.order();
  j["hd6"] = encode(x);
  j["matrix"] = kind == MatrixKind::Hermitian ? "H" : kind == MatrixKind::Adjacency ? "A" : "U";
  const CharPoly p = char_poly(x, kind);
  j["charpoly"] = p.to_string();
  j["coefficients"] = coefficients(p);
  if (kind == MatrixKind::Adjacency) {
    // A is not symmetric in general; eigenvalues as [re, im] pairs.
    const Eigen::MatrixXcd a = to_complex(adjacency_matrix(x));
    std::vector<std::complex<double>> ev;
    if (x.order() > 0) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
      for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) ev.push_back(es.eigenvalues()[k]);
    }
    std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
      return std::make_pair(rounded(a.real()), rounded(a.imag())) > std::make_pair(rounded(b.real()), rounded(b.imag()));
    });
    ordered_json arr = ordered_json::array();
    for (auto e : ev) arr.push_back({rounded(e.real()), rounded(e.imag())});
    j["eigenvalues"] = arr;
    j["underlying_edges"] = x.edge_count();
    return j;
  }
  const Spectrum s = eigenvalues(matrix_of(x, kind), tol);
  ordered_json vals = ordered_json::array(), distinct = ordered_json::array();
  for (double v : s.values) vals.push_back(rounded(v));
  for (double v : s.distinct) distinct.push_back(rounded(v));
  j["eigenvalues"] = vals;
  j["distinct"] = distinct;
  j["multiplicities"] = s.multiplicities;
  const double l1 = s.values.empty() ? 0 : s.values.front();
  const double ln = s.values.empty() ? 0 : s.values.back();
  j["rho"] = rounded(std::max(std::abs(l1), std::abs(ln)));
  j["lambda1"] = rounded(l1);
  j["eta_plus"] = eta_plus(p);
  j["eta_minus"] = eta_minus(p);
  j["symmetric_about_zero"] = symmetric_about_zero(p);
  j["underlying_edges"] = x.edge_count();
  return j;
}

ordered_json sachs(const Digraph& x) {
  ordered_json j;
  j["n"] = x.order();
  j["hd6"] = encode(x);
  ordered_json coeffs = ordered_json::array();
  for (int k = x.order(); k >= 0; --k) {
    coeffs.push_back({{"power", k},
                      {"coefficient", sachs_coefficient(x, k).str()},
                      {"basic_subgraphs", basic_subgraphs(x, x.order() - k).size()}});
  }
  j["coefficients"] = coeffs;
  j["charpoly"] = char_poly(x).to_string();
  const TriangleCensus t = triangle_census(x);
  j["triangles"] = {{"x1", t.x1}, {"x2", t.x2}, {"x3", t.x3}, {"x4", t.x4}, {"trace_h3", t.trace_h3()}};
  return j;
}

ordered_json census_row(const CensusRow& r) {
  return {{"n", r.n},
          {"digraph_count", r.digraph_count},
          {"distinct_charpolys", r.distinct_charpolys},
          {"irreducible_classes", r.irreducible_classes},
          {"squarefree_classes", r.squarefree_classes},
          {"max_class_size", r.max_class_size},
          {"determined_by_spectrum", r.determined_by_spectrum},
          {"classes_no_graphs", r.classes_no_graphs},
          {"classes_only_graphs", r.classes_only_graphs},
          {"classes_mixed", r.classes_mixed},
          {"irreducible_digraphs", r.irreducible_digraphs},
          {"squarefree_digraphs", r.squarefree_digraphs}};
}

ordered_json census(const Census& c, bool with_classes) {
  ordered_json j;
  j["n"] = c.n;
  j["matrix"] = c.kind == MatrixKind::Hermitian ? "H" : "A";
  j["row"] = census_row(c.row);
  if (!with_classes) return j;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : c.classes) {
    ordered_json members = ordered_json::array();
    for (std::uint64_t m : cls.members) members.push_back(encode(from_code(c.n, m)));
    classes.push_back({{"charpoly", cls.key.to_string()},
                       {"size", cls.size()},
                       {"contains_graph", cls.contains_graph},
                       {"all_graphs", cls.all_graphs},
                       {"irreducible", cls.irreducible},
                       {"squarefree", cls.squarefree},
                       {"members", members}});
  }
  j["classes"] = classes;
  return j;
}

std::string classes_csv(const Census& c) {
  std::string out;
  for (const auto& cls : c.classes) {
    out += cls.key.to_string() + ';' + std::to_string(cls.size()) + ';';
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      if (k) out += ',';
      out += encode(from_code(c.n, cls.members[k]));
    }
    out += '\n';
  }
  return out;
}

ordered_json suite(const SuiteResult& r) {
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures) fails.push_back({{"hd6", f.hd6}, {"detail", f.detail}});
  return {{"suite", r.name},
          {"n", r.order},
          {"instances", r.instances},
          {"failures", r.failure_count},
          {"result", r.passed() ? "PASS" : "FAIL"},
          {"counterexamples", fails}};
}

}  // namespace hermdig::report
