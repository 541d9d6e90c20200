#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermdig/encoding.hpp"
#include "hermdig/families.hpp"
#include "hermdig/switching.hpp"
#include "report.hpp"

using namespace hermdig;
using report::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string hd6, file, family, matrix = "H", format, out, op, set, labels, with, suite = "all";
  double tol = kDefaultTolerance;
  int n = 0, jobs = 1, power = 2;
  bool large = false, stats = false, classes_csv = false;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Digraph read_input(const Options& o) {
  const int sources = !o.hd6.empty() + !o.file.empty() + !o.family.empty();
  if (sources != 1) throw UsageError("exactly one of <hd6>, --file, --family is required");
  if (!o.family.empty()) return family_from_spec(o.family);
  if (!o.hd6.empty()) return decode(trim(o.hd6));
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot read " + o.file);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  // Text format if any non-comment line starts with "n=".
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.starts_with("n=")) return from_text(text);
    return decode(line);
  }
  throw UsageError("empty input file " + o.file);
}

MatrixKind matrix_kind(const Options& o) { return o.matrix == "A" ? MatrixKind::Adjacency : MatrixKind::Hermitian; }

std::vector<Vertex> parse_set(const std::string& s, int n) {
  std::vector<Vertex> out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= n) throw UsageError("bad vertex '" + tok + "' in --set");
    out.push_back(v);
  }
  return out;
}

QuaternaryPartition parse_labels(const std::string& s, int n) {
  QuaternaryPartition out;
  std::stringstream ss(s);
  for (std::string tok; std::getline(ss, tok, ',');) {
    tok = trim(tok);
    if (tok == "1") out.push_back(Quaternary::One);
    else if (tok == "-1") out.push_back(Quaternary::MinusOne);
    else if (tok == "i") out.push_back(Quaternary::I);
    else if (tok == "-i") out.push_back(Quaternary::MinusI);
    else throw UsageError("bad label '" + tok + "' in --labels (use 1, -1, i, -i)");
  }
  if (static_cast<int>(out.size()) != n) throw UsageError("--labels needs one label per vertex");
  return out;
}

std::string format_of(const Options& o, const std::string& fallback) {
  if (!o.format.empty()) return o.format;
  if (o.out.ends_with(".json")) return "json";
  if (o.out.ends_with(".csv")) return "csv";
  return fallback;
}

std::string dump(ordered_json j, const std::vector<std::string>& args) {
  ordered_json out;
  out["header"] = report::header(args);
  for (auto& [k, v] : j.items()) out[k] = v;
  return out.dump(2) + "\n";
}

std::string complex_list(const ordered_json& ev) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(8);
  os << '[';
  for (std::size_t k = 0; k < ev.size(); ++k) {
    const double re = ev[k][0], im = ev[k][1];
    os << (k ? ", " : "") << re;
    if (im != 0) os << (im < 0 ? " - " : " + ") << std::abs(im) << 'i';
  }
  os << ']';
  return os.str();
}

[[noreturn]] std::string unsupported(const std::string& cmd, const std::string& fmt) {
  throw UsageError("format '" + fmt + "' is not available for " + cmd);
}

std::string cmd_spectrum(const Options& o, const std::vector<std::string>& args) {
  const Digraph x = read_input(o);
  const ordered_json j = report::spectrum(x, matrix_kind(o), o.tol);
  const std::string fmt = format_of(o, "plain");
  if (fmt == "json") return dump(j, args);
  if (matrix_kind(o) == MatrixKind::Adjacency) {
    if (fmt == "plain") return complex_list(j["eigenvalues"]) + "\n";
    std::string s = "re,im\n";
    for (const auto& e : j["eigenvalues"]) s += e[0].dump() + "," + e[1].dump() + "\n";
    return s;
  }
  const Spectrum s = eigenvalues(matrix_of(x, matrix_kind(o)), o.tol);
  if (fmt == "plain") return report::format_values(s.values) + "\n";
  std::string out = "eigenvalue,multiplicity\n";
  for (std::size_t k = 0; k < s.distinct.size(); ++k) {
    out += report::format_values({s.distinct[k]}).substr(1);
    out.pop_back();
    out += "," + std::to_string(s.multiplicities[k]) + "\n";
  }
  return out;
}

std::string cmd_charpoly(const Options& o, const std::vector<std::string>& args) {
  const Digraph x = read_input(o);
  const CharPoly p = char_poly(x, matrix_kind(o));
  const std::string fmt = format_of(o, "plain");
  if (fmt == "plain") return p.to_string() + "\n";
  if (fmt == "csv") {
    std::string s;
    for (int k = p.degree(); k >= 0; --k) s += p[k].str() + (k ? "," : "\n");
    return s;
  }
  ordered_json coeffs = ordered_json::array();
  for (int k = p.degree(); k >= 0; --k) coeffs.push_back(p[k].str());
  return dump({{"n", x.order()}, {"hd6", encode(x)}, {"matrix", o.matrix}, {"charpoly", p.to_string()},
               {"coefficients", coeffs}},
              args);
}

std::string cmd_sachs(const Options& o, const std::vector<std::string>& args) {
  const Digraph x = read_input(o);
  const ordered_json j = report::sachs(x);
  const std::string fmt = format_of(o, "json");
  if (fmt == "json") return dump(j, args);
  std::string s = fmt == "csv" ? "power,coefficient,basic_subgraphs\n" : "";
  for (const auto& c : j["coefficients"]) {
    const std::string coef = c["coefficient"];
    if (fmt == "csv") s += c["power"].dump() + "," + coef + "," + c["basic_subgraphs"].dump() + "\n";
    else s += "t^" + c["power"].dump() + ": " + coef + " (" + c["basic_subgraphs"].dump() + " basic subgraphs)\n";
  }
  return s;
}

std::string cmd_family(const Options& o, const std::vector<std::string>& args) {
  Options in = o;
  if (in.family.empty() && in.file.empty()) std::swap(in.family, in.hd6);  // positional is a family spec here
  const Digraph x = read_input(in);
  const std::string fmt = format_of(o, "plain");
  if (fmt == "plain") return encode(x) + "\n";
  if (fmt == "csv") {
    std::string s = "u,v,state\n";
    for (Vertex u = 0; u < x.order(); ++u)
      for (Vertex v = u + 1; v < x.order(); ++v) {
        const PairState st = x.state(u, v);
        if (st == PairState::None) continue;
        s += std::to_string(u) + "," + std::to_string(v) + "," +
             (st == PairState::Digon ? "digon" : st == PairState::Fwd ? "arc" : "reverse-arc") + "\n";
      }
    return s;
  }
  return dump({{"n", x.order()}, {"hd6", encode(x)}, {"text", to_text(x)}, {"charpoly", char_poly(x).to_string()}},
              args);
}

std::string cmd_switch(const Options& o, const std::vector<std::string>& args) {
  const Digraph x = read_input(o);
  ordered_json params = ordered_json::object();
  Digraph y;
  if (o.op == "converse") {
    y = converse(x);
  } else if (o.op == "local-reversal" || o.op == "digon-cut") {
    if (o.set.empty()) throw UsageError("--op " + o.op + " needs --set");
    const auto s = parse_set(o.set, x.order());
    params["set"] = s;
    y = o.op == "local-reversal" ? local_reversal(x, s) : digon_cut_replace(x, s);
  } else if (o.op == "four-way") {
    if (o.labels.empty()) throw UsageError("--op four-way needs --labels");
    params["labels"] = o.labels;
    y = four_way_switch(x, parse_labels(o.labels, x.order()));
  } else if (o.op == "cycle-normal-form") {
    const CycleNormalForm f = cycle_normal_form(x);
    y = f.normalized;
    params["form"] = cycle_form_name(f.form);
    params["representative"] = encode(f.representative);
    ordered_json steps = ordered_json::array();
    for (const auto& st : f.witness)
      steps.push_back({{"op", st.op == SwitchStep::Op::LocalReversal ? "local-reversal" : "digon-cut"},
                       {"set", st.set}});
    params["witness"] = steps;
  } else {
    throw UsageError("--op is required");
  }
  const CharPoly before = char_poly(x), after = char_poly(y);
  ordered_json j = {{"input", encode(x)},
                    {"output", encode(y)},
                    {"operation", o.op},
                    {"parameters", params},
                    {"charpoly_before", before.to_string()},
                    {"charpoly_after", after.to_string()},
                    {"cospectral", before == after}};
  const std::string fmt = format_of(o, "json");
  if (fmt == "json") return dump(j, args);
  if (fmt == "plain") return encode(y) + "\n";
  return unsupported("switch", fmt);
}

std::string cmd_product(const Options& o, const std::vector<std::string>& args) {
  const Digraph x = read_input(o);
  if (o.power < 1) throw UsageError("--power must be at least 1");
  Digraph y = x;
  ordered_json params = ordered_json::object();
  if (!o.with.empty()) {
    Digraph second;
    try {
      second = decode(o.with);
    } catch (const DecodeError&) {
      second = family_from_spec(o.with);
    }
    y = cartesian_product(x, second);
    params["with"] = o.with;
  } else {
    for (int k = 1; k < o.power; ++k) y = cartesian_product(y, x);
    params["power"] = o.power;
  }
  const std::string fmt = format_of(o, "plain");
  const bool encodable = y.order() <= kMaxEncodedOrder;
  if (fmt == "plain") return encodable ? encode(y) + "\n" : to_text(y);
  if (fmt != "json") return unsupported("product", fmt);
  ordered_json j = {{"input", encode(x)}, {"parameters", params}};
  if (encodable) {
    j["result"] = report::spectrum(y, MatrixKind::Hermitian, o.tol);
  } else {
    j["result"] = {{"n", y.order()}, {"text", to_text(y)}, {"charpoly", char_poly(y).to_string()}};
  }
  return dump(j, args);
}

std::string cmd_enumerate(const Options& o, const std::vector<std::string>& args, int& code) {
  if (o.n < 1) throw UsageError("-n <order> is required");
  if (o.n > kMaxEnumerationOrder) throw UsageError("-n must be at most " + std::to_string(kMaxEnumerationOrder));
  if (o.n >= 6 && !o.large) throw UsageError("orders 6 and up need --large");
  code = 0;
  if (o.classes_csv) return report::classes_csv(census(o.n, matrix_kind(o), o.jobs));
  const std::string fmt = format_of(o, "plain");
  if (!o.stats) {
    const auto codes = nonisomorphic_codes(o.n, o.jobs);
    if (fmt == "json") {
      ordered_json list = ordered_json::array();
      for (auto c : codes) list.push_back(encode(from_code(o.n, c)));
      return dump({{"n", o.n}, {"count", codes.size()}, {"digraphs", list}}, args);
    }
    std::string s;
    for (auto c : codes) s += encode(from_code(o.n, c)) + "\n";
    return s;
  }
  const Census c = census(o.n, matrix_kind(o), o.jobs);
  if (fmt == "json") return dump(report::census(c, true), args);
  const ordered_json row = report::census_row(c.row);
  std::string s;
  if (fmt == "csv") {
    std::string head, vals;
    for (auto& [k, v] : row.items()) {
      head += (head.empty() ? "" : ",") + k;
      vals += (vals.empty() ? "" : ",") + v.dump();
    }
    return head + "\n" + vals + "\n";
  }
  for (auto& [k, v] : row.items()) s += k + ": " + v.dump() + "\n";
  return s;
}

std::string cmd_verify(const Options& o, const std::vector<std::string>& args, int& code) {
  const int n = o.n > 0 ? o.n : 5;
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (auto s : suite_names()) names.emplace_back(s);
  } else {
    names.push_back(o.suite);
  }
  std::vector<SuiteResult> results;
  for (const auto& name : names) {
    try {
      results.push_back(run_suite(name, n, o.jobs));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed();
  code = ok ? 0 : 1;
  const std::string fmt = format_of(o, "plain");
  if (fmt == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) arr.push_back(report::suite(r));
    return dump({{"result", ok ? "PASS" : "FAIL"}, {"suites", arr}}, args);
  }
  if (fmt != "plain") return unsupported("verify", fmt);
  std::string s;
  for (const auto& r : results) {
    s += (r.passed() ? "PASS " : "FAIL ") + r.name + " n=" + std::to_string(r.order) +
         " instances=" + std::to_string(r.instances) + " failures=" + std::to_string(r.failure_count) + "\n";
    for (const auto& f : r.failures) s += "  " + f.hd6 + " " + f.detail + "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"Hermitian adjacency spectra of digraphs"};
  app.set_version_flag("--version", report::kVersion);
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c) {
    c->add_option("hd6", o.hd6, "digraph in hd6 encoding");
    c->add_option("--file", o.file, "file holding hd6 or the text format");
    c->add_option("--family", o.family, "family spec, e.g. K4prime or Xab:2,3");
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix, "H or A")->check(CLI::IsMember({"H", "A"}));
    c->add_option("--tol", o.tol, "eigenvalue clustering tolerance")->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "json, csv or plain")->check(CLI::IsMember({"json", "csv", "plain"}));
    c->add_option("--out", o.out, "write the report to a file");
    c->add_option("--jobs", o.jobs, "worker threads")->envname("HERMDIG_JOBS")->check(CLI::PositiveNumber);
  };

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues");
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  auto* sachs = app.add_subcommand("sachs", "coefficients from basic subgraphs");
  auto* fam = app.add_subcommand("family", "build a named digraph");
  auto* sw = app.add_subcommand("switch", "apply a cospectral switching");
  auto* product = app.add_subcommand("product", "Cartesian product");
  auto* verify = app.add_subcommand("verify", "run theorem suites");
  auto* enumerate = app.add_subcommand("enumerate", "nonisomorphic digraphs and census");
  for (auto* c : {spectrum, charpoly, sachs, fam, sw, product}) input(c);
  for (auto* c : {spectrum, charpoly, sachs, fam, sw, product, verify, enumerate}) common(c);

  std::vector<std::string> ops = {"converse", "local-reversal", "digon-cut", "four-way", "cycle-normal-form"};
  sw->add_option("--op", o.op, "operation")->required()->check(CLI::IsMember(ops));
  sw->add_option("--set", o.set, "vertex set, e.g. 1,3,4");
  sw->add_option("--labels", o.labels, "one of 1,-1,i,-i per vertex");
  product->add_option("--power", o.power, "X^k under the Cartesian product");
  product->add_option("--with", o.with, "second factor (hd6 or family spec)");
  verify->add_option("--suite", o.suite, "suite name or all");
  verify->add_option("-n", o.n, "largest order (default 5)");
  enumerate->add_option("-n", o.n, "order")->required();
  enumerate->add_flag("--large", o.large, "allow orders 6 and 7");
  enumerate->add_flag("--stats", o.stats, "cospectral class census");
  enumerate->add_flag("--classes-csv", o.classes_csv, "one line per class: charpoly;size;members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  int code = 0;
  std::string text;
  try {
    if (spectrum->parsed()) text = cmd_spectrum(o, args);
    else if (charpoly->parsed()) text = cmd_charpoly(o, args);
    else if (sachs->parsed()) text = cmd_sachs(o, args);
    else if (fam->parsed()) text = cmd_family(o, args);
    else if (sw->parsed()) text = cmd_switch(o, args);
    else if (product->parsed()) text = cmd_product(o, args);
    else if (verify->parsed()) text = cmd_verify(o, args, code);
    else if (enumerate->parsed()) text = cmd_enumerate(o, args, code);
  } catch (const DecodeError& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    f << text;
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return 2;
    }
  }
  return code;
}
