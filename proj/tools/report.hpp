#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hermdig/digraph.hpp"
#include "hermdig/enumeration.hpp"
#include "hermdig/hermitian.hpp"
#include "hermdig/verify.hpp"

namespace hermdig::report {

inline constexpr const char* kVersion = "0.1.0";

using nlohmann::ordered_json;

/// {"tool", "version", "args"}; embedded in every JSON report.
ordered_json header(const std::vector<std::string>& args);

ordered_json spectrum(const Digraph& x, MatrixKind kind, double tol);
ordered_json sachs(const Digraph& x);
ordered_json census(const Census& c, bool with_classes);
ordered_json census_row(const CensusRow& r);
ordered_json suite(const SuiteResult& r);

/// One line per class: charpoly;size;members (hd6, comma separated).
std::string classes_csv(const Census& c);

/// "[1.41421356, -1.41421356]"
std::string format_values(const std::vector<double>& v, int digits = 8);

}  // namespace hermdig::report
