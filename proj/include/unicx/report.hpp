#pragma once

// Deterministic machine-readable reports.  Every number is written as a
// decimal string; object keys are sorted.

#include <unicx/bigint.hpp>
#include <unicx/homology.hpp>
#include <unicx/morse.hpp>
#include <unicx/scomplex.hpp>

#include <json.hpp>

#include <concepts>
#include <optional>
#include <string>

namespace unicx {

using Json = nlohmann::json;

enum class ReportFormat { json, csv, text };

/// Accepts "json", "csv" or "text".
ReportFormat parse_report_format(const std::string& s);

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::optional<double> seconds;  ///< written only when set
};

std::string artifact_version();

Json to_json(const Report& r);

/// json: indented document.  csv: one `path,value` row per leaf.  text: one
/// `path = value` line per leaf.
std::string emit_report(const Report& r, ReportFormat format);

Json num(const BigInt& v);
template <std::integral T>
  requires(!std::same_as<T, bool>)
Json num(T v) {
  return std::to_string(v);
}

Json f_vector_json(const FVector& f);
Json homology_json(const HomologyProfile& h);
Json census_json(const CriticalCensus& c);
Json simplex_json(const SimplicialComplex& k, const Simplex& s);

}  // namespace unicx
