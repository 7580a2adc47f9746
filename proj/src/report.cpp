#include <unicx/report.hpp>

#include <unicx/errors.hpp>

#include <iomanip>
#include <sstream>

#ifndef UNICX_VERSION
#define UNICX_VERSION "0.0.0"
#endif

namespace unicx {

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw InputError("format must be json, csv or text");
}

std::string artifact_version() { return UNICX_VERSION; }

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  j["version"] = artifact_version();
  if (r.seconds) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *r.seconds;
    j["seconds"] = os.str();
  }
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) return "{}";
  if (v.is_array()) return "[]";
  return v.dump();
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  auto child = [&](const std::string& key) { return path.empty() ? key : path + "." + key; };
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), child(it.key()), out);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], child(std::to_string(i)), out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  const Json j = to_json(r);
  if (format == ReportFormat::json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten(j, "", leaves);
  std::ostringstream os;
  for (const auto& [path, value] : leaves) {
    if (format == ReportFormat::csv)
      os << csv_field(path) << ',' << csv_field(value) << '\n';
    else
      os << path << " = " << value << '\n';
  }
  return os.str();
}

Json num(const BigInt& v) { return v.str(); }

Json f_vector_json(const FVector& f) {
  Json a = Json::array();
  for (const auto& e : f.entries()) a.push_back(num(e));
  return a;
}

Json homology_json(const HomologyProfile& h) {
  Json betti = Json::array();
  Json torsion = Json::array();
  for (std::size_t i = 0; i < h.betti.size(); ++i) {
    betti.push_back(num(h.betti[i]));
    Json t = Json::array();
    for (const auto& e : h.torsion[i]) t.push_back(num(e));
    torsion.push_back(t);
  }
  return {{"first_degree", "-1"}, {"betti", betti}, {"torsion", torsion}, {"torsion_exact", h.torsion_exact}};
}

Json census_json(const CriticalCensus& c) {
  Json j = Json::object();
  for (const auto& [d, n] : c.counts) j[std::to_string(d)] = num(n);
  return j;
}

Json simplex_json(const SimplicialComplex& k, const Simplex& s) {
  Json a = Json::array();
  for (auto v : s) a.push_back(label_to_string(k.label(v)));
  return a;
}

}  // namespace unicx
