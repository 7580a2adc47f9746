#include <unicx/errors.hpp>
#include <unicx/report.hpp>

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace unicx;

namespace {

Report sample() {
  Report r;
  r.command = "demo";
  r.parameters = {{"p", num(3)}, {"n", num(2)}};
  r.results = {{"f", Json::array({"1", "8", "24"})}, {"ok", true}, {"nested", {{"b", "2"}, {"a", "1"}}}};
  return r;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("reports are deterministic") {
  for (auto f : {ReportFormat::json, ReportFormat::csv, ReportFormat::text})
    CHECK(emit_report(sample(), f) == emit_report(sample(), f));
}

TEST_CASE("json round trip with sorted keys and string numbers") {
  const std::string doc = emit_report(sample(), ReportFormat::json);
  const Json j = Json::parse(doc);
  CHECK(j["results"]["f"][2] == "24");
  CHECK(j["parameters"]["p"] == "3");
  CHECK(j["version"] == artifact_version());
  CHECK(doc.find("\"a\"") < doc.find("\"b\""));
  CHECK_FALSE(j.contains("seconds"));
  Report timed = sample();
  timed.seconds = 0.5;
  CHECK(to_json(timed)["seconds"] == "0.500");
}

TEST_CASE("csv has one row per leaf") {
  // command, version, p, n, f.0-2, ok, nested.a, nested.b
  CHECK(count_lines(emit_report(sample(), ReportFormat::csv)) == 10);
  CHECK(count_lines(emit_report(sample(), ReportFormat::text)) == 10);
  const std::string csv = emit_report(sample(), ReportFormat::csv);
  CHECK(csv.find("results.f.1,8\n") != std::string::npos);
}

TEST_CASE("big numbers stay exact") {
  const BigInt big = ipow(BigInt(10), 40) + 7;
  CHECK(num(big) == "10000000000000000000000000000000000000007");
  CHECK(num(std::size_t{42}) == "42");
}

TEST_CASE("format parsing") {
  CHECK(parse_report_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_report_format("xml"), InputError);
}
