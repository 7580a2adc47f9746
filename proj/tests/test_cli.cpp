#include <unicx/cli.hpp>
#include <unicx/report.hpp>

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace unicx;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unicx");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("fvector") {
  const Run r = run({"fvector", "--variant", "K", "--p", "3", "--n", "3", "--enumerate"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["f_vector"] == Json::array({"1", "13", "78", "234"}));
  CHECK(j["results"]["agrees"] == true);
  CHECK(j["command"] == "fvector");
}

TEST_CASE("morse") {
  const Run r = run({"morse", "--variant", "K", "--p", "2", "--n", "3"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["results"]["acyclic"] == true);
  CHECK(j["results"]["critical"] == Json({{"0", "1"}, {"2", "13"}}));
}

TEST_CASE("bhargava") {
  const Run r = run({"bhargava", "--set", "geometric:1:2", "--k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(Json::parse(r.out)["results"]["factorial"] == "168");
}

TEST_CASE("homology of a file complex") {
  const std::string path = temp_file("unicx_circle.txt", "# circle\na b\nb c\nc a\n");
  const Run r = run({"homology", "--complex", path, "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("results.homology.betti.2,1\n") != std::string::npos);
}

TEST_CASE("shelling and shiftedness") {
  CHECK(Json::parse(run({"shelling", "--variant", "X", "--p", "3", "--n", "2"}).out)["results"]["valid"] == true);
  const std::string bow = temp_file("unicx_bow.txt", "0 1 2\n0 3 4\n");
  CHECK(run({"shelling", "--complex", bow}).code == kExitVerification);
  CHECK(Json::parse(run({"shifted", "--variant", "X", "--p", "2", "--n", "2"}).out)["results"]["shifted"] == true);
}

TEST_CASE("zcheck and buchstaber") {
  const std::string bad = temp_file("unicx_mutant.txt", "1 2\n2 3\n1 3\nlambda\n2 0 -1\n0 1 -1\n");
  const Run r = run({"zcheck", "--pair", bad});
  CHECK(r.code == kExitVerification);
  CHECK(Json::parse(r.out)["results"]["failing_facet"] == Json::array({"1", "2"}));
  CHECK(Json::parse(run({"zcheck", "--vectors", "2,1;1,1"}).out)["results"]["unimodular"] == true);
  const Json z = Json::parse(run({"buchstaber", "--p", "2", "--q", "3", "--n", "2"}).out);
  CHECK(z["results"]["zeta"] == Json::array({"2", "3"}));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"fvector", "--variant", "K", "--p", "3"}).code == kExitUsage);
  CHECK(run({"fvector", "--variant", "Q", "--p", "3", "--n", "2"}).code == kExitUsage);
  CHECK(run({"fvector", "--variant", "K", "--p", "4", "--n", "2"}).code == kExitUsage);
  CHECK(run({"build", "--variant", "X", "--p", "3", "--n", "4", "--budget", "1000"}).code == kExitResource);
  CHECK(run({"homology", "--complex", "/nonexistent/file"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("timing is opt-in and output is deterministic") {
  const std::vector<std::string> args{"build", "--variant", "K", "--p", "3", "--n", "2", "--format", "text"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out.find("seconds") == std::string::npos);
  auto timed = args;
  timed.push_back("--timing");
  CHECK(run(timed).out.find("seconds = ") != std::string::npos);
}
