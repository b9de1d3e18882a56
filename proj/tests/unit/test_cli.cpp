#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "maxplus/cli.hpp"
#include "maxplus/extremal.hpp"
#include "maxplus/report.hpp"

using namespace maxplus;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "maxplus");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("maxplus-cli-" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    const fs::path p = path_ / name;
    if (!content.empty()) std::ofstream(p) << content;
    return p.string();
  }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST_CASE("report JSON keeps its key order", "[report]") {
  const TransientReport r = analyze(wielandt_skeleton(5));
  const auto j = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"lambda", "g", "gamma", "T", "T1", "wi", "dm", "attains_dm", "attains_wiel",
                                         "crit_rc_transient", "diagnostics"});
  CHECK(j["T1"] == 17);
  CHECK(j["T"] == 17);
  CHECK(j["attains_wiel"] == true);
  CHECK(j["attains_dm"] == true);
  CHECK(j["lambda"] == "0");
  CHECK(j["diagnostics"]["crit_nodes"].size() == 5);
}

TEST_CASE("report on acyclic and reducible input", "[report]") {
  Matrix chain = zero_matrix(2);
  chain(0, 1) = MaxPlus(1);
  const auto j = nlohmann::json::parse(to_json(analyze(chain)));
  CHECK(j["lambda"] == "-inf");
  CHECK(j["g"].is_null());
  CHECK(j["T"].is_null());
  CHECK(j["diagnostics"]["T_note"] == "reducible");
  CHECK(to_text(analyze(chain)).find("reducible") != std::string::npos);
}

TEST_CASE("analyze and matrix verbs", "[cli]") {
  TempDir dir;
  const std::string w5 = dir.file("w5.txt", to_text(wielandt_skeleton(5)));
  Result r = invoke({"analyze", w5, "--json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["T1"] == 17);
  CHECK(j["attains_wiel"] == true);

  r = invoke({"analyze", w5});
  CHECK(r.code == 0);
  CHECK(r.out.find("(attained)") != std::string::npos);
  CHECK(invoke({"analyze", w5, "--dot"}).out.find("digraph") != std::string::npos);

  r = invoke({"powers", w5, "--t", "3"});
  CHECK(r.code == 0);
  CHECK(mat_equal(parse_matrix(r.out), mat_power(wielandt_skeleton(5), 3)));
  CHECK(invoke({"powers", w5, "--t", "0"}).code == cli::kExitUsage);

  r = invoke({"csr", w5, "--t", "2"});
  CHECK(r.code == 0);
  CHECK(parse_matrix(r.out).rows() == 5);
}

TEST_CASE("usage and input errors exit with 1", "[cli]") {
  TempDir dir;
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kExitUsage);
  CHECK(invoke({"analyze", dir.file("missing.txt")}).code == cli::kExitUsage);
  const std::string bad = dir.file("bad.txt", "2\n0 0\n");
  const Result r = invoke({"analyze", bad});
  CHECK(r.code == cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(invoke({"--help"}).code == cli::kExitOk);
}

TEST_CASE("generate then check round trips", "[cli]") {
  TempDir dir;
  const std::string path = dir.file("dm.txt");
  Result r = invoke({"generate", "dm", "--n", "5", "--g", "3", "--seed", "11", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(path + ".provenance.json"));
  const auto prov = nlohmann::json::parse(r.out);
  CHECK(prov["verified_T1"] == 14);

  r = invoke({"check-dm", path, "--json"});
  CHECK(r.code == cli::kExitOk);
  const auto v = nlohmann::json::parse(r.out);
  CHECK(v["holds"] == true);
  for (const char* c : {"coprime", "a2_dominated", "chord_inequality", "power_inequality"})
    CHECK(v["conditions"][c]["holds"] == true);

  r = invoke({"check-dm", path, "--numbering", prov["numbering"].get<std::string>()});
  CHECK(r.code == cli::kExitOk);

  r = invoke({"check-crit-rc", path, "--json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(r.out)["dm"]["holds"] == true);

  // A DM instance with g < n - 1 cannot attain the Wielandt bound.
  r = invoke({"check-wiel", path});
  CHECK(r.code == cli::kExitVerdictFalse);

  r = invoke({"generate", "wielandt", "--n", "4", "--seed", "2", "--case", "n"});
  REQUIRE(r.code == 0);
  const std::string w = dir.file("w.txt", r.out);
  CHECK(invoke({"check-wiel", w}).code == cli::kExitOk);
  CHECK(invoke({"generate", "wielandt", "--n", "4", "--seed", "2", "--case", "x"}).code == cli::kExitUsage);
  CHECK(invoke({"generate", "dm", "--n", "4", "--g", "2", "--seed", "1"}).code == cli::kExitUsage);
}

TEST_CASE("check-dm reports a false verdict with exit 2", "[cli]") {
  TempDir dir;
  Matrix a = zero_matrix(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (in_a1_pattern(i, j, 2, 4)) a(i, j) = MaxPlus(0);
  const std::string path = dir.file("c.txt", to_text(a));
  const Result r = invoke({"check-dm", path});
  CHECK(r.code == cli::kExitVerdictFalse);
  CHECK(r.out.find("conditions.coprime.holds") != std::string::npos);
}

TEST_CASE("oracle verb lists the walk", "[cli]") {
  TempDir dir;
  GeneratorOptions opt;
  opt.randomize = false;
  const std::string path = dir.file("dm.txt", to_text(generate_dm(5, 2, 1, opt).matrix));
  Result r = invoke({"oracle", path, "--i", "3", "--j", "5", "--t", "10", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["interesting"] == true);
  CHECK(j["nodes"] == std::vector<int>{3, 4, 5, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5});
  r = invoke({"oracle", path, "--i", "3", "--j", "5", "--t", "10"});
  CHECK(r.out.find("walk         3 4 5 1 2") != std::string::npos);
  CHECK(invoke({"oracle", path, "--i", "9", "--j", "1", "--t", "1"}).code == cli::kExitUsage);
}
