#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run entcat(const std::string& args) {
  const std::string cmd = std::string(ENTCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("check exit codes") {
  auto r = entcat("check 0.4,0.4,0.1,0.1 0.5,0.25,0.25");
  CHECK(r.status == 3);
  CHECK(r.out.find("violated prefixes: 2") != std::string::npos);
  CHECK(entcat("check 0.5,0.5 0.5,0.5").status == 0);
  CHECK(entcat("check 0.4,0.7 0.5,0.5").status == 2);
  CHECK(entcat("check 0.5,0.5").status == 2);
  CHECK(entcat("frobnicate").status == 2);
}

TEST_CASE("json report echoes canonical inputs") {
  auto r = entcat("check 0.4,0.4,0.1,0.1 0.5,0.25,0.25 --format json --stable");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["inputs"]["psi"] == "2/5,2/5,1/10,1/10");
  CHECK(j["exact"] == true);
  CHECK_FALSE(j.contains("timing_ms"));
  CHECK(j["result"]["violated_prefixes"] == nlohmann::json::array({2}));

  auto timed = nlohmann::json::parse(entcat("check 0.5,0.5 0.5,0.5 --format json").out);
  CHECK(timed.contains("timing_ms"));
}

TEST_CASE("stdin vectors") {
  auto r = entcat("check 0.4,0.4,0.1,0.1 - < /dev/null");
  CHECK(r.status == 2);
  const std::string cmd = "sh -c 'echo 0.5,0.25,0.25 | " + std::string(ENTCAT_CLI_PATH) +
                          " check 0.4,0.4,0.1,0.1 - --format json --stable'";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(nlohmann::json::parse(out)["inputs"]["phi"] == "1/2,1/4,1/4");
}

TEST_CASE("catalyze reports filter diagnostics") {
  auto yes = entcat("catalyze 0.4,0.4,0.1,0.1 0.5,0.25,0.22,0.03 0.6,0.4 --copies 5");
  CHECK(yes.status == 0);
  auto no = entcat(
      "catalyze 40/101,40/101,10/101,10/101,1/101 50/101,25/101,20/101,5/101,1/101 0.7,0.3 "
      "--copies 1 --format json --stable");
  CHECK(no.status == 3);
  auto j = nlohmann::json::parse(no.out);
  CHECK(j["result"]["is_catalyst"] == false);
  CHECK(j["result"]["multicopy_filter"]["passed"] == false);
  CHECK(j["result"]["multicopy_filter"]["violations"][0]["condition"] == "top_ratio");
  CHECK(entcat("catalyze 0.6,0.4 0.6,0.4 0.5,0.5 --copies 1").status == 0);
}

TEST_CASE("mlocc, pmax and bounds") {
  auto m = nlohmann::json::parse(entcat("mlocc 0.4,0.4,0.1,0.1 0.5,0.25,0.22,0.03 --max 12 --format json").out);
  CHECK(m["result"]["threshold"] == 5);

  auto p = nlohmann::json::parse(entcat("pmax 0.6,0.2,0.2 0.5,0.4,0.1 --format json").out);
  CHECK(p["result"]["p_max"]["fraction"] == "4/5");
  CHECK(p["result"]["p_max"]["decimal"] == "0.8000");

  auto c = nlohmann::json::parse(
      entcat("pmax 0.6,0.2,0.2 0.5,0.4,0.1 --source-copies 2 --cat 0.65,0.35 --cat-copies 3 --format json").out);
  CHECK(c["result"]["p_max"]["decimal"] == "0.9535");

  auto b = nlohmann::json::parse(entcat("bounds 0.7,0.2,0.1 0.5,0.3,0.2 --power 3 --format json").out);
  CHECK(b["result"]["lower"] == b["result"]["upper"]);
  CHECK(b["result"]["collapsed"] == true);
  CHECK(entcat("bounds 0.5,0.5 0.5,0.4,0.1").status == 2);
}

TEST_CASE("tradeoff csv") {
  auto r = entcat("tradeoff 0.4,0.4,0.1,0.1 0.5,0.25,0.2,0.05 0.6,0.4 --max-source 6 --max-cat 12 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "source_copies,min_catalyst_copies,feasible_alone\n"
        "1,11,false\n2,5,false\n3,4,false\n4,2,false\n5,1,false\n6,,true\n");
}

TEST_CASE("resource limit exit code") {
  CHECK(entcat("mlocc 0.4,0.4,0.1,0.1 0.5,0.25,0.22,0.03 --component-cap 100").status == 4);
  const std::string cmd = "ENTCAT_COMPONENT_CAP=100 " + std::string(ENTCAT_CLI_PATH) +
                          " mlocc 0.4,0.4,0.1,0.1 0.5,0.25,0.22,0.03 >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(raw) == 4);
}

TEST_CASE("search output") {
  auto r = entcat("search 0.4,0.4,0.1,0.1 0.5,0.25,0.25 --dim 2 --denominator 10 --format json --stable");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["hits"][0]["candidate"] == "3/5,2/5");
  CHECK(entcat("search 0.5,0.5 1").status == 2);

  auto lines = entcat("search 0.6,0.2,0.2 0.5,0.4,0.1 --dim 2 --denominator 20 --lambda 0.9 --format jsonl --stable");
  CHECK(lines.status == 0);
  CHECK(lines.out.find("\"candidate\":\"13/20,7/20\"") != std::string::npos);
}
