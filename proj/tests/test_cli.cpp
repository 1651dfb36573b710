#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

// GRIDCYCLES_CLI_PATH is injected by the build as the absolute binary path.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string command;
  if (!env_prefix.empty()) command = env_prefix + " ";
  command += std::string(GRIDCYCLES_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json payload_of(const RunResult& result) {
  const nlohmann::json doc = nlohmann::json::parse(result.output);
  return doc.at("payload");
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("gridcycles-cli-" + std::to_string(::getpid()) + "-" +
            std::to_string(++counter));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("count cross-checks the formula against the scan") {
  const auto result = run_cli("count --sigma s3 --n 6");
  CHECK(result.exit_code == 0);
  const auto payload = payload_of(result);
  CHECK(payload.at("verdict") == "match");
  REQUIRE(payload.at("rows").size() == 2);
  CHECK(payload.at("rows")[0].at("value") == "30");
  CHECK(payload.at("rows")[1].at("value") == "30");

  const auto csv = run_cli("count --sigma s3 --n 6 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("sigma,n,method,value") == 0);
  CHECK(csv.output.find("+-+,6,formula,30") != std::string::npos);
  CHECK(csv.output.find("+-+,6,oracle,30") != std::string::npos);
}

TEST_CASE("count accepts literal signatures of any length") {
  const auto result = run_cli("count --sigma +- --n 5 --method oracle");
  CHECK(result.exit_code == 0);
  const auto payload = payload_of(result);
  REQUIRE(payload.at("rows").size() == 1);
  CHECK(payload.at("rows")[0].at("value") == "3");
  CHECK(payload.at("rows")[0].at("method") == "oracle");
}

TEST_CASE("sequence emits one row per length with its method") {
  const auto result = run_cli("sequence --sigma s3 --n-max 9 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("n,value,method") == 0);
  CHECK(result.output.find("3,2,formula") != std::string::npos);
  CHECK(result.output.find("9,546,formula") != std::string::npos);

  const auto by_oracle =
      run_cli("sequence --sigma s2 --n-max 5 --method oracle --format csv");
  CHECK(by_oracle.exit_code == 0);
  CHECK(by_oracle.output.find("4,6,oracle") != std::string::npos);

  // Outside the eight table signatures there is no formula to run.
  const auto refused = run_cli("sequence --sigma +- --n-max 5 --method formula");
  CHECK(refused.exit_code == 2);

  // For the first two table signatures an explicit formula request runs the
  // printed form and says what those values actually count.
  const auto printed = run_cli("sequence --sigma s1 --n-max 5 --method formula");
  CHECK(printed.exit_code == 0);
  const auto printed_payload = payload_of(printed);
  CHECK(printed_payload.at("rows")[1].at("value") == "3");  // n = 4
  const std::string note = printed_payload.at("note");
  CHECK(note.find("exactly two descents") != std::string::npos);
}

TEST_CASE("verification subcommand reports pass and failure structure") {
  const auto ok = run_cli("verify --target c3..c8 --n-max 5");
  CHECK(ok.exit_code == 0);
  const auto payload = payload_of(ok);
  CHECK(payload.at("passed") == true);
  CHECK(payload.at("complete") == true);

  const auto lemmas = run_cli("verify --target lemmas --n-max 6");
  CHECK(lemmas.exit_code == 0);

  // The known-discrepancy report exits 0 even though annotated rows differ.
  const auto annotated = run_cli("verify --target c12_report --n-max 5");
  CHECK(annotated.exit_code == 0);
  const auto annotated_payload = payload_of(annotated);
  bool saw_annotated_mismatch = false;
  for (const auto& row : annotated_payload.at("rows")) {
    if (row.at("known_discrepancy") == true && row.at("match") == false) {
      saw_annotated_mismatch = true;
    }
  }
  CHECK(saw_annotated_mismatch);
}

TEST_CASE("usage and refusal exit codes") {
  CHECK(run_cli("").exit_code == 2);                     // missing subcommand
  CHECK(run_cli("count --n 5").exit_code == 2);          // missing --sigma
  CHECK(run_cli("count --sigma s3").exit_code == 2);     // missing --n
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("count --sigma ++x --n 4").exit_code == 2);
  CHECK(run_cli("count --sigma +- --n 4 --method formula").exit_code == 2);
  CHECK(run_cli("count --sigma s3 --n 4 --format yaml").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("count --help").exit_code == 0);

  // Over-budget requests refuse with exit 3 and an informative message.
  const auto refused = run_cli("count --sigma s1 --n 12 --budget-max-n 11");
  CHECK(refused.exit_code == 3);
  CHECK(refused.output.find("budget") != std::string::npos);
}

TEST_CASE("offline sequence lookups are explicit about not querying") {
  const auto result = run_cli("oeis --terms 2,5,12,30,78");
  CHECK(result.exit_code == 0);
  CHECK(payload_of(result).at("status") == "not-queried");

  CHECK(run_cli("oeis --terms 1,2,3").exit_code == 2);   // too few terms
  CHECK(run_cli("oeis --terms 1,2,x,4").exit_code == 2); // not numbers

  // A transport failure maps to the dedicated network exit code.
  const auto unreachable =
      run_cli("oeis --terms 1,2,3,4 --enable-network",
              "GRIDCYCLES_OEIS_URL=http://127.0.0.1:1");
  CHECK(unreachable.exit_code == 4);
}

TEST_CASE("shard count never changes any output byte") {
  const std::string base = "sequence --sigma s6 --n-max 8";
  const auto one = run_cli(base + " --shards 1");
  const auto four = run_cli(base + " --shards 4");
  const auto seven = run_cli(base + " --shards 7");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
  CHECK(one.output == seven.output);

  const auto classes1 = run_cli("classes --n-max 7 --shards 1");
  const auto classes7 = run_cli("classes --n-max 7 --shards 7");
  CHECK(classes1.exit_code == 0);
  CHECK(classes1.output == classes7.output);
}

TEST_CASE("classes reproduces the published groupings") {
  const auto result = run_cli("classes --n-max 9");
  CHECK(result.exit_code == 0);
  const auto payload = payload_of(result);
  const auto full = payload.at("full_classes");
  CHECK(full.size() == 5);
  const auto weak = payload.at("weak_classes");
  CHECK(weak.size() == 3);
  // Spot anchors: the peak-valley pair is fully equivalent, the two
  // all-one-sign signatures only weakly.
  bool full_has_pair = false;
  for (const auto& family : full) {
    if (family == nlohmann::json::array({"+-+", "-+-"})) full_has_pair = true;
  }
  CHECK(full_has_pair);
  bool weak_has_monotone = false;
  for (const auto& family : weak) {
    if (family == nlohmann::json::array({"+++", "---"})) weak_has_monotone = true;
  }
  CHECK(weak_has_monotone);
}

TEST_CASE("conjecture probes exit cleanly when no counterexample appears") {
  const auto result = run_cli("conjecture --which complement --k-max 3 --n-max 7");
  CHECK(result.exit_code == 0);
  CHECK(payload_of(result).at("counterexamples") == 0);

  const auto alt = run_cli("conjecture --which alternating --k-max 3 --n-max 7");
  CHECK(alt.exit_code == 0);
  CHECK(run_cli("conjecture --which nonsense").exit_code == 2);
}

TEST_CASE("cached reruns are byte-identical and correct") {
  const TempDir tmp;
  const std::string flags = " --cache-dir " + tmp.path.string();

  const auto cold = run_cli("sequence --sigma s4 --n-max 8" + flags);
  CHECK(cold.exit_code == 0);
  bool entry_seen = false;
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    if (entry.path().extension() == ".json") entry_seen = true;
  }
  CHECK(entry_seen);

  const auto warm = run_cli("sequence --sigma s4 --n-max 8" + flags);
  CHECK(warm.exit_code == 0);
  CHECK(warm.output == cold.output);

  // The environment variable is an equivalent spelling of the flag.
  const TempDir env_tmp;
  const auto via_env = run_cli("sequence --sigma s4 --n-max 8",
                               "GRIDCYCLES_CACHE_DIR=" + env_tmp.path.string());
  CHECK(via_env.exit_code == 0);
  CHECK(via_env.output == cold.output);
  bool env_entry_seen = false;
  for (const auto& entry : fs::directory_iterator(env_tmp.path)) {
    if (entry.path().extension() == ".json") env_entry_seen = true;
  }
  CHECK(env_entry_seen);
}

TEST_CASE("cached counts equal freshly computed counts on random inputs") {
  const TempDir tmp;
  const std::string flags = " --cache-dir " + tmp.path.string() + " --format csv";

  std::random_device seed_source;
  const unsigned seed = seed_source();
  INFO("sample seed " << seed);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick_sigma(1, 8);
  std::uniform_int_distribution<int> pick_n(3, 7);

  for (int sample = 0; sample < 20; ++sample) {
    const std::string sigma = "s" + std::to_string(pick_sigma(rng));
    const int n = pick_n(rng);
    const std::string base =
        "count --sigma " + sigma + " --n " + std::to_string(n);
    const auto fresh = run_cli(base + " --format csv");
    const auto cold = run_cli(base + flags);
    const auto warm = run_cli(base + flags);
    CHECK(fresh.exit_code == 0);
    CHECK(cold.output == fresh.output);
    CHECK(warm.output == fresh.output);
  }
}
