#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "mars/dsl.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

// Runs the CLI through the shell; stderr is routed to /dev/null unless the
// command already redirects it.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string command = std::string(MARS_CLI_PATH) + " " + args +
                        (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, read);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("mars-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string write(const std::string& name, const std::string& content) {
    fs::path file = path_ / name;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }

 private:
  fs::path path_;
};

std::string egalitarian_text() {
  return mars::serialize_scenario(mars::testing::hal_scenario(false));
}

}  // namespace

TEST_CASE("eval prints the preferred set") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());

  RunResult result = run_cli("eval " + file + " --model additive");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "preferred: dont_take_insulin\n");

  // the file's own model line is the default
  RunResult default_model = run_cli("eval " + file);
  CHECK(default_model.output == "preferred: dont_take_insulin\n");

  // identical invocations are byte-identical
  CHECK(run_cli("eval " + file + " --model additive").output == result.output);
}

TEST_CASE("eval explains and emits structured traces") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());

  RunResult plain = run_cli("eval " + file + " --explain");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output.find("decided at stratum 2") != std::string::npos);
  CHECK(plain.output.find("preferred: dont_take_insulin\n") != std::string::npos);

  RunResult structured = run_cli("eval " + file + " --output structured");
  CHECK(structured.exit_code == 0);
  CHECK(structured.output.rfind("mars-trace/1\n", 0) == 0);
  CHECK(structured.output.find("deciding-stratum: 2\n") != std::string::npos);
}

TEST_CASE("global maximum on a non-singleton stratum exits 3") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());
  RunResult result = run_cli("eval " + file + " --model global-maximum", true);
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("stratum 1") != std::string::npos);
  CHECK(result.output.find("hals_life, carlas_life") != std::string::npos);
}

TEST_CASE("parse errors exit 2 with spans") {
  TempDir dir;
  std::string file = dir.write("bad.mars",
                               "scenario \"bad\"\n"
                               "actions: a\n"
                               "values: v\n"
                               "stratum 1: v\n"
                               "impact a: v=+2\n");
  RunResult result = run_cli("validate " + file, true);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find(":5:13:") != std::string::npos);
  CHECK(result.output.find("[bad-coefficient]") != std::string::npos);
}

TEST_CASE("validate reports scenario shape") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());
  RunResult result = run_cli("validate " + file);
  CHECK(result.exit_code == 0);
  CHECK(result.output == "ok: \"Hal the Diabetic\" (2 actions, 3 values, 2 strata)\n");
}

TEST_CASE("compare names the deciding stratum") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());
  RunResult result = run_cli("compare " + file + " take_insulin dont_take_insulin");
  CHECK(result.exit_code == 0);
  CHECK(result.output ==
        "take_insulin vs dont_take_insulin: dont_take_insulin preferred "
        "(stratum 2 decides)\n");

  RunResult tie = run_cli("compare " + file + " take_insulin take_insulin");
  CHECK(tie.output == "take_insulin vs take_insulin: tie\n");

  RunResult unknown = run_cli("compare " + file + " take_insulin naps", true);
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("search lists matching stratifications") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());
  RunResult result = run_cli("search " + file + " --model additive --exact dont_take_insulin");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("of 13 stratifications\n") != std::string::npos);
  CHECK(result.output.find("match: hals_life, carlas_life / property => preferred: "
                           "dont_take_insulin\n") != std::string::npos);

  RunResult contains = run_cli("search " + file + " --contains take_insulin");
  CHECK(contains.exit_code == 0);
  CHECK(contains.output.find("match: hals_life / carlas_life / property => preferred: "
                             "take_insulin\n") != std::string::npos);
}

TEST_CASE("search usage and failure exit codes") {
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());

  CHECK(run_cli("search " + file, true).exit_code == 1);  // no target
  CHECK(run_cli("search " + file + " --contains a --exact b", true).exit_code == 1);
  CHECK(run_cli("search " + file + " --exact ''", true).exit_code == 4);
  CHECK(run_cli("search " + file + " --max-strata 0 --contains take_insulin", true)
            .exit_code == 1);
  CHECK(run_cli("search " + file + " --contains not_an_action", true).exit_code == 2);

  std::string many =
      "scenario \"wide\"\nactions: a\n"
      "values: v1, v2, v3, v4, v5, v6, v7, v8, v9, v10\n"
      "stratum 1: v1, v2, v3, v4, v5, v6, v7, v8, v9, v10\n";
  std::string wide = dir.write("wide.mars", many);
  RunResult oversize = run_cli("search " + wide + " --contains a", true);
  CHECK(oversize.exit_code == 4);
  CHECK(oversize.output.find("at most 9 values") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("", true).exit_code == 1);
  CHECK(run_cli("frobnicate", true).exit_code == 1);
  CHECK(run_cli("eval", true).exit_code == 1);
  TempDir dir;
  std::string file = dir.write("hal.mars", egalitarian_text());
  CHECK(run_cli("eval " + file + " --model seventh-model", true).exit_code == 1);
  CHECK(run_cli("eval " + file + " --output yaml", true).exit_code == 1);
}

TEST_CASE("a missing file exits 2") {
  CHECK(run_cli("eval /nonexistent/nowhere.mars", true).exit_code == 2);
}

TEST_CASE("models lists all six kinds") {
  RunResult result = run_cli("models");
  CHECK(result.exit_code == 0);
  for (mars::ModelKind kind : mars::kAllModels) {
    CHECK(result.output.find(std::string(mars::model_kind_name(kind))) != std::string::npos);
  }
  CHECK(std::count(result.output.begin(), result.output.end(), '\n') == 6);
}

TEST_CASE("MARS_COLOR toggles diagnostics coloring") {
  TempDir dir;
  std::string file = dir.write("bad.mars", "scenario \"x\"\nactions: a\nvalues: v\n");
  std::string base = std::string(MARS_CLI_PATH) + " validate " + file + " 2>&1";

  RunResult plain = run_cli("validate " + file, true);
  CHECK(plain.exit_code == 2);
  CHECK(plain.output.find("\x1b[") == std::string::npos);

  FILE* pipe = popen(("MARS_COLOR=1 " + base).c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string colored;
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) colored.append(buffer, read);
  pclose(pipe);
  CHECK(colored.find("\x1b[31;1merror\x1b[0m") != std::string::npos);
}
