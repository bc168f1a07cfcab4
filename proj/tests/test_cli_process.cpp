// Runs the built `newcomb` binary and checks output files and exit codes.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() /
          ("newcomb_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  Run run(const std::string& args) const {
    const fs::path captured = dir / "stdout.txt";
    const std::string cmd = std::string(NEWCOMB_BINARY) + " " + args + " > " +
                            captured.string() + " 2> " +
                            (dir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read(captured);
    return r;
  }

  static std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
};

constexpr const char* kClassic =
    R"({"utilities":[[10000,0],[1010000,1000000]],"predictor":[0.5,0.5]})";
constexpr const char* kPerfect =
    R"({"utilities":[[10000,0],[1010000,1000000]],"predictor":[1,1],"parallelism":2})";

}  // namespace

TEST_CASE("expected prints a JSON report") {
  Sandbox box;
  const auto cfg = box.write("c.json", kClassic);
  const Run r = box.run("expected --config " + cfg.string());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["expected_utilities"]["U1"] == 510000.0);
  CHECK(doc["expected_utilities"]["U2"] == 500000.0);
  CHECK(doc["choice"] == "C1");
}

TEST_CASE("region writes the CSV") {
  Sandbox box;
  const auto cfg = box.write("c.json", kClassic);
  const auto out = box.dir / "r.csv";
  REQUIRE(box.run("region --config " + cfg.string() + " --out " + out.string() +
                  " --resolution 2")
              .code == 0);
  CHECK(Sandbox::read(out) == "p1,p2,choice\n0,0,C1\n0,1,C1\n1,0,C1\n1,1,C2\n");

  const auto a = box.dir / "a.csv";
  const auto b = box.dir / "b.csv";
  box.run("region --config " + cfg.string() + " --out " + a.string() +
          " --parallelism 1");
  box.run("region --config " + cfg.string() + " --out " + b.string() +
          " --parallelism 4");
  CHECK(Sandbox::read(a) == Sandbox::read(b));
  CHECK(Sandbox::read(a).find("\n1,1,C2\n") != std::string::npos);
}

TEST_CASE("graph writes DOT") {
  Sandbox box;
  const auto out = box.dir / "g.dot";
  REQUIRE(box.run("graph --out " + out.string()).code == 0);
  const std::string dot = Sandbox::read(out);
  CHECK(dot.rfind("digraph tlg {", 0) == 0);
  CHECK(dot.find("2 -> 6 [style=dashed]") != std::string::npos);

  REQUIRE(box.run("graph --base-chain-only --out " + out.string()).code == 0);
  CHECK(Sandbox::read(out).find("dashed") == std::string::npos);
}

TEST_CASE("graph refuses a read-only target") {
  Sandbox box;
  const auto out = box.write("locked.dot", "keep me\n");
  fs::permissions(out, fs::perms::owner_read);
  CHECK(box.run("graph --out " + out.string()).code == 3);
  fs::permissions(out, fs::perms::owner_write, fs::perm_options::add);
  CHECK(Sandbox::read(out) == "keep me\n");
}

TEST_CASE("simulate reproduces the perfect-predictor table") {
  Sandbox box;
  const auto cfg = box.write("p.json", kPerfect);
  const Run r = box.run("simulate --config " + cfg.string());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["numerical"]["C1"] == 10000.0);
  CHECK(doc["numerical"]["C2"] == 1000000.0);
  CHECK(doc["trials"] == 50000);
}

TEST_CASE("simulate flags override the config") {
  Sandbox box;
  const auto cfg = box.write("c.json", kClassic);
  const Run r = box.run("simulate --config " + cfg.string() +
                        " --trials 1000 --seed 5 --parallelism 3");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["trials"] == 1000);
  CHECK(doc["seed"] == 5);
  CHECK(doc["config"]["parallelism"] == 3);
}

TEST_CASE("exit codes") {
  Sandbox box;
  const auto bad_p = box.write(
      "bad.json", R"({"utilities":[[1,1],[1,1]],"predictor":[1.5,0]})");
  const auto broken = box.write("broken.json", "{\"utilities\": [");
  const auto empty = box.write("empty.json", "{}");
  CHECK(box.run("expected --config " + bad_p.string()).code == 2);
  CHECK(box.run("expected --config " + broken.string()).code == 2);
  CHECK(box.run("expected --config " + empty.string()).code == 2);
  CHECK(box.run("simulate --trials 0").code == 2);
  CHECK(box.run("region --resolution 1 --out " + (box.dir / "x.csv").string())
            .code == 2);
  CHECK(box.run("frobnicate").code == 2);
  CHECK(box.run("expected --config " + (box.dir / "missing.json").string())
            .code == 3);
  CHECK(box.run("region --out " + (box.dir / "no" / "dir.csv").string()).code ==
        3);
  CHECK(box.run("expected").code == 0);
}
