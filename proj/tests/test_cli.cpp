// Runs the fcip binary as a subprocess.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "fcip/app.hpp"

#include "httplib.h"

namespace fs = std::filesystem;
using fcip::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FCIP_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (const auto n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "fcip_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string model_file(const std::string& kind) {
  const auto path = scratch() / (kind + ".json");
  if (!fs::exists(path)) REQUIRE(run("fit " + kind + " --out " + path.string()).code == 0);
  return path.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("fit writes the model and a manifest with its digest") {
  const auto path = model_file("regression");
  const auto manifest = fcip::io::load_json(scratch() / "regression.manifest.json");
  CHECK(manifest["command"] == "fit regression");
  CHECK(manifest["output_digest"] == fcip::app::sha256_hex(slurp(path)));
  const auto again = run("fit regression --out " + (scratch() / "again.json").string());
  REQUIRE(again.code == 0);
  CHECK(slurp(scratch() / "again.json") == slurp(path));
}

TEST_CASE("seeded fits are byte-identical") {
  const auto a = scratch() / "fz1.json", b = scratch() / "fz2.json";
  REQUIRE(run("fit fuzzy --labels 7 --seed 42 --out " + a.string()).code == 0);
  REQUIRE(run("fit fuzzy --labels 7 --seed 42 --out " + b.string()).code == 0);
  CHECK(fcip::io::load_json(scratch() / "fz1.manifest.json")["output_digest"] ==
        fcip::io::load_json(scratch() / "fz2.manifest.json")["output_digest"]);
  CHECK(fs::exists(scratch() / "fz1.rules.txt"));
}

TEST_CASE("predict prints the service response") {
  const auto r = run("predict --model " + model_file("regression") +
                     " --area-ha 19.6 --length-m 453 --valves 6 --year 2020 --inflation-rate 5 --toggle length");
  REQUIRE(r.code == 0);
  const auto j = fcip::io::parse_json(r.out);
  CHECK(j["model"] == "regression");
  CHECK(j["scenarios"]["count"] == 30);
  CHECK(j["inflation"]["years"].get<double>() == 5);
}

TEST_CASE("exit codes") {
  const auto model = model_file("regression");
  CHECK(run("predict --model " + model + " --area-ha -2 --length-m 453 --valves 6 --year 2014").code == 2);
  CHECK(run("predict --model " + model + " --area-ha 0.01 --length-m 1 --valves 1 --year 1990").code == 3);
  CHECK(run("predict --model /nonexistent.json --area-ha 1 --length-m 1 --valves 1 --year 2014").code == 2);
  CHECK(run("predict --area-ha 1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("screen fdm --alpha 0.6 --out " + (scratch() / "fdm").string()).code == 0);
  CHECK(run("screen stepwise --data /nonexistent.csv").code == 2);
  CHECK(run("screen likert --surveys /nonexistent").code == 2);
  CHECK(run("screen efa --rule magic").code == 2);
  CHECK(run("--version").code == 0);
}

TEST_CASE("screen commands write report and manifest") {
  const auto out = scratch() / "fahp";
  const auto r = run("screen fahp --out " + out.string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("CR = ") != std::string::npos);
  const auto report = fcip::io::load_json(out / "report.json");
  CHECK(report["experts"] == 4);
  CHECK(fcip::io::load_json(out / "manifest.json")["output_digest"] ==
        fcip::app::sha256_hex(slurp(out / "report.json")));
  CHECK(fs::exists(out / "weights.json"));
  const auto weights = fcip::io::load_json(out / "weights.json");
  REQUIRE(weights.size() == 3);
  CHECK(weights[0]["criterion"] == "C");
  CHECK(weights[0]["normalized"].get<double>() == doctest::Approx(0.75).epsilon(0.01));
  CHECK(weights[1]["normalized"].get<double>() == doctest::Approx(0.25).epsilon(0.02));
  CHECK(weights[2]["normalized"].get<double>() == 0.0);
  for (const char* cmd : {"likert", "stepwise", "forward", "backward", "hybrid --mode 1", "correlation", "efa"}) {
    CAPTURE(cmd);
    const auto dir = scratch() / "screens" / std::string(cmd).substr(0, 5);
    CHECK(run(std::string("screen ") + cmd + " --out " + dir.string()).code == 0);
    CHECK(fs::exists(dir / "report.json"));
  }
  const auto stepwise = fcip::io::load_json(scratch() / "screens" / "stepw" / "report.json");
  CHECK(stepwise["selected"] == Json::array({"P3", "P14", "P6", "P1"}));
}

TEST_CASE("serve answers on the bound port and refuses a taken one") {
  const auto model = model_file("cbr");
  const auto port_file = scratch() / "port.txt";
  const auto pid_file = scratch() / "pid.txt";
  fs::remove(port_file);
  const std::string cmd = "sh -c '" + std::string(FCIP_BIN) + " serve --model " + model + " --port 0 --port-file " +
                          port_file.string() + " >/dev/null 2>&1 & echo $! > " + pid_file.string() + "'";
  REQUIRE(std::system(cmd.c_str()) == 0);
  for (int i = 0; i < 100 && (!fs::exists(port_file) || fs::file_size(port_file) == 0); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  REQUIRE(fs::exists(port_file));
  const int port = std::stoi(slurp(port_file));
  const std::string pid = slurp(pid_file);

  httplib::Client cli("127.0.0.1", port);
  auto res = cli.Post("/predict", R"({"area_ha":19.6,"length_m":453,"valves":6,"year":2014})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(fcip::io::parse_json(res->body)["model"] == "cbr");

  CHECK(run("serve --model " + model + " --port " + std::to_string(port)).code == 2);
  CHECK(std::system(("kill " + pid).c_str()) == 0);
}
