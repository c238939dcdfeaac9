#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "equinorm/problem_io.hpp"

#ifndef EQUINORM_CLI_PATH
#error "EQUINORM_CLI_PATH must point at the built command line tool"
#endif
#ifndef EQUINORM_DATA_DIR
#error "EQUINORM_DATA_DIR must point at the bundled data directory"
#endif

using namespace equinorm;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  std::string cmd = std::string(EQUINORM_CLI_PATH) + " " + args +
                    " > cli_stdout.log 2> cli_stderr.log";
  int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  return WEXITSTATUS(raw);
}

std::string problem(const std::string& name) {
  return std::string(EQUINORM_DATA_DIR) + "/problems/" + name;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::path("cli_out") / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("fixedpoint solves the bundled sup-norm problem") {
  TempDir out("fixedpoint_sup");
  int code = run_cli("fixedpoint --input " + problem("fixedpoint_sup.json") +
                     " --out-dir " + out.path.string() + " --format csv");
  CHECK(code == 0);
  Json report = read_json_file((out.path / "fixedpoint_report.json").string());
  CHECK(report["state"]["status"] == "converged");
  CHECK(report["evidence"]["label"] == "finite lower bound");
  CHECK(fs::exists(out.path / "fixedpoint_distances.csv"));
}

TEST_CASE("fixedpoint honours parameter overrides from the command line") {
  TempDir out("fixedpoint_override");
  int code = run_cli("fixedpoint --input " + problem("fixedpoint_sup.json") +
                     " --out-dir " + out.path.string() + " --max-iter 3");
  CHECK(code == 0);
  Json report = read_json_file((out.path / "fixedpoint_report.json").string());
  CHECK(report["config"]["max_iter"] == 3);
}

TEST_CASE("malformed input files exit with the usage code") {
  TempDir out("malformed");
  fs::path bad = out.path / "bad.json";
  write_text_file(bad.string(), "{broken");
  int code = run_cli("fixedpoint --input " + bad.string() + " --out-dir " +
                     out.path.string());
  CHECK(code == 1);
}

TEST_CASE("renorm renders the certificate, audit, distances and overlay") {
  TempDir out("renorm_cube");
  int code = run_cli("renorm --input " + problem("renorm_cube.json") +
                     " --out-dir " + out.path.string() + " --format svg");
  CHECK(code == 0);
  Json report = read_json_file((out.path / "renorm_report.json").string());
  CHECK(report["renorm"]["distortion_bound"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  Json cert_json =
      read_json_file((out.path / "renorm_certificate.json").string());
  AntipodalCertificate cert = certificate_from_json(cert_json);
  CHECK(cert.d == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(fs::exists(out.path / "renorm_audit.json"));
  CHECK(fs::exists(out.path / "renorm_distances.csv"));
  std::string svg = read_text_file((out.path / "renorm_overlay.svg").string());
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("renorm reports mathematical failure on a collinear set") {
  TempDir out("renorm_collinear");
  int code = run_cli("renorm --input " + problem("renorm_collinear.json") +
                     " --out-dir " + out.path.string());
  CHECK(code == 2);
  Json report = read_json_file((out.path / "renorm_report.json").string());
  CHECK(report["failure"]["i"] == 0);
  CHECK(report["failure"]["j"] == 1);
  CHECK(report["failure"]["labels"][0] == "a");
}

TEST_CASE("the suite command rejects unknown criteria") {
  TempDir out("suite_unknown");
  int code =
      run_cli("suite definitely-not-a-criterion --out-dir " + out.path.string());
  CHECK(code == 1);
}

TEST_CASE("the suite command runs a named criterion to a passing verdict") {
  TempDir out("suite_single");
  int code = run_cli("suite spreading-norm --out-dir " + out.path.string());
  CHECK(code == 0);
  Json aggregate = read_json_file((out.path / "suite_report.json").string());
  REQUIRE(aggregate["criteria"].size() == 1);
  CHECK(aggregate["criteria"][0]["name"] == "spreading-norm");
  CHECK(aggregate["criteria"][0]["pass"] == true);
  CHECK(aggregate["all_pass"] == true);
  CHECK(fs::exists(out.path / "criterion_spreading-norm.json"));
}
