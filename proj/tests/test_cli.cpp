#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(BICM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

TEST_CASE("rates: row count, monotone column, determinism") {
  const std::string args =
      "rates --constellation pam:2 --labeling brgc --kinds mi_bicm_exact "
      "--snr -10:20:0.5";
  auto r1 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  auto lines = lines_of(r1.output);
  REQUIRE(lines.size() == 62);  // header + 61 grid points
  CHECK(lines[0] == "snr_db,kind,bit_or_label,value,s_star");
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = csv_fields(lines[i]);
    REQUIRE(f.size() == 5);
    CHECK(f[1] == "mi_bicm_exact");
    CHECK(f[2] == "label");
    const double v = std::stod(f[3]);
    CHECK(v > prev);
    prev = v;
  }
  auto r2 = run_cli(args);
  CHECK(r2.output == r1.output);  // byte-identical rerun
}

TEST_CASE("rates: kinds=all satisfies the max-log ordering at 0 dB") {
  auto r = run_cli(
      "rates --constellation pam:2 --labeling nbc --kinds all --snr 0:0:1");
  REQUIRE(r.exit_code == 0);
  double mi_ex = -1, mi_ml = -1, harm_ml = -1, gmi_ml = -1;
  for (const auto& line : lines_of(r.output)) {
    auto f = csv_fields(line);
    if (f.size() < 4) continue;
    if (f[1] == "mi_bicm_exact") mi_ex = std::stod(f[3]);
    if (f[1] == "mi_bicm_maxlog") mi_ml = std::stod(f[3]);
    if (f[1] == "gmi_harm_maxlog") harm_ml = std::stod(f[3]);
    if (f[1] == "gmi_bicm_maxlog") gmi_ml = std::stod(f[3]);
  }
  REQUIRE(mi_ex >= 0);
  REQUIRE(mi_ml >= 0);
  REQUIRE(harm_ml >= 0);
  REQUIRE(gmi_ml >= 0);
  CHECK(mi_ex >= mi_ml - 1e-9);
  CHECK(mi_ml >= harm_ml - 1e-9);
  CHECK(harm_ml >= gmi_ml - 1e-9);
}

TEST_CASE("rates: bit-level kinds emit one row per bit position") {
  auto r = run_cli(
      "rates --constellation pam:2 --labeling nbc --kinds mi_maxlog,gmi_maxlog "
      "--snr 0:1:1");
  REQUIRE(r.exit_code == 0);
  auto lines = lines_of(r.output);
  // header + 2 grid points * 2 kinds * 2 bits
  REQUIRE(lines.size() == 9);
  CHECK(csv_fields(lines[1])[2] == "bit1");
  CHECK(csv_fields(lines[2])[2] == "bit2");
  // GMI rows carry the minimizing s, MI rows do not
  CHECK(csv_fields(lines[1])[4] == "");
  CHECK(csv_fields(lines[3])[4] != "");
}

TEST_CASE("rates: JSON constellation file") {
  const std::string path = "/tmp/bicm_test_constellation.json";
  {
    std::ofstream f(path);
    f << R"({"points": [-3, -1, 1, 3], "m": 2, "labeling": "nbc"})";
  }
  auto r = run_cli("rates --constellation " + path +
                   " --kinds mi_bicm_exact --snr 0:0:1");
  REQUIRE(r.exit_code == 0);
  auto pam = run_cli(
      "rates --constellation pam:2 --labeling nbc --kinds mi_bicm_exact "
      "--snr 0:0:1");
  CHECK(r.output == pam.output);
  std::remove(path.c_str());
}

TEST_CASE("rates: seeded Monte Carlo check passes") {
  auto r = run_cli(
      "rates --constellation pam:2 --labeling nbc --kinds gmi_bicm_maxlog "
      "--snr 0:0:1 --mc-check 200000 --seed 5");
  CHECK(r.exit_code == 0);
}

TEST_CASE("classify command") {
  auto gray = run_cli("classify --constellation pam:2 --labeling brgc");
  REQUIRE(gray.exit_code == 0);
  CHECK(gray.output.find("all bit positions lossless") != std::string::npos);

  auto natural = run_cli("classify --constellation pam:2 --labeling nbc");
  REQUIRE(natural.exit_code == 0);
  CHECK(natural.output.find("row 2 lossy (p_III)") != std::string::npos);

  auto eight = run_cli("classify --constellation pam:3 --labeling brgc");
  REQUIRE(eight.exit_code == 0);
  CHECK(eight.output.find("row 3 lossy") != std::string::npos);
}

TEST_CASE("loss: reference against itself is zero, out-of-range target is nan") {
  const std::string stem = "/tmp/bicm_test_loss";
  auto r = run_cli(
      "loss --constellation pam:2 --labeling brgc --reference mi_bicm_exact "
      "--degraded mi_bicm_exact --targets 0.5,1.0,5.0 --snr -10:10:0.5 --out " +
      stem);
  REQUIRE(r.exit_code == 0);  // out-of-range target warns, does not fail
  std::ifstream csv(stem + ".csv");
  REQUIRE(csv.good());
  std::string all((std::istreambuf_iterator<char>(csv)),
                  std::istreambuf_iterator<char>());
  auto lines = lines_of(all);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "kind,target_rate,loss_db");
  for (int i = 1; i <= 2; ++i) {
    auto f = csv_fields(lines[std::size_t(i)]);
    CHECK(std::abs(std::stod(f[2])) <= 1e-6);
  }
  CHECK(csv_fields(lines[3])[2] == "nan");
  std::ifstream svg(stem + ".svg");
  REQUIRE(svg.good());
  std::string svg_all((std::istreambuf_iterator<char>(svg)),
                      std::istreambuf_iterator<char>());
  CHECK(svg_all.find("<svg") != std::string::npos);
  CHECK(svg_all.find("polyline") != std::string::npos);
  std::remove((stem + ".csv").c_str());
  std::remove((stem + ".svg").c_str());
}

TEST_CASE("loss: bit-level kinds emit one curve per bit position") {
  const std::string stem = "/tmp/bicm_test_bitloss";
  auto r = run_cli(
      "loss --constellation pam:2 --labeling nbc --reference mi_exact "
      "--degraded gmi_maxlog --targets 0.3 --snr -16:8:0.5 --out " +
      stem);
  REQUIRE(r.exit_code == 0);
  std::ifstream csv(stem + ".csv");
  REQUIRE(csv.good());
  std::string all((std::istreambuf_iterator<char>(csv)),
                  std::istreambuf_iterator<char>());
  auto lines = lines_of(all);
  REQUIRE(lines.size() == 3);
  CHECK(csv_fields(lines[1])[0] == "gmi_maxlog:bit1");
  CHECK(csv_fields(lines[2])[0] == "gmi_maxlog:bit2");
  // both patterns lose something against the exact-L MI
  const double l1 = std::stod(csv_fields(lines[1])[2]);
  const double l2 = std::stod(csv_fields(lines[2])[2]);
  CHECK(l1 > 0.001);
  CHECK(l2 > 0.001);
  std::remove((stem + ".csv").c_str());
  std::remove((stem + ".svg").c_str());
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run_cli("rates --constellation pam:9 --snr 0:1:1").exit_code == 2);
  CHECK(run_cli("rates --constellation pam:2 --kinds bogus --snr 0:1:1").exit_code == 2);
  CHECK(run_cli("rates --constellation pam:2 --snr 5:0:1").exit_code == 2);
  CHECK(run_cli("rates --constellation /tmp/does_not_exist.json --snr 0:1:1")
            .exit_code == 2);
  CHECK(run_cli("classify --constellation pam:2 --labeling \"[[0,1,1,1],[0,1,0,1]]\"")
            .exit_code == 2);
  CHECK(run_cli("loss --constellation pam:2 --reference mi_exact --degraded "
                "mi_bicm_maxlog --targets 0.5 --snr -5:5:1")
            .exit_code == 2);
}
