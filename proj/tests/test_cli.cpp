// Subprocess tests of the ncorlicz binary: exit codes, report determinism,
// and the corpus generator. The binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ncorlicz/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_binary;
fs::path g_dir;

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const fs::path out = g_dir / "stdout.txt";
  const std::string cmd = g_binary + " " + args + " > " + out.string() + " 2> " +
                          (g_dir / "stderr.txt").string();
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string diag34_path() {
  const fs::path p = g_dir / "diag34.json";
  write_file(p, R"({
    "algebra": {"blocks":[{"dim":2,"trace_scale":1.0}]},
    "entries": [[[[3.0,0.0],[0.0,0.0]],[[0.0,0.0],[4.0,0.0]]]]
  })");
  return p.string();
}

}  // namespace

TEST_CASE("norm subcommand") {
  const std::string op = diag34_path();
  SUBCASE("luxemburg power(2) of diag(3,4) is 5") {
    const auto r = run("norm --operator " + op + R"( --phi '{"family":"power","alpha":2}')");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.at("value").get<double>() == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(j.at("method").get<std::string>() == "bisection");
  }
  SUBCASE("zero operator") {
    const fs::path p = g_dir / "zero.json";
    write_file(p, R"({
      "algebra": {"blocks":[{"dim":2,"trace_scale":1.0}]},
      "entries": [[[[0.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]]]
    })");
    const auto r = run("norm --operator " + p.string() + R"( --phi '{"family":"power","alpha":2}')");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text).at("value").get<double>() == 0.0);
  }
  SUBCASE("orlicz gauge lands in the two-sided band") {
    const auto r = run("norm --operator " + op +
                       R"( --gauge orlicz --phi '{"family":"power","alpha":2}')");
    REQUIRE(r.exit_code == 0);
    const double v = json::parse(r.stdout_text).at("value").get<double>();
    CHECK(v >= 5.0);
    CHECK(v <= 10.0 + 1e-8);
  }
  SUBCASE("lp flag") {
    const auto r = run("norm --operator " + op + " --p 2");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.stdout_text).at("value").get<double>() ==
          doctest::Approx(5.0).epsilon(1e-12));
  }
  SUBCASE("malformed operator file exits 2") {
    const fs::path p = g_dir / "broken.json";
    write_file(p, "{ not json");
    const auto r = run("norm --operator " + p.string());
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("verify subcommand") {
  SUBCASE("clarkson passes with exit 0") {
    const auto r = run("verify clarkson --seed 7 --trials 60 --dim 2");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.at("check").get<std::string>() == "clarkson");
    CHECK(j.at("violations").get<long>() == 0);
  }
  SUBCASE("reports are byte-identical modulo runtime_ms") {
    const auto r1 = run("verify scalar --seed 5");
    const auto r2 = run("verify scalar --seed 5");
    REQUIRE(r1.exit_code == 0);
    json a = json::parse(r1.stdout_text), b = json::parse(r2.stdout_text);
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    CHECK(a == b);
  }
  SUBCASE("unknown suite exits 2") { CHECK(run("verify bogus").exit_code == 2); }
  SUBCASE("malformed config exits 2") {
    const fs::path p = g_dir / "bad_config.json";
    write_file(p, "]{[");
    CHECK(run("verify clarkson --config " + p.string()).exit_code == 2);
  }
  SUBCASE("config file values are applied") {
    const fs::path p = g_dir / "config.json";
    write_file(p, R"({"trials": 30, "seed": 9})");
    const auto r = run("verify clarkson --dim 2 --config " + p.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    CHECK(j.at("seed").get<std::uint64_t>() == 9);
    CHECK(j.at("trials").get<long>() == 90);  // three s-values per trial unit
  }
  SUBCASE("text format") {
    const auto r = run("verify scalar --format text");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("check: scalar") != std::string::npos);
    CHECK(r.stdout_text.find("violations: 0") != std::string::npos);
  }
}

TEST_CASE("gen subcommand") {
  const fs::path dir = g_dir / "corpus";
  SUBCASE("deterministic corpus") {
    const auto r1 = run("gen --blocks 2,3 --count 3 --seed 9 --out " + dir.string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(fs::exists(dir / "op_000.json"));
    REQUIRE(fs::exists(dir / "op_002.json"));
    std::stringstream first;
    first << std::ifstream(dir / "op_001.json").rdbuf();
    const auto r2 = run("gen --blocks 2,3 --count 3 --seed 9 --out " + dir.string());
    REQUIRE(r2.exit_code == 0);
    std::stringstream second;
    second << std::ifstream(dir / "op_001.json").rdbuf();
    CHECK(first.str() == second.str());

    const auto op = nco::operator_from_json(json::parse(first.str()));
    CHECK(op.algebra().blocks().size() == 2);
    CHECK(op.algebra().blocks()[0].dim == 2);
    CHECK(op.algebra().blocks()[1].dim == 3);
  }
  SUBCASE("positive kind yields PSD operators on reload") {
    const fs::path pdir = g_dir / "corpus_psd";
    REQUIRE(run("gen --blocks 3 --kind positive --count 2 --seed 4 --out " + pdir.string())
                .exit_code == 0);
    for (const char* name : {"op_000.json", "op_001.json"}) {
      std::ifstream in(pdir / name);
      json j;
      in >> j;
      const auto op = nco::operator_from_json(j);
      CHECK(op.is_hermitian(1e-10));
      // positive: tau(A) equals the weighted singular value sum, so no
      // eigenvalue can be negative
      const auto spec = nco::weighted_singular_values(op);
      double sv_sum = 0.0;
      for (size_t i = 0; i < spec.values.size(); ++i) sv_sum += spec.weights[i] * spec.values[i];
      CHECK(std::real(nco::trace(op)) == doctest::Approx(sv_sum).epsilon(1e-10));
      CHECK(spec.max_value > 0.0);
    }
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <ncorlicz-binary>\n");
    return 1;
  }
  g_binary = argv[1];
  g_dir = fs::temp_directory_path() / "ncorlicz_cli_test";
  fs::create_directories(g_dir);
  doctest::Context ctx;
  return ctx.run();
}
