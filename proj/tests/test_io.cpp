#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "szego/io_json.hpp"
#include "szego/sum_rules.hpp"

using namespace szego;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SZEGOKIT_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("explicit sequence JSON round trip is bitwise") {
  const json j = json::parse(R"({"kind":"explicit","values":[[0.5,0],[-0.25,0.125]]})");
  const VerblunskySequence a = sequence_from_json(j);
  REQUIRE(a.length() == 2);
  CHECK(a.value(0) == Cplx(0.5, 0.0));
  CHECK(a.value(1) == Cplx(-0.25, 0.125));
  const VerblunskySequence b = sequence_from_json(sequence_to_json(a));
  for (std::size_t k = 0; k < a.length(); ++k) CHECK(a.value(k) == b.value(k));
  CHECK(z_sum(a) == z_sum(b));
}

TEST_CASE("formula sequence JSON round trip") {
  const json j = json::parse(
      R"({"kind":"formula","name":"corollary","params":{"scale":0.3333333333333333,"exponent":0.25},"horizon":50})");
  const VerblunskySequence a = sequence_from_json(j);
  CHECK(a.length() == 50);
  const VerblunskySequence b = sequence_from_json(sequence_to_json(a));
  for (std::size_t k = 0; k < a.length(); ++k) CHECK(a.value(k) == b.value(k));
  CHECK(a.value(0).real() == doctest::Approx(2.0 * 0.3333333333333333).epsilon(1e-15));
}

TEST_CASE("sequence loading rejects invalid inputs") {
  CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"kind":"explicit","values":[[1.5,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"kind":"explicit","values":[[1.0,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"values":[[0.5,0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(sequence_from_json(json::parse(R"({"kind":"mystery"})")),
                  std::invalid_argument);
}

TEST_CASE("decomposition JSON carries the residuals") {
  const VerblunskySequence a = VerblunskySequence::corollary(32);
  const std::vector<ComplexPoly> ps = {parse_poly("(z-1)^2"), parse_poly("(z+1)")};
  const json j = decomp_to_json(decompose(a, ps));
  CHECK(j.contains("bezout_residual"));
  CHECK(j.contains("reconstruction_residual"));
  CHECK(j.at("cofactors").size() == 2);
  CHECK(j.at("components").size() == 2);
}

TEST_CASE("term table CSV has one row per index") {
  const VerblunskySequence a = VerblunskySequence::corollary(5);
  const TermTable t = term_table(a);
  const std::string csv = term_table_to_csv(t);
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == t.rows.size() + 1);  // header + rows
  CHECK(csv.rfind("k,L,E,G,", 0) == 0);
}

TEST_CASE("trig weight spec round trip") {
  const TrigWeight w = TrigWeight::parse("theta=0,m=2;theta=pi,m=1");
  REQUIRE(w.factors().size() == 2);
  CHECK(w.factors()[0].multiplicity == 2);
  CHECK(w.factors()[1].theta == doctest::Approx(3.14159265358979).epsilon(1e-12));
  const TrigWeight back = TrigWeight::parse(w.to_string());
  CHECK(back.factors()[0].theta == w.factors()[0].theta);
  CHECK(back.factors()[1].multiplicity == w.factors()[1].multiplicity);
  CHECK_THROWS_AS(TrigWeight::parse("m=2"), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// CLI surface
// ---------------------------------------------------------------------------

TEST_CASE("cli zsum prints the golden value and exits 0") {
  const CliResult r = run_cli(R"(zsum --seq '{"kind":"explicit","values":[[0.5,0]]}')");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("-0.320924") != std::string::npos);
  const json out = json::parse(r.stdout_text);
  CHECK(out.at("config").at("subcommand") == "zsum");
  CHECK(out.at("result").at("z_sum").get<double>() ==
        doctest::Approx(-0.32092436955922377).epsilon(1e-12));
}

TEST_CASE("cli rejects coefficients outside the disk with exit 2") {
  const CliResult r = run_cli(R"(zsum --seq '{"kind":"explicit","values":[[1.5,0]]}')");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli rejects unknown flags with exit 2") {
  const CliResult r = run_cli("zsum --no-such-flag 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli rejects malformed polynomials with exit 2") {
  const CliResult r =
      run_cli(R"(decompose --seq '{"kind":"explicit","values":[[0.5,0]]}' --poly '(z-1')");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli decompose emits the worked cofactors") {
  const CliResult r = run_cli(
      R"(decompose --seq '{"kind":"explicit","values":[[0.5,0],[0.1,0.2]]}' --poly '(z-1)^2' --poly '(z+1)')");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  const auto& cof = out.at("result").at("cofactors");
  CHECK(cof[0].at("text").get<std::string>() == "-0.25*z + 0.75");
  CHECK(cof[1].at("text").get<std::string>() == "0.25");
}

TEST_CASE("cli moments of the empty sequence are zero") {
  const CliResult r = run_cli(R"(moments --seq '{"kind":"explicit","values":[]}')");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  CHECK(out.at("result").at("z").get<double>() == 0.0);
}

TEST_CASE("cli output re-ingested as input reproduces identical results") {
  const CliResult first =
      run_cli(R"(zsum --seq '{"kind":"formula","name":"corollary","params":{"scale":0.3333333333333333,"exponent":0.25},"horizon":64}')");
  REQUIRE(first.exit_code == 0);
  const json out = json::parse(first.stdout_text);
  // the echoed config is itself a valid input spec
  const std::string echoed = out.at("config").at("seq").dump();
  const CliResult second = run_cli("zsum --seq '" + echoed + "'");
  REQUIRE(second.exit_code == 0);
  CHECK(json::parse(second.stdout_text).at("result") == out.at("result"));
}

TEST_CASE("cli identity-check exits 0 within tolerance") {
  const CliResult r = run_cli("identity-check --draws 2000 --radius 0.9 --seed 5");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  CHECK(out.at("result").at("max_rel_residual").get<double>() <= 1e-12);
}

TEST_CASE("cli lp with a difference operator applied first") {
  const CliResult r = run_cli(
      R"(lp --seq '{"kind":"formula","name":"corollary","params":{"scale":0.3333333333333333,"exponent":0.25},"horizon":65536}' --poly '(z-1)^2' --p 4)");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  CHECK(out.at("result").at("verdict").get<std::string>() == "log-divergent");
}

TEST_CASE("cli terms csv has the config echo comment") {
  const CliResult r = run_cli(
      R"(terms --seq '{"kind":"explicit","values":[[0.5,0]]}' --format csv)");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.rfind("# config:", 0) == 0);
  CHECK(r.stdout_text.find("k,L,E,G,") != std::string::npos);
}

TEST_CASE("cli terms exposes family partial sums at checkpoints") {
  const CliResult r = run_cli(
      R"(terms --seq '{"kind":"formula","name":"corollary","params":{"scale":0.3333333333333333,"exponent":0.25},"horizon":1024}' --checkpoints 10,100,1000)");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  const auto& partial = out.at("result").at("family_partial_sums");
  CHECK(partial.at("l1_L").size() == 3);
  CHECK(partial.at("sum_G").size() == 3);
  // the G prefix sums decrease (G_k <= 0)
  CHECK(partial.at("sum_G")[2].get<double>() < partial.at("sum_G")[0].get<double>());
}

TEST_CASE("cli moments csv emits one row per moment") {
  const CliResult r = run_cli(
      R"(moments --seq '{"kind":"explicit","values":[[0.5,0]]}' --format csv)");
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("m,re,im") != std::string::npos);
  CHECK(r.stdout_text.find("0,-0.28768207245178") != std::string::npos);
}

TEST_CASE("cli reconcile reports the frozen convention") {
  const CliResult r = run_cli(R"(reconcile --seq '{"kind":"explicit","values":[[0.5,0]]}')");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  CHECK(out.at("result").at("selected").get<std::string>() == "full-rows+telescope");
  CHECK(out.at("result").at("selected_is_frozen_default").get<bool>());
}

TEST_CASE("cli --out writes the payload to a file") {
  const std::string path = "/tmp/szegokit_test_out.json";
  std::remove(path.c_str());
  const CliResult r =
      run_cli(R"(zsum --seq '{"kind":"explicit","values":[[0.5,0]]}' --out )" + path);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  json out;
  in >> out;
  CHECK(out.at("result").at("z_sum").get<double>() ==
        doctest::Approx(-0.32092436955922377).epsilon(1e-12));
  std::remove(path.c_str());
}

TEST_CASE("cli weight accepts the pi angle token") {
  const CliResult r = run_cli(
      R"(weight --seq '{"kind":"explicit","values":[[0.5,0]]}' --theta 0,pi)");
  CHECK(r.exit_code == 0);
  const json out = json::parse(r.stdout_text);
  const auto& pts = out.at("result").at("points");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].at("weight").get<double>() == doctest::Approx(3.0).epsilon(1e-10));
  // at theta = pi the weight is (1 - |a|^2)/|1 + 1/2|^2 = 0.75/2.25 = 1/3
  CHECK(pts[1].at("weight").get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}
