#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "job.hpp"
#include "qci/error.hpp"

using namespace qci;

namespace {

const std::string golden_dir = QCI_GOLDEN_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qci");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Compares against tests/golden/<name>.json. QCI_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, std::vector<std::string> args, int expected_code = 0) {
  for (auto& a : args)
    if (a.ends_with(".qci")) a = golden_dir + "/" + a;
  const auto r = run(args);
  CHECK(r.code == expected_code);
  const std::string path = golden_dir + "/" + name + ".json";
  if (const char* u = std::getenv("QCI_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path) << r.out;
    return;
  }
  const auto want = slurp(path);
  REQUIRE_MESSAGE(!want.empty(), "missing golden file " << path);
  CHECK_MESSAGE(r.out == want, name << " differs from its golden file");
  // A second run must be byte-identical.
  CHECK(run(args).out == r.out);
}

}  // namespace

TEST_CASE("golden structured reports") {
  check_golden("hilbert_b", {"hilbert", "--json", "example_b.qci"});
  check_golden("gb_b_qq", {"gb", "--json", "example_b_qq.qci"});
  check_golden("gb_square_ci_lex", {"gb", "--json", "--order", "lex", "square_ci.qci"});
  check_golden("koszul_b", {"koszul", "--json", "example_b.qci"});
  check_golden("qci_b", {"qci", "--json", "example_b.qci"});
  check_golden("qci_b_f5", {"qci", "--json", "--prime", "5", "example_b_qq.qci"});
  check_golden("ezd_symbolic_b", {"ezd", "--json", "--symbolic", "example_b_qq.qci"});
  check_golden("ezd_elements", {"ezd", "--json", "square_ci.qci"});
  check_golden("ezd_search_b_f5", {"ezd", "--json", "--prime", "5", "--deg-bound", "2", "example_b.qci"});
  check_golden("dual_b", {"dual", "--json", "example_b_ring.qci"});
  check_golden("resolve_k_b", {"resolve", "--json", "--hd-bound", "3", "example_b_ring.qci"});
  check_golden("resolve_quotient_b", {"resolve", "--json", "example_b.qci"});
  check_golden("betti_ambient_b", {"betti-ambient", "--json", "example_b_ring.qci"});
  check_golden("quadrics_n3", {"quadrics", "--json", "--n", "3", "--trials", "4", "--seed", "7"});
  check_golden("quadrics_n4", {"quadrics", "--json", "--n", "4", "--trials", "3", "--seed", "7"});
  check_golden("error_unknown_variable", {"hilbert", "--json", "bad_input.qci"}, 2);
}

TEST_CASE("reports embed what is needed to rerun them") {
  const auto r = run({"quadrics", "--json", "--n", "2", "--trials", "1", "--seed", "42", "--prime", "103"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"seed\": 42") != std::string::npos);
  CHECK(r.out.find("\"prime\": 103") != std::string::npos);
  CHECK(r.out.find("\"order\": \"grevlex\"") != std::string::npos);
  const auto g = run({"gb", "--json", "--order", "lex", "-e", "ring QQ[x,y]/(x^2-y, y^3)"});
  CHECK(g.out.find("\"order\": \"lex\"") != std::string::npos);
  CHECK(g.out.find("\"prime\": 0") != std::string::npos);
}

TEST_CASE("exit codes") {
  const std::string b = golden_dir + "/example_b.qci";
  CHECK(run({"qci", b}).code == cli::exit_ok);
  CHECK(run({"qci", "--assert", b}).code == cli::exit_ok);
  // (x*y) is not a q.c.i. ideal of k[x,y]/(x^2,y^2).
  CHECK(run({"qci", "-e", "ring F7[x,y]/(x^2,y^2)", "-e", "ideal (x*y)"}).code == cli::exit_ok);
  CHECK(run({"qci", "--assert", "-e", "ring F7[x,y]/(x^2,y^2)", "-e", "ideal (x*y)"}).code == cli::exit_refuted);
  // No linear exact zero-divisor inside I over F5.
  CHECK(run({"ezd", "--assert", "--prime", "5", b}).code == cli::exit_refuted);
  CHECK(run({"ezd", "--assert", "-e", "ring F7[x,y]/(x^2,y^2)", "-e", "element x+y"}).code == cli::exit_ok);

  CHECK(run({"hilbert", golden_dir + "/bad_input.qci"}).code == cli::exit_input_error);
  CHECK(run({"hilbert", "-e", "ring F9[x]/(x^2)"}).code == cli::exit_input_error);
  CHECK(run({"hilbert", "-e", "ring F7[x,y]/(x^2)"}).code == cli::exit_input_error);
  CHECK(run({"koszul", "-e", "ring F7[x]/(x^2)"}).code == cli::exit_input_error);
  CHECK(run({"quadrics", "-e", "ring F7[x]/(x^2)"}).code == cli::exit_input_error);
  CHECK(run({"hilbert", "/nonexistent/input.qci"}).code == cli::exit_input_error);
  CHECK(run({"nosuchcommand"}).code == cli::exit_input_error);
  CHECK(run({"hilbert", "--order", "deglex", b}).code == cli::exit_input_error);
  CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("characteristic 2 is accepted with a restriction note") {
  const auto r = run({"hilbert", "-e", "ring F2[x1]/(x1^2)"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.err.find("characteristic 2") != std::string::npos);
  CHECK(r.out.find("hilbert_series: 1 1") != std::string::npos);
  const auto d = run({"dual", "-e", "ring F2[x1]/(x1^2)"});
  CHECK(d.code == cli::exit_input_error);
  CHECK(d.err.find("unsupported_characteristic") != std::string::npos);
}

TEST_CASE("errors carry line and column") {
  const auto r = run({"hilbert", golden_dir + "/bad_input.qci"});
  CHECK(r.err.find("2:27: unknown variable 'w'") != std::string::npos);
  const auto f = run({"hilbert", "-e", "ring  F9[x]/(x^2)"});
  CHECK(f.err.find("1:7:") != std::string::npos);
  const auto s = run({"hilbert", "-e", "ring F7[x]/(x^2)", "-e", "idael (x)"});
  CHECK(s.err.find("2:1: unknown statement 'idael'") != std::string::npos);
}

TEST_CASE("text reports") {
  const auto r = run({"koszul", golden_dir + "/example_b.qci"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("relations: x1^2 - x2*x3, x2^2 - x3*x5,") != std::string::npos);
  CHECK(r.out.find("    - p: 1\n      z: 20\n      b: 12\n      h: 8\n") != std::string::npos);
  CHECK(r.out.find("euler_characteristic: 0") != std::string::npos);
  const auto q = run({"quadrics", "--n", "2", "--trials", "2"});
  CHECK(q.out.find("trial 1: regular true") != std::string::npos);
  CHECK(q.out.find("pairs_verified: 2") != std::string::npos);
}

TEST_CASE("input grammar") {
  cli::JobSpec job;
  cli::parse_input("# comment\nring QQ[a, x1..x3, b]/(a^2,\n  x1*x2) ; ideal (a + b, x3)\nelement a*b # trailing\n", job);
  REQUIRE(job.ring);
  CHECK(job.ring->field.text == "QQ");
  CHECK(job.ring->variables == std::vector<std::string>{"a", "x1", "x2", "x3", "b"});
  REQUIRE(job.ring->relations.size() == 2);
  CHECK(job.ring->relations[1].text == "x1*x2");
  CHECK(job.ring->relations[1].line == 3);
  CHECK(job.ring->relations[1].column == 3);
  REQUIRE(job.ideal);
  CHECK(job.ideal->size() == 2);
  CHECK((*job.ideal)[1].column == 26);
  REQUIRE(job.elements.size() == 1);
  CHECK(job.elements[0].text == "a*b");

  auto fails_at = [](const std::string& text, int line, int column) {
    cli::JobSpec j;
    try {
      cli::parse_input(text, j);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no parse error for " << text);
  };
  fails_at("ring F7[x,x]/(x^2)", 1, 11);
  fails_at("ring F7[x1..y3]/(x1^2)", 1, 13);
  fails_at("ring F7[]/(x^2)", 1, 9);
  fails_at("ring F7[x]/(x^2", 1, 16);
  fails_at("ring F7[x]/(x^2,)", 1, 17);
  fails_at("ring F7[x]/(x^2)\nring F7[y]/(y^2)", 2, 1);
  fails_at("ring F7[x]/(x^2) ideal (x)", 1, 18);
  fails_at("element", 1, 8);
}
