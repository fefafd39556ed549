#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "retla/cartan.hpp"
#include "retla/corpus.hpp"
#include "retla/io.hpp"
#include "retla/rng.hpp"

using namespace retla;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(RETLA_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("retla_test_app_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("named algebras") {
  const RestrictedLieAlgebra ex = make_named("ex44", 3);
  CHECK(ex.name() == "ex44(3)");
  CHECK(ex.labels() == std::vector<std::string>{"x", "t"});
  CHECK(make_named("sl2").p() == default_prime("sl2"));
  CHECK(make_named("gl2", 2).labels() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  CHECK(make_named("witt", 5).labels().front() == "e_-1");
  CHECK(make_named("witt", 5).dim() == 5);
  CHECK(make_named("vt_weights:1,2,0", 5).dim() == 4);
  CHECK(make_named("nil_3", 2).dim() == 3);
  CHECK_THROWS_AS(make_named("witt", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_named("sl2", 4), std::invalid_argument);
  CHECK_THROWS_AS(make_named("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(make_named("toral_0", 3), std::invalid_argument);
  CHECK_THROWS_AS(make_named("nil_13", 3), std::invalid_argument);
}

TEST_CASE("every corpus entry validates and matches its recorded facts") {
  CHECK(default_corpus().size() == 11);
  for (const auto& e : default_corpus()) {
    CAPTURE(e.name);
    const RestrictedLieAlgebra g = e.build();
    CHECK(validate(g).ok());
    CHECK(check_expected(e, kDefaultBudget).empty());
  }
}

TEST_CASE("JSON round trip") {
  for (const auto& e : default_corpus()) {
    const RestrictedLieAlgebra g = e.build();
    const RestrictedLieAlgebra back = from_json(nlohmann::json::parse(to_json(g).dump()));
    CHECK(back.same_structure(g));
    CHECK(back.name() == g.name());
  }
  const std::string path = (scratch() / "sl2.json").string();
  save(make_named("sl2", 5), path);
  CHECK(load(path).same_structure(make_named("sl2", 5)));
}

TEST_CASE("a hand-written document matches the named algebra") {
  const RestrictedLieAlgebra g = parse_algebra(R"j({
    "name": "ex44(3)", "p": 3, "dim": 2, "basis": ["x", "t"],
    "brackets": [[0, 1, 0, 2]],
    "pmap": {"t": [[1, 1]]}
  })j");
  CHECK(g.same_structure(make_named("ex44", 3)));
  CHECK(validate(g).ok());
}

TEST_CASE("schema errors name the offending field") {
  auto field_of = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const SchemaError& e) {
      return e.field;
    }
    return std::string("no error");
  };
  CHECK(field_of(R"j({"name":"a","p":4,"dim":1,"basis":["a"],"brackets":[],"pmap":{}})j") == "p");
  CHECK(field_of(R"j({"name":"a","p":3,"dim":2,"basis":["a"],"brackets":[],"pmap":{}})j") == "dim");
  CHECK(field_of(R"j({"name":"a","p":3,"dim":2,"basis":["a","a"],"brackets":[],"pmap":{}})j").rfind("basis", 0) == 0);
  CHECK(field_of(R"j({"name":"a","p":3,"dim":2,"basis":["a","b"],"brackets":[[1,0,0,1]],"pmap":{}})j").rfind("brackets", 0) == 0);
  CHECK(field_of(R"j({"name":"a","p":3,"dim":2,"basis":["a","b"],"brackets":[[0,1,0,3]],"pmap":{}})j").rfind("brackets", 0) == 0);
  CHECK(field_of(R"j({"name":"a","p":3,"dim":1,"basis":["a"],"brackets":[],"pmap":{"z":[]}})j").rfind("pmap", 0) == 0);
  CHECK(field_of(R"j({"name":"a","p":3,"dim":1,"basis":["a"],"brackets":[],"pmap":{},"extra":1})j") == "extra");

  try {
    parse_algebra("{\n  \"p\": 3,\n  oops\n}");
    FAIL("expected a syntax error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("loading an algebra that breaks the axioms") {
  // [e,f] = e breaks the Jacobi identity in sl2
  const std::string path = write_file("broken.json", R"j({"name":"broken","p":3,"dim":3,"basis":["e","h","f"],
    "brackets":[[0,1,0,1],[1,2,2,2],[0,2,0,1]],"pmap":{}})j");
  CHECK_THROWS_AS(load(path), ValidationError);
  CHECK_NOTHROW(load(path, false));
  CHECK_THROWS_AS(load((scratch() / "missing.json").string()), std::runtime_error);
}

TEST_CASE("random matrix algebras") {
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MatrixAlgebra m = random_gl_subalgebra(n, p, 2, seed);
        CHECK(m.algebra.dim() <= n * n);
        CHECK(validate(m.algebra).ok());
        CHECK(m.algebra.same_structure(random_gl_subalgebra(n, p, 2, seed).algebra));
      }
  CHECK(random_gl_subalgebra(2, 3, 0, 1).algebra.dim() == 0);
  CHECK(random_gl_subalgebra(2, 3, 1, 4).algebra.name() == "random(n=2,p=3,gens=1,seed=4)");
  CHECK_THROWS_AS(random_gl_subalgebra(5, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_gl_subalgebra(2, 7, 1, 0), std::invalid_argument);

  // the p-map is the matrix p-th power
  const MatrixAlgebra m = random_gl_subalgebra(3, 2, 2, 3);
  Rng rng = make_rng(21);
  for (int i = 0; i < 100; ++i) {
    const Element x = random_element(rng, m.algebra.whole());
    CHECK(m.to_matrix(p_power(m.algebra, x)) == m.to_matrix(x).power(2));
    const Element y = random_element(rng, m.algebra.whole());
    const FpMatrix a = m.to_matrix(x), b = m.to_matrix(y);
    CHECK(m.to_matrix(bracket(m.algebra, x, y)) == a * b - b * a);
  }
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.claim_id = "thm1.5";
  r.algebra = "ex44(2)";
  r.status = Status::Pass;
  r.detail = "d";
  r.witnesses = {"span(t)"};
  r.seed = 7;
  r.budget = 10;
  r.millis = 5;
  CHECK(to_json(r, false).dump() ==
        R"j({"claim_id":"thm1.5","algebra":"ex44(2)","status":"Pass","detail":"d","witnesses":["span(t)"],"seed":7,"budget":10})j");
  CHECK(to_json(r, true).contains("millis"));
}

TEST_CASE("CLI subcommands and exit codes") {
  const Run made = run_cli("make ex44 --p 3 --out " + (scratch() / "ex.json").string());
  CHECK(made.code == 0);
  const std::string ex = (scratch() / "ex.json").string();
  CHECK(load(ex).same_structure(make_named("ex44", 3)));

  const Run check = run_cli("check " + ex);
  CHECK(check.code == 0);
  CHECK(check.out.find("valid: true") != std::string::npos);

  const std::string broken = write_file("broken_cli.json", R"j({"name":"broken","p":3,"dim":3,"basis":["e","h","f"],
    "brackets":[[0,1,0,1],[1,2,2,2],[0,2,0,1]],"pmap":{}})j");
  const Run bad = run_cli("check " + broken);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("valid: false") != std::string::npos);

  const Run en = run_cli("enumerate " + ex);
  CHECK(en.code == 0);
  CHECK(en.out.find(R"j(["span(t)","span(x+t)","span(x+2t)"])j") != std::string::npos);

  const Run ca = run_cli("cartan " + ex + " --json");
  CHECK(ca.code == 0);
  const auto doc = nlohmann::json::parse(ca.out);
  CHECK(doc["is_cartan"] == true);

  const Run ver = run_cli("verify " + ex + " --theorems thm1.5");
  CHECK(ver.code == 0);
  CHECK(ver.out.rfind("Pass  thm1.5  ex44(3)  not nilpotent, 3 maximal torals", 0) == 0);

  const Run venv = run_cli("env " + ex);
  CHECK(venv.code == 0);
  CHECK(venv.out.find("local: false") != std::string::npos);

  CHECK(run_cli("analyze " + ex).code == 0);
  CHECK(run_cli("verify " + ex + " --theorems nope").code == 3);
  CHECK(run_cli("check " + (scratch() / "missing.json").string()).code == 3);
  CHECK(run_cli("check " + write_file("p4.json", R"j({"p":4})j")).code == 3);
  CHECK(run_cli("").code == 3);

  const Run rnd = run_cli("random --n 2 --p 3 --gens 1 --seed 0 --count 3");
  CHECK(rnd.code == 0);
  std::size_t lines = 0;
  for (char c : rnd.out) lines += c == '\n';
  CHECK(lines == 3);
  CHECK(rnd.out == run_cli("random --n 2 --p 3 --gens 1 --seed 0 --count 3").out);
}

TEST_CASE("CLI exit code 2 when the budget runs out") {
  const Run r = run_cli("make witt --out " + (scratch() / "witt.json").string());
  REQUIRE(r.code == 0);
  const Run v = run_cli("verify " + (scratch() / "witt.json").string() + " --theorems lemma3.2 --budget 16");
  CHECK(v.code == 2);
  CHECK(v.out.rfind("Inconclusive", 0) == 0);
}
