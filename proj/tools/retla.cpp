// retla: command-line front end.
//
// Exit codes: 0 all pass, 1 any failure, 2 inconclusive without failure,
// 3 usage or I/O error.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "retla/cartan.hpp"
#include "retla/corpus.hpp"
#include "retla/enveloping.hpp"
#include "retla/io.hpp"
#include "retla/semisimple.hpp"
#include "retla/verify.hpp"

namespace {

using namespace retla;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Options {
  std::string file;
  bool corpus = false;
  std::string theorems;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  bool json = false;
  bool timing = false;
  std::size_t n = 2;
  unsigned p = 2;
  std::size_t gens = 1;
  std::size_t count = 1;
  std::string out;
  std::string name;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> series_strings(const RestrictedLieAlgebra& g, const std::vector<Subspace>& s) {
  std::vector<std::string> out;
  for (const auto& x : s) out.push_back(format_subspace(g, x));
  return out;
}

void emit(const ordered_json& j, bool as_json) {
  if (as_json) {
    std::cout << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

int run_check(const Options& o) {
  const RestrictedLieAlgebra g = load(o.file, false);
  const ValidationReport r = validate(g);
  ordered_json j;
  j["algebra"] = g.name();
  j["valid"] = r.ok();
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"indices", v.indices}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  emit(j, o.json);
  return r.ok() ? kExitPass : kExitFail;
}

ordered_json certificate_json(const RestrictedLieAlgebra& g, const MaximalToralCertificate& c) {
  ordered_json j;
  j["toral"] = format_subspace(g, c.toral.space);
  j["cartan"] = format_subspace(g, c.cartan.space);
  j["cartan_is_nilpotent"] = c.checks.cartan_is_nilpotent;
  j["central_toral_part_equals_toral"] = c.checks.central_toral_part_equals_toral;
  j["complete"] = c.complete;
  return j;
}

int run_analyze(const Options& o) {
  const RestrictedLieAlgebra g = load(o.file);
  ordered_json j;
  j["algebra"] = g.name();
  j["p"] = g.p();
  j["dim"] = g.dim();
  j["center"] = format_subspace(g, center(g).space);
  j["derived_series"] = series_strings(g, derived_series(g));
  j["lower_central_series"] = series_strings(g, lower_central_series(g));
  j["nilpotent"] = is_nilpotent(g);
  j["p_nilpotent"] = is_p_nilpotent_algebra(g);
  const RadicalResult r = p_nilpotent_radical(g, o.budget, o.seed);
  j["radical"] = format_subspace(g, r.radical.space);
  j["radical_exactness"] = to_string(r.exactness);
  if (r.plain_variant) j["radical_plain_ideal_variant"] = format_subspace(g, *r.plain_variant);
  const MaximalToralCertificate c = maximal_toral(g, o.seed, o.budget);
  j["maximal_toral"] = certificate_json(g, c);
  emit(j, o.json);
  return c.complete ? kExitPass : kExitInconclusive;
}

int run_cartan(const Options& o) {
  const RestrictedLieAlgebra g = load(o.file);
  const MaximalToralCertificate c = maximal_toral(g, o.seed, o.budget);
  ordered_json j = certificate_json(g, c);
  j["is_cartan"] = c.complete && is_cartan(g, c.cartan.space);
  emit(j, o.json);
  if (!c.complete) return kExitInconclusive;
  return c.checks.valid() && j["is_cartan"].get<bool>() ? kExitPass : kExitFail;
}

int run_enumerate(const Options& o) {
  const RestrictedLieAlgebra g = load(o.file);
  const ToralEnumeration e = enumerate_torals(g, o.budget, o.seed);
  ordered_json j;
  j["algebra"] = g.name();
  j["exact"] = e.exact;
  j["maximal_torals"] = series_strings(g, e.maximal);
  j["cartans"] = series_strings(g, cartans_of(g, e));
  j["toral_count"] = e.all.size();
  emit(j, o.json);
  return e.exact ? kExitPass : kExitInconclusive;
}

int run_env(const Options& o) {
  const RestrictedLieAlgebra g = load(o.file);
  const UAlgebra u(g);
  ordered_json j;
  j["algebra"] = g.name();
  j["dim"] = u.dim();
  j["local"] = is_local(u, o.seed);
  const SeparabilityCheck s = commutative_separable_check(u);
  j["commutative"] = s.commutative;
  if (s.frobenius_bijective)
    j["frobenius_bijective"] = *s.frobenius_bijective;
  else
    j["frobenius_bijective"] = "not applicable";
  emit(j, o.json);
  return kExitPass;
}

int run_random(const Options& o) {
  if (!o.out.empty()) std::filesystem::create_directories(o.out);
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    const MatrixAlgebra m = random_gl_subalgebra(o.n, o.p, o.gens, seed);
    if (o.out.empty()) {
      std::cout << to_json(m.algebra).dump() << '\n';
    } else {
      const auto path = std::filesystem::path(o.out) /
                        ("random_n" + std::to_string(o.n) + "_p" + std::to_string(o.p) + "_g" +
                         std::to_string(o.gens) + "_s" + std::to_string(seed) + ".json");
      save(m.algebra, path.string());
      std::cout << path.string() << '\n';
    }
  }
  return kExitPass;
}

int run_make(const Options& o) {
  const RestrictedLieAlgebra g = make_named(o.name, o.p);
  if (o.out.empty())
    std::cout << to_json(g).dump(2) << '\n';
  else
    save(g, o.out);
  return kExitPass;
}

struct EntryResult {
  std::vector<VerificationReport> reports;
};

void print_report(const VerificationReport& r, const Options& o) {
  if (o.json) {
    std::cout << to_json(r, o.timing).dump() << '\n';
    return;
  }
  std::cout << to_string(r.status) << "  " << r.claim_id << "  " << r.algebra << "  " << r.detail;
  if (!r.witnesses.empty()) {
    std::cout << "  [";
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) std::cout << (i ? "; " : "") << r.witnesses[i];
    std::cout << "]";
  }
  if (o.timing) std::cout << "  (" << r.millis << " ms)";
  std::cout << '\n';
}

VerificationReport facts_report(const CorpusEntry& entry, const std::string& algebra, const Options& o) {
  VerificationReport r;
  r.claim_id = "expected_facts";
  r.algebra = algebra;
  r.seed = o.seed;
  r.budget = o.budget;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> mismatches = check_expected(entry, o.budget, o.seed);
  r.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  r.status = mismatches.empty() ? Status::Pass : Status::Fail;
  r.detail = mismatches.empty() ? "recorded facts re-derived" : "recorded facts disagree with computation";
  r.witnesses = mismatches;
  return r;
}

int run_verify(const Options& o) {
  const std::vector<std::string> selection = split_list(o.theorems);
  for (const auto& id : selection)
    if (std::find(all_claims().begin(), all_claims().end(), id) == all_claims().end())
      throw CLI::ValidationError("--theorems", "unknown claim id " + id);

  std::vector<std::vector<VerificationReport>> results;
  if (o.corpus) {
    const auto& corpus = default_corpus();
    results.resize(corpus.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) {
        const RestrictedLieAlgebra g = corpus[i].build();
        results[i] = verify_theorems(g, selection, o.seed, o.budget);
        if (selection.empty()) results[i].push_back(facts_report(corpus[i], g.name(), o));
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(corpus.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  } else {
    results.push_back(verify_theorems(load(o.file), selection, o.seed, o.budget));
  }

  bool failed = false, inconclusive = false;
  for (const auto& entry : results)
    for (const auto& r : entry) {
      print_report(r, o);
      failed |= r.status == Status::Fail;
      inconclusive |= r.status == Status::Inconclusive;
    }
  return failed ? kExitFail : inconclusive ? kExitInconclusive : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Lie algebras over F_p: toral and Cartan subalgebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--budget", o.budget, "cap on exhaustive element sweeps")->capture_default_str();
    sub->add_flag("--json", o.json, "line-delimited JSON output");
  };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "algebra JSON file")->required(); };

  auto* check = app.add_subcommand("check", "validate the axioms of an algebra file");
  add_file(check);
  check->add_flag("--json", o.json, "JSON output");

  auto* analyze = app.add_subcommand("analyze", "structure summary");
  add_file(analyze);
  add_common(analyze);

  auto* cartan = app.add_subcommand("cartan", "certified maximal toral and its Cartan subalgebra");
  add_file(cartan);
  add_common(cartan);

  auto* enumerate = app.add_subcommand("enumerate", "all maximal toral subalgebras");
  add_file(enumerate);
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  verify->add_option("file", o.file, "algebra JSON file");
  verify->add_flag("--corpus", o.corpus, "run on the built-in corpus");
  verify->add_option("--theorems", o.theorems, "comma-separated claim ids (default: all)");
  verify->add_option("--jobs", o.jobs, "parallel corpus entries")->capture_default_str();
  verify->add_flag("--timing", o.timing, "include elapsed milliseconds");
  add_common(verify);

  auto* env = app.add_subcommand("env", "restricted enveloping algebra checks");
  add_file(env);
  env->add_option("--seed", o.seed, "random seed")->capture_default_str();
  env->add_flag("--json", o.json, "JSON output");

  auto* random = app.add_subcommand("random", "seeded random subalgebras of gl_n");
  random->add_option("--n", o.n, "matrix size")->required();
  random->add_option("--p", o.p, "prime")->required();
  random->add_option("--gens", o.gens, "number of generators")->required();
  random->add_option("--seed", o.seed, "first seed")->capture_default_str();
  random->add_option("--count", o.count, "number of algebras")->capture_default_str();
  random->add_option("--out", o.out, "output directory (default: stdout)");

  auto* make = app.add_subcommand("make", "write a named corpus algebra as JSON");
  make->add_option("name", o.name, "algebra name")->required();
  make->add_option("--p", o.p, "prime (default per algebra)");
  make->add_option("--out", o.out, "output file (default: stdout)");
  o.p = 0;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (random->parsed() && o.p == 0) o.p = 2;

  try {
    if (check->parsed()) return run_check(o);
    if (analyze->parsed()) return run_analyze(o);
    if (cartan->parsed()) return run_cartan(o);
    if (enumerate->parsed()) return run_enumerate(o);
    if (verify->parsed()) {
      if (o.corpus == !o.file.empty()) {
        std::cerr << "verify: give exactly one of <file> or --corpus\n";
        return kExitUsage;
      }
      return run_verify(o);
    }
    if (env->parsed()) return run_env(o);
    if (random->parsed()) return run_random(o);
    if (make->parsed()) return run_make(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitFail;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
