// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <chrono>
#include <deque>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "retla/cartan.hpp"
#include "retla/corpus.hpp"
#include "retla/enveloping.hpp"
#include "retla/rng.hpp"
#include "retla/semisimple.hpp"
#include "retla/verify.hpp"

using namespace retla;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& what) {
    if (ok) note = what;
    ok = false;
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

oracle::PPower pp_of(const RestrictedLieAlgebra& g) {
  return [&g](const Element& x) { return p_power(g, x); };
}

std::vector<RestrictedLieAlgebra> corpus_algebras() {
  std::vector<RestrictedLieAlgebra> out;
  for (const auto& e : default_corpus()) out.push_back(e.build());
  return out;
}

std::vector<RestrictedLieAlgebra> random_algebras() {
  std::vector<RestrictedLieAlgebra> out;
  for (auto [n, p] : std::vector<std::pair<std::size_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}})
    for (std::uint64_t seed = 0; seed < 100; ++seed) out.push_back(random_gl_subalgebra(n, p, 1 + seed % 2, seed).algebra);
  return out;
}

const std::vector<RestrictedLieAlgebra>& corpus() {
  static const auto c = corpus_algebras();
  return c;
}
const std::vector<RestrictedLieAlgebra>& randoms() {
  static const auto r = random_algebras();
  return r;
}

std::vector<const RestrictedLieAlgebra*> small(std::uint64_t limit) {
  std::vector<const RestrictedLieAlgebra*> out;
  for (const auto* list : {&corpus(), &randoms()})
    for (const auto& g : *list)
      if (g.whole().cardinality() <= limit) out.push_back(&g);
  return out;
}

/// Cartan subalgebras produced by criteria 4 to 7, collected per algebra name.
std::map<std::string, std::pair<const RestrictedLieAlgebra*, std::set<Subspace>>>& produced() {
  static std::map<std::string, std::pair<const RestrictedLieAlgebra*, std::set<Subspace>>> m;
  return m;
}
std::deque<RestrictedLieAlgebra>& extra_algebras() {
  static std::deque<RestrictedLieAlgebra> v;
  return v;
}
void record(const RestrictedLieAlgebra& g, const Subspace& c) {
  auto& slot = produced()[g.name()];
  slot.first = &g;
  slot.second.insert(c);
}

const RestrictedLieAlgebra& keep(RestrictedLieAlgebra g) {
  for (const auto& h : extra_algebras())
    if (h.name() == g.name()) return h;
  extra_algebras().push_back(std::move(g));
  return extra_algebras().back();
}

// 1
Outcome axioms() {
  Outcome o;
  std::vector<const RestrictedLieAlgebra*> all;
  for (const auto& g : corpus()) all.push_back(&g);
  for (const auto& g : randoms()) all.push_back(&g);
  o.expect(corpus().size() == 11 && randoms().size() == 300, "wrong algebra counts");
  for (const auto* g : all) {
    if (!validate(*g).ok()) o.fail(g->name() + " fails validation");
    Rng rng = make_rng(1, std::hash<std::string>{}(g->name()));
    for (int i = 0; i < 200; ++i) {
      const Element x = random_element(rng, g->whole());
      if (!(ad_matrix(*g, p_power(*g, x)) == ad_matrix(*g, x).power(g->p())))
        o.fail(g->name() + ": ad(x^[p]) != (ad x)^p at " + format_element(*g, x));
    }
  }
  if (o.ok) o.note = std::to_string(all.size()) + " algebras, 200 samples each";
  return o;
}

// 2
Outcome jordan_oracle() {
  Outcome o;
  std::size_t algebras = 0, elements = 0;
  for (const auto* g : small(729)) {
    ++algebras;
    const auto pp = pp_of(*g);
    std::vector<Vec> ss;
    std::set<std::uint64_t> nil;
    const auto everything = oracle::all_vectors(g->p(), g->dim());
    for (const auto& x : everything) {
      if (oracle::semisimple(*g, x, pp)) ss.push_back(x);
      if (oracle::p_nilpotent(*g, x, pp)) nil.insert(oracle::code(x, g->p()));
    }
    for (const auto& x : everything) {
      ++elements;
      const auto splits = oracle::jordan_splits(*g, x, ss, nil);
      const JordanPair j = jordan(*g, x);
      if (splits.size() != 1) {
        o.fail(g->name() + ": " + std::to_string(splits.size()) + " decompositions of " + format_element(*g, x));
      } else if (splits[0].semisimple != j.semisimple_part || splits[0].nilpotent != j.nilpotent_part) {
        o.fail(g->name() + ": jordan mismatch at " + format_element(*g, x));
      }
    }
  }
  o.note = o.ok ? std::to_string(algebras) + " algebras, " + std::to_string(elements) + " elements" : o.note;
  return o;
}

// 3
Outcome unipotency() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : corpus()) {
    if (saturating_pow(g.p(), g.dim()) > (std::uint64_t{1} << 15)) continue;
    ++checked;
    const bool zero_toral = maximal_toral(g).toral.space.is_zero();
    const auto pp = pp_of(g);
    bool sweep = true;
    for (const auto& x : oracle::all_vectors(g.p(), g.dim()))
      if (!oracle::p_nilpotent(g, x, pp)) {
        sweep = false;
        break;
      }
    const UAlgebra u(g);
    const bool local = is_local(u);
    if (zero_toral != sweep || sweep != local)
      o.fail(g.name() + ": toral zero " + std::to_string(zero_toral) + ", sweep " + std::to_string(sweep) + ", local " +
             std::to_string(local));
  }
  if (o.ok) o.note = std::to_string(checked) + " corpus entries";
  return o;
}

void round_trip(Outcome& o, const RestrictedLieAlgebra& g, const Subspace& t) {
  const Subalgebra c = cartan_from_toral(g, t);
  record(g, c.space);
  o.expect(is_cartan(g, c.space), g.name() + ": centralizer of " + format_subspace(g, t) + " is not Cartan");
  const Subalgebra back = toral_from_cartan(g, c.space);
  o.expect(back.space == t, g.name() + ": round trip from " + format_subspace(g, t) + " gives " + format_subspace(g, back.space));
  o.expect(cartan_from_toral(g, back.space).space == c.space, g.name() + ": Cartan round trip fails");
}

// 4
Outcome round_trips() {
  Outcome o;
  std::size_t torals = 0;
  const std::vector<std::pair<const char*, unsigned>> named = {
      {"ex44", 2}, {"ex44", 3}, {"sl2", 3}, {"sl2", 5}, {"gl2", 2}, {"gl2", 3},
      {"heisenberg", 3}, {"heisenberg_zero_pmap", 3}, {"witt", 5}};
  for (auto [name, p] : named) {
    const RestrictedLieAlgebra& g = keep(make_named(name, p));
    const ToralEnumeration e = enumerate_torals(g);
    o.expect(e.exact, g.name() + ": enumeration not exhaustive");
    if (g.whole().cardinality() <= 729) {
      const auto truth = oracle::torals(g, pp_of(g));
      o.expect(truth.maximal.size() == e.maximal.size(), g.name() + ": maximal toral count differs from brute force");
    }
    for (const auto& t : e.maximal) {
      ++torals;
      round_trip(o, g, t);
    }
  }
  for (const auto& g : randoms()) {
    const MaximalToralCertificate cert = maximal_toral(g, 7);
    o.expect(cert.complete && cert.checks.valid(), g.name() + ": greedy toral not certified");
    ++torals;
    round_trip(o, g, cert.toral.space);
  }
  if (o.ok) o.note = std::to_string(torals) + " maximal torals";
  return o;
}

// 5
Outcome cartan_spans() {
  Outcome o;
  std::size_t n = 0;
  for (const auto* list : {&corpus(), &randoms()})
    for (const auto& g : *list) {
      ++n;
      const CartanSpan s = cartan_span(g);
      o.expect(s.span.is_whole(), g.name() + ": Cartan span is " + format_subspace(g, s.span));
      for (const auto& w : s.witnesses) record(g, w);
    }
  const RestrictedLieAlgebra& ex = corpus().front();
  const CartanSpan s = cartan_span(ex);
  const Element xt{1, 1};
  const std::set<Subspace> want{Subspace::span(2, 2, {Vec{0, 1}}), Subspace::span(2, 2, {xt})};
  o.expect(ex.name() == "ex44(2)", "corpus does not start with ex44(2)");
  o.expect(std::set<Subspace>(s.witnesses.begin(), s.witnesses.end()) == want, "ex44(2) witnesses differ");
  o.expect(p_power(ex, xt) == xt, "(t+x)^[2] != t+x");
  if (o.ok) o.note = std::to_string(n) + " algebras; ex44(2) witnesses span(t), span(x+t)";
  return o;
}

// 6
Outcome nilpotency_equivalences() {
  Outcome o;
  std::size_t n = 0;
  for (const auto* list : {&corpus(), &randoms()})
    for (const auto& g : *list) {
      const ToralEnumeration e = enumerate_torals(g);
      if (!e.exact) continue;
      ++n;
      const bool nilpotent = is_nilpotent(g);
      const bool unique = e.maximal.size() == 1;
      const Subspace z = center(g).space;
      bool central = true;
      for (const auto& t : e.all) central = central && z.contains(t);
      o.expect(nilpotent == unique && unique == central, g.name() + ": equivalence fails");
      const auto r = verify_theorems(g, {"thm1.5"}, 7, kDefaultBudget);
      o.expect(r.size() == 1 && r[0].status == Status::Pass, g.name() + ": thm1.5 check did not pass");
    }
  auto detail = [](const char* name, unsigned p) {
    return verify_theorems(make_named(name, p), {"thm1.5"}, 7, kDefaultBudget).at(0).detail;
  };
  const std::string ex = detail("ex44", 2), h0 = detail("heisenberg_zero_pmap", 3);
  o.expect(ex.rfind("not nilpotent, 2 maximal torals", 0) == 0, "ex44 reports " + ex);
  o.expect(h0 == "nilpotent, unique maximal toral 0", "heisenberg_zero_pmap reports " + h0);
  if (o.ok) o.note = std::to_string(n) + " exact algebras; " + ex + " | " + h0;
  return o;
}

// 7
Outcome extensions() {
  Outcome o;
  std::size_t count = 0;
  for (const auto* gp : small(729)) {
    const RestrictedLieAlgebra& g = *gp;
    const auto pp = pp_of(g);
    std::map<Subspace, std::vector<Subspace>> local_cartans;
    for (const auto& s : oracle::all_vectors(g.p(), g.dim())) {
      if (!oracle::semisimple(g, s, pp)) continue;
      const Subspace z = centralizer(g, s).space;
      auto it = local_cartans.find(z);
      if (it == local_cartans.end()) {
        const InducedAlgebra local = induced(g, z);
        const ToralEnumeration e = enumerate_torals(local.algebra);
        o.expect(e.exact, g.name() + ": centralizer enumeration not exhaustive");
        std::vector<Subspace> cs;
        for (const auto& c : cartans_of(local.algebra, e)) cs.push_back(local.embed(c));
        it = local_cartans.emplace(z, std::move(cs)).first;
      }
      for (const auto& c : it->second) {
        ++count;
        const ExtendResult r = extend_cartan(g, s, c);
        if (!r.cartan) {
          o.fail(g.name() + ": extension fails for s=" + format_element(g, s) + ": " + r.failure);
          continue;
        }
        record(g, r.cartan->space);
        o.expect(is_cartan(g, r.cartan->space), g.name() + ": extension is not Cartan");
        o.expect(r.cartan->space.contains(c), g.name() + ": extension does not contain c");
      }
    }
  }
  if (o.ok) o.note = std::to_string(count) + " extensions";
  return o;
}

// 8
Outcome normalizing_torals() {
  Outcome o;
  std::size_t cartans = 0;
  for (auto& [name, entry] : produced()) {
    const RestrictedLieAlgebra& g = *entry.first;
    const ToralEnumeration e = enumerate_torals(g);
    o.expect(e.exact, name + ": enumeration not exhaustive");
    Rng rng = make_rng(8, std::hash<std::string>{}(name));
    for (const auto& c : entry.second) {
      ++cartans;
      for (const auto& t : e.all) {
        const Subspace tc = bracket_span(g, t, c);
        if (c.contains(tc)) o.expect(tc.is_zero(), name + ": toral normalizes but does not centralize a Cartan");
      }
      if (c.is_whole()) continue;
      int sampled = 0;
      for (int attempt = 0; sampled < 20 && attempt < 1000; ++attempt) {
        const Element x = random_element(rng, g.whole());
        if (c.contains(x)) continue;
        ++sampled;
        std::vector<Element> gens = c.basis_vectors();
        gens.push_back(x);
        const Subalgebra grown = closure(g, gens, ClosureMode::Subalgebra);
        o.expect(!is_nilpotent(g, grown.space), name + ": closure with " + format_element(g, x) + " is nilpotent");
      }
      o.expect(sampled == 20, name + ": could not sample 20 elements outside a Cartan");
    }
  }
  if (o.ok) o.note = std::to_string(cartans) + " Cartans on " + std::to_string(produced().size()) + " algebras";
  return o;
}

bool lifts(const RestrictedLieAlgebra& g, const Subspace& ideal, Outcome& o) {
  const Quotient q = quotient(g, ideal);
  const auto mine = cartans_of(g, enumerate_torals(g));
  for (const auto& cq : cartans_of(q.algebra, enumerate_torals(q.algebra))) {
    bool found = false;
    for (const auto& c : mine)
      if (q.image(c) == cq) {
        found = true;
        break;
      }
    o.expect(found, g.name() + ": no lift of " + format_subspace(q.algebra, cq) + " mod " + format_subspace(g, ideal));
  }
  return o.ok;
}

// 9
Outcome quotient_cases() {
  Outcome o;
  std::size_t central = 0, lifted = 0;
  for (const auto& g : corpus()) {
    const Subspace z = toral_part(g, center(g).space).space;
    if (z.is_zero()) continue;
    ++central;
    const Quotient q = quotient(g, z);
    for (const auto& cq : cartans_of(q.algebra, enumerate_torals(q.algebra)))
      o.expect(is_cartan(g, q.preimage(cq)), g.name() + ": preimage of " + format_subspace(q.algebra, cq) + " is not Cartan");
  }
  for (const auto& [name, p] : std::vector<std::pair<const char*, unsigned>>{
           {"ex44", 2}, {"ex44", 3}, {"ex44", 5}, {"vt_weights:1,2", 3}, {"vt_weights:1,2", 5}, {"vt_weights:1,1", 3}}) {
    const RestrictedLieAlgebra g = make_named(name, p);
    std::vector<Subspace> curated{p_nilpotent_radical(g).radical.space, center(g).space,
                                  toral_part(g, center(g).space).space};
    if (auto m = minimal_p_nilpotent_ideal(g)) curated.push_back(m->space);
    for (const auto& s : derived_series(g)) curated.push_back(s);
    for (const auto& s : lower_central_series(g)) curated.push_back(s);
    std::set<Subspace> seen;
    for (const auto& i : curated) {
      if (i.is_zero() || i.is_whole() || !is_ideal(g, i) || !is_p_closed(g, i) || !seen.insert(i).second) continue;
      ++lifted;
      lifts(g, i, o);
    }
    const auto r = verify_theorems(g, {"case2.lift"}, 7, kDefaultBudget);
    o.expect(r.at(0).status == Status::Pass, g.name() + ": case2.lift check did not pass");
  }
  o.expect(lifted > 0, "no curated ideals");
  if (o.ok) o.note = std::to_string(central) + " central quotients, " + std::to_string(lifted) + " lifted ideals";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

// 10
Outcome determinism() {
  Outcome o;
  const std::string cmd = std::string(RETLA_CLI_PATH) + " verify --corpus --seed 7 --json";
  const std::string a = capture(cmd), b = capture(cmd + " --jobs 4");
  o.expect(!a.empty() && a.find("<exit") == std::string::npos, "verify run failed");
  o.expect(a == b, "reports differ between runs");
  const std::string c = capture(cmd);
  o.expect(a == c, "reports differ between identical runs");
  if (o.ok) o.note = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"axioms", 10, axioms},
      {"jordan decomposition oracle", 30, jordan_oracle},
      {"unipotency three-way equivalence", 30, unipotency},
      {"toral/Cartan round trips", 60, round_trips},
      {"Cartan subalgebras span g", 60, cartan_spans},
      {"nilpotency equivalences", 30, nilpotency_equivalences},
      {"Cartan extension from centralizers", 60, extensions},
      {"normalizing torals centralize; Cartans maximal nilpotent", 30, normalizing_torals},
      {"central quotients and ideal lifting", 30, quotient_cases},
      {"deterministic corpus reports", 0, determinism},
  };
  // shared setup, untimed
  (void)corpus();
  (void)randoms();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_s > 0 && secs > criteria[i].limit_s) {
      std::ostringstream msg;
      msg << "over time limit of " << criteria[i].limit_s << " s";
      o.fail(msg.str());
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2zu %s  %-58s %7.2f s  %s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].name, secs,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
