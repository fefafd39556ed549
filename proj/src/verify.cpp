#include "retla/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "retla/cartan.hpp"
#include "retla/enveloping.hpp"
#include "retla/rng.hpp"
#include "retla/semisimple.hpp"

namespace retla {

namespace {

constexpr int kNilpotencySamples = 20;
constexpr int kSampleAttempts = 400;

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> witnesses;
};

Outcome pass(std::string detail) { return {Status::Pass, std::move(detail), {}}; }
Outcome fail(std::string detail, std::vector<std::string> witnesses) {
  return {Status::Fail, std::move(detail), std::move(witnesses)};
}
Outcome inconclusive(std::string detail) { return {Status::Inconclusive, std::move(detail), {}}; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Shared, lazily computed enumeration data for one algebra.
class Context {
 public:
  Context(const RestrictedLieAlgebra& g, std::uint64_t seed, std::uint64_t budget)
      : g(g), seed(seed), budget(budget) {}

  const RestrictedLieAlgebra& g;
  const std::uint64_t seed;
  const std::uint64_t budget;

  const ToralEnumeration& torals() {
    if (!torals_) torals_ = enumerate_torals(g, budget, seed);
    return *torals_;
  }
  const std::vector<Subspace>& cartans() {
    if (!cartans_) cartans_ = cartans_of(g, torals());
    return *cartans_;
  }
  const RadicalResult& radical() {
    if (!radical_) radical_ = p_nilpotent_radical(g, budget, seed);
    return *radical_;
  }

  std::string fmt(const Subspace& s) const { return format_subspace(g, s); }
  std::string fmt(const Element& x) const { return format_element(g, x); }

 private:
  std::optional<ToralEnumeration> torals_;
  std::optional<std::vector<Subspace>> cartans_;
  std::optional<RadicalResult> radical_;
};

Outcome unique_toral_claim(Context& ctx) {
  const auto& e = ctx.torals();
  if (!e.exact) return inconclusive("algebra has more elements than the budget; toral enumeration is sampled");
  const bool nilpotent = is_nilpotent(ctx.g);
  const bool unique = e.maximal.size() == 1;
  const Subspace z = center(ctx.g).space;
  std::optional<Subspace> noncentral;
  for (const auto& t : e.all)
    if (!z.contains(t)) {
      noncentral = t;
      break;
    }

  std::string detail = nilpotent ? "nilpotent" : "not nilpotent";
  if (unique)
    detail += ", unique maximal toral " + ctx.fmt(e.maximal.front());
  else
    detail += ", " + std::to_string(e.maximal.size()) + " maximal torals";
  if (noncentral) detail += ", non-central toral witness " + ctx.fmt(*noncentral);

  const bool central = !noncentral;
  if (nilpotent == unique && unique == central) return pass(detail);
  std::vector<std::string> w;
  for (const auto& t : e.maximal) w.push_back(ctx.fmt(t));
  return fail(detail + " (predicates disagree)", w);
}

Outcome round_trip_claim(Context& ctx) {
  const auto& e = ctx.torals();
  const RestrictedLieAlgebra& g = ctx.g;
  for (const auto& t : e.maximal) {
    if (!is_maximal_toral(g, t)) return fail("enumerated toral fails the maximality certificate", {ctx.fmt(t)});
    const Subspace c = cartan_from_toral(g, t).space;
    if (!is_cartan(g, c)) return fail("centralizer of a maximal toral is not Cartan", {ctx.fmt(t), ctx.fmt(c)});
    const Subspace back = toral_from_cartan(g, c).space;
    if (!(back == t)) return fail("toral -> Cartan -> toral changed the toral", {ctx.fmt(t), ctx.fmt(back)});
    const Subspace again = cartan_from_toral(g, back).space;
    if (!(again == c)) return fail("Cartan -> toral -> Cartan changed the Cartan", {ctx.fmt(c), ctx.fmt(again)});
  }
  std::string detail = std::to_string(e.maximal.size()) + " round trips";
  if (!e.exact) return inconclusive(detail + " on sampled torals; enumeration not exhaustive");
  return pass(detail);
}

Outcome normalizing_toral_claim(Context& ctx) {
  const auto& e = ctx.torals();
  const RestrictedLieAlgebra& g = ctx.g;
  Rng rng = make_rng(ctx.seed, 0x6e6f726dULL);
  std::size_t normalizing = 0;
  std::size_t samples = 0;
  for (const auto& c : ctx.cartans()) {
    for (const auto& t : e.all) {
      const Subspace tc = bracket_span(g, t, c);
      if (!c.contains(tc)) continue;
      ++normalizing;
      if (!tc.is_zero()) return fail("toral normalizes but does not centralize a Cartan", {ctx.fmt(t), ctx.fmt(c)});
    }
    if (c.is_whole()) continue;
    for (int found = 0, attempt = 0; found < kNilpotencySamples && attempt < kSampleAttempts; ++attempt) {
      const Element x = random_vector(rng, g.p(), g.dim());
      if (c.contains(x)) continue;
      ++found;
      ++samples;
      std::vector<Element> gens = c.basis_vectors();
      gens.push_back(x);
      const Subspace grown = closure(g, gens, ClosureMode::Subalgebra).space;
      if (is_nilpotent(g, grown))
        return fail("Cartan enlarged by an outside element stays nilpotent", {ctx.fmt(c), ctx.fmt(x)});
    }
  }
  std::string detail = std::to_string(ctx.cartans().size()) + " Cartans, " + std::to_string(normalizing) +
                       " normalizing torals, " + std::to_string(samples) + " enlargements non-nilpotent";
  if (!e.exact) return inconclusive(detail + "; enumeration not exhaustive");
  return pass(detail);
}

Outcome unipotency_claim(Context& ctx) {
  const RestrictedLieAlgebra& g = ctx.g;
  const MaximalToralCertificate cert = maximal_toral(g, ctx.seed, ctx.budget);
  std::optional<bool> zero_toral;
  if (cert.complete) zero_toral = cert.toral.space.is_zero();
  const std::optional<bool> sweep = all_elements_p_nilpotent(g, g.whole(), ctx.budget);
  std::optional<bool> local;
  if (saturating_pow(g.p(), g.dim()) <= kDefaultEnvelopingBudget) local = is_local(u_of(g), ctx.seed);
  const bool certificate = is_p_nilpotent_algebra(g);

  auto show = [](const std::optional<bool>& b) { return b ? yes_no(*b) : std::string("undecided"); };
  const std::string detail = "maximal toral zero: " + show(zero_toral) + ", all elements p-nilpotent: " +
                             show(sweep) + ", u(g) local: " + show(local) +
                             ", zero-toral certificate: " + yes_no(certificate);
  std::vector<bool> known{certificate};
  for (const auto& b : {zero_toral, sweep, local})
    if (b) known.push_back(*b);
  const bool agree = std::all_of(known.begin(), known.end(), [&](bool b) { return b == known.front(); });
  if (!agree) {
    std::vector<std::string> w;
    if (cert.complete) w.push_back(ctx.fmt(cert.toral.space));
    return fail(detail, w);
  }
  if (!zero_toral || !sweep || !local) return inconclusive(detail);
  return pass(detail);
}

Outcome cartan_span_claim(Context& ctx) {
  const CartanSpan cs = cartan_span(ctx.g, ctx.budget, ctx.seed);
  std::vector<std::string> w;
  for (const auto& c : cs.witnesses) w.push_back(ctx.fmt(c));
  const std::string detail = "span of " + std::to_string(cs.witnesses.size()) + " Cartans has dimension " +
                             std::to_string(cs.span.dim()) + " of " + std::to_string(ctx.g.dim());
  if (cs.span.is_whole()) return {Status::Pass, detail, w};
  if (cs.exhaustive) return fail(detail, w);
  return inconclusive(detail + "; enumeration not exhaustive");
}

Outcome extension_claim(Context& ctx) {
  const RestrictedLieAlgebra& g = ctx.g;
  if (g.whole().cardinality() > ctx.budget) return inconclusive("semisimple sweep exceeds the budget");

  std::map<Subspace, Element> classes;
  for_each_element(g.whole(), [&](const Vec& x) {
    if (is_semisimple(g, x)) classes.try_emplace(centralizer(g, x).space, x);
    return true;
  });

  std::size_t extensions = 0;
  for (const auto& [z, s] : classes) {
    const InducedAlgebra local = induced(g, z);
    const ToralEnumeration e = enumerate_torals(local.algebra, ctx.budget, ctx.seed);
    if (!e.exact) return inconclusive("centralizer enumeration exceeds the budget");
    for (const auto& c_local : cartans_of(local.algebra, e)) {
      const Subspace c = local.embed(c_local);
      const ExtendResult r = extend_cartan(g, s, c);
      if (!r.cartan) return fail(r.failure, {ctx.fmt(s), ctx.fmt(c)});
      if (!is_cartan(g, r.cartan->space) || !r.cartan->space.contains(c))
        return fail("extension is not a Cartan containing c", {ctx.fmt(s), ctx.fmt(c), ctx.fmt(r.cartan->space)});
      ++extensions;
    }
  }
  return pass(std::to_string(classes.size()) + " centralizers of semisimple elements, " +
              std::to_string(extensions) + " Cartans extended");
}

/// Every Cartan of g/I has a Cartan of g mapping onto it; `preimage` also
/// requires the preimage itself to be Cartan.
Outcome check_quotient(Context& ctx, const Subspace& ideal, bool preimage, std::size_t& checked) {
  const Quotient q = quotient(ctx.g, ideal);
  const ToralEnumeration e = enumerate_torals(q.algebra, ctx.budget, ctx.seed);
  if (!e.exact) return inconclusive("quotient enumeration exceeds the budget");
  for (const auto& cq : cartans_of(q.algebra, e)) {
    ++checked;
    if (preimage) {
      const Subspace pre = q.preimage(cq);
      if (!is_cartan(ctx.g, pre))
        return fail("preimage of a quotient Cartan is not Cartan", {ctx.fmt(ideal), ctx.fmt(pre)});
      continue;
    }
    if (!ctx.torals().exact) return inconclusive("lift search needs the exact toral enumeration of g");
    const auto& cs = ctx.cartans();
    const bool lifted = std::any_of(cs.begin(), cs.end(), [&](const Subspace& c) { return q.image(c) == cq; });
    if (!lifted) {
      std::string target = format_subspace(q.algebra, cq);
      return fail("no Cartan of g maps onto a quotient Cartan", {ctx.fmt(ideal), target});
    }
  }
  return pass({});
}

Outcome central_quotient_claim(Context& ctx) {
  const RestrictedLieAlgebra& g = ctx.g;
  const Subspace z = center(g).space;
  const Subspace zt = toral_part(g, z).space;
  std::vector<Subspace> ideals;
  if (!zt.is_zero()) ideals.push_back(zt);
  if (!z.is_zero() && !(z == zt) && is_p_closed(g, z)) ideals.push_back(z);
  if (ideals.empty()) return pass("central toral part is zero; nothing to check");
  std::size_t checked = 0;
  for (const auto& ideal : ideals) {
    Outcome o = check_quotient(ctx, ideal, true, checked);
    if (o.status != Status::Pass) return o;
  }
  return pass(std::to_string(checked) + " preimages are Cartan across " + std::to_string(ideals.size()) +
              " central quotients");
}

std::vector<Subspace> curated_ideals(Context& ctx) {
  const RestrictedLieAlgebra& g = ctx.g;
  std::vector<Subspace> out;
  auto add = [&](const Subspace& s) {
    if (s.is_zero() || s.is_whole() || !is_ideal(g, s) || !is_p_closed(g, s)) return;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  const RadicalResult& r = ctx.radical();
  add(r.radical.space);
  if (r.exactness == Exactness::Exact)
    if (auto m = minimal_p_nilpotent_ideal(g, ctx.budget)) add(m->space);
  const Subspace z = center(g).space;
  add(z);
  add(toral_part(g, z).space);
  for (const auto& s : derived_series(g)) add(s);
  for (const auto& s : lower_central_series(g)) add(s);
  return out;
}

Outcome lift_claim(Context& ctx) {
  const std::vector<Subspace> ideals = curated_ideals(ctx);
  if (ideals.empty()) return pass("no nonzero p-closed ideal in the curated list");
  std::size_t checked = 0;
  for (const auto& ideal : ideals) {
    Outcome o = check_quotient(ctx, ideal, false, checked);
    if (o.status != Status::Pass) return o;
  }
  return pass(std::to_string(checked) + " quotient Cartans lifted across " + std::to_string(ideals.size()) +
              " ideals");
}

Outcome minimal_ideal_claim(Context& ctx) {
  const RestrictedLieAlgebra& g = ctx.g;
  if (ctx.radical().exactness != Exactness::Exact) return inconclusive("radical is only a lower bound");
  const auto v_opt = minimal_p_nilpotent_ideal(g, ctx.budget);
  if (!v_opt) return pass("p-nilpotent radical is zero");
  const Subspace v = v_opt->space;
  if (!is_ideal(g, v) || !is_p_closed(g, v) || !is_p_nilpotent_algebra(g, v))
    return fail("minimal ideal is not a p-closed p-nilpotent ideal", {ctx.fmt(v)});

  const Quotient q = quotient(g, v);
  if (!is_toral(q.algebra, q.algebra.whole()))
    return pass("minimal ideal " + ctx.fmt(v) + "; quotient is not toral");

  if (!is_abelian(g, v)) return fail("minimal ideal with toral quotient is not abelian", {ctx.fmt(v)});
  for (const auto& b : v.basis_vectors())
    if (!is_zero(p_power(g, b))) return fail("minimal ideal with toral quotient has nonzero p-map", {ctx.fmt(b)});

  if (!ctx.torals().exact) return inconclusive("complement search needs the exact toral enumeration");
  std::optional<Subspace> complement;
  for (const auto& t : ctx.torals().maximal)
    if (t.intersect(v).is_zero() && t.dim() + v.dim() == g.dim()) {
      complement = t;
      break;
    }
  if (!complement) return fail("no toral complement to the minimal ideal", {ctx.fmt(v)});

  std::size_t checked = 0;
  std::optional<Outcome> bad;
  for_each_element(*complement, [&](const Vec& t) {
    for (const auto& w : v.basis_vectors()) {
      const Element x = g.field().sum(t, bracket(g, t, w));
      ++checked;
      if (!in_span_of_own_p_powers(g, x)) {
        bad = fail("t+[t,v] is not semisimple", {ctx.fmt(t), ctx.fmt(w)});
        return false;
      }
    }
    return true;
  });
  if (bad) return *bad;
  return pass("minimal ideal " + ctx.fmt(v) + " abelian with zero p-map, toral complement " +
              ctx.fmt(*complement) + ", " + std::to_string(checked) + " elements t+[t,v] semisimple");
}

using ClaimFn = Outcome (*)(Context&);

const std::vector<std::pair<std::string, ClaimFn>>& claim_table() {
  static const std::vector<std::pair<std::string, ClaimFn>> table{
      {"thm1.5", unique_toral_claim},
      {"cor1.3", round_trip_claim},
      {"thm1.2.v", normalizing_toral_claim},
      {"lemma3.2", unipotency_claim},
      {"lemma4.3", cartan_span_claim},
      {"cor4.2", extension_claim},
      {"case1.central_quotient", central_quotient_claim},
      {"case2.lift", lift_claim},
      {"case2.minimal_ideal", minimal_ideal_claim},
  };
  return table;
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

const std::vector<std::string>& all_claims() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : claim_table()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<VerificationReport> verify_theorems(const RestrictedLieAlgebra& g,
                                                const std::vector<std::string>& selection, std::uint64_t seed,
                                                std::uint64_t budget) {
  for (const auto& id : selection)
    if (std::find(all_claims().begin(), all_claims().end(), id) == all_claims().end())
      throw std::invalid_argument("unknown claim id: " + id);

  Context ctx(g, seed, budget);
  std::vector<VerificationReport> out;
  for (const auto& [id, fn] : claim_table()) {
    if (!selection.empty() && std::find(selection.begin(), selection.end(), id) == selection.end()) continue;
    VerificationReport r;
    r.claim_id = id;
    r.algebra = g.name();
    r.seed = seed;
    r.budget = budget;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn(ctx);
    } catch (const BudgetExceeded& e) {
      o = inconclusive(e.what());
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what(), {});
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                   .count();
    r.status = o.status;
    r.detail = std::move(o.detail);
    r.witnesses = std::move(o.witnesses);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace retla
