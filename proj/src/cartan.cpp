#include "retla/cartan.hpp"

#include <set>
#include <stdexcept>

#include "retla/rng.hpp"

namespace retla {

namespace {

constexpr int kSamplesPerRound = 64;
constexpr int kGreedyRestarts = 32;
constexpr int kEnumerationRuns = 64;

}  // namespace

CertificateChecks toral_certificate(const RestrictedLieAlgebra& g, const Subspace& t) {
  const Subspace c = centralizer(g, t).space;
  CertificateChecks checks;
  checks.cartan_is_nilpotent = is_nilpotent(g, c);
  checks.central_toral_part_equals_toral = toral_part(g, center(g, c).space).space == t;
  return checks;
}

MaximalToralCertificate maximal_toral(const RestrictedLieAlgebra& g, std::uint64_t seed, std::uint64_t budget) {
  Rng rng = make_rng(seed, 0x746f72616cULL);
  Subspace t = g.none();
  while (true) {
    const Subalgebra c = centralizer(g, t);
    const CertificateChecks checks = toral_certificate(g, t);
    if (checks.valid()) return {{t, true, false, true}, c, checks, true};

    std::optional<Element> found;
    for (int i = 0; i < kSamplesPerRound && !found; ++i) {
      Element s = jordan(g, random_element(rng, c.space)).semisimple_part;
      if (!t.contains(s)) found = std::move(s);
    }
    if (!found) {
      if (c.space.cardinality() > budget) return {{t, true, false, true}, c, checks, false};
      for_each_element(c.space, [&](const Vec& y) {
        Element s = jordan(g, y).semisimple_part;
        if (t.contains(s)) return true;
        found = std::move(s);
        return false;
      });
    }
    if (!found)
      throw std::logic_error("maximal_toral: certificate failed but the centralizer has no new semisimple element");
    t = t.sum(p_closure(g, *found).space);
  }
}

bool is_maximal_toral(const RestrictedLieAlgebra& g, const Subspace& t) {
  if (!is_toral(g, t)) throw std::invalid_argument("is_maximal_toral: subalgebra is not toral");
  return toral_certificate(g, t).valid();
}

bool is_cartan(const RestrictedLieAlgebra& g, const Subspace& c) {
  if (!is_bracket_closed(g, c)) throw std::invalid_argument("is_cartan: subspace is not bracket closed");
  return is_nilpotent(g, c) && normalizer(g, c).space == c;
}

Subalgebra cartan_from_toral(const RestrictedLieAlgebra& g, const Subspace& t) {
  if (!is_maximal_toral(g, t)) throw std::invalid_argument("cartan_from_toral: toral subalgebra is not maximal");
  return centralizer(g, t);
}

Subalgebra toral_from_cartan(const RestrictedLieAlgebra& g, const Subspace& c) {
  if (!is_cartan(g, c)) throw std::invalid_argument("toral_from_cartan: not a Cartan subalgebra");
  return toral_part(g, center(g, c).space);
}

ToralEnumeration enumerate_torals(const RestrictedLieAlgebra& g, std::uint64_t budget, std::uint64_t seed) {
  ToralEnumeration out;
  if (g.whole().cardinality() > budget) {
    std::set<Subspace> found;
    for (int run = 0; run < kEnumerationRuns; ++run) {
      auto cert = maximal_toral(g, mix_seed(seed, static_cast<std::uint64_t>(run)), budget);
      if (cert.complete) found.insert(cert.toral.space);
    }
    out.maximal.assign(found.begin(), found.end());
    out.all = out.maximal;
    out.exact = false;
    return out;
  }

  // Nonzero semisimple elements, each with its (toral) p-closure.
  std::vector<Element> semisimple;
  std::vector<Subspace> closures;
  for_each_element(g.whole(), [&](const Vec& x) {
    if (!is_zero(x) && is_semisimple(g, x)) {
      semisimple.push_back(x);
      closures.push_back(p_closure(g, x).space);
    }
    return true;
  });

  std::set<Subspace> visited{g.none()};
  std::vector<Subspace> stack{g.none()};
  std::set<Subspace> maximal;
  while (!stack.empty()) {
    const Subspace t = std::move(stack.back());
    stack.pop_back();
    const Subspace z = centralizer(g, t).space;
    bool extended = false;
    for (std::size_t i = 0; i < semisimple.size(); ++i) {
      if (t.contains(semisimple[i]) || !z.contains(semisimple[i])) continue;
      extended = true;
      Subspace child = t.sum(closures[i]);
      if (visited.insert(child).second) stack.push_back(std::move(child));
    }
    if (!extended) maximal.insert(t);
  }
  out.maximal.assign(maximal.begin(), maximal.end());
  out.all.assign(visited.begin(), visited.end());
  out.exact = true;
  return out;
}

std::vector<Subspace> cartans_of(const RestrictedLieAlgebra& g, const ToralEnumeration& torals) {
  std::vector<Subspace> out;
  out.reserve(torals.maximal.size());
  for (const auto& t : torals.maximal) out.push_back(centralizer(g, t).space);
  return out;
}

CartanSpan cartan_span(const RestrictedLieAlgebra& g, std::uint64_t budget, std::uint64_t seed) {
  CartanSpan out{g.none(), {}, false};
  auto absorb = [&](const Subspace& c) {
    if (out.span.contains(c)) return;
    out.span = out.span.sum(c);
    out.witnesses.push_back(c);
  };
  if (out.span.is_whole()) return out;
  for (int run = 0; run < kGreedyRestarts; ++run) {
    auto cert = maximal_toral(g, mix_seed(seed, static_cast<std::uint64_t>(run)), budget);
    if (!cert.complete) continue;
    absorb(cert.cartan.space);
    if (out.span.is_whole()) return out;
  }
  if (g.whole().cardinality() <= budget) {
    const ToralEnumeration torals = enumerate_torals(g, budget, seed);
    for (const auto& c : cartans_of(g, torals)) absorb(c);
    out.exhaustive = true;
  }
  return out;
}

ExtendResult extend_cartan(const RestrictedLieAlgebra& g, const Element& s, const Subspace& c) {
  if (!is_semisimple(g, s)) throw std::invalid_argument("extend_cartan: element is not semisimple");
  const Subspace z = centralizer(g, s).space;
  if (!z.contains(c)) throw std::invalid_argument("extend_cartan: subalgebra is not inside the centralizer");
  const InducedAlgebra local = induced(g, z);
  const Subspace c_local = local.restrict(c);
  if (!is_cartan(local.algebra, c_local))
    throw std::invalid_argument("extend_cartan: not a Cartan subalgebra of the centralizer");

  const Subspace t = local.embed(toral_from_cartan(local.algebra, c_local).space);
  ExtendResult out;
  if (!is_maximal_toral(g, t)) {
    out.failure = "central toral part " + format_subspace(g, t) + " is not maximal toral in g";
    return out;
  }
  Subalgebra result = centralizer(g, t);
  if (!result.space.contains(c)) {
    out.failure = "extension does not contain c";
  } else if (!result.space.contains(s)) {
    out.failure = "extension does not contain s";
  } else if (!is_cartan(g, result.space)) {
    out.failure = "extension is not a Cartan subalgebra of g";
  } else {
    out.cartan = std::move(result);
  }
  return out;
}

}  // namespace retla
