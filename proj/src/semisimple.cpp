#include "retla/semisimple.hpp"

#include <stdexcept>

#include "retla/cartan.hpp"
#include "retla/rng.hpp"

namespace retla {

Subalgebra p_closure(const RestrictedLieAlgebra& g, const Element& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("p_closure: element does not belong to algebra");
  Subspace v = Subspace::span(g.p(), g.dim(), {x});
  Element y = x;
  while (true) {
    y = p_power(g, y);
    if (v.contains(y)) break;
    v = v.with(y);
  }
  return {v, true, false, true};
}

FpMatrix p_operator(const RestrictedLieAlgebra& g, const Subspace& a) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.coordinates(p_power(g, a.basis_vector(j))));
  return FpMatrix::from_columns(g.p(), a.dim(), cols);
}

namespace {

// Fitting decomposition of P on A: (image of P^m, kernel of P^m) in A-coordinates.
std::pair<Subspace, Subspace> fitting(const RestrictedLieAlgebra& g, const Subspace& a) {
  const FpMatrix high = p_operator(g, a).power(a.dim());
  return {image(high), kernel(high)};
}

}  // namespace

JordanPair jordan(const RestrictedLieAlgebra& g, const Element& x) {
  const Subspace a = p_closure(g, x).space;
  const std::size_t m = a.dim();
  if (m == 0) return {g.zero_element(), g.zero_element()};
  auto [semi, nil] = fitting(g, a);
  // Solve x = u + w with u in the image and w in the kernel.
  std::vector<Vec> cols = semi.basis_vectors();
  for (auto& v : nil.basis_vectors()) cols.push_back(std::move(v));
  const FpMatrix split = FpMatrix::from_columns(g.p(), m, cols);
  const auto coeffs = solve(split, a.coordinates(x));
  if (!coeffs) throw std::logic_error("jordan: Fitting decomposition did not span the p-closure");
  Vec u(m, 0);
  for (std::size_t i = 0; i < semi.dim(); ++i) g.field().axpy(u, (*coeffs)[i], semi.basis().row(i));
  Element s = a.combine(u);
  Element n = g.field().difference(x, s);
  return {std::move(s), std::move(n)};
}

bool is_semisimple(const RestrictedLieAlgebra& g, const Element& x) { return is_zero(jordan(g, x).nilpotent_part); }

bool is_p_nilpotent_element(const RestrictedLieAlgebra& g, const Element& x) {
  return is_zero(jordan(g, x).semisimple_part);
}

bool in_span_of_own_p_powers(const RestrictedLieAlgebra& g, const Element& x) {
  if (is_zero(x)) return true;
  return p_closure(g, p_power(g, x)).space.contains(x);
}

bool p_power_vanishes(const RestrictedLieAlgebra& g, const Element& x) {
  return is_zero(p_power(g, x, g.dim()));
}

namespace {

Subspace embed_coordinates(const Subspace& a, const Subspace& coords) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < coords.dim(); ++i) vecs.push_back(a.combine(coords.basis().row(i)));
  return Subspace::span(a.p(), a.ambient_dim(), vecs);
}

void require_abelian_p_closed(const RestrictedLieAlgebra& g, const Subspace& a, const char* who) {
  if (!is_abelian(g, a)) throw std::invalid_argument(std::string(who) + ": subalgebra is not abelian");
  if (!is_p_closed(g, a)) throw std::invalid_argument(std::string(who) + ": subalgebra is not p-closed");
}

}  // namespace

Subalgebra toral_part(const RestrictedLieAlgebra& g, const Subspace& a) {
  require_abelian_p_closed(g, a, "toral_part");
  return {embed_coordinates(a, fitting(g, a).first), true, false, true};
}

Subalgebra nil_part(const RestrictedLieAlgebra& g, const Subspace& a) {
  require_abelian_p_closed(g, a, "nil_part");
  return {embed_coordinates(a, fitting(g, a).second), true, false, true};
}

bool is_toral(const RestrictedLieAlgebra& g, const Subspace& a) {
  if (!is_abelian(g, a) || !is_p_closed(g, a)) return false;
  return rank(p_operator(g, a)) == a.dim();
}

bool is_p_nilpotent_algebra(const RestrictedLieAlgebra& g) {
  // The greedy ascent in maximal_toral stops at zero exactly when the zero
  // subalgebra already carries a valid certificate.
  return toral_certificate(g, g.none()).valid();
}

bool is_p_nilpotent_algebra(const RestrictedLieAlgebra& g, const Subspace& a) {
  if (a.is_whole()) return is_p_nilpotent_algebra(g);
  return is_p_nilpotent_algebra(induced(g, a).algebra);
}

std::optional<bool> all_elements_p_nilpotent(const RestrictedLieAlgebra& g, const Subspace& a, std::uint64_t budget) {
  if (a.cardinality() > budget) return std::nullopt;
  bool all = true;
  for_each_element(a, [&](const Vec& x) {
    all = p_power_vanishes(g, x);
    return all;
  });
  return all;
}

const char* to_string(Exactness e) { return e == Exactness::Exact ? "Exact" : "LowerBound"; }

namespace {

// Leading nonzero coordinate equals one; scalar multiples generate the same ideal.
bool normalized(const Vec& x) {
  for (auto c : x)
    if (c) return c == 1;
  return false;
}

}  // namespace

RadicalResult p_nilpotent_radical(const RestrictedLieAlgebra& g, std::uint64_t budget, std::uint64_t seed) {
  const bool exact = g.whole().cardinality() <= budget;
  Subspace radical = g.none();
  auto consider = [&](const Vec& x) {
    if (!normalized(x) || radical.contains(x) || !p_power_vanishes(g, x)) return;
    Subalgebra ideal = closure(g, {x}, ClosureMode::PIdeal);
    if (is_p_nilpotent_algebra(g, ideal.space)) radical = radical.sum(ideal.space);
  };
  if (exact) {
    for_each_element(g.whole(), [&](const Vec& x) {
      consider(x);
      return true;
    });
  } else {
    for (std::size_t i = 0; i < g.dim(); ++i) consider(g.unit(i));
    Rng rng = make_rng(seed, 0x7261646963616cULL);
    for (int i = 0; i < 256; ++i) consider(random_vector(rng, g.p(), g.dim()));
  }
  RadicalResult result{{radical, true, true, true}, exact ? Exactness::Exact : Exactness::LowerBound, std::nullopt};
  if (!exact) return result;

  // Plain-ideal variant: ideals of p-nilpotent elements, without p-closure.
  std::vector<bool> nil(static_cast<std::size_t>(g.whole().cardinality()), false);
  for_each_element(g.whole(), [&](const Vec& x) {
    nil[encode(x, g.p())] = p_power_vanishes(g, x);
    return true;
  });
  Subspace plain = g.none();
  for_each_element(g.whole(), [&](const Vec& x) {
    if (!normalized(x) || !nil[encode(x, g.p())] || plain.contains(x)) return true;
    Subspace ideal = closure(g, {x}, ClosureMode::Ideal).space;
    const bool all_nil = for_each_element(ideal, [&](const Vec& y) { return static_cast<bool>(nil[encode(y, g.p())]); });
    if (all_nil) plain = plain.sum(ideal);
    return true;
  });
  if (!(plain == radical)) result.plain_variant = plain;
  return result;
}

std::optional<Subalgebra> minimal_p_nilpotent_ideal(const RestrictedLieAlgebra& g, std::uint64_t budget) {
  const RadicalResult rad = p_nilpotent_radical(g, budget);
  if (rad.exactness != Exactness::Exact)
    throw std::runtime_error("minimal_p_nilpotent_ideal: radical is only a lower bound within the budget");
  if (rad.radical.space.is_zero()) return std::nullopt;
  std::optional<Subalgebra> best;
  for_each_element(rad.radical.space, [&](const Vec& x) {
    if (!normalized(x)) return true;
    Subalgebra ideal = closure(g, {x}, ClosureMode::PIdeal);
    if (!best || ideal.dim() < best->dim()) best = ideal;
    return best->dim() > 1;
  });
  return best;
}

}  // namespace retla
