#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "retla/corpus.hpp"
#include "retla/enveloping.hpp"
#include "retla/rng.hpp"
#include "retla/semisimple.hpp"

using namespace retla;

namespace {

using UElement = UAlgebra::UElement;

UElement random_u(Rng& rng, const UAlgebra& u) { return random_vector(rng, u.p(), u.dim()); }

/// Image of a PBW element under the representation that sends b_i to the
/// matrix of the i-th basis vector.
FpMatrix represent(const UAlgebra& u, const MatrixAlgebra& m, const UElement& a) {
  const std::size_t n = m.to_matrix(m.algebra.zero_element()).rows();
  FpMatrix acc(u.p(), n, n);
  for (std::size_t idx = 0; idx < u.dim(); ++idx) {
    if (!a[idx]) continue;
    const auto e = u.exponents(idx);
    FpMatrix term = FpMatrix::identity(u.p(), n);
    for (std::size_t i = 0; i < e.size(); ++i) term = term * m.to_matrix(m.algebra.unit(i)).power(e[i]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) acc(r, c) = static_cast<std::uint8_t>((acc(r, c) + a[idx] * term(r, c)) % u.p());
  }
  return acc;
}

/// Augmentation ideal is nilpotent, by taking full products of basis elements.
bool augmentation_nilpotent(const UAlgebra& u) {
  std::vector<UElement> ideal;
  for (std::size_t idx = 1; idx < u.dim(); ++idx) ideal.push_back(u.monomial(idx));
  Subspace power = Subspace::span(u.p(), u.dim(), ideal);
  for (std::size_t k = 0; k <= u.dim(); ++k) {
    if (power.is_zero()) return true;
    std::vector<UElement> next;
    for (const auto& a : ideal)
      for (std::size_t r = 0; r < power.dim(); ++r) next.push_back(u.multiply(a, power.basis_vector(r)));
    Subspace grown = Subspace::span(u.p(), u.dim(), next);
    if (grown == power) return false;
    power = std::move(grown);
  }
  return power.is_zero();
}

bool every_element_p_nilpotent(const RestrictedLieAlgebra& g) {
  const oracle::PPower pp = [&g](const Element& x) { return p_power(g, x); };
  for (const auto& x : oracle::all_vectors(g.p(), g.dim()))
    if (!oracle::p_nilpotent(g, x, pp)) return false;
  return true;
}

std::vector<RestrictedLieAlgebra> small_algebras() {
  std::vector<RestrictedLieAlgebra> out;
  for (const auto& e : default_corpus()) {
    RestrictedLieAlgebra g = e.build();
    if (g.whole().cardinality() <= 729) out.push_back(std::move(g));
  }
  for (const char* name : {"nil_1", "nil_2", "toral_1", "ex44"}) out.push_back(make_named(name, 3));
  out.push_back(make_named("nil_4", 2));
  for (std::uint64_t seed = 0; seed < 6; ++seed) out.push_back(random_gl_subalgebra(2, 2, 1 + seed % 2, seed).algebra);
  return out;
}

}  // namespace

TEST_CASE("dimension is p^n and the PBW indexing is bijective") {
  for (const auto& g : small_algebras()) {
    CAPTURE(g.name());
    const UAlgebra u(g);
    CHECK(u.dim() == g.whole().cardinality());
    for (std::size_t idx = 0; idx < u.dim(); ++idx) CHECK(u.monomial_index(u.exponents(idx)) == idx);
    CHECK(u.multiply(u.one(), u.generator(0)) == u.generator(0));
  }
}

TEST_CASE("small examples") {
  const RestrictedLieAlgebra t = make_named("toral_1", 3);
  const UAlgebra ut(t);
  CHECK(ut.power(ut.generator(0), 3) == ut.generator(0));
  CHECK_FALSE(is_local(ut));

  const RestrictedLieAlgebra n = make_named("nil_1", 3);
  const UAlgebra un(n);
  CHECK(is_zero(un.power(un.generator(0), 3)));
  CHECK(is_local(un));

  const RestrictedLieAlgebra ex = make_named("ex44", 5);
  const UAlgebra ue(ex);
  // [t, x] = x
  CHECK(ue.commutator(ue.generator(1), ue.generator(0)) == ue.generator(0));
  CHECK(ue.augmentation(ue.one()) == 1);
  CHECK(ue.augmentation(ue.generator(0)) == 0);

  const RestrictedLieAlgebra zero(2, {}, {}, {}, "zero");
  const UAlgebra uz(zero);
  CHECK(uz.dim() == 1);
  CHECK(is_local(uz));
}

TEST_CASE("Frobenius check on commutative algebras") {
  const UAlgebra ut(make_named("toral_2", 3));
  const SeparabilityCheck st = commutative_separable_check(ut);
  CHECK(st.commutative);
  REQUIRE(st.frobenius_bijective.has_value());
  CHECK(*st.frobenius_bijective);

  const UAlgebra un(make_named("nil_1", 3));
  const SeparabilityCheck sn = commutative_separable_check(un);
  CHECK(sn.commutative);
  REQUIRE(sn.frobenius_bijective.has_value());
  CHECK_FALSE(*sn.frobenius_bijective);

  const UAlgebra ue(make_named("ex44", 3));
  const SeparabilityCheck se = commutative_separable_check(ue);
  CHECK_FALSE(se.commutative);
  CHECK_FALSE(se.frobenius_bijective.has_value());

  const UAlgebra big(make_named("toral_5", 5));
  CHECK_THROWS_AS(commutative_separable_check(big), BudgetExceeded);
}

TEST_CASE("budget overflow throws") {
  CHECK_THROWS_AS(u_of(make_named("witt", 5), 100), BudgetExceeded);
  CHECK_THROWS_AS(UAlgebra(make_named("toral_12", 7)), BudgetExceeded);
}

TEST_CASE("multiplication is associative on random elements") {
  for (const auto& g : small_algebras()) {
    CAPTURE(g.name());
    const UAlgebra u(g);
    Rng rng = make_rng(11);
    const int trials = u.dim() > 100 ? 20 : 60;
    for (int i = 0; i < trials; ++i) {
      const UElement a = random_u(rng, u), b = random_u(rng, u), c = random_u(rng, u);
      CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
    }
  }
}

TEST_CASE("associativity on 500 random monomial triples") {
  const RestrictedLieAlgebra g = make_named("sl2", 3);
  const UAlgebra u(g);
  Rng rng = make_rng(12);
  for (int i = 0; i < 500; ++i) {
    const UElement a = u.monomial(rng() % u.dim()), b = u.monomial(rng() % u.dim()), c = u.monomial(rng() % u.dim());
    CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
  }
}

TEST_CASE("products agree with a matrix representation") {
  std::vector<MatrixAlgebra> reps;
  for (std::uint64_t seed = 0; seed < 8; ++seed) reps.push_back(random_gl_subalgebra(2, 2 + seed % 2, 1 + seed % 2, seed));
  reps.push_back(from_matrices(3, 2,
                               {FpMatrix::from_values(3, 2, 2, {0, 1, 0, 0}), FpMatrix::from_values(3, 2, 2, {0, 0, 1, 0})},
                               "sl2 rep"));
  for (const auto& m : reps) {
    CAPTURE(m.algebra.name());
    const UAlgebra u(m.algebra);
    Rng rng = make_rng(13);
    for (int i = 0; i < 40; ++i) {
      const UElement a = random_u(rng, u), b = random_u(rng, u);
      CHECK(represent(u, m, u.multiply(a, b)) == represent(u, m, a) * represent(u, m, b));
    }
  }
}

TEST_CASE("Lie structure embeds: commutators and p-th powers") {
  for (const auto& g : small_algebras()) {
    CAPTURE(g.name());
    const UAlgebra u(g);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      CHECK(u.power(u.generator(i), g.p()) == u.from_lie(g.pmap_image(i)));
      for (std::size_t j = 0; j < g.dim(); ++j)
        CHECK(u.commutator(u.generator(i), u.generator(j)) == u.from_lie(g.basis_bracket(i, j)));
    }
    Rng rng = make_rng(14);
    for (int k = 0; k < 20; ++k) {
      const Element x = random_vector(rng, g.p(), g.dim()), y = random_vector(rng, g.p(), g.dim());
      // the p-map of g is the associative p-th power in u(g)
      CHECK(u.power(u.from_lie(x), g.p()) == u.from_lie(p_power(g, x)));
      CHECK(u.commutator(u.from_lie(x), u.from_lie(y)) == u.from_lie(bracket(g, x, y)));
    }
  }
}

TEST_CASE("toral elements satisfy t^p = t in u(g)") {
  for (const auto& g : small_algebras()) {
    CAPTURE(g.name());
    const UAlgebra u(g);
    for (const auto& x : oracle::all_vectors(g.p(), g.dim())) {
      if (p_power(g, x) != x) continue;
      CHECK(u.power(u.from_lie(x), g.p()) == u.from_lie(x));
    }
  }
}

TEST_CASE("is_local agrees with nilpotency of the augmentation ideal") {
  for (const auto& g : small_algebras()) {
    if (g.whole().cardinality() > 243) continue;
    CAPTURE(g.name());
    const UAlgebra u(g);
    const bool nil = augmentation_nilpotent(u);
    CHECK(is_local(u) == nil);
    CHECK(is_local(u, 99) == nil);
    CHECK(nil == every_element_p_nilpotent(g));
  }
}
