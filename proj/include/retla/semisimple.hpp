// Semisimple and p-nilpotent elements, toral parts, and p-nilpotent radicals.
//
// Over F_p the p-map restricted to an abelian p-closed subalgebra is additive
// and fixes scalars, so it is a linear operator P there. Everything in this
// module is phrased through the Fitting decomposition of P: the image of a high
// power of P is the semisimple (toral) part, its kernel the p-nilpotent part.

#pragma once

#include <cstdint>
#include <optional>

#include "retla/algebra.hpp"

namespace retla {

inline constexpr std::uint64_t kDefaultBudget = 300000;

/// Span of x, x^[p], x^[p^2], ...; abelian and p-closed.
Subalgebra p_closure(const RestrictedLieAlgebra& g, const Element& x);

/// Matrix of y -> y^[p] on an abelian p-closed subspace, in its canonical basis.
FpMatrix p_operator(const RestrictedLieAlgebra& g, const Subspace& a);

struct JordanPair {
  Element semisimple_part;
  Element nilpotent_part;
};

JordanPair jordan(const RestrictedLieAlgebra& g, const Element& x);
bool is_semisimple(const RestrictedLieAlgebra& g, const Element& x);
bool is_p_nilpotent_element(const RestrictedLieAlgebra& g, const Element& x);

/// x lies in the span of x^[p], x^[p^2], ... (membership test, no Fitting).
bool in_span_of_own_p_powers(const RestrictedLieAlgebra& g, const Element& x);
/// Some iterated p-power of x vanishes (at most dim g iterations needed).
bool p_power_vanishes(const RestrictedLieAlgebra& g, const Element& x);

/// Semisimple summand of an abelian p-closed subalgebra.
/// Throws std::invalid_argument when A is not abelian or not p-closed.
Subalgebra toral_part(const RestrictedLieAlgebra& g, const Subspace& a);
/// p-nilpotent summand, the complement of toral_part.
Subalgebra nil_part(const RestrictedLieAlgebra& g, const Subspace& a);

bool is_toral(const RestrictedLieAlgebra& g, const Subspace& a);

/// Every element p-nilpotent. Decided by the maximal-toral certificate of the
/// zero toral subalgebra: the algebra is p-nilpotent exactly when its maximal
/// toral subalgebra is zero.
bool is_p_nilpotent_algebra(const RestrictedLieAlgebra& g);
/// Same for a bracket- and p-closed subalgebra A.
bool is_p_nilpotent_algebra(const RestrictedLieAlgebra& g, const Subspace& a);

/// Exhaustive check that every element of A is p-nilpotent. Returns nullopt
/// when |A| exceeds the budget.
std::optional<bool> all_elements_p_nilpotent(const RestrictedLieAlgebra& g, const Subspace& a, std::uint64_t budget);

enum class Exactness { Exact, LowerBound };
const char* to_string(Exactness e);

struct RadicalResult {
  Subalgebra radical;
  Exactness exactness = Exactness::Exact;
  /// Largest plain (not necessarily p-closed) ideal of p-nilpotent elements;
  /// set only in the exact regime and only when it differs from `radical`.
  std::optional<Subspace> plain_variant;
};

/// Largest p-closed ideal consisting of p-nilpotent elements. Exact when every
/// element of g fits the budget, otherwise a lower bound from the basis and
/// seeded random candidates.
RadicalResult p_nilpotent_radical(const RestrictedLieAlgebra& g, std::uint64_t budget = kDefaultBudget,
                                  std::uint64_t seed = 0);

/// A nonzero p-closed ideal of minimal dimension inside the radical, or nullopt
/// when the radical is zero. Throws std::runtime_error if the radical is not exact.
std::optional<Subalgebra> minimal_p_nilpotent_ideal(const RestrictedLieAlgebra& g,
                                                    std::uint64_t budget = kDefaultBudget);

}  // namespace retla
