// Restricted enveloping algebra u(g).
//
// Elements are dense coefficient vectors over the PBW monomials
// b_0^{e_0} ... b_{n-1}^{e_{n-1}} with 0 <= e_i < p, indexed by
// sum e_i p^i. Products are computed lazily by straightening: generators are
// commuted past each other using the bracket, and b_i^p is rewritten as the
// p-map image b_i^{[p]}.

#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "retla/algebra.hpp"

namespace retla {

inline constexpr std::uint64_t kDefaultEnvelopingBudget = std::uint64_t{1} << 15;

class UAlgebra {
 public:
  using UElement = Vec;

  /// Throws BudgetExceeded when p^dim g exceeds the budget.
  explicit UAlgebra(const RestrictedLieAlgebra& g, std::uint64_t budget = kDefaultEnvelopingBudget);
  UAlgebra(const UAlgebra&) = delete;
  UAlgebra& operator=(const UAlgebra&) = delete;

  const RestrictedLieAlgebra& lie() const { return g_; }
  unsigned p() const { return g_.p(); }
  std::size_t generators() const { return g_.dim(); }
  /// p^n
  std::size_t dim() const { return dim_; }

  std::vector<unsigned> exponents(std::size_t monomial) const;
  std::size_t monomial_index(const std::vector<unsigned>& exponents) const;

  UElement zero() const { return UElement(dim_, 0); }
  UElement one() const;
  UElement monomial(std::size_t index) const;
  UElement generator(std::size_t i) const;
  /// Image of a Lie algebra element in degree one.
  UElement from_lie(const Element& x) const;

  /// b_i * u
  UElement left_multiply(std::size_t i, const UElement& u) const;
  UElement multiply(const UElement& a, const UElement& b) const;
  UElement power(const UElement& a, unsigned long long k) const;
  UElement commutator(const UElement& a, const UElement& b) const;
  /// Counit: the coefficient of the empty monomial.
  std::uint8_t augmentation(const UElement& u) const { return u[0]; }

 private:
  using Sparse = std::vector<std::pair<std::uint32_t, std::uint8_t>>;
  const Sparse& generator_times_monomial(std::size_t i, std::uint32_t monomial) const;

  RestrictedLieAlgebra g_;
  std::size_t dim_ = 1;
  std::vector<std::uint32_t> stride_;
  mutable std::recursive_mutex mutex_;
  mutable std::vector<std::unordered_map<std::uint32_t, Sparse>> cache_;
};

/// Throws BudgetExceeded when p^dim g exceeds the budget.
inline UAlgebra u_of(const RestrictedLieAlgebra& g, std::uint64_t budget = kDefaultEnvelopingBudget) {
  return UAlgebra(g, budget);
}

/// The augmentation ideal is nilpotent.
///
/// Non-locality is certified by an element x of g whose associative power
/// x^{p^m} (p^m >= dim U) is nonzero; locality by the chain
/// W_0 = k, W_{k+1} = g W_k reaching zero, which happens exactly when some
/// power of the augmentation ideal vanishes.
bool is_local(const UAlgebra& u, std::uint64_t seed = 0);

struct SeparabilityCheck {
  bool commutative = false;
  /// Only present when commutative.
  std::optional<bool> frobenius_bijective;
};

inline constexpr std::size_t kFrobeniusMatrixLimit = 1024;

/// Commutativity on generator pairs; when commutative, the rank of the
/// Frobenius u -> u^p written on the monomial basis. Throws BudgetExceeded if
/// that matrix would exceed kFrobeniusMatrixLimit rows.
SeparabilityCheck commutative_separable_check(const UAlgebra& u);

}  // namespace retla
