// Maximal toral subalgebras, Cartan subalgebras and the correspondence
// between them.
//
// A toral subalgebra T is certified maximal when its centralizer c is
// nilpotent and the toral part of the center of c is T itself: any larger
// toral subalgebra would lie in c, and semisimple elements of a nilpotent
// restricted algebra are central.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retla/algebra.hpp"
#include "retla/semisimple.hpp"

namespace retla {

struct CertificateChecks {
  bool cartan_is_nilpotent = false;
  bool central_toral_part_equals_toral = false;
  bool valid() const { return cartan_is_nilpotent && central_toral_part_equals_toral; }
};

struct MaximalToralCertificate {
  Subalgebra toral;
  Subalgebra cartan;
  CertificateChecks checks;
  /// False when the exhaustive fallback did not fit the budget; `toral` is
  /// then a partial result and the checks are those of the partial toral.
  bool complete = true;
};

/// Evaluates the certificate for a toral T (no search).
CertificateChecks toral_certificate(const RestrictedLieAlgebra& g, const Subspace& t);

/// Greedy ascent from zero: 64 seeded samples of the current centralizer per
/// round, then an exhaustive sweep of it when within budget.
MaximalToralCertificate maximal_toral(const RestrictedLieAlgebra& g, std::uint64_t seed = 0,
                                      std::uint64_t budget = kDefaultBudget);

/// Throws std::invalid_argument when T is not toral.
bool is_maximal_toral(const RestrictedLieAlgebra& g, const Subspace& t);

/// Nilpotent and self-normalizing. Throws when c is not bracket closed.
bool is_cartan(const RestrictedLieAlgebra& g, const Subspace& c);

/// Centralizer of a maximal toral subalgebra.
Subalgebra cartan_from_toral(const RestrictedLieAlgebra& g, const Subspace& t);
/// Toral part of the center of a Cartan subalgebra.
Subalgebra toral_from_cartan(const RestrictedLieAlgebra& g, const Subspace& c);

struct ToralEnumeration {
  /// Sorted by canonical basis.
  std::vector<Subspace> maximal;
  /// Every toral subalgebra reached (all of them when exact), sorted.
  std::vector<Subspace> all;
  bool exact = false;
};

/// All maximal toral subalgebras by exhaustive search when |g| <= budget;
/// otherwise those reached by 64 seeded greedy runs, flagged inexact.
ToralEnumeration enumerate_torals(const RestrictedLieAlgebra& g, std::uint64_t budget = kDefaultBudget,
                                  std::uint64_t seed = 0);

/// Cartan subalgebras (centralizers of the enumerated maximal torals).
std::vector<Subspace> cartans_of(const RestrictedLieAlgebra& g, const ToralEnumeration& torals);

struct CartanSpan {
  Subspace span;
  std::vector<Subspace> witnesses;
  bool exhaustive = false;
};

/// Span of Cartan subalgebras: greedy restarts first, exact enumeration when
/// they fall short and |g| fits the budget.
CartanSpan cartan_span(const RestrictedLieAlgebra& g, std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0);

struct ExtendResult {
  std::optional<Subalgebra> cartan;
  /// Empty on success; otherwise names the step that failed.
  std::string failure;
};

/// Grows a Cartan subalgebra c of the centralizer of a semisimple s into a
/// Cartan subalgebra of g. Throws std::invalid_argument on bad preconditions.
ExtendResult extend_cartan(const RestrictedLieAlgebra& g, const Element& s, const Subspace& c);

}  // namespace retla
