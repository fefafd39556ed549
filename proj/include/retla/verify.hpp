// Theorem-verification harness: each claim is an equivalence, round trip or
// lifting property checked exactly against the brute-force enumerations of
// this library, within an element budget.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retla/algebra.hpp"

namespace retla {

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);

struct VerificationReport {
  std::string claim_id;
  std::string algebra;
  Status status = Status::Inconclusive;
  std::string detail;
  std::vector<std::string> witnesses;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  long long millis = 0;
};

/// Claim identifiers in canonical evaluation order:
///   thm1.5                  nilpotent <=> unique maximal toral <=> all torals central
///   cor1.3                  toral <-> Cartan round trips
///   thm1.2.v                normalizing torals centralize Cartans; Cartans are maximal nilpotent
///   lemma3.2                maximal toral zero <=> all elements p-nilpotent <=> u(g) local
///   lemma4.3                Cartan subalgebras span g
///   cor4.2                  Cartans of centralizers of semisimple elements extend
///   case1.central_quotient  preimages of Cartans under central quotients are Cartans
///   case2.lift              Cartans of quotients lift along p-closed ideals
///   case2.minimal_ideal     minimal p-nilpotent ideal structure and t+[t,v] semisimple
const std::vector<std::string>& all_claims();

/// Runs the selected claims (all when empty) in canonical order. Throws
/// std::invalid_argument on an unknown claim id.
std::vector<VerificationReport> verify_theorems(const RestrictedLieAlgebra& g,
                                                const std::vector<std::string>& selection, std::uint64_t seed,
                                                std::uint64_t budget);

}  // namespace retla
