// Named algebras, the default corpus, and seeded random matrix algebras.
//
// Basis conventions:
//   ex44                 x, t          [t,x] = x, t^[p] = t
//   sl2                  e, h, f       [h,e] = 2e, [h,f] = -2f, [e,f] = h, h^[p] = h
//   gl2, gl3             E11, E12, ... matrix units, E_ii^[p] = E_ii
//   borel_sl2            e, h          [h,e] = 2e, h^[p] = h
//   heisenberg           x, y, z       [x,y] = z, z^[p] = z
//   heisenberg_zero_pmap x, y, z       [x,y] = z, zero p-map
//   witt                 e_-1 .. e_p-2 [e_i,e_j] = (j-i) e_{i+j}, e_0^[p] = e_0 (p >= 5)
//   toral_k              t1 .. tk      abelian, t_i^[p] = t_i
//   nil_k                x1 .. xk      abelian, x_i^[p] = x_{i+1}, x_k^[p] = 0
//   vt_weights:w1,..,wm  v1 .. vm, t   [t,v_i] = w_i v_i, t^[p] = t, zero p-map on v

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "retla/algebra.hpp"

namespace retla {

/// Throws std::invalid_argument for an unknown name or an inadmissible p.
/// p = 0 selects the entry's default prime.
RestrictedLieAlgebra make_named(const std::string& name, unsigned p = 0);

unsigned default_prime(const std::string& name);

/// Regression record only; always recomputed before being compared.
struct ExpectedFacts {
  bool nilpotent = false;
  std::size_t radical_dim = 0;
  std::optional<std::size_t> maximal_torals;
};

struct CorpusEntry {
  std::string name;
  unsigned p = 0;
  ExpectedFacts expected;
  RestrictedLieAlgebra build() const { return make_named(name, p); }
};

const std::vector<CorpusEntry>& default_corpus();

/// Recomputes the facts of an entry and lists every mismatch with its record.
std::vector<std::string> check_expected(const CorpusEntry& entry, std::uint64_t budget, std::uint64_t seed = 0);

/// Closure in gl_n of `generators` uniformly random n x n matrices.
/// Requires 1 <= n <= 4 and p in {2, 3, 5}.
MatrixAlgebra random_gl_subalgebra(std::size_t n, unsigned p, std::size_t generators, std::uint64_t seed);

}  // namespace retla
