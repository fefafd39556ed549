// Restricted Lie algebras over F_p given by structure constants and the
// p-map images of a basis, together with the standard subalgebra, ideal,
// quotient and semidirect-product constructions.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "retla/ff_linalg.hpp"

namespace retla {

/// Coordinate vector of an element in a fixed algebra's basis.
using Element = Vec;

/// [b_i, b_j] gets coefficient `c` on b_k.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::uint8_t c = 0;

  bool operator==(const BracketEntry&) const = default;
};

class RestrictedLieAlgebra {
 public:
  /// Brackets may be given for i < j only (the storage convention) or for
  /// both orders; a missing reversed pair is filled in by antisymmetry.
  /// `pmap[i]` is the coordinate vector of b_i^{[p]}.
  RestrictedLieAlgebra(unsigned p, std::vector<std::string> labels, const std::vector<BracketEntry>& brackets,
                       std::vector<Vec> pmap, std::string name = {});

  static RestrictedLieAlgebra zero(unsigned p, std::string name = "zero");

  unsigned p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Stored value of [b_i, b_j].
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Vec& pmap_image(std::size_t i) const { return pmap_[i]; }
  const std::vector<Vec>& pmap_images() const { return pmap_; }
  const FpMatrix& basis_ad(std::size_t i) const { return basis_ad_[i]; }

  /// Canonical sparse constants: i < j, increasing (i, j, k), nonzero only.
  std::vector<BracketEntry> bracket_entries() const;

  Element unit(std::size_t i) const;
  Element zero_element() const { return Element(dim(), 0); }
  Subspace whole() const { return Subspace::whole(p(), dim()); }
  Subspace none() const { return Subspace::zero(p(), dim()); }

  /// Same structure constants, labels and p-map.
  bool same_structure(const RestrictedLieAlgebra& other) const;

 private:
  PrimeField field_;
  std::vector<std::string> labels_;
  std::vector<Vec> table_;
  std::vector<Vec> pmap_;
  std::vector<FpMatrix> basis_ad_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Axioms

struct Violation {
  enum class Kind { Antisymmetry, Jacobi, Restrictedness, Malformed };
  Kind kind;
  std::vector<std::size_t> indices;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Antisymmetry, Jacobi on basis triples, and ad(b_i^{[p]}) = (ad b_i)^p.
ValidationReport validate(const RestrictedLieAlgebra& g);

// ---------------------------------------------------------------------------
// Element operations

Element bracket(const RestrictedLieAlgebra& g, const Element& x, const Element& y);
/// Column j is [x, b_j].
FpMatrix ad_matrix(const RestrictedLieAlgebra& g, const Element& x);
/// x^{[p]}, extending the basis p-map by the Jacobson formula.
Element p_power(const RestrictedLieAlgebra& g, const Element& x);
/// x^{[p^k]}.
Element p_power(const RestrictedLieAlgebra& g, const Element& x, std::size_t k);
/// The correction terms s_1(a,b) + ... + s_{p-1}(a,b) of the Jacobson formula.
Element jacobson_correction(const RestrictedLieAlgebra& g, const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Subalgebras

struct Subalgebra {
  Subspace space;
  bool bracket_closed = false;
  bool ideal = false;
  bool p_closed = false;

  std::size_t dim() const { return space.dim(); }
  bool operator==(const Subalgebra& o) const { return space == o.space; }
};

/// The whole algebra, with every flag set.
Subalgebra whole_algebra(const RestrictedLieAlgebra& g);

/// Span of [a, b] for a in A, b in B.
Subspace bracket_span(const RestrictedLieAlgebra& g, const Subspace& a, const Subspace& b);
bool is_bracket_closed(const RestrictedLieAlgebra& g, const Subspace& a);
bool is_ideal(const RestrictedLieAlgebra& g, const Subspace& a);
/// Basis p-powers lie in A (sufficient for p-closure when A is bracket closed).
bool is_p_closed(const RestrictedLieAlgebra& g, const Subspace& a);
bool is_abelian(const RestrictedLieAlgebra& g, const Subspace& a);
/// Recomputes every flag from scratch.
Subalgebra classify(const RestrictedLieAlgebra& g, const Subspace& a);

Subalgebra centralizer(const RestrictedLieAlgebra& g, const Subspace& s);
Subalgebra centralizer(const RestrictedLieAlgebra& g, const Element& x);
/// {x : [x, h] in h}; h must be bracket closed.
Subalgebra normalizer(const RestrictedLieAlgebra& g, const Subspace& h);

Subalgebra center(const RestrictedLieAlgebra& g);
/// Center of the subalgebra A, i.e. A intersected with its centralizer.
Subalgebra center(const RestrictedLieAlgebra& g, const Subspace& a);

std::vector<Subspace> derived_series(const RestrictedLieAlgebra& g);
std::vector<Subspace> derived_series(const RestrictedLieAlgebra& g, const Subspace& a);
/// A, [A,A], [A,[A,A]], ... until it stabilises.
std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& g);
std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& g, const Subspace& a);
bool is_nilpotent(const RestrictedLieAlgebra& g);
bool is_nilpotent(const RestrictedLieAlgebra& g, const Subspace& a);

enum class ClosureMode { Subalgebra, Ideal, PSubalgebra, PIdeal };

/// Smallest subspace containing `vectors` closed under the operations of `mode`.
Subalgebra closure(const RestrictedLieAlgebra& g, const std::vector<Element>& vectors, ClosureMode mode);

// ---------------------------------------------------------------------------
// Constructions

struct Quotient {
  RestrictedLieAlgebra algebra;
  /// dim(g/I) x dim(g); surjective with kernel I.
  FpMatrix projection;
  /// Coordinates of g that carry the quotient basis.
  std::vector<std::size_t> complement;
  Subspace kernel;

  Element project(const Element& x) const { return projection.apply(x); }
  /// Lift of a quotient element using the complement coordinates.
  Element lift(const Element& y) const;
  Subspace preimage(const Subspace& s) const;
  Subspace image(const Subspace& s) const;
};

/// g / I for a p-closed ideal I.
Quotient quotient(const RestrictedLieAlgebra& g, const Subspace& ideal);

/// t acting on v; action[i] is the derivation of v attached to t's basis
/// vector i (column j = image of v_j). The result has basis v then t.
RestrictedLieAlgebra semidirect(const RestrictedLieAlgebra& t, const RestrictedLieAlgebra& v,
                                const std::vector<FpMatrix>& action, std::string name = {});

/// A subalgebra of g viewed as an algebra in its own right, in the canonical
/// basis of the subspace.
struct InducedAlgebra {
  RestrictedLieAlgebra algebra;
  Subspace space;

  Element embed(const Element& y) const { return space.combine(y); }
  Element restrict(const Element& x) const { return space.coordinates(x); }
  Subspace embed(const Subspace& s) const;
  Subspace restrict(const Subspace& s) const;
};

/// A must be bracket closed and p-closed.
InducedAlgebra induced(const RestrictedLieAlgebra& g, const Subspace& a, std::string name = {});

struct MatrixAlgebra {
  RestrictedLieAlgebra algebra;
  /// n x n matrix of each basis element.
  std::vector<FpMatrix> basis;

  FpMatrix to_matrix(const Element& x) const;
};

/// Closure of the generators in gl_n under commutators and p-th powers.
MatrixAlgebra from_matrices(unsigned p, std::size_t n, const std::vector<FpMatrix>& generators, std::string name = {});

/// Human-readable form such as "2e+h" or "0".
std::string format_element(const RestrictedLieAlgebra& g, const Element& x);
/// "span(t, t+x)" or "0".
std::string format_subspace(const RestrictedLieAlgebra& g, const Subspace& s);

}  // namespace retla
