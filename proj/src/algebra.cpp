#include "retla/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace retla {

RestrictedLieAlgebra::RestrictedLieAlgebra(unsigned p, std::vector<std::string> labels,
                                           const std::vector<BracketEntry>& brackets, std::vector<Vec> pmap,
                                           std::string name)
    : field_(p), labels_(std::move(labels)), pmap_(std::move(pmap)), name_(std::move(name)) {
  const std::size_t n = labels_.size();
  if (pmap_.size() != n) throw std::invalid_argument("p-map must list one image per basis vector");
  for (const auto& img : pmap_) {
    if (img.size() != n) throw std::invalid_argument("p-map image has wrong length");
    for (auto c : img)
      if (c >= p) throw std::invalid_argument("p-map coefficient out of range");
  }
  table_.assign(n * n, Vec(n, 0));
  for (const auto& e : brackets) {
    if (e.i >= n || e.j >= n || e.k >= n) throw std::invalid_argument("bracket index out of range");
    if (e.c >= p) throw std::invalid_argument("bracket coefficient out of range");
    auto& slot = table_[e.i * n + e.j][e.k];
    slot = field_.add(slot, e.c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto& fwd = table_[i * n + j];
      auto& bwd = table_[j * n + i];
      if (is_zero(bwd)) {
        bwd = field_.scaled(field_.neg(1), fwd);
      } else if (is_zero(fwd)) {
        fwd = field_.scaled(field_.neg(1), bwd);
      }
    }
  }
  basis_ad_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FpMatrix ad(p, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad(k, j) = table_[i * n + j][k];
    basis_ad_.push_back(std::move(ad));
  }
}

RestrictedLieAlgebra RestrictedLieAlgebra::zero(unsigned p, std::string name) {
  return RestrictedLieAlgebra(p, {}, {}, {}, std::move(name));
}

std::vector<BracketEntry> RestrictedLieAlgebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (auto c = basis_bracket(i, j)[k]) out.push_back({i, j, k, c});
  return out;
}

Element RestrictedLieAlgebra::unit(std::size_t i) const {
  if (i >= dim()) throw std::out_of_range("basis index out of range");
  Element e(dim(), 0);
  e[i] = 1;
  return e;
}

bool RestrictedLieAlgebra::same_structure(const RestrictedLieAlgebra& other) const {
  return p() == other.p() && labels_ == other.labels_ && table_ == other.table_ && pmap_ == other.pmap_;
}

// ---------------------------------------------------------------------------

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Antisymmetry: return "antisymmetry";
    case Violation::Kind::Jacobi: return "jacobi";
    case Violation::Kind::Restrictedness: return "restrictedness";
    case Violation::Kind::Malformed: return "malformed";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    os << "\n  " << to_string(v.kind) << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << "): " << v.detail;
  }
  return os.str();
}

ValidationReport validate(const RestrictedLieAlgebra& g) {
  ValidationReport report;
  const std::size_t n = g.dim();
  const PrimeField& f = g.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(g.basis_bracket(i, i)))
      report.violations.push_back({Violation::Kind::Antisymmetry, {i, i}, "[b_i, b_i] != 0"});
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.sum(g.basis_bracket(i, j), g.basis_bracket(j, i)) != Vec(n, 0))
        report.violations.push_back({Violation::Kind::Antisymmetry, {i, j}, "[b_i, b_j] != -[b_j, b_i]"});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = g.basis_ad(i).apply(g.basis_bracket(j, k));
        s = f.sum(s, g.basis_ad(j).apply(g.basis_bracket(k, i)));
        s = f.sum(s, g.basis_ad(k).apply(g.basis_bracket(i, j)));
        if (!is_zero(s))
          report.violations.push_back({Violation::Kind::Jacobi, {i, j, k}, "cyclic sum = " + to_string(s)});
      }
  for (std::size_t i = 0; i < n; ++i) {
    const FpMatrix lhs = ad_matrix(g, g.pmap_image(i));
    const FpMatrix rhs = g.basis_ad(i).power(g.p());
    if (!(lhs == rhs))
      report.violations.push_back(
          {Violation::Kind::Restrictedness, {i}, "ad(b_i^[p]) != (ad b_i)^p for " + g.labels()[i]});
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void require_element(const RestrictedLieAlgebra& g, const Element& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("element does not belong to algebra " + g.name());
}

// sum_i s_i(a, b) given ad a and ad b.
Element jacobson_terms(const RestrictedLieAlgebra& g, const FpMatrix& ad_a, const FpMatrix& ad_b, const Element& a) {
  const PrimeField& f = g.field();
  const unsigned p = g.p();
  const std::size_t n = g.dim();
  // coefficients of ad(tau a + b)^k (a) as a polynomial in tau
  std::vector<Vec> poly{a};
  for (unsigned step = 1; step < p; ++step) {
    std::vector<Vec> next(poly.size() + 1, Vec(n, 0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (is_zero(poly[d])) continue;
      f.axpy(next[d + 1], 1, ad_a.apply(poly[d]));
      f.axpy(next[d], 1, ad_b.apply(poly[d]));
    }
    poly = std::move(next);
  }
  Element out(n, 0);
  for (unsigned i = 1; i < p; ++i) f.axpy(out, f.inv(static_cast<std::uint8_t>(i)), poly[i - 1]);
  return out;
}

}  // namespace

Element bracket(const RestrictedLieAlgebra& g, const Element& x, const Element& y) {
  require_element(g, x);
  require_element(g, y);
  const PrimeField& f = g.field();
  Element out(g.dim(), 0);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (!x[i]) continue;
    f.axpy(out, x[i], g.basis_ad(i).apply(y));
  }
  return out;
}

FpMatrix ad_matrix(const RestrictedLieAlgebra& g, const Element& x) {
  require_element(g, x);
  FpMatrix out(g.p(), g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (x[i]) out = out + g.basis_ad(i).scaled(x[i]);
  return out;
}

Element jacobson_correction(const RestrictedLieAlgebra& g, const Element& a, const Element& b) {
  require_element(g, a);
  require_element(g, b);
  return jacobson_terms(g, ad_matrix(g, a), ad_matrix(g, b), a);
}

Element p_power(const RestrictedLieAlgebra& g, const Element& x) {
  require_element(g, x);
  const PrimeField& f = g.field();
  const std::size_t n = g.dim();
  Element acc(n, 0);
  Element acc_p(n, 0);
  FpMatrix ad_acc(g.p(), n, n);
  bool empty = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    // (lambda b)^[p] = lambda^p b^[p] = lambda b^[p] over F_p
    Element term(n, 0);
    term[i] = x[i];
    Element term_p = f.scaled(x[i], g.pmap_image(i));
    FpMatrix ad_term = g.basis_ad(i).scaled(x[i]);
    if (empty) {
      acc = std::move(term);
      acc_p = std::move(term_p);
      ad_acc = std::move(ad_term);
      empty = false;
      continue;
    }
    Element corr = jacobson_terms(g, ad_acc, ad_term, acc);
    acc_p = f.sum(f.sum(acc_p, term_p), corr);
    f.axpy(acc, 1, term);
    ad_acc = ad_acc + ad_term;
  }
  return acc_p;
}

Element p_power(const RestrictedLieAlgebra& g, const Element& x, std::size_t k) {
  Element y = x;
  for (std::size_t i = 0; i < k && !is_zero(y); ++i) y = p_power(g, y);
  return y;
}

// ---------------------------------------------------------------------------

Subalgebra whole_algebra(const RestrictedLieAlgebra& g) { return {g.whole(), true, true, true}; }

Subspace bracket_span(const RestrictedLieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const FpMatrix ad = ad_matrix(g, a.basis_vector(i));
    for (std::size_t j = 0; j < b.dim(); ++j) vecs.push_back(ad.apply(b.basis().row(j)));
  }
  return Subspace::span(g.p(), g.dim(), vecs);
}

bool is_bracket_closed(const RestrictedLieAlgebra& g, const Subspace& a) { return a.contains(bracket_span(g, a, a)); }

bool is_ideal(const RestrictedLieAlgebra& g, const Subspace& a) {
  return a.contains(bracket_span(g, g.whole(), a));
}

bool is_p_closed(const RestrictedLieAlgebra& g, const Subspace& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.contains(p_power(g, a.basis_vector(i)))) return false;
  return true;
}

bool is_abelian(const RestrictedLieAlgebra& g, const Subspace& a) { return bracket_span(g, a, a).is_zero(); }

Subalgebra classify(const RestrictedLieAlgebra& g, const Subspace& a) {
  Subalgebra s{a, is_bracket_closed(g, a), false, false};
  s.ideal = is_ideal(g, a);
  s.p_closed = s.bracket_closed && is_p_closed(g, a);
  return s;
}

Subalgebra centralizer(const RestrictedLieAlgebra& g, const Subspace& s) {
  FpMatrix stacked(g.p(), 0, g.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) stacked = FpMatrix::stack(stacked, ad_matrix(g, s.basis_vector(i)));
  Subalgebra out{kernel(stacked), true, false, true};
  return out;
}

Subalgebra centralizer(const RestrictedLieAlgebra& g, const Element& x) {
  require_element(g, x);
  return {kernel(ad_matrix(g, x)), true, false, true};
}

Subalgebra normalizer(const RestrictedLieAlgebra& g, const Subspace& h) {
  if (!is_bracket_closed(g, h)) throw std::invalid_argument("normalizer: subspace is not bracket closed");
  const FpMatrix q = quotient_map(h);
  FpMatrix stacked(g.p(), 0, g.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) stacked = FpMatrix::stack(stacked, q * ad_matrix(g, h.basis_vector(i)));
  Subspace n = kernel(stacked);
  return {n, true, false, is_p_closed(g, n)};
}

Subalgebra center(const RestrictedLieAlgebra& g) {
  Subalgebra z = centralizer(g, g.whole());
  z.ideal = true;
  return z;
}

Subalgebra center(const RestrictedLieAlgebra& g, const Subspace& a) {
  Subspace z = a.intersect(centralizer(g, a).space);
  return {z, true, false, is_p_closed(g, z)};
}

std::vector<Subspace> derived_series(const RestrictedLieAlgebra& g) { return derived_series(g, g.whole()); }

std::vector<Subspace> derived_series(const RestrictedLieAlgebra& g, const Subspace& a) {
  std::vector<Subspace> out{a};
  while (true) {
    Subspace next = bracket_span(g, out.back(), out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
    if (out.back().is_zero()) break;
  }
  return out;
}

std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& g) { return lower_central_series(g, g.whole()); }

std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& g, const Subspace& a) {
  std::vector<Subspace> out{a};
  while (!out.back().is_zero()) {
    Subspace next = bracket_span(g, a, out.back());
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const RestrictedLieAlgebra& g) { return is_nilpotent(g, g.whole()); }

bool is_nilpotent(const RestrictedLieAlgebra& g, const Subspace& a) {
  return lower_central_series(g, a).back().is_zero();
}

Subalgebra closure(const RestrictedLieAlgebra& g, const std::vector<Element>& vectors, ClosureMode mode) {
  for (const auto& v : vectors) require_element(g, v);
  const bool with_brackets = mode == ClosureMode::Subalgebra || mode == ClosureMode::PSubalgebra;
  const bool with_ideal = mode == ClosureMode::Ideal || mode == ClosureMode::PIdeal;
  const bool with_p = mode == ClosureMode::PSubalgebra || mode == ClosureMode::PIdeal;
  Subspace v = Subspace::span(g.p(), g.dim(), vectors);
  while (true) {
    Subspace next = v;
    if (with_brackets) next = next.sum(bracket_span(g, v, v));
    if (with_ideal) next = next.sum(bracket_span(g, g.whole(), v));
    if (with_p) {
      std::vector<Vec> powers;
      for (std::size_t i = 0; i < v.dim(); ++i) powers.push_back(p_power(g, v.basis_vector(i)));
      next = next.sum(Subspace::span(g.p(), g.dim(), powers));
    }
    if (next == v) break;
    v = std::move(next);
  }
  return {v, true, with_ideal, with_p};
}

// ---------------------------------------------------------------------------

Element Quotient::lift(const Element& y) const {
  if (y.size() != complement.size()) throw std::invalid_argument("lift: element not in quotient");
  Element x(kernel.ambient_dim(), 0);
  for (std::size_t a = 0; a < complement.size(); ++a) x[complement[a]] = y[a];
  return x;
}

Subspace Quotient::preimage(const Subspace& s) const {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(lift(s.basis_vector(i)));
  return Subspace::span(kernel.p(), kernel.ambient_dim(), vecs).sum(kernel);
}

Subspace Quotient::image(const Subspace& s) const {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(projection.apply(s.basis().row(i)));
  return Subspace::span(kernel.p(), complement.size(), vecs);
}

Quotient quotient(const RestrictedLieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw std::invalid_argument("quotient: subspace is not an ideal");
  if (!is_p_closed(g, ideal)) throw std::invalid_argument("quotient: ideal is not p-closed");
  const auto comp = non_pivots(ideal);
  const FpMatrix q = quotient_map(ideal);
  const std::size_t m = comp.size();
  std::vector<std::string> labels;
  std::vector<BracketEntry> entries;
  std::vector<Vec> pmap;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(g.labels()[comp[a]]);
    pmap.push_back(q.apply(g.pmap_image(comp[a])));
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec img = q.apply(g.basis_bracket(comp[a], comp[b]));
      for (std::size_t k = 0; k < m; ++k)
        if (img[k]) entries.push_back({a, b, k, img[k]});
    }
  }
  std::string name = g.name().empty() ? std::string{} : g.name() + "/" + format_subspace(g, ideal);
  return Quotient{RestrictedLieAlgebra(g.p(), std::move(labels), entries, std::move(pmap), std::move(name)), q, comp,
                  ideal};
}

RestrictedLieAlgebra semidirect(const RestrictedLieAlgebra& t, const RestrictedLieAlgebra& v,
                                const std::vector<FpMatrix>& action, std::string name) {
  if (t.p() != v.p()) throw std::invalid_argument("semidirect: modulus mismatch");
  const std::size_t m = v.dim(), k = t.dim(), n = m + k;
  if (action.size() != k) throw std::invalid_argument("semidirect: one derivation per basis vector of t required");
  for (const auto& d : action)
    if (d.rows() != m || d.cols() != m || d.p() != t.p()) throw std::invalid_argument("semidirect: bad derivation shape");
  const PrimeField& f = t.field();
  std::vector<std::string> labels = v.labels();
  labels.insert(labels.end(), t.labels().begin(), t.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
    throw std::invalid_argument("semidirect: basis labels of t and v collide");
  std::vector<BracketEntry> entries;
  for (const auto& e : v.bracket_entries()) entries.push_back(e);
  for (const auto& e : t.bracket_entries()) entries.push_back({e.i + m, e.j + m, e.k + m, e.c});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (auto c = action[i](b, a)) entries.push_back({a, m + i, b, f.neg(c)});  // [v_a, t_i] = -D_i(v_a)
  std::vector<Vec> pmap;
  for (std::size_t a = 0; a < m; ++a) {
    Vec img(n, 0);
    std::copy(v.pmap_image(a).begin(), v.pmap_image(a).end(), img.begin());
    pmap.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vec img(n, 0);
    std::copy(t.pmap_image(i).begin(), t.pmap_image(i).end(), img.begin() + static_cast<std::ptrdiff_t>(m));
    pmap.push_back(std::move(img));
  }
  RestrictedLieAlgebra g(t.p(), std::move(labels), entries, std::move(pmap), std::move(name));
  if (auto report = validate(g); !report.ok())
    throw std::invalid_argument("semidirect: action is not compatible: " + report.summary());
  return g;
}

Subspace InducedAlgebra::embed(const Subspace& s) const {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(embed(s.basis_vector(i)));
  return Subspace::span(space.p(), space.ambient_dim(), vecs);
}

Subspace InducedAlgebra::restrict(const Subspace& s) const {
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(restrict(s.basis_vector(i)));
  return Subspace::span(space.p(), space.dim(), vecs);
}

InducedAlgebra induced(const RestrictedLieAlgebra& g, const Subspace& a, std::string name) {
  if (!is_bracket_closed(g, a)) throw std::invalid_argument("induced: subspace is not bracket closed");
  if (!is_p_closed(g, a)) throw std::invalid_argument("induced: subspace is not p-closed");
  const std::size_t d = a.dim();
  std::vector<std::string> labels;
  std::vector<BracketEntry> entries;
  std::vector<Vec> pmap;
  for (std::size_t r = 0; r < d; ++r) {
    const Vec br = a.basis_vector(r);
    labels.push_back(format_element(g, br));
    pmap.push_back(a.coordinates(p_power(g, br)));
    for (std::size_t s = r + 1; s < d; ++s) {
      Vec c = a.coordinates(bracket(g, br, a.basis_vector(s)));
      for (std::size_t k = 0; k < d; ++k)
        if (c[k]) entries.push_back({r, s, k, c[k]});
    }
  }
  return InducedAlgebra{RestrictedLieAlgebra(g.p(), std::move(labels), entries, std::move(pmap), std::move(name)), a};
}

FpMatrix MatrixAlgebra::to_matrix(const Element& x) const {
  if (x.size() != basis.size()) throw std::invalid_argument("to_matrix: element length mismatch");
  const std::size_t n = basis.empty() ? 0 : basis.front().rows();
  FpMatrix out(algebra.p(), n, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (x[i]) out = out + basis[i].scaled(x[i]);
  return out;
}

MatrixAlgebra from_matrices(unsigned p, std::size_t n, const std::vector<FpMatrix>& generators, std::string name) {
  auto vectorize = [](const FpMatrix& m) { return m.data(); };
  auto matrix_of = [&](std::span<const std::uint8_t> v) {
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
    return m;
  };
  std::vector<Vec> start;
  for (const auto& gmat : generators) {
    if (gmat.rows() != n || gmat.cols() != n || gmat.p() != p)
      throw std::invalid_argument("from_matrices: generator has wrong shape or modulus");
    start.push_back(vectorize(gmat));
  }
  Subspace v = Subspace::span(p, n * n, start);
  while (true) {
    std::vector<Vec> extra;
    std::vector<FpMatrix> mats;
    for (std::size_t i = 0; i < v.dim(); ++i) mats.push_back(matrix_of(v.basis().row(i)));
    for (std::size_t i = 0; i < mats.size(); ++i) {
      extra.push_back(vectorize(mats[i].power(p)));
      for (std::size_t j = i + 1; j < mats.size(); ++j) extra.push_back(vectorize(mats[i] * mats[j] - mats[j] * mats[i]));
    }
    Subspace next = v.sum(Subspace::span(p, n * n, extra));
    if (next == v) break;
    v = std::move(next);
  }
  const std::size_t d = v.dim();
  std::vector<FpMatrix> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(matrix_of(v.basis().row(i)));
  std::vector<std::string> labels;
  std::vector<BracketEntry> entries;
  std::vector<Vec> pmap;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back("m" + std::to_string(i));
    pmap.push_back(v.coordinates(vectorize(basis[i].power(p))));
    for (std::size_t j = i + 1; j < d; ++j) {
      Vec c = v.coordinates(vectorize(basis[i] * basis[j] - basis[j] * basis[i]));
      for (std::size_t k = 0; k < d; ++k)
        if (c[k]) entries.push_back({i, j, k, c[k]});
    }
  }
  return MatrixAlgebra{RestrictedLieAlgebra(p, std::move(labels), entries, std::move(pmap), std::move(name)),
                       std::move(basis)};
}

std::string format_element(const RestrictedLieAlgebra& g, const Element& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    if (!out.empty()) out += '+';
    if (x[i] != 1) out += std::to_string(x[i]);
    out += i < g.labels().size() ? g.labels()[i] : "b" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_subspace(const RestrictedLieAlgebra& g, const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out = "span(";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += format_element(g, s.basis_vector(i));
  }
  return out + ")";
}

}  // namespace retla
