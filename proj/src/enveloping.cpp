#include "retla/enveloping.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "retla/rng.hpp"

namespace retla {

UAlgebra::UAlgebra(const RestrictedLieAlgebra& g, std::uint64_t budget) : g_(g) {
  const std::uint64_t size = saturating_pow(g.p(), g.dim());
  if (size > budget)
    throw BudgetExceeded("u(g) has dimension " + std::to_string(g.p()) + "^" + std::to_string(g.dim()) +
                         ", above the budget of " + std::to_string(budget));
  dim_ = static_cast<std::size_t>(size);
  stride_.resize(g.dim());
  std::uint32_t s = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    stride_[i] = s;
    s *= g.p();
  }
  cache_.resize(g.dim());
}

std::vector<unsigned> UAlgebra::exponents(std::size_t monomial) const {
  std::vector<unsigned> e(generators());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = static_cast<unsigned>(monomial % p());
    monomial /= p();
  }
  return e;
}

std::size_t UAlgebra::monomial_index(const std::vector<unsigned>& exponents) const {
  if (exponents.size() != generators()) throw std::invalid_argument("exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] >= p()) throw std::invalid_argument("exponent out of range");
    idx += exponents[i] * stride_[i];
  }
  return idx;
}

UAlgebra::UElement UAlgebra::one() const { return monomial(0); }

UAlgebra::UElement UAlgebra::monomial(std::size_t index) const {
  if (index >= dim_) throw std::out_of_range("monomial index out of range");
  UElement u = zero();
  u[index] = 1;
  return u;
}

UAlgebra::UElement UAlgebra::generator(std::size_t i) const {
  if (i >= generators()) throw std::out_of_range("generator index out of range");
  return monomial(stride_[i]);
}

UAlgebra::UElement UAlgebra::from_lie(const Element& x) const {
  if (x.size() != generators()) throw std::invalid_argument("from_lie: element has wrong length");
  UElement u = zero();
  for (std::size_t i = 0; i < x.size(); ++i) u[stride_[i]] = x[i];
  return u;
}

const UAlgebra::Sparse& UAlgebra::generator_times_monomial(std::size_t i, std::uint32_t m) const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (auto it = cache_[i].find(m); it != cache_[i].end()) return it->second;

  const PrimeField& f = g_.field();
  const unsigned p = g_.p();
  const std::size_t n = generators();
  const std::vector<unsigned> e = exponents(m);
  std::size_t lead = 0;
  while (lead < n && e[lead] == 0) ++lead;

  std::map<std::uint32_t, std::uint8_t> acc;
  auto add = [&](std::uint32_t idx, std::uint8_t c) {
    if (!c) return;
    auto& slot = acc[idx];
    slot = f.add(slot, c);
  };
  auto add_product = [&](std::size_t gen, std::uint32_t mono, std::uint8_t c) {
    if (!c) return;
    const Sparse& part = generator_times_monomial(gen, mono);
    for (const auto& [idx, v] : part) add(idx, f.mul(c, v));
  };

  if (i < lead || (i == lead && e[i] + 1 < p)) {
    add(m + stride_[i], 1);
  } else if (i == lead) {
    // b_i^p = b_i^{[p]}
    const std::uint32_t rest = m - (p - 1) * stride_[i];
    const Vec& image = g_.pmap_image(i);
    for (std::size_t k = 0; k < n; ++k) add_product(k, rest, image[k]);
  } else {
    // b_i b_j m' = b_j (b_i m') + [b_i, b_j] m'
    const std::size_t j = lead;
    const std::uint32_t tail = m - stride_[j];
    const Sparse inner = generator_times_monomial(i, tail);
    for (const auto& [idx, c] : inner) add_product(j, idx, c);
    const Vec& br = g_.basis_bracket(i, j);
    for (std::size_t k = 0; k < n; ++k) add_product(k, tail, br[k]);
  }

  Sparse out;
  for (const auto& [idx, c] : acc)
    if (c) out.emplace_back(idx, c);
  return cache_[i].emplace(m, std::move(out)).first->second;
}

UAlgebra::UElement UAlgebra::left_multiply(std::size_t i, const UElement& u) const {
  if (u.size() != dim_) throw std::invalid_argument("left_multiply: element has wrong length");
  const PrimeField& f = g_.field();
  UElement out = zero();
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    if (!u[idx]) continue;
    for (const auto& [k, c] : generator_times_monomial(i, static_cast<std::uint32_t>(idx)))
      out[k] = f.add(out[k], f.mul(u[idx], c));
  }
  return out;
}

UAlgebra::UElement UAlgebra::multiply(const UElement& a, const UElement& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("multiply: element has wrong length");
  const PrimeField& f = g_.field();
  UElement out = zero();
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    if (!a[idx]) continue;
    // b_0^{e_0} ... b_{n-1}^{e_{n-1}} * b, innermost factor first
    const auto e = exponents(idx);
    UElement v = b;
    for (std::size_t k = generators(); k-- > 0;)
      for (unsigned r = 0; r < e[k]; ++r) v = left_multiply(k, v);
    f.axpy(out, a[idx], v);
  }
  return out;
}

UAlgebra::UElement UAlgebra::power(const UElement& a, unsigned long long k) const {
  UElement result = one();
  UElement base = a;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

UAlgebra::UElement UAlgebra::commutator(const UElement& a, const UElement& b) const {
  return g_.field().difference(multiply(a, b), multiply(b, a));
}

bool is_local(const UAlgebra& u, std::uint64_t seed) {
  const RestrictedLieAlgebra& g = u.lie();
  const unsigned p = u.p();
  unsigned m = 0;
  for (std::uint64_t reach = 1; reach < u.dim(); reach *= p) ++m;

  auto non_nilpotent = [&](const Element& x) {
    UAlgebra::UElement y = u.from_lie(x);
    for (unsigned k = 0; k < m && !is_zero(y); ++k) y = u.power(y, p);
    return !is_zero(y);
  };
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (non_nilpotent(g.unit(i))) return false;
  Rng rng = make_rng(seed, 0x6c6f63616cULL);
  for (int i = 0; i < 64 && g.dim() > 0; ++i)
    if (non_nilpotent(random_vector(rng, p, g.dim()))) return false;

  std::set<Subspace> seen;
  Subspace w = Subspace::span(p, u.dim(), {u.one()});
  for (std::size_t step = 0; step <= u.dim(); ++step) {
    if (w.is_zero()) return true;
    if (!seen.insert(w).second) return false;
    std::vector<Vec> next;
    for (std::size_t r = 0; r < w.dim(); ++r) {
      const Vec basis = w.basis_vector(r);
      for (std::size_t i = 0; i < g.dim(); ++i) next.push_back(u.left_multiply(i, basis));
    }
    w = Subspace::span(p, u.dim(), next);
  }
  return false;
}

SeparabilityCheck commutative_separable_check(const UAlgebra& u) {
  SeparabilityCheck out;
  out.commutative = true;
  for (std::size_t i = 0; i < u.generators() && out.commutative; ++i)
    for (std::size_t j = i + 1; j < u.generators(); ++j)
      if (!is_zero(u.commutator(u.generator(i), u.generator(j)))) {
        out.commutative = false;
        break;
      }
  if (!out.commutative) return out;
  if (u.dim() > kFrobeniusMatrixLimit)
    throw BudgetExceeded("Frobenius matrix of size " + std::to_string(u.dim()) + " exceeds the limit");
  std::vector<Vec> cols;
  cols.reserve(u.dim());
  for (std::size_t idx = 0; idx < u.dim(); ++idx) cols.push_back(u.power(u.monomial(idx), u.p()));
  out.frobenius_bijective = rank(FpMatrix::from_columns(u.p(), u.dim(), cols)) == u.dim();
  return out;
}

}  // namespace retla
