#include "retla/ff_linalg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace retla {

PrimeField::PrimeField(unsigned p) : p_(p) {
  if (!supported(p)) throw std::invalid_argument("unsupported modulus " + std::to_string(p) + " (expected 2, 3, 5 or 7)");
  for (unsigned a = 1; a < p; ++a)
    for (unsigned b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverse_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t PrimeField::inv(std::uint8_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inverse_[a];
}

void PrimeField::axpy(Vec& y, std::uint8_t a, std::span<const std::uint8_t> x) const {
  if (a == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = static_cast<std::uint8_t>((y[i] + a * x[i]) % p_);
}

Vec PrimeField::scaled(std::uint8_t a, std::span<const std::uint8_t> x) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mul(a, x[i]);
  return out;
}

Vec PrimeField::sum(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(x[i], y[i]);
  return out;
}

Vec PrimeField::difference(const Vec& x, const Vec& y) const {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = sub(x[i], y[i]);
  return out;
}

bool is_zero(std::span<const std::uint8_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(unsigned p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(unsigned p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

FpMatrix FpMatrix::from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols) {
  FpMatrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

FpMatrix FpMatrix::from_values(unsigned p, std::size_t rows, std::size_t cols, const std::vector<long long>& values) {
  if (values.size() != rows * cols) throw std::invalid_argument("value count mismatch");
  FpMatrix m(p, rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = m.field_.reduce(values[i]);
  return m;
}

Vec FpMatrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec FpMatrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p() != o.p()) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(p(), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p() != o.p()) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(p(), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p() != o.p()) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out(p(), rows_, o.cols_);
  std::vector<unsigned> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < cols_; ++k) {
      const unsigned a = (*this)(r, k);
      if (!a) continue;
      auto orow = o.row(k);
      for (std::size_t c = 0; c < o.cols_; ++c) acc[c] += a * orow[c];
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = static_cast<std::uint8_t>(acc[c] % p());
  }
  return out;
}

FpMatrix FpMatrix::scaled(std::uint8_t a) const {
  FpMatrix out(p(), rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(a, data_[i]);
  return out;
}

Vec FpMatrix::apply(std::span<const std::uint8_t> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    unsigned acc = 0;
    auto rr = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc += rr[c] * v[c];
    out[r] = static_cast<std::uint8_t>(acc % p());
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p(), cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

FpMatrix FpMatrix::power(unsigned long long k) const {
  if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
  FpMatrix result = identity(p(), rows_);
  FpMatrix base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool FpMatrix::is_zero() const { return retla::is_zero(data_); }

FpMatrix FpMatrix::stack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("stack: column mismatch");
  FpMatrix out(top.p(), top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

// ---------------------------------------------------------------------------
// Row reduction

RrefResult rref(const FpMatrix& m) {
  FpMatrix r = m;
  const PrimeField& f = r.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < r.rows() && r(sel, c) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead) std::swap_ranges(r.row(sel).begin(), r.row(sel).end(), r.row(lead).begin());
    const std::uint8_t scale = f.inv(r(lead, c));
    for (auto& x : r.row(lead)) x = f.mul(scale, x);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, c) == 0) continue;
      const std::uint8_t factor = f.neg(r(i, c));
      auto target = r.row(i);
      auto src = r.row(lead);
      for (std::size_t k = c; k < r.cols(); ++k)
        if (src[k]) target[k] = static_cast<std::uint8_t>((target[k] + factor * src[k]) % f.p());
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(unsigned p, std::size_t ambient_dim) { return Subspace(FpMatrix(p, 0, ambient_dim), {}); }

Subspace Subspace::whole(unsigned p, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(FpMatrix::identity(p, ambient_dim), std::move(piv));
}

Subspace Subspace::span(unsigned p, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return row_space(FpMatrix::from_rows(p, ambient_dim, vectors));
}

Subspace Subspace::row_space(const FpMatrix& m) {
  auto [reduced, pivots] = rref(m);
  FpMatrix basis(m.p(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    std::copy(reduced.row(r).begin(), reduced.row(r).end(), basis.row(r).begin());
  return Subspace(std::move(basis), std::move(pivots));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
  return out;
}

Vec Subspace::reduce(std::span<const std::uint8_t> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("vector length does not match ambient dimension");
  Vec out(v.begin(), v.end());
  const PrimeField& f = field();
  for (std::size_t r = 0; r < dim(); ++r) {
    const std::uint8_t c = out[pivots_[r]];
    if (c) f.axpy(out, f.neg(c), basis_.row(r));
  }
  return out;
}

bool Subspace::contains(std::span<const std::uint8_t> v) const { return retla::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Vec Subspace::coordinates(std::span<const std::uint8_t> v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not a member of the subspace");
  Vec c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Vec Subspace::combine(std::span<const std::uint8_t> coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("coefficient count does not match dimension");
  Vec out(ambient_dim(), 0);
  for (std::size_t r = 0; r < dim(); ++r) field().axpy(out, coeffs[r], basis_.row(r));
  return out;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  if (p() != other.p()) throw std::invalid_argument("modulus mismatch");
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  if (other.dim() == 0) return *this;
  if (dim() == 0) return other;
  return row_space(FpMatrix::stack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_compatible(other);
  if (dim() == 0 || other.dim() == 0) return zero(p(), ambient_dim());
  // Solve a.U = b.W: kernel of the (n x (r+s)) matrix [U^T | -W^T].
  const std::size_t r = dim(), s = other.dim(), n = ambient_dim();
  FpMatrix sys(p(), n, r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) sys(k, i) = basis_(i, k);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < n; ++k) sys(k, r + j) = field().neg(other.basis_(j, k));
  Subspace ker = kernel(sys);
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    auto kv = ker.basis_.row(i);
    vecs.push_back(combine(kv.subspan(0, r)));
  }
  return span(p(), n, vecs);
}

Subspace Subspace::with(const Vec& v) const {
  if (contains(v)) return *this;
  return sum(span(p(), ambient_dim(), {v}));
}

std::uint64_t Subspace::cardinality() const { return saturating_pow(p(), dim()); }

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.data() < o.basis_.data();
}

// ---------------------------------------------------------------------------

Subspace kernel(const FpMatrix& m) {
  auto [reduced, pivots] = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.p(), m.cols(), vecs);
}

Subspace image(const FpMatrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<Vec> solve(const FpMatrix& a, std::span<const std::uint8_t> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  FpMatrix aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, a.cols());
  return x;
}

std::vector<std::size_t> non_pivots(const Subspace& u) {
  std::vector<bool> is_pivot(u.ambient_dim(), false);
  for (auto c : u.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.ambient_dim(); ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

FpMatrix quotient_map(const Subspace& u) {
  const auto free = non_pivots(u);
  const std::size_t n = u.ambient_dim();
  FpMatrix q(u.p(), free.size(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec e(n, 0);
    e[j] = 1;
    Vec red = u.reduce(e);
    for (std::size_t i = 0; i < free.size(); ++i) q(i, j) = red[free[i]];
  }
  return q;
}

std::uint64_t saturating_pow(unsigned p, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    out *= p;
  }
  return out;
}

std::uint64_t encode(std::span<const std::uint8_t> v, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

Vec decode(std::uint64_t code, unsigned p, std::size_t len) {
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<std::uint8_t>(code % p);
    code /= p;
  }
  return v;
}

std::string to_string(std::span<const std::uint8_t> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << static_cast<int>(v[i]);
  os << ')';
  return os.str();
}

}  // namespace retla
