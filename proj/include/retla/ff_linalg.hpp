// Exact dense linear algebra over the prime fields F_2, F_3, F_5 and F_7.
//
// Vectors are plain byte sequences of residues; matrices are dense and
// row-major. Subspaces are always held in reduced row-echelon form so that two
// subspaces are equal exactly when their basis matrices are identical.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace retla {

using Vec = std::vector<std::uint8_t>;

/// An exhaustive computation would exceed its configured element budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Arithmetic in F_p for a supported prime p.
class PrimeField {
 public:
  explicit PrimeField(unsigned p);

  static bool supported(unsigned p) { return p == 2 || p == 3 || p == 5 || p == 7; }

  unsigned p() const { return p_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + b) % p_); }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a + p_ - b) % p_); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return static_cast<std::uint8_t>((a * b) % p_); }
  std::uint8_t neg(std::uint8_t a) const { return static_cast<std::uint8_t>((p_ - a) % p_); }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint8_t>(r < 0 ? r + p_ : r);
  }

  /// y += a * x
  void axpy(Vec& y, std::uint8_t a, std::span<const std::uint8_t> x) const;
  Vec scaled(std::uint8_t a, std::span<const std::uint8_t> x) const;
  Vec sum(const Vec& x, const Vec& y) const;
  Vec difference(const Vec& x, const Vec& y) const;

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  unsigned p_;
  std::array<std::uint8_t, 8> inverse_{};
};

bool is_zero(std::span<const std::uint8_t> v);

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() : field_(2) {}
  FpMatrix(unsigned p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(unsigned p, std::size_t n);
  static FpMatrix from_rows(unsigned p, std::size_t cols, const std::vector<Vec>& rows);
  static FpMatrix from_columns(unsigned p, std::size_t rows, const std::vector<Vec>& cols);
  /// Entries are reduced mod p, negative values allowed.
  static FpMatrix from_values(unsigned p, std::size_t rows, std::size_t cols, const std::vector<long long>& values);

  unsigned p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;
  const Vec& data() const { return data_; }

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scaled(std::uint8_t a) const;
  /// Matrix-vector product M v.
  Vec apply(std::span<const std::uint8_t> v) const;
  FpMatrix transpose() const;
  FpMatrix power(unsigned long long k) const;
  bool is_zero() const;

  /// Rows of `top` followed by rows of `bottom`; column counts must agree.
  static FpMatrix stack(const FpMatrix& top, const FpMatrix& bottom);

  bool operator==(const FpMatrix& o) const {
    return p() == o.p() && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

struct RrefResult {
  FpMatrix reduced;  // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// A subspace of F_p^n in canonical (reduced row-echelon) form.
class Subspace {
 public:
  Subspace() : basis_(2, 0, 0) {}

  static Subspace zero(unsigned p, std::size_t ambient_dim);
  static Subspace whole(unsigned p, std::size_t ambient_dim);
  static Subspace span(unsigned p, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const FpMatrix& m);

  unsigned p() const { return basis_.p(); }
  const PrimeField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_dim(); }

  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;

  /// Residue of v after clearing all pivot coordinates.
  Vec reduce(std::span<const std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector with respect to the canonical basis.
  Vec coordinates(std::span<const std::uint8_t> v) const;
  /// Linear combination of the canonical basis rows.
  Vec combine(std::span<const std::uint8_t> coeffs) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace with(const Vec& v) const;

  /// Number of elements p^dim, saturating at UINT64_MAX.
  std::uint64_t cardinality() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator<(const Subspace& o) const;

 private:
  explicit Subspace(FpMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  void require_compatible(const Subspace& other) const;

  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
Subspace kernel(const FpMatrix& m);
/// Column space of M.
Subspace image(const FpMatrix& m);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const FpMatrix& a, std::span<const std::uint8_t> b);

/// Matrix of the linear map v -> non-pivot coordinates of (v reduced by U).
/// Its kernel is exactly U.
FpMatrix quotient_map(const Subspace& u);
/// Complementary (non-pivot) coordinate indices of U.
std::vector<std::size_t> non_pivots(const Subspace& u);

/// p^k with saturation at UINT64_MAX.
std::uint64_t saturating_pow(unsigned p, std::size_t k);

/// Base-p encoding of a coordinate vector (first coordinate least significant).
std::uint64_t encode(std::span<const std::uint8_t> v, unsigned p);
Vec decode(std::uint64_t code, unsigned p, std::size_t len);

/// Calls f(v) for every vector of the subspace, in order of increasing
/// base-p coefficient code. Returns false if f asked to stop.
template <class F>
bool for_each_element(const Subspace& s, F&& f) {
  const std::size_t d = s.dim();
  const unsigned p = s.p();
  Vec coeffs(d, 0);
  Vec v(s.ambient_dim(), 0);
  while (true) {
    if (!f(static_cast<const Vec&>(v))) return false;
    std::size_t i = 0;
    for (; i < d; ++i) {
      // Incrementing coefficient i adds row i once; wrapping subtracts (p-1) rows, i.e. adds one more.
      s.field().axpy(v, 1, s.basis().row(i));
      if (++coeffs[i] < p) break;
      coeffs[i] = 0;
    }
    if (i == d) return true;
  }
}

std::string to_string(std::span<const std::uint8_t> v);

}  // namespace retla
