#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "assocloc/field.hpp"

namespace assocloc {

using Vec = std::vector<Elem>;

// Dense row-major matrix over a prime field. Vectors are rows and maps act on
// the right (v -> v * M), so composition reads left to right.
class Mat {
 public:
  Mat() = default;
  Mat(PrimeField field, std::size_t rows, std::size_t cols);
  Mat(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows);

  static Mat identity(PrimeField field, std::size_t n);
  static Mat from_rows(PrimeField field, std::size_t cols, std::span<const Vec> rows);
  static Mat row(PrimeField field, std::span<const Elem> v);
  // Inverse of flattened(): reads rows*cols entries row-major.
  static Mat unflatten(PrimeField field, std::span<const Elem> v, std::size_t rows,
                       std::size_t cols);

  PrimeField field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = v; }
  std::span<const Elem> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Elem> row_span(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const;
  const std::vector<Elem>& data() const noexcept { return data_; }

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  Mat transposed() const;
  Vec flattened() const { return data_; }
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  // Rows [begin, end).
  Mat row_range(std::size_t begin, std::size_t end) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat scaled(Elem s) const;

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
Mat mat_pow(const Mat& m, std::size_t e);

// Row-vector helpers.
Vec vec_mat(const PrimeField& f, std::span<const Elem> v, const Mat& m);
Vec vec_add(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_scale(const PrimeField& f, std::span<const Elem> a, Elem s);
// a += s * b
void vec_axpy(const PrimeField& f, std::span<Elem> a, Elem s, std::span<const Elem> b);
bool vec_is_zero(std::span<const Elem> v) noexcept;
Vec unit_vector(std::size_t n, std::size_t i);

struct RrefResult {
  Mat form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan with first-nonzero pivoting; zero rows are kept at the bottom.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
// Basis (RREF rows) of {x : x * m = 0}.
Mat left_kernel(const Mat& m);
// Basis (RREF rows) of {x : m * x^T = 0}.
Mat right_kernel(const Mat& m);
// Some x with x * a = v, if one exists.
std::optional<Vec> solve_left(const Mat& a, std::span<const Elem> v);
// Two-sided inverse of a square matrix by elimination; nullopt if singular.
std::optional<Mat> inverse_by_elimination(const Mat& m);

// Subspace of F_p^n stored as RREF basis rows.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(PrimeField field, std::size_t ambient);
  static Subspace full(PrimeField field, std::size_t ambient);
  // Span of the rows of `generators` (cols = ambient dimension).
  static Subspace span(const Mat& generators);
  static Subspace span(PrimeField field, std::size_t ambient, std::span<const Vec> vectors);

  PrimeField field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Mat& basis() const noexcept { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  // Ambient coordinates not used as pivots, ascending.
  std::vector<std::size_t> non_pivots() const;

  // v minus its projection along the pivot coordinates; zero iff v is inside.
  Vec reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v with respect to basis(), if v lies in the subspace.
  std::optional<Vec> coordinates(std::span<const Elem> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

// Growing list of independent vectors, each reduced against the pivots of the
// earlier ones. Insertion order is preserved.
class EchelonBuilder {
 public:
  EchelonBuilder(PrimeField field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  // Appends v (normalized) and returns true if it is independent so far.
  bool add(Vec v);
  bool contains(std::span<const Elem> v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }

 private:
  Vec reduced(Vec v) const;

  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Coordinates with respect to an arbitrary list of independent rows.
class CoordinateSolver {
 public:
  CoordinateSolver() = default;
  // Throws Error(Shape) if the rows are dependent.
  explicit CoordinateSolver(const Mat& basis);

  std::size_t dim() const noexcept { return echelon_.dim(); }
  const Subspace& span() const noexcept { return echelon_; }
  // c with c * basis = v, if v lies in the span.
  std::optional<Vec> solve(std::span<const Elem> v) const;
  // Throws Error(Shape) if v is outside the span.
  Vec solve_or_throw(std::span<const Elem> v) const;

 private:
  Subspace echelon_;
  Mat transform_;  // echelon rows = transform_ * basis
};

// Throws Error(Shape) on ambient mismatch.
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

// Basis of {F : X * F = F * Y for every (X, Y)} as flattened row-major vectors.
// X is m x m, Y is k x k and F is m x k. With X = Y this is a commutant.
// An empty constraint list yields all m x k matrices.
Subspace solve_commutant_system(std::span<const std::pair<Mat, Mat>> constraints,
                                PrimeField field, std::size_t m, std::size_t k);
Subspace commutant(std::span<const Mat> matrices, PrimeField field, std::size_t m);

}  // namespace assocloc
