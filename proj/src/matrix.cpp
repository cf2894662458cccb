#include "assocloc/matrix.hpp"

#include <algorithm>
#include <string>

#include "assocloc/error.hpp"

namespace assocloc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::Shape, what);
}

}  // namespace

Mat::Mat(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat::Mat(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    for (long long x : r) data_.push_back(field.reduce(x));
  }
}

Mat Mat::identity(PrimeField field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(PrimeField field, std::size_t cols, std::span<const Vec> rows) {
  Mat m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row_span(r).begin());
  }
  return m;
}

Mat Mat::row(PrimeField field, std::span<const Elem> v) {
  Mat m(field, 1, v.size());
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Mat Mat::unflatten(PrimeField field, std::span<const Elem> v, std::size_t rows,
                   std::size_t cols) {
  require(v.size() == rows * cols, "unflatten size mismatch");
  Mat m(field, rows, cols);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

Vec Mat::row_vec(std::size_t r) const {
  auto s = row_span(r);
  return Vec(s.begin(), s.end());
}

bool Mat::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Mat::is_identity() const noexcept {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat Mat::transposed() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b.set(r, c, (*this)(r0 + r, c0 + c));
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  require(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) set(r0 + r, c0 + c, b(r, c));
}

Mat Mat::row_range(std::size_t begin, std::size_t end) const {
  return block(begin, 0, end - begin, cols_);
}

Mat& Mat::operator+=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], o.data_[i]);
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.sub(data_[i], o.data_[i]);
  return *this;
}

Mat Mat::scaled(Elem s) const {
  Mat m = *this;
  for (auto& x : m.data_) x = field_.mul(x, s);
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols_ == b.rows_, "multiplication shape mismatch");
  require(a.field_ == b.field_, "field mismatch");
  const std::uint64_t p = a.field_.p();
  Mat c(a.field_, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const std::uint64_t x = a(i, t);
      if (x == 0) continue;
      const Elem* brow = b.data_.data() + t * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + x * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c.set(i, j, static_cast<Elem>(acc[j]));
  }
  return c;
}

Mat mat_mul(const Mat& a, const Mat& b) { return a * b; }

Mat vstack(const Mat& top, const Mat& bottom) {
  require(top.cols() == bottom.cols(), "vstack column mismatch");
  Mat m(top.field(), top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

Mat hstack(const Mat& left, const Mat& right) {
  require(left.rows() == right.rows(), "hstack row mismatch");
  Mat m(left.field(), left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

Mat mat_pow(const Mat& m, std::size_t e) {
  require(m.square(), "power of non-square matrix");
  Mat r = Mat::identity(m.field(), m.rows());
  Mat b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Vec vec_mat(const PrimeField& f, std::span<const Elem> v, const Mat& m) {
  require(v.size() == m.rows(), "vector-matrix shape mismatch");
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (v[t] == 0) continue;
    auto row = m.row_span(t);
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] = (acc[j] + static_cast<std::uint64_t>(v[t]) * row[j]) % f.p();
  }
  return Vec(acc.begin(), acc.end());
}

Vec vec_add(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const PrimeField& f, std::span<const Elem> a, std::span<const Elem> b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const PrimeField& f, std::span<const Elem> a, Elem s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], s);
  return r;
}

void vec_axpy(const PrimeField& f, std::span<Elem> a, Elem s, std::span<const Elem> b) {
  require(a.size() == b.size(), "vector length mismatch");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(s, b[i]));
}

bool vec_is_zero(std::span<const Elem> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

RrefResult rref(const Mat& m) {
  RrefResult out{m, 0, {}};
  Mat& a = out.form;
  const PrimeField f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      auto rp = a.row_span(piv);
      auto rr = a.row_span(r);
      std::swap_ranges(rp.begin(), rp.end(), rr.begin());
    }
    const Elem inv = f.inv(a(r, c));
    for (auto& x : a.row_span(r)) x = f.mul(x, inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      vec_axpy(f, a.row_span(i), f.neg(a(i, c)), a.row_span(r));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat right_kernel(const Mat& m) {
  const PrimeField f = m.field();
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.form(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis).basis();
}

Mat left_kernel(const Mat& m) { return right_kernel(m.transposed()); }

std::optional<Vec> solve_left(const Mat& a, std::span<const Elem> v) {
  require(v.size() == a.cols(), "right-hand side length mismatch");
  const PrimeField f = a.field();
  const Mat ker = left_kernel(vstack(a, Mat::row(f, v)));
  const std::size_t last = a.rows();
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    const Elem t = ker(r, last);
    if (t == 0) continue;
    // x * a + t * v = 0  =>  (-x / t) * a = v
    const Elem scale = f.neg(f.inv(t));
    Vec x(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) x[i] = f.mul(ker(r, i), scale);
    return x;
  }
  return std::nullopt;
}

std::optional<Mat> inverse_by_elimination(const Mat& m) {
  require(m.square(), "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto red = rref(hstack(m, Mat::identity(m.field(), n)));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.form.block(0, n, n, n);
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(field, 0, ambient);
  return s;
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const Mat& generators) {
  auto red = rref(generators);
  Subspace s;
  s.ambient_ = generators.cols();
  s.basis_ = red.form.row_range(0, red.rank);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(PrimeField field, std::size_t ambient, std::span<const Vec> vectors) {
  return span(Mat::from_rows(field, ambient, vectors));
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  require(v.size() == ambient_, "vector length does not match ambient dimension");
  const PrimeField f = field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem x = r[pivots_[i]];
    if (x != 0) vec_axpy(f, r, f.neg(x), basis_.row_span(i));
  }
  return r;
}

bool Subspace::contains(std::span<const Elem> v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row_span(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  // RREF basis: the coefficient of row i is the entry at its pivot column.
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  require(other.ambient_ == ambient_, "ambient dimension mismatch");
  return span(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  return subspace_intersect(*this, other);
}

Vec EchelonBuilder::reduced(Vec v) const {
  require(v.size() == ambient_, "vector length does not match ambient dimension");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem x = v[pivots_[r]];
    if (x != 0) vec_axpy(field_, v, field_.neg(x), rows_[r]);
  }
  return v;
}

bool EchelonBuilder::add(Vec v) {
  v = reduced(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  const Elem inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBuilder::contains(std::span<const Elem> v) const {
  return vec_is_zero(reduced(Vec(v.begin(), v.end())));
}

CoordinateSolver::CoordinateSolver(const Mat& basis) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  auto red = rref(hstack(basis, Mat::identity(basis.field(), k)));
  std::size_t r = 0;
  while (r < red.rank && red.pivots[r] < n) ++r;
  if (r != k) throw Error(ErrorCode::Shape, "coordinate basis rows are dependent");
  echelon_ = Subspace::span(basis);
  transform_ = red.form.block(0, n, k, k);
}

std::optional<Vec> CoordinateSolver::solve(std::span<const Elem> v) const {
  auto c = echelon_.coordinates(v);
  if (!c) return std::nullopt;
  return vec_mat(echelon_.field(), *c, transform_);
}

Vec CoordinateSolver::solve_or_throw(std::span<const Elem> v) const {
  auto c = solve(v);
  if (!c) throw Error(ErrorCode::Shape, "vector outside the spanned subspace");
  return *c;
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "ambient dimension mismatch");
  const PrimeField f = u.field();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(f, u.ambient_dim());
  // x*U = y*V  <=>  (x, -y) in the left kernel of [U; V]; the common vector is x*U.
  Mat kernel = left_kernel(vstack(u.basis(), v.basis()));
  Mat coeffs = kernel.block(0, 0, kernel.rows(), u.dim());
  return Subspace::span(coeffs * u.basis());
}

Subspace solve_commutant_system(std::span<const std::pair<Mat, Mat>> constraints,
                                PrimeField f, std::size_t m, std::size_t k) {
  const std::size_t unknowns = m * k;
  Mat system(f, constraints.size() * unknowns, unknowns);
  std::size_t eq = 0;
  for (const auto& [x, y] : constraints) {
    require(x.rows() == m && x.cols() == m && y.rows() == k && y.cols() == k,
            "constraint matrix shape mismatch");
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < k; ++c, ++eq) {
        // (X F)[r][c] = sum_t X[r][t] F[t][c]
        for (std::size_t t = 0; t < m; ++t)
          system.set(eq, t * k + c, f.add(system(eq, t * k + c), x(r, t)));
        // -(F Y)[r][c] = -sum_t F[r][t] Y[t][c]
        for (std::size_t t = 0; t < k; ++t)
          system.set(eq, r * k + t, f.sub(system(eq, r * k + t), y(t, c)));
      }
    }
  }
  if (constraints.empty()) return Subspace::full(f, unknowns);
  return Subspace::span(right_kernel(system));
}

Subspace commutant(std::span<const Mat> matrices, PrimeField field, std::size_t m) {
  std::vector<std::pair<Mat, Mat>> pairs;
  pairs.reserve(matrices.size());
  for (const auto& x : matrices) pairs.emplace_back(x, x);
  return solve_commutant_system(pairs, field, m, m);
}

}  // namespace assocloc
