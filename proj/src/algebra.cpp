#include "assocloc/algebra.hpp"

#include <string>

#include "assocloc/error.hpp"
#include "assocloc/poly.hpp"

namespace assocloc {

namespace {

std::string at_line(const RawAlgebra& raw, std::size_t i, std::size_t j) {
  const std::size_t idx = i * raw.dim + j;
  if (idx < raw.product_lines.size() && raw.product_lines[idx] > 0) {
    const std::string line = std::to_string(raw.product_lines[idx]);
    return raw.source.empty() ? " (line " + line + ")" : " (" + raw.source + ":" + line + ")";
  }
  return {};
}

// sum_i a_i sum_j b_j c_ij, using the raw table.
Vec raw_mul(const PrimeField& f, const std::vector<Vec>& products, std::size_t n,
            std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      vec_axpy(f, out, f.mul(a[i], b[j]), products[i * n + j]);
    }
  }
  return out;
}

}  // namespace

Algebra Algebra::validate(RawAlgebra raw) {
  const PrimeField f(raw.p);
  const std::size_t n = raw.dim;
  if (n == 0) throw Error(ErrorCode::Shape, "algebra of dimension 0");
  if (raw.products.size() != n * n)
    throw Error(ErrorCode::Shape, "expected " + std::to_string(n * n) + " products, got " +
                                      std::to_string(raw.products.size()));
  if (raw.unit.size() != n) throw Error(ErrorCode::Shape, "unit has wrong length");
  for (auto& v : raw.products) {
    if (v.size() != n) throw Error(ErrorCode::Shape, "product vector has wrong length");
    for (auto& x : v) x %= raw.p;
  }
  for (auto& x : raw.unit) x %= raw.p;
  if (raw.basis_names.empty())
    for (std::size_t i = 0; i < n; ++i) raw.basis_names.push_back("e" + std::to_string(i + 1));
  if (raw.basis_names.size() != n) throw Error(ErrorCode::Shape, "basis label count mismatch");

  std::vector<std::string> violations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = raw.products[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i e_j) e_k versus e_i (e_j e_k)
        const Vec lhs = raw_mul(f, raw.products, n, ij, unit_vector(n, k));
        const Vec rhs = raw_mul(f, raw.products, n, unit_vector(n, i), raw.products[j * n + k]);
        for (std::size_t l = 0; l < n; ++l) {
          if (lhs[l] != rhs[l]) {
            violations.push_back("NonAssociative(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                 std::to_string(l + 1) + ")" + at_line(raw, i, j));
            break;
          }
        }
      }
    }
  }
  if (!violations.empty())
    throw Error(ErrorCode::NonAssociative,
                std::to_string(violations.size()) + " associativity violation(s); first: " +
                    violations.front(),
                violations);

  for (std::size_t j = 0; j < n; ++j) {
    const Vec ej = unit_vector(n, j);
    if (raw_mul(f, raw.products, n, raw.unit, ej) != ej ||
        raw_mul(f, raw.products, n, ej, raw.unit) != ej)
      violations.push_back("BadUnit(" + std::to_string(j + 1) + ")");
  }
  if (!violations.empty())
    throw Error(ErrorCode::BadUnit, "unit axiom fails; first: " + violations.front(), violations);

  auto data = std::make_shared<Data>();
  data->name = raw.name;
  data->field = f;
  data->dim = n;
  data->basis_names = raw.basis_names;
  data->unit = raw.unit;
  data->products = raw.products;
  data->raw = std::make_shared<const RawAlgebra>(std::move(raw));
  Algebra a;
  a.d_ = std::move(data);
  return a;
}

Vec Algebra::mul(std::span<const Elem> a, std::span<const Elem> b) const {
  if (a.size() != dim() || b.size() != dim())
    throw Error(ErrorCode::Shape, "element length does not match algebra dimension");
  return raw_mul(field(), d_->products, dim(), a, b);
}

Mat Algebra::right_mult(std::span<const Elem> a) const {
  Mat m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec row = mul(basis(i), a);
    std::copy(row.begin(), row.end(), m.row_span(i).begin());
  }
  return m;
}

Mat Algebra::left_mult(std::span<const Elem> a) const {
  Mat m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec row = mul(a, basis(i));
    std::copy(row.begin(), row.end(), m.row_span(i).begin());
  }
  return m;
}

bool is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

std::optional<Vec> element_inverse(const Algebra& a, std::span<const Elem> x) {
  const Mat r = a.right_mult(x);
  Mat rinv;
  try {
    rinv = invert_via_min_poly(r);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAUnit) return std::nullopt;
    throw;
  }
  // rho is a homomorphism into matrices, so rho(x)^{-1} = rho(x^{-1}) and
  // 1 * rho(y) = y.
  Vec y = vec_mat(a.field(), a.unit(), rinv);
  if (a.mul(x, y) != a.unit() || a.mul(y, x) != a.unit()) return std::nullopt;
  return y;
}

IdealBasis make_ideal(const Algebra& a, Subspace s) {
  if (s.ambient_dim() != a.dim()) throw Error(ErrorCode::Shape, "ideal ambient mismatch");
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec x = s.basis_vector(r);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (!s.contains(a.mul(x, a.basis(k))) || !s.contains(a.mul(a.basis(k), x)))
        throw Error(ErrorCode::NotAnIdeal,
                    "subspace not closed under multiplication by e" + std::to_string(k + 1));
    }
  }
  return IdealBasis{std::move(s)};
}

IdealBasis generated_ideal(const Algebra& a, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < cur.dim(); ++r) {
      const Vec x = cur.basis_vector(r);
      gens.push_back(x);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        gens.push_back(a.mul(x, a.basis(k)));
        gens.push_back(a.mul(a.basis(k), x));
      }
    }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next.dim() == cur.dim()) return make_ideal(a, std::move(next));
    cur = std::move(next);
  }
}

IdealBasis zero_ideal(const Algebra& a) { return IdealBasis{Subspace::zero(a.field(), a.dim())}; }

IdealBasis whole_ideal(const Algebra& a) { return IdealBasis{Subspace::full(a.field(), a.dim())}; }

Quotient quotient_algebra(const Algebra& a, const IdealBasis& ideal) {
  const Subspace& s = ideal.basis;
  if (s.contains(a.unit())) throw Error(ErrorCode::UnitInIdeal, "the unit lies in the ideal");
  const PrimeField f = a.field();
  const auto keep = s.non_pivots();
  const std::size_t n = a.dim();
  const std::size_t q = keep.size();

  Mat proj(f, n, q);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec red = s.reduce(a.basis(k));
    for (std::size_t c = 0; c < q; ++c) proj.set(k, c, red[keep[c]]);
  }
  Mat lift(f, q, n);
  for (std::size_t c = 0; c < q; ++c) lift.set(c, keep[c], 1);

  RawAlgebra raw;
  raw.name = a.name().empty() ? std::string{} : a.name() + "/I";
  raw.p = f.p();
  raw.dim = q;
  for (auto k : keep) raw.basis_names.push_back(a.basis_names()[k]);
  raw.unit = vec_mat(f, a.unit(), proj);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      raw.products.push_back(vec_mat(f, a.mul(a.basis(keep[i]), a.basis(keep[j])), proj));
  Quotient out{Algebra::validate(std::move(raw)), std::move(proj), std::move(lift)};

  if (!is_unital_homomorphism(a, out.algebra, out.projection))
    throw Error(ErrorCode::NotWellDefined, "quotient projection is not a homomorphism");
  if (!(Subspace::span(left_kernel(out.projection)) == s))
    throw Error(ErrorCode::NotWellDefined, "quotient projection kernel differs from the ideal");
  return out;
}

IdealBasis ideal_product(const Algebra& a, const IdealBasis& i, const IdealBasis& j) {
  std::vector<Vec> prods;
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t s = 0; s < j.dim(); ++s)
      prods.push_back(a.mul(i.basis.basis_vector(r), j.basis.basis_vector(s)));
  return make_ideal(a, Subspace::span(a.field(), a.dim(), prods));
}

std::vector<std::size_t> PowerChain::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : powers) d.push_back(p.dim());
  return d;
}

PowerChain ideal_power_chain(const Algebra& a, const IdealBasis& ideal) {
  PowerChain chain;
  chain.powers.push_back(ideal);
  for (;;) {
    IdealBasis next = ideal_product(a, chain.powers.back(), ideal);
    if (next.basis == chain.powers.back().basis) break;
    chain.powers.push_back(std::move(next));
  }
  chain.stable_exponent = chain.powers.size();
  return chain;
}

Subspace image_of(const Subspace& s, const Mat& map) {
  if (s.dim() == 0) return Subspace::zero(map.field(), map.cols());
  return Subspace::span(s.basis() * map);
}

Subspace preimage_of(const Mat& map, const Subspace& target) {
  // x * map in target  <=>  (x, y) with x * map - y * T = 0.
  const PrimeField f = map.field();
  if (target.dim() == 0) return Subspace::span(left_kernel(map));
  Mat stacked = vstack(map, target.basis().scaled(f.neg(1)));
  Mat ker = left_kernel(stacked);
  return Subspace::span(ker.block(0, 0, ker.rows(), map.rows()));
}

std::optional<std::pair<std::size_t, std::size_t>> multiplicativity_witness(
    const Algebra& from, const Algebra& to, const Mat& map) {
  if (map.rows() != from.dim() || map.cols() != to.dim())
    throw Error(ErrorCode::Shape, "homomorphism matrix has wrong shape");
  const PrimeField f = from.field();
  for (std::size_t i = 0; i < from.dim(); ++i) {
    const Vec mi = map.row_vec(i);
    for (std::size_t j = 0; j < from.dim(); ++j) {
      const Vec lhs = vec_mat(f, from.product(i, j), map);
      if (lhs != to.mul(mi, map.row_span(j))) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

bool is_unital_homomorphism(const Algebra& from, const Algebra& to, const Mat& map) {
  if (multiplicativity_witness(from, to, map)) return false;
  return vec_mat(from.field(), from.unit(), map) == to.unit();
}

Algebra subalgebra(const Algebra& a, const Mat& basis, std::string name) {
  const CoordinateSolver solver(basis);
  RawAlgebra raw;
  raw.name = std::move(name);
  raw.p = a.field().p();
  raw.dim = basis.rows();
  raw.unit = solver.solve_or_throw(a.unit());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.rows(); ++j)
      raw.products.push_back(solver.solve_or_throw(a.mul(basis.row_span(i), basis.row_span(j))));
  return Algebra::validate(std::move(raw));
}

Algebra matrix_algebra(PrimeField f, std::size_t n, std::string name) {
  // Matrix units e_ab, index a*n + b; e_ab e_cd = delta_bc e_ad.
  RawAlgebra raw;
  raw.name = name.empty() ? "M" + std::to_string(n) + "(F" + std::to_string(f.p()) + ")" : name;
  raw.p = f.p();
  raw.dim = n * n;
  raw.unit.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) raw.unit[a * n + a] = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      raw.basis_names.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
  for (std::size_t i = 0; i < n * n; ++i) {
    for (std::size_t j = 0; j < n * n; ++j) {
      Vec v(n * n, 0);
      const std::size_t a = i / n, b = i % n, c = j / n, d = j % n;
      if (b == c) v[a * n + d] = 1;
      raw.products.push_back(std::move(v));
    }
  }
  return Algebra::validate(std::move(raw));
}

Algebra upper_triangular_algebra(PrimeField f, std::size_t n, std::string name) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) units.emplace_back(a, b);
  const std::size_t d = units.size();
  auto index = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < d; ++k)
      if (units[k] == std::make_pair(a, b)) return k;
    return d;
  };
  RawAlgebra raw;
  raw.name = name.empty() ? "UT" + std::to_string(n) + "(F" + std::to_string(f.p()) + ")" : name;
  raw.p = f.p();
  raw.dim = d;
  raw.unit.assign(d, 0);
  for (std::size_t a = 0; a < n; ++a) raw.unit[index(a, a)] = 1;
  for (auto [a, b] : units) raw.basis_names.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
  for (auto [a, b] : units) {
    for (auto [c, e] : units) {
      Vec v(d, 0);
      if (b == c) v[index(a, e)] = 1;
      raw.products.push_back(std::move(v));
    }
  }
  return Algebra::validate(std::move(raw));
}

Algebra product_algebra(const Algebra& a, const Algebra& b, std::string name) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::Shape, "product over different fields");
  const std::size_t n = a.dim(), m = b.dim(), d = n + m;
  RawAlgebra raw;
  raw.name = name.empty() ? a.name() + "x" + b.name() : name;
  raw.p = a.field().p();
  raw.dim = d;
  raw.unit = a.unit();
  raw.unit.insert(raw.unit.end(), b.unit().begin(), b.unit().end());
  for (const auto& s : a.basis_names()) raw.basis_names.push_back(s + "_1");
  for (const auto& s : b.basis_names()) raw.basis_names.push_back(s + "_2");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec v(d, 0);
      if (i < n && j < n) {
        const Vec& p = a.product(i, j);
        std::copy(p.begin(), p.end(), v.begin());
      } else if (i >= n && j >= n) {
        const Vec& p = b.product(i - n, j - n);
        std::copy(p.begin(), p.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
      }
      raw.products.push_back(std::move(v));
    }
  }
  return Algebra::validate(std::move(raw));
}

Algebra polynomial_quotient_algebra(PrimeField f, const std::vector<Elem>& monic_coeffs,
                                    std::string name) {
  const Poly modulus(f, monic_coeffs);
  if (modulus.degree() < 1 || modulus.leading() != 1)
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of positive degree");
  const std::size_t n = static_cast<std::size_t>(modulus.degree());
  RawAlgebra raw;
  raw.name = std::move(name);
  raw.p = f.p();
  raw.dim = n;
  raw.unit = unit_vector(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    raw.basis_names.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> mono(i + j + 1, 0);
      mono[i + j] = 1;
      const Poly r = poly_mod(Poly(f, mono), modulus);
      Vec v(n, 0);
      for (std::size_t k = 0; k < n; ++k) v[k] = r.coeff(k);
      raw.products.push_back(std::move(v));
    }
  }
  return Algebra::validate(std::move(raw));
}

Algebra group_algebra(PrimeField f, const std::vector<std::vector<std::size_t>>& table,
                      std::string name) {
  const std::size_t n = table.size();
  RawAlgebra raw;
  raw.name = std::move(name);
  raw.p = f.p();
  raw.dim = n;
  raw.unit = unit_vector(n, 0);
  for (std::size_t i = 0; i < n; ++i) raw.basis_names.push_back("g" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) raw.products.push_back(unit_vector(n, table[i][j]));
  return Algebra::validate(std::move(raw));
}

}  // namespace assocloc
