#include "assocloc/poly.hpp"

#include <algorithm>

#include "assocloc/error.hpp"

namespace assocloc {

Poly::Poly(PrimeField field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= field_.p();
  trim();
}

Poly Poly::constant(PrimeField field, Elem c) { return Poly(field, {c}); }

Poly Poly::x(PrimeField field) { return Poly(field, {0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Elem inv = field_.inv(leading());
  Poly r = *this;
  for (auto& x : r.c_) x = field_.mul(x, inv);
  return r;
}

Poly Poly::derivative() const {
  std::vector<Elem> d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(field_.mul(field_.reduce(static_cast<std::int64_t>(i)), c_[i]));
  return Poly(field_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  const PrimeField f = a.field_;
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const PrimeField f = a.field_;
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const PrimeField f = a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(f, {});
  std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
  return Poly(f, std::move(c));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  const PrimeField f = a.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f, {}), a};
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Elem inv_lead = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const Elem q = f.mul(rem[static_cast<std::size_t>(i)], inv_lead);
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& x = rem[static_cast<std::size_t>(i - db + j)];
      x = f.sub(x, f.mul(q, b.coeff(static_cast<std::size_t>(j))));
    }
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field(), {});
  return divmod(a * b, poly_gcd(a, b)).quotient.monic();
}

Mat poly_eval(const Poly& f, const Mat& m) {
  Mat acc(m.field(), m.rows(), m.cols());
  const Mat id = Mat::identity(m.field(), m.rows());
  for (int i = f.degree(); i >= 0; --i) acc = acc * m + id.scaled(f.coeff(static_cast<std::size_t>(i)));
  return acc;
}

Poly min_poly(const Mat& m) {
  if (!m.square()) throw Error(ErrorCode::Shape, "minimal polynomial of non-square matrix");
  const PrimeField f = m.field();
  const std::size_t n = m.rows();
  Poly result = Poly::constant(f, 1);
  Subspace covered = Subspace::zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = unit_vector(n, i);
    if (covered.contains(e)) continue;
    std::vector<Vec> krylov{e};
    for (;;) {
      Vec next = vec_mat(f, krylov.back(), m);
      krylov.push_back(next);
      Mat stacked = Mat::from_rows(f, n, krylov);
      Mat kernel = left_kernel(stacked);
      if (kernel.rows() == 0) continue;
      // The first k vectors are independent, so the kernel is one-dimensional
      // and its last coordinate is nonzero.
      Poly rel(f, kernel.row_vec(0));
      result = poly_lcm(result, rel.monic());
      krylov.pop_back();
      covered = covered.sum(Subspace::span(Mat::from_rows(f, n, krylov)));
      break;
    }
  }
  return result;
}

Mat invert_via_min_poly(const Mat& m) {
  const Poly mp = min_poly(m);
  const PrimeField f = m.field();
  const Elem c0 = mp.coeff(0);
  if (c0 == 0) throw Error(ErrorCode::NotAUnit, "minimal polynomial has zero constant term");
  // m * (m^{d-1} + c_{d-1} m^{d-2} + ... + c1) = -c0
  std::vector<Elem> tail(mp.coeffs().begin() + 1, mp.coeffs().end());
  Mat inv = poly_eval(Poly(f, tail), m).scaled(f.neg(f.inv(c0)));
  const Mat id = Mat::identity(f, m.rows());
  if (!(m * inv == id) || !(inv * m == id))
    throw Error(ErrorCode::NotAUnit, "inverse check failed");
  return inv;
}

namespace {

Poly pth_root(const Poly& f) {
  const std::size_t p = f.field().p();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return Poly(f.field(), std::move(c));
}

Poly x_power_mod(std::size_t e, const Poly& mod) {
  const PrimeField f = mod.field();
  Poly result = Poly::constant(f, 1);
  Poly base = poly_mod(Poly::x(f), mod);
  while (e) {
    if (e & 1) result = poly_mod(result * base, mod);
    e >>= 1;
    if (e) base = poly_mod(base * base, mod);
  }
  return result;
}

// f monic squarefree of degree >= 1.
std::vector<Poly> berlekamp(const Poly& f) {
  const PrimeField fld = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n == 1) return {f};
  Mat q(fld, n, n);
  const Poly xp = x_power_mod(fld.p(), f);
  Poly row = Poly::constant(fld, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q.set(i, j, row.coeff(j));
    row = poly_mod(row * xp, f);
  }
  Mat fixed = left_kernel(q - Mat::identity(fld, n));
  const std::size_t count = fixed.rows();
  std::vector<Poly> factors{f};
  for (std::size_t b = 0; b < fixed.rows() && factors.size() < count; ++b) {
    Poly h(fld, fixed.row_vec(b));
    if (h.degree() <= 0) continue;
    std::vector<Poly> next;
    for (const auto& u : factors) {
      if (u.degree() <= 1) {
        next.push_back(u);
        continue;
      }
      Poly rest = u;
      for (Elem s = 0; s < fld.p() && rest.degree() > 1; ++s) {
        Poly g = poly_gcd(rest, h - Poly::constant(fld, s));
        if (g.degree() >= 1 && g.degree() < rest.degree()) {
          next.push_back(g);
          rest = divmod(rest, g).quotient.monic();
        }
      }
      next.push_back(rest);
    }
    factors = std::move(next);
  }
  return factors;
}

void collect_factors(const Poly& f, std::vector<Poly>& out) {
  if (f.degree() <= 0) return;
  const Poly d = f.derivative();
  if (d.is_zero()) {
    collect_factors(pth_root(f), out);
    return;
  }
  const Poly g = poly_gcd(f, d);
  if (g.degree() == 0) {
    for (auto& factor : berlekamp(f.monic())) out.push_back(factor.monic());
    return;
  }
  collect_factors(divmod(f, g).quotient.monic(), out);
  collect_factors(g, out);
}

}  // namespace

std::vector<Poly> irreducible_factors(const Poly& f) {
  std::vector<Poly> out;
  collect_factors(f.monic(), out);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace assocloc
