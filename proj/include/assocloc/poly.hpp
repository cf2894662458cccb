#pragma once

#include <vector>

#include "assocloc/field.hpp"
#include "assocloc/matrix.hpp"

namespace assocloc {

// Univariate polynomial over F_p, coefficients low to high, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(PrimeField field, std::vector<Elem> coeffs);
  static Poly constant(PrimeField field, Elem c);
  static Poly x(PrimeField field);

  PrimeField field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  PrimeField field_;
  std::vector<Elem> c_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

// Throws Error(InvalidArgument) on division by zero.
PolyDivision divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);
// Evaluates f at a square matrix (Horner).
Mat poly_eval(const Poly& f, const Mat& m);

// Monic minimal polynomial via Krylov sequences of the standard basis vectors
// and the lcm of their relation polynomials.
Poly min_poly(const Mat& m);

// m^{-1} = -c0^{-1} (m^{d-1} + c_{d-1} m^{d-2} + ... + c1 I) from the minimal
// polynomial. Throws Error(NotAUnit) when c0 = 0.
Mat invert_via_min_poly(const Mat& m);

// Distinct monic irreducible factors (no multiplicities), sorted by degree
// then coefficients. Squarefree reduction followed by Berlekamp splitting.
std::vector<Poly> irreducible_factors(const Poly& f);

}  // namespace assocloc
