#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "assocloc/field.hpp"
#include "assocloc/matrix.hpp"

namespace assocloc {

// Unvalidated structure-constant presentation as read from a file.
// products[i * dim + j] holds the coordinates of e_i * e_j.
struct RawAlgebra {
  std::string name;
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  Vec unit;
  std::vector<Vec> products;
  // Source line of each products entry, 0 when unknown. Used in messages.
  std::vector<int> product_lines;
  std::string source;
};

// A validated finite-dimensional associative unital F_p-algebra given by
// structure constants. Copies share the immutable data.
class Algebra {
 public:
  Algebra() = default;

  // Checks associativity on all basis triples and the unit axioms; throws
  // Error(NonAssociative / BadUnit) listing every violation in details().
  static Algebra validate(RawAlgebra raw);

  const std::string& name() const { return d_->name; }
  PrimeField field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const std::vector<std::string>& basis_names() const { return d_->basis_names; }
  const Vec& unit() const { return d_->unit; }
  // Coordinates of e_i * e_j.
  const Vec& product(std::size_t i, std::size_t j) const { return d_->products[i * d_->dim + j]; }
  const RawAlgebra& raw() const { return *d_->raw; }

  Vec mul(std::span<const Elem> a, std::span<const Elem> b) const;
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }
  // Matrix of x -> x * a (right regular action on row vectors).
  Mat right_mult(std::span<const Elem> a) const;
  // Matrix of x -> a * x.
  Mat left_mult(std::span<const Elem> a) const;

  bool same_as(const Algebra& other) const { return d_ == other.d_; }

 private:
  struct Data {
    std::string name;
    PrimeField field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    Vec unit;
    std::vector<Vec> products;
    std::shared_ptr<const RawAlgebra> raw;
  };
  std::shared_ptr<const Data> d_;
};

bool is_commutative(const Algebra& a);

// Element-level unit test: x is a unit iff its right multiplication matrix
// is invertible. Returns the two-sided inverse.
std::optional<Vec> element_inverse(const Algebra& a, std::span<const Elem> x);

// Two-sided ideal, verified on construction.
struct IdealBasis {
  Subspace basis;
  std::size_t dim() const { return basis.dim(); }
};

// Throws Error(NotAnIdeal) if `s` is not closed under left and right
// multiplication by basis elements.
IdealBasis make_ideal(const Algebra& a, Subspace s);
// Smallest two-sided ideal containing `s`.
IdealBasis generated_ideal(const Algebra& a, const Subspace& s);
IdealBasis zero_ideal(const Algebra& a);
IdealBasis whole_ideal(const Algebra& a);

struct Quotient {
  Algebra algebra;
  // n x (n - d): row k is the image of e_k.
  Mat projection;
  // (n - d) x n: quotient basis element a lifts to the ambient coordinate
  // non_pivots[a] of the ideal's RREF.
  Mat lift;
};

// Basis of A/I = the non-pivot coordinates of I's RREF. Throws
// Error(UnitInIdeal) if the unit lies in I.
Quotient quotient_algebra(const Algebra& a, const IdealBasis& ideal);

// Span of all x * y with x in I, y in J.
IdealBasis ideal_product(const Algebra& a, const IdealBasis& i, const IdealBasis& j);

struct PowerChain {
  // I^1, ..., I^N with I^N = I^{N+1}.
  std::vector<IdealBasis> powers;
  std::size_t stable_exponent = 1;
  std::vector<std::size_t> dims() const;
};

PowerChain ideal_power_chain(const Algebra& a, const IdealBasis& ideal);

// Image under the linear map `map` (rows indexed by the basis of `a`).
Subspace image_of(const Subspace& s, const Mat& map);
// {x : x * map in target}.
Subspace preimage_of(const Mat& map, const Subspace& target);

// Witness (i, j) where map(e_i e_j) != map(e_i) map(e_j), or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> multiplicativity_witness(
    const Algebra& from, const Algebra& to, const Mat& map);
bool is_unital_homomorphism(const Algebra& from, const Algebra& to, const Mat& map);

// Structure constants of a subalgebra spanned by `basis` (rows in the
// coordinates of `a`), which must contain the unit and be closed.
Algebra subalgebra(const Algebra& a, const Mat& basis, std::string name);

// Standard constructions used by tests and the corpus generator.
Algebra matrix_algebra(PrimeField f, std::size_t n, std::string name = {});
Algebra upper_triangular_algebra(PrimeField f, std::size_t n, std::string name = {});
Algebra product_algebra(const Algebra& a, const Algebra& b, std::string name = {});
// F_p[x]/(f) on the basis 1, x, ..., x^{deg f - 1}.
Algebra polynomial_quotient_algebra(PrimeField f, const std::vector<Elem>& monic_coeffs,
                                    std::string name = {});
// Group algebra from a multiplication table on {0..n-1}, 0 the identity.
Algebra group_algebra(PrimeField f, const std::vector<std::vector<std::size_t>>& table,
                      std::string name = {});

}  // namespace assocloc
