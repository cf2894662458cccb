#include "assocloc/algebra.hpp"
#include "assocloc/error.hpp"
#include "assocloc/io.hpp"
#include "assocloc/module.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace assocloc;

namespace {

RawAlgebra c2_raw() {
  RawAlgebra r;
  r.name = "c2";
  r.p = 2;
  r.dim = 2;
  r.unit = {1, 0};
  r.products = {{1, 0}, {0, 1}, {0, 1}, {1, 0}};
  return r;
}

Vec coords(std::initializer_list<Elem> v) { return Vec(v); }

}  // namespace

TEST_CASE("validate_algebra examples") {
  CHECK_NOTHROW(Algebra::validate(c2_raw()));
  const Algebra m2 = matrix_algebra(PrimeField(2), 2);
  CHECK(m2.dim() == 4);
  // e_ab e_cd = delta_bc e_ad, checked independently.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec want(4, 0);
      if (i % 2 == j / 2) want[(i / 2) * 2 + j % 2] = 1;
      CHECK(m2.product(i, j) == want);
    }

  // e2 * e2 = e2 with the unit mis-declared as e1 + e2.
  RawAlgebra bad;
  bad.p = 2;
  bad.dim = 2;
  bad.unit = {1, 1};
  bad.products = {{1, 0}, {0, 1}, {0, 1}, {0, 1}};
  try {
    Algebra::validate(bad);
    FAIL("expected BadUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadUnit);
    CHECK(!e.details().empty());
  }

  // Unit e1; e2 e2 = e3, e2 e3 = 0, e3 e2 = e2: (e2 e2) e2 != e2 (e2 e2).
  RawAlgebra nonassoc;
  nonassoc.p = 2;
  nonassoc.dim = 3;
  nonassoc.unit = {1, 0, 0};
  nonassoc.products = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 1},
                       {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 0}};
  try {
    Algebra::validate(nonassoc);
    FAIL("expected NonAssociative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonAssociative);
  }
}

TEST_CASE("associativity check agrees with a naive triple loop on the corpus") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto ei = naive::row(a.basis(i)), ej = naive::row(a.basis(j)),
                     ek = naive::row(a.basis(k));
          CHECK(naive::alg_mul(a, naive::alg_mul(a, ei, ej), ek) ==
                naive::alg_mul(a, ei, naive::alg_mul(a, ej, ek)));
        }
  }
}

TEST_CASE("is_commutative examples") {
  const PrimeField f(2);
  CHECK(is_commutative(polynomial_quotient_algebra(f, {0, 0, 1})));
  CHECK_FALSE(is_commutative(matrix_algebra(f, 2)));
  CHECK_FALSE(is_commutative(upper_triangular_algebra(f, 2)));
}

TEST_CASE("regular_representation examples") {
  const PrimeField f(2);
  const ModuleRep r1 = regular_representation(read_algebra("algebra k p=5 dim=1\nunit 1\nmul 1 1 : 1\n"));
  CHECK(r1.action[0] == Mat(PrimeField(5), {{1}}));
  const ModuleRep rx = regular_representation(polynomial_quotient_algebra(f, {0, 0, 1}));
  CHECK(rx.action[1] == Mat(f, {{0, 1}, {0, 0}}));
  const ModuleRep rm = regular_representation(matrix_algebra(f, 2));
  CHECK(rm.action.size() == 4);
  CHECK(rank(rm.action[0]) == 2);
}

TEST_CASE("annihilator examples") {
  const PrimeField f(2);
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    CHECK(annihilator(a, regular_representation(a)).dim() == 0);
  }
  const Algebra x2 = polynomial_quotient_algebra(f, {0, 0, 1});
  const ModuleRep res = validate_module(x2, {Mat(f, {{1}}), Mat(f, {{0}})});
  const IdealBasis ann = annihilator(x2, res);
  CHECK(ann.dim() == 1);
  CHECK(ann.basis.contains(coords({0, 1})));

  const Algebra f2xf2 = load_algebra(corpus("f2xf2.alg"));
  const IdealBasis a2 = annihilator(f2xf2, load_module(corpus("f2xf2_first.mod"), f2xf2));
  CHECK(a2.dim() == 1);
  CHECK(a2.basis.contains(coords({0, 1})));
}

TEST_CASE("quotient_algebra examples") {
  const PrimeField f(2);
  const Algebra x2 = polynomial_quotient_algebra(f, {0, 0, 1});
  const Quotient q0 = quotient_algebra(x2, zero_ideal(x2));
  CHECK(q0.algebra.dim() == 2);
  CHECK(q0.projection.is_identity());

  const Quotient q1 = quotient_algebra(x2, make_ideal(x2, Subspace::span(Mat(f, {{0, 1}}))));
  CHECK(q1.algebra.dim() == 1);
  CHECK(q1.algebra.product(0, 0) == coords({1}));

  const Algebra ut = upper_triangular_algebra(f, 2);  // e11 e12 e22
  const Quotient q2 = quotient_algebra(ut, make_ideal(ut, Subspace::span(Mat(f, {{0, 1, 0}}))));
  CHECK(q2.algebra.dim() == 2);
  CHECK(is_commutative(q2.algebra));
  // Two orthogonal idempotents summing to one: F_2 x F_2.
  CHECK(q2.algebra.product(0, 0) == coords({1, 0}));
  CHECK(q2.algebra.product(1, 1) == coords({0, 1}));
  CHECK(q2.algebra.product(0, 1) == coords({0, 0}));
  CHECK(is_unital_homomorphism(ut, q2.algebra, q2.projection));

  CHECK_THROWS_AS(quotient_algebra(ut, whole_ideal(ut)), Error);
  CHECK_THROWS_AS(make_ideal(ut, Subspace::span(Mat(f, {{1, 0, 0}}))), Error);
}

TEST_CASE("quotient projections are homomorphisms with the right kernel") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    const IdealBasis j = jacobson_radical(a);
    const Quotient q = quotient_algebra(a, j);
    CHECK(is_unital_homomorphism(a, q.algebra, q.projection));
    CHECK(Subspace::span(left_kernel(q.projection)) == j.basis);
    CHECK((q.lift * q.projection).is_identity());
  }
}

TEST_CASE("ideal_power_chain examples") {
  const PrimeField f(2);
  const Algebra x3 = polynomial_quotient_algebra(f, {0, 0, 0, 1});
  const PowerChain z = ideal_power_chain(x3, zero_ideal(x3));
  CHECK(z.dims() == std::vector<std::size_t>{0});
  CHECK(z.stable_exponent == 1);
  const PowerChain c = ideal_power_chain(x3, generated_ideal(x3, Subspace::span(Mat(f, {{0, 1, 0}}))));
  CHECK(c.dims() == std::vector<std::size_t>{2, 1, 0});
  CHECK(c.stable_exponent == 3);
  const Algebra ff = load_algebra(corpus("f2xf2.alg"));
  const PowerChain i = ideal_power_chain(ff, make_ideal(ff, Subspace::span(Mat(f, {{0, 1}}))));
  CHECK(i.dims() == std::vector<std::size_t>{1});
  CHECK(i.stable_exponent == 1);
}

TEST_CASE("power chains decrease and stabilize within dim + 1 steps") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    const IdealBasis j = jacobson_radical(a);
    const PowerChain c = ideal_power_chain(a, j);
    const auto d = c.dims();
    CHECK(std::is_sorted(d.rbegin(), d.rend()));
    CHECK(c.stable_exponent <= a.dim() + 1);
    CHECK(d.back() == 0);  // the radical is nilpotent
  }
}

TEST_CASE("library constructors agree with the corpus files") {
  const PrimeField f2(2), f3(3);
  auto same = [](const Algebra& x, const Algebra& y) {
    if (x.dim() != y.dim()) return false;
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < x.dim(); ++j)
        if (x.product(i, j) != y.product(i, j)) return false;
    return x.unit() == y.unit();
  };
  CHECK(same(matrix_algebra(f2, 2), load_algebra(corpus("m2f2.alg"))));
  CHECK(same(matrix_algebra(f3, 2), load_algebra(corpus("m2f3.alg"))));
  CHECK(same(upper_triangular_algebra(f2, 3), load_algebra(corpus("ut3f2.alg"))));
  CHECK(same(polynomial_quotient_algebra(f2, {1, 1, 1}), load_algebra(corpus("f4.alg"))));
  CHECK(same(polynomial_quotient_algebra(f3, {0, 0, 0, 1}), load_algebra(corpus("f3x3.alg"))));
  CHECK(same(group_algebra(f3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), load_algebra(corpus("f3c3.alg"))));
  const Algebra k = read_algebra("algebra k p=2 dim=1\nunit 1\nmul 1 1 : 1\n");
  CHECK(same(product_algebra(k, k), load_algebra(corpus("f2xf2.alg"))));
}

TEST_CASE("element inverses") {
  for (const auto& name : {"f4", "f9", "f2x2", "ut2f2", "m2f2", "f2s3"}) {
    const Algebra a = load_algebra(corpus(std::string(name) + ".alg"));
    for (const auto& v : naive::all_vectors(a.dim(), a.field().p())) {
      const Vec x(v.begin(), v.end());
      const auto inv = element_inverse(a, x);
      CHECK(inv.has_value() == naive::alg_is_unit(a, v));
      if (inv) {
        CHECK(a.mul(x, *inv) == a.unit());
        CHECK(a.mul(*inv, x) == a.unit());
      }
    }
  }
}
