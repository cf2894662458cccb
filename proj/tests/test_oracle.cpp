#include <fstream>
#include <set>
#include <sstream>

#include "assocloc/error.hpp"
#include "assocloc/io.hpp"
#include "assocloc/localization.hpp"
#include "assocloc/oracle.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace assocloc;

namespace {

MaximalIdealData at(const Algebra& a, std::initializer_list<Vec> rows) {
  const auto ms = maximal_ideals(a);
  const IdealBasis m = make_ideal(a, Subspace::span(a.field(), a.dim(), std::vector<Vec>(rows)));
  const auto i = find_maximal(ms, m);
  REQUIRE(i);
  return ms[*i];
}

std::set<std::string> expected_mismatches() {
  std::ifstream in(corpus("expectations.txt"));
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string alg, check, verdict;
    if (ls >> alg >> check >> verdict && check == "lemma_AM_iso_Am" && verdict == "expected-fail")
      out.insert(alg);
  }
  return out;
}

}  // namespace

TEST_CASE("maximal_ideals examples") {
  const auto f3 = maximal_ideals(load_algebra(corpus("f3.alg")));
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].ideal.dim() == 0);
  CHECK(f3[0].idempotent == Vec{1});

  const auto ff = maximal_ideals(load_algebra(corpus("f2xf2.alg")));
  REQUIRE(ff.size() == 2);
  std::set<Vec> es{ff[0].idempotent, ff[1].idempotent};
  CHECK(es == std::set<Vec>{Vec{1, 0}, Vec{0, 1}});

  const Algebra x2 = load_algebra(corpus("f2x2.alg"));
  const auto mx = maximal_ideals(x2);
  REQUIRE(mx.size() == 1);
  CHECK(mx[0].ideal.basis.contains(Vec{0, 1}));
  CHECK(mx[0].idempotent == x2.unit());

  CHECK(thrown_code([] { maximal_ideals(load_algebra(corpus("m2f2.alg"))); }) ==
        ErrorCode::NotCommutative);
}

TEST_CASE("idempotents are orthogonal, sum to one and are fixed by lifting") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    if (!is_commutative(a)) continue;
    const long long p = a.field().p();
    const auto ms = maximal_ideals(a);
    naive::Row total(a.dim(), 0);
    std::size_t dims = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const naive::Row e = naive::row(ms[i].idempotent);
      const naive::Row e2 = naive::alg_mul(a, e, e);
      CHECK_MESSAGE(e2 == e, name);
      // 3e^2 - 2e^3 = e for an idempotent.
      const naive::Row e3 = naive::alg_mul(a, e2, e);
      for (std::size_t k = 0; k < a.dim(); ++k) CHECK(naive::md(3 * e2[k] - 2 * e3[k], p) == e[k]);
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        CHECK(naive::alg_mul(a, e, naive::row(ms[j].idempotent)) == naive::Row(a.dim(), 0));
      for (std::size_t k = 0; k < a.dim(); ++k) total[k] = naive::md(total[k] + e[k], p);
      // e lies outside m and 1 - e inside it.
      naive::M mrows;
      for (std::size_t k = 0; k < ms[i].ideal.dim(); ++k)
        mrows.push_back(naive::row(ms[i].ideal.basis.basis_vector(k)));
      naive::Row one_minus_e = naive::row(a.unit());
      for (std::size_t k = 0; k < a.dim(); ++k) one_minus_e[k] = naive::md(one_minus_e[k] - e[k], p);
      if (!mrows.empty()) CHECK(naive::in_span(mrows, one_minus_e, p));
      dims += localize_at_max(a, ms[i]).algebra.dim();
      CHECK(a.dim() - ms[i].ideal.dim() == ms[i].residue_dim);
    }
    CHECK(total == naive::row(a.unit()));
    CHECK_MESSAGE(dims == a.dim(), name);
  }
}

TEST_CASE("localize_at_max examples") {
  const Algebra ff = load_algebra(corpus("f2xf2.alg"));
  const LocalAlgebra l1 = localize_at_max(ff, at(ff, {Vec{0, 1}}));
  CHECK(l1.algebra.dim() == 1);
  CHECK(l1.local());

  const Algebra x2 = load_algebra(corpus("f2x2.alg"));
  const LocalAlgebra l2 = localize_at_max(x2, at(x2, {Vec{0, 1}}));
  CHECK(l2.algebra.dim() == 2);
  CHECK(l2.local());
  CHECK(l2.max_ideal.dim() == 1);

  // x - 1 = 2 + x over F_3.
  const Algebra pm = load_algebra(corpus("f3x2m1.alg"));
  const LocalAlgebra l3 = localize_at_max(pm, at(pm, {Vec{2, 1}}));
  CHECK(l3.algebra.dim() == 1);
  CHECK(l3.local());
}

TEST_CASE("local factors: non-units are exactly the maximal ideal") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    if (!is_commutative(a)) continue;
    for (const auto& md : maximal_ideals(a)) {
      const LocalAlgebra l = localize_at_max(a, md);
      CHECK(l.local());
      CHECK(is_unital_homomorphism(a, l.algebra, l.f));
      const long long p = a.field().p();
      naive::M mrows;
      for (std::size_t k = 0; k < l.max_ideal.dim(); ++k)
        mrows.push_back(naive::row(l.max_ideal.basis.basis_vector(k)));
      for (const auto& v : naive::all_vectors(l.algebra.dim(), p)) {
        bool zero = true;
        for (auto x : v) zero = zero && x == 0;
        const bool in_m = zero || (!mrows.empty() && naive::in_span(mrows, v, p));
        CHECK_MESSAGE(naive::alg_is_unit(l.algebra, v) != in_m, name);
      }
    }
  }
}

TEST_CASE("oracle_compare examples") {
  const Algebra ff = load_algebra(corpus("f2xf2.alg"));
  const OracleComparison c1 = oracle_compare(ff, load_module(corpus("f2xf2_first.mod"), ff));
  CHECK(c1.isomorphic);
  CHECK(c1.dim_am == 1);
  CHECK(c1.dim_local == 1);
  CHECK(c1.witness);

  const Algebra x2 = load_algebra(corpus("f2x2.alg"));
  const OracleComparison c2 = oracle_compare(x2, load_module(corpus("f2x2_res.mod"), x2));
  CHECK_FALSE(c2.isomorphic);
  CHECK(c2.dim_am == 1);
  CHECK(c2.dim_local == 2);
  CHECK(c2.nilradical_dim == 1);
  CHECK_FALSE(c2.witness);

  const Algebra pm = load_algebra(corpus("f3x2m1.alg"));
  const OracleComparison c3 = oracle_compare(pm, load_module(corpus("f3x2m1_plus.mod"), pm));
  CHECK(c3.isomorphic);
  CHECK(c3.dim_am == 1);
}

TEST_CASE("oracle comparison is an isomorphism exactly when the local factor is reduced") {
  const auto expected = expected_mismatches();
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    if (!is_commutative(a)) continue;
    bool all_iso = true;
    for (const auto& s : simples(a)) {
      const OracleComparison c = oracle_compare(a, s);
      CHECK((c.nilradical_dim == 0) == c.isomorphic);
      all_iso = all_iso && c.isomorphic;
      if (c.witness) {
        const ModuleRep one[] = {s};
        const LocalFunctionRing l = localize(a, one);
        const LocalAlgebra loc = localize_at_max(a, maximal_ideals(a)[c.point]);
        CHECK(is_unital_homomorphism(loc.algebra, l.ring, *c.witness));
        CHECK(rank(*c.witness) == l.dim());
      }
    }
    CHECK_MESSAGE(all_iso == !expected.count(name), name);
  }
}

TEST_CASE("representability_probe examples") {
  const Algebra ff = load_algebra(corpus("f2xf2.alg"));
  const MaximalIdealData md = at(ff, {Vec{0, 1}});
  const LocalAlgebra loc = localize_at_max(ff, md);
  const PrimeField f(2);

  const ProbeTarget self[] = {{loc.algebra, loc.f}};
  const auto r1 = representability_probe(ff, md, self);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].xi.is_identity());
  CHECK(r1[0].homomorphism);
  CHECK(r1[0].commutes);
  CHECK(r1[0].local);
  CHECK(r1[0].unique);

  const Algebra k = read_algebra("algebra k p=2 dim=1\nunit 1\nmul 1 1 : 1\n");
  const ProbeTarget first[] = {{k, Mat{f, {{1}, {0}}}}};
  const auto r2 = representability_probe(ff, md, first);
  CHECK(r2[0].xi.is_identity());
  CHECK(r2[0].commutes);

  const ProbeTarget second[] = {{k, Mat{f, {{0}, {1}}}}};
  CHECK(thrown_code([&] { representability_probe(ff, md, second); }) == ErrorCode::PullbackMismatch);

  const ProbeTarget not_local[] = {{ff, Mat::identity(f, 2)}};
  CHECK(thrown_code([&] { representability_probe(ff, md, not_local); }) == ErrorCode::InvalidArgument);

  const ProbeTarget not_hom[] = {{k, Mat{f, {{1}, {1}}}}};
  CHECK(thrown_code([&] { representability_probe(ff, md, not_hom); }) == ErrorCode::NotWellDefined);
}

TEST_CASE("representability through every local factor and residue field") {
  for (const auto& name : corpus_algebras()) {
    const Algebra a = load_algebra(corpus(name + ".alg"));
    if (!is_commutative(a)) continue;
    for (const auto& md : maximal_ideals(a)) {
      const LocalAlgebra loc = localize_at_max(a, md);
      const Quotient res = quotient_algebra(a, md.ideal);
      const ProbeTarget targets[] = {{loc.algebra, loc.f}, {res.algebra, res.projection}};
      const auto rs = representability_probe(a, md, targets);
      for (std::size_t t = 0; t < rs.size(); ++t) {
        CHECK_MESSAGE(rs[t].homomorphism, name);
        CHECK(rs[t].commutes);
        CHECK(rs[t].local);
        CHECK(rs[t].unique);
        CHECK(loc.f * rs[t].xi == targets[t].h);
      }
    }
  }
}

TEST_CASE("local_max_ideal examples") {
  CHECK(local_max_ideal(load_algebra(corpus("f2x2.alg")))->dim() == 1);
  CHECK(local_max_ideal(load_algebra(corpus("f4.alg")))->dim() == 0);
  CHECK_FALSE(local_max_ideal(load_algebra(corpus("f2xf2.alg"))));
}
