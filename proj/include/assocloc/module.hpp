#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assocloc/algebra.hpp"

namespace assocloc {

// Right A-module on row vectors: v . e_i = v * action[i]. With this convention
// rho(ab) = rho(a) rho(b), i.e. maps compose left to right.
struct ModuleRep {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<Mat> action;
  std::string name;
  // Summand boundaries for direct sums: offsets[i] is the first coordinate of
  // summand i, with a final entry equal to dim. Empty for plain modules.
  std::vector<std::size_t> block_offsets;

  PrimeField field() const { return algebra.field(); }
  // rho(a) for an algebra element given in coordinates.
  Mat act(std::span<const Elem> a) const;
};

// Checks rho(e_i) rho(e_j) = sum_k c_ijk rho(e_k) and rho(unit) = I. Throws
// Error(RelationViolated / UnitNotIdentity / Shape) with every violation.
ModuleRep validate_module(const Algebra& a, std::vector<Mat> action, std::string name = {});

ModuleRep regular_representation(const Algebra& a);

// ker(eta) = {a : rho(a) = 0}, verified two-sided.
IdealBasis annihilator(const Algebra& a, const ModuleRep& m);

struct StructureMorphism {
  // n x m^2: row k is rho(e_k) flattened.
  Mat matrix;
  Subspace image;
  IdealBasis kernel;
};

StructureMorphism structure_morphism(const ModuleRep& m);

// Smallest invariant subspace containing the given vectors.
Subspace spin(const ModuleRep& m, std::span<const Vec> seeds);
Subspace spin(const ModuleRep& m, std::span<const Elem> v);

struct MeataxeOptions {
  std::uint64_t seed = 1;
  // Random elements tried before the exhaustive fallback.
  std::size_t attempts = 32;
  // Exhaustive spin is used only when q^m does not exceed this.
  std::uint64_t exhaustive_limit = std::uint64_t{1} << 16;
};

enum class SimplicityMethod { Trivial, HoltRees, Exhaustive };

struct SimplicityResult {
  bool simple = false;
  // Proper nonzero submodule when !simple.
  std::optional<Subspace> witness;
  SimplicityMethod method = SimplicityMethod::Trivial;
};

// Meataxe (Holt-Rees with the Norton dual test) on random elements of the
// image of eta; falls back to spinning every projective point when q^m is
// small. Throws Error(ZeroModule) for dim 0 and Error(MeataxeInconclusive)
// when neither route decides.
SimplicityResult is_simple(const ModuleRep& m, const MeataxeOptions& opts = {});

// Spin of every nonzero vector (up to scalars); first proper submodule found.
std::optional<Subspace> exhaustive_proper_submodule(const ModuleRep& m);

// Action on an invariant subspace in the basis rows of `sub` (RREF).
ModuleRep submodule(const ModuleRep& m, const Subspace& sub);
// Action on M / sub in the basis of non-pivot coordinates.
ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub);

struct CompositionSeries {
  // Bottom-up: factors[0] is a simple submodule of M.
  std::vector<ModuleRep> factors;
  // class_of[i] indexes into `classes`; classes holds one representative per
  // isomorphism class, in order of first appearance.
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> classes;
  std::vector<std::size_t> multiplicities() const;
};

CompositionSeries chop(const ModuleRep& m, const MeataxeOptions& opts = {});

// Invariant used to pre-filter isomorphism tests.
struct ModuleSignature {
  std::size_t dim = 0;
  std::vector<std::vector<Elem>> min_polys;
  friend bool operator==(const ModuleSignature&, const ModuleSignature&) = default;
};
ModuleSignature module_signature(const ModuleRep& m);

// Basis of {F : rho_M(e_i) F = F rho_N(e_i)} (flattened dim_M x dim_N).
Subspace intertwiners(const ModuleRep& m, const ModuleRep& n);

// Invertible intertwiner F with rho_M(e_i) F = F rho_N(e_i), or nullopt.
std::optional<Mat> modules_isomorphic(const ModuleRep& m, const ModuleRep& n,
                                      std::uint64_t seed = 1);

// Pairwise non-isomorphic simple right modules: the deduplicated composition
// factors of the regular module.
std::vector<ModuleRep> simples(const Algebra& a, const MeataxeOptions& opts = {});

ModuleRep direct_sum(std::span<const ModuleRep> modules);

// ann of the direct sum of all simples.
IdealBasis jacobson_radical(const Algebra& a, const MeataxeOptions& opts = {});

}  // namespace assocloc
