#pragma once

#include <vector>

#include "assocloc/algebra.hpp"
#include "assocloc/localization.hpp"
#include "assocloc/oracle.hpp"

namespace assocloc {

// base/m^N with N the stabilization exponent of the power chain, which is the
// inverse limit of the tower base/m^k in finite dimension.
struct CompletionResult {
  Algebra base;
  IdealBasis ideal;
  PowerChain chain;
  std::size_t stable_exponent = 1;
  // truncations[k - 1] = base/m^k for k = 1..N.
  std::vector<Quotient> truncations;
  // transitions[k - 1] : base/m^{k+1} -> base/m^k for k = 1..N-1.
  std::vector<Mat> transitions;
  bool transitions_surjective = true;
  bool transitions_homomorphic = true;
  // kappa followed by each transition equals the truncated projection.
  bool tower_commutes = true;
  Algebra completed;
  Mat kappa;  // dim(base) x dim(completed)
  IdealBasis kernel_kappa;

  std::vector<std::size_t> tower_dims() const { return chain.dims(); }
};

CompletionResult complete(const Algebra& base, const IdealBasis& ideal);

struct HausdorffResult {
  LocalFunctionRing am;
  // Kernel of the inclusion A_M -> E_M, zero for a subring.
  IdealBasis m;
  CompletionResult completion;
  Mat kappa;  // A -> completion.completed
  IdealBasis kernel_kappa;
  Quotient quotient;  // A / ker kappa
  std::vector<ModuleRep> induced;
  LocalFunctionRing h;
  // H -> A_M from the universal property.
  UniversalMap comparison;
  bool comparison_isomorphic = false;
  // H -> completion, rank test.
  Mat to_completion;
  bool embeds_in_completion = false;
};

HausdorffResult hausdorff_localize(const Algebra& a, std::span<const ModuleRep> summands,
                                   const LocalizeOptions& opts = {});

struct CommutativeHausdorff {
  MaximalIdealData point;
  LocalAlgebra local;       // A_m
  IdealBasis local_ideal;   // m A_m
  CompletionResult completion;
  Mat kappa;                // A -> completed
  IdealBasis kernel_kappa;  // in A
  Quotient quotient;
  LocalAlgebra h;           // (A / ker kappa)_m
  Mat to_completion;        // dim H x dim completed
  bool homomorphism = false;
  bool injective = false;
};

// Throws Error(NotCommutative) or Error(NotMaximal).
CommutativeHausdorff hausdorff_commutative(const Algebra& a, const IdealBasis& m,
                                           const MeataxeOptions& opts = {});

}  // namespace assocloc
