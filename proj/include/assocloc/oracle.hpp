#pragma once

#include <optional>
#include <vector>

#include "assocloc/algebra.hpp"
#include "assocloc/module.hpp"

namespace assocloc {

// Classical localization of a commutative Artinian algebra, computed as the
// factor e*A cut out by a primitive idempotent.

struct MaximalIdealData {
  IdealBasis ideal;
  std::size_t residue_dim = 0;
  Vec idempotent;
  std::size_t newton_steps = 0;
};

// One entry per simple module, m_i = ann(S_i), in the order of simples().
// Throws Error(NotCommutative).
std::vector<MaximalIdealData> maximal_ideals(const Algebra& a, const MeataxeOptions& opts = {});

struct LocalAlgebra {
  Algebra algebra;  // e*A with unit e
  Mat f;            // n x d, a -> e*a
  Mat embedding;    // d x n, basis of e*A in A
  IdealBasis max_ideal;  // f(m)
  bool max_ideal_nilpotent = false;
  bool residue_matches = false;
  // Non-units are exactly f(m); only run when p^d <= 2^12.
  bool exhaustive_checked = false;
  bool exhaustive_ok = true;
  bool local() const { return max_ideal_nilpotent && residue_matches && exhaustive_ok; }
};

LocalAlgebra localize_at_max(const Algebra& a, const MaximalIdealData& md);

// Maximal ideal of a commutative algebra matching `ideal`, if any.
std::optional<std::size_t> find_maximal(const std::vector<MaximalIdealData>& ms,
                                        const IdealBasis& ideal);

struct OracleComparison {
  std::size_t point = 0;  // index into maximal_ideals
  std::size_t dim_am = 0;  // A_M
  std::size_t dim_local = 0;  // A_m
  std::size_t nilradical_dim = 0;
  bool isomorphic = false;
  // A_m -> A_M in A_M closure coordinates, present when isomorphic.
  std::optional<Mat> witness;
};

OracleComparison oracle_compare(const Algebra& a, const ModuleRep& simple,
                                const MeataxeOptions& opts = {});

struct ProbeTarget {
  Algebra b;
  Mat h;  // n x dim(B)
};

struct ProbeResult {
  Mat xi;  // d x dim(B)
  bool homomorphism = false;
  bool commutes = false;  // f . xi = h
  bool local = false;     // xi^{-1}(m_B) = m A_m
  bool unique = false;    // f is onto A_m, so xi is forced
};

// Throws Error(PullbackMismatch) when h^{-1}(m_B) != m, Error(InvalidArgument)
// when B is not local and Error(NotWellDefined) when h is not a unital
// homomorphism.
std::vector<ProbeResult> representability_probe(const Algebra& a, const MaximalIdealData& md,
                                                std::span<const ProbeTarget> targets,
                                                const MeataxeOptions& opts = {});

// Unique maximal ideal of a local algebra (its radical), or nullopt.
std::optional<IdealBasis> local_max_ideal(const Algebra& b, const MeataxeOptions& opts = {});

}  // namespace assocloc
