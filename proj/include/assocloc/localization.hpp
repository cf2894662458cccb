#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "assocloc/algebra.hpp"
#include "assocloc/module.hpp"

namespace assocloc {

inline constexpr std::uint64_t kDefaultCap = 65536;

// E_M = End_{F_p}(M_1 + ... + M_r) with its r x r block layout.
struct EndRingContext {
  std::vector<ModuleRep> summands;
  ModuleRep sum;
  // offsets[i] is the first coordinate of summand i; offsets[r] = total_dim.
  std::vector<std::size_t> offsets;

  std::size_t r() const { return summands.size(); }
  std::size_t total_dim() const { return offsets.back(); }
  std::size_t block_dim(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
  Mat block(const Mat& x, std::size_t i, std::size_t j) const;
  bool same_layout(const EndRingContext& other) const { return offsets == other.offsets; }
};

EndRingContext make_context(std::span<const ModuleRep> summands);

enum class SchurStatus { Unchecked, ExhaustivelyVerified, CapExceeded };

// D_M = End_A(M_1) + ... + End_A(M_r) embedded block-diagonally in E_M.
struct DivisionData {
  EndRingContext context;
  Subspace basis;                       // flattened m x m matrices
  std::vector<Subspace> per_summand;    // flattened m_i x m_i matrices
  SchurStatus verified = SchurStatus::Unchecked;
};

// Throws Error(NonSimpleSummand) naming the first summand that is not simple.
DivisionData commutant(const Algebra& a, const EndRingContext& context,
                       const MeataxeOptions& opts = {});

struct SchurResult {
  SchurStatus status = SchurStatus::Unchecked;
  std::uint64_t elements_checked = 0;
};

// Enumerates every nonzero element of each End_A(M_i) when q^{dim} <= cap and
// checks it is invertible inside End_A(M_i). Throws Error(ZeroDivisorFound)
// with the pair (x, h(x)), x * h(x) = 0, when an element fails.
SchurResult schur_verify(DivisionData& d, std::uint64_t cap = kDefaultCap);

struct Denominator {
  Vec preimage;  // s in A with eta(s) = element
  Mat element;   // eta(s), block-diagonal with every block nonzero
  Mat inverse;
};

struct DenominatorSet {
  std::vector<Denominator> items;
  std::size_t intersection_dim = 0;  // dim(im eta  cap  D_M)
  bool truncated = false;
};

// All z in im(eta) cap D_M with every diagonal block nonzero, with inverses.
// Above the cap only a spanning set of such units is returned (truncated).
DenominatorSet unit_denominators(const StructureMorphism& eta, const DivisionData& d,
                                 std::uint64_t cap = kDefaultCap);

struct Word {
  enum class Kind { Identity, Generator, Product };
  Kind kind = Kind::Identity;
  std::size_t left = 0;   // generator index, or left factor basis index
  std::size_t right = 0;  // right factor basis index
};

struct SubringClosure {
  std::size_t matrix_dim = 0;
  // Independent elements in insertion order; the first is the identity.
  std::vector<Mat> elements;
  std::vector<Word> words;
  CoordinateSolver solver;  // over flattened elements
  std::size_t rounds = 0;

  std::size_t dim() const { return elements.size(); }
  Subspace span() const { return solver.span(); }
  std::optional<Vec> coordinates(const Mat& x) const { return solver.solve(x.data()); }
};

// Smallest subring of M_m(F_p) containing the identity and the generators.
SubringClosure subring_closure(std::span<const Mat> generators, PrimeField field, std::size_t m);

struct LocalizeOptions {
  MeataxeOptions meataxe;
  std::uint64_t cap = kDefaultCap;
};

// A_M inside E_M together with everything needed by the universal property.
struct LocalFunctionRing {
  Algebra source;
  EndRingContext context;
  StructureMorphism eta;
  DivisionData division;
  DenominatorSet denominators;
  // eta(e_1), ..., eta(e_n), then the inverses of the denominators.
  std::vector<Mat> generators;
  SubringClosure closure;
  IdealBasis kernel;
  // Structure constants on closure.elements; unit = identity matrix.
  Algebra ring;
  // n x dim: eta(e_k) in closure coordinates.
  Mat eta_coords;

  std::size_t dim() const { return closure.dim(); }
  std::size_t rank_eta() const { return eta.image.dim(); }
  std::size_t closure_growth() const { return dim() - rank_eta(); }
  std::size_t generator_count() const { return generators.size(); }
  std::size_t denominator_generator(std::size_t d) const { return source.dim() + d; }
  // Matrix x in E_M (must lie in A_M) to ring coordinates.
  Vec coords(const Mat& x) const;
  Mat element(std::span<const Elem> coords) const;
};

LocalFunctionRing localize(const Algebra& a, std::span<const ModuleRep> summands,
                           const LocalizeOptions& opts = {});

struct UniversalMap {
  Mat rho;  // dim(A_M) x dim(B)
  // Rank of the generator images inside A_M; equal to dim(A_M) when the
  // linear constraints alone force rho.
  std::size_t generator_rank = 0;
  bool unique = false;
};

// rho : A_M -> B with eta . rho = kappa (left-to-right composition).
// kappa is n x dim(B). Throws Error(NotWellDefined) when kappa is not
// a unital homomorphism or rho fails a check, Error(KernelNotContained) when
// ker eta is not inside ker kappa, Error(DenominatorNotUnit) when some
// kappa(s) is not a unit in B.
UniversalMap universal_map(const LocalFunctionRing& l, const Algebra& b, const Mat& kappa);

// phi : L1 -> L2 (dim L1 x dim L2) is an LFR morphism iff it is a unital ring
// homomorphism commuting with the inclusions into E_M. Throws
// Error(LayoutMismatch) if the two rings do not live in the same E_M.
bool lfr_morphism_check(const Mat& phi, const LocalFunctionRing& l1, const LocalFunctionRing& l2);

struct ProductComparison {
  LocalFunctionRing whole;
  std::vector<LocalFunctionRing> parts;
  std::vector<Mat> projections;  // whole -> parts[i]
  std::vector<bool> projection_surjective;
  std::vector<bool> projection_homomorphism;
  Mat combined;  // whole -> product of parts
  std::size_t dim_whole = 0;
  std::size_t dim_product = 0;
  bool injective = false;
  bool surjective = false;
  bool isomorphic = false;
  // iso_class[i]: index of the first summand isomorphic to summand i.
  std::vector<std::size_t> iso_class;
  // For isomorphic summands i < j with intertwiner F: block_j = F^{-1} block_i F
  // on all of A_M. True when there are no such pairs.
  bool diagonal_image_certified = true;
  bool has_isomorphic_pair = false;
};

ProductComparison product_compare(const Algebra& a, std::span<const ModuleRep> summands,
                                  const LocalizeOptions& opts = {});

}  // namespace assocloc
