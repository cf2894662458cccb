#include "assocloc/completion.hpp"

#include "assocloc/error.hpp"

namespace assocloc {

CompletionResult complete(const Algebra& base, const IdealBasis& ideal) {
  CompletionResult out;
  out.base = base;
  out.ideal = ideal;
  out.chain = ideal_power_chain(base, ideal);
  out.stable_exponent = out.chain.stable_exponent;
  for (const auto& power : out.chain.powers)
    out.truncations.push_back(quotient_algebra(base, power));

  for (std::size_t k = 0; k + 1 < out.truncations.size(); ++k) {
    const Quotient& hi = out.truncations[k + 1];
    const Quotient& lo = out.truncations[k];
    Mat t = hi.lift * lo.projection;
    out.transitions_surjective = out.transitions_surjective && rank(t) == lo.algebra.dim();
    out.transitions_homomorphic =
        out.transitions_homomorphic && is_unital_homomorphism(hi.algebra, lo.algebra, t);
    out.tower_commutes = out.tower_commutes && hi.projection * t == lo.projection;
    out.transitions.push_back(std::move(t));
  }

  const Quotient& top = out.truncations.back();
  out.completed = top.algebra;
  out.kappa = top.projection;
  out.kernel_kappa = out.chain.powers.back();
  return out;
}

HausdorffResult hausdorff_localize(const Algebra& a, std::span<const ModuleRep> summands,
                                   const LocalizeOptions& opts) {
  HausdorffResult out;
  out.am = localize(a, summands, opts);
  // The ring is given by its elements of E_M, so the inclusion is injective.
  out.m = zero_ideal(out.am.ring);
  out.completion = complete(out.am.ring, out.m);
  out.kappa = out.am.eta_coords * out.completion.kappa;
  out.kernel_kappa = make_ideal(a, Subspace::span(left_kernel(out.kappa)));
  out.quotient = quotient_algebra(a, out.kernel_kappa);

  for (const auto& s : summands) {
    std::vector<Mat> action;
    for (std::size_t k = 0; k < out.quotient.algebra.dim(); ++k)
      action.push_back(s.act(out.quotient.lift.row_span(k)));
    out.induced.push_back(validate_module(out.quotient.algebra, std::move(action), s.name));
  }
  out.h = localize(out.quotient.algebra, out.induced, opts);

  const Mat kappa_bar = out.quotient.lift * out.am.eta_coords;
  out.comparison = universal_map(out.h, out.am.ring, kappa_bar);
  out.comparison_isomorphic =
      out.h.dim() == out.am.dim() && rank(out.comparison.rho) == out.h.dim();
  out.to_completion = out.comparison.rho * out.completion.kappa;
  out.embeds_in_completion = rank(out.to_completion) == out.h.dim();
  return out;
}

CommutativeHausdorff hausdorff_commutative(const Algebra& a, const IdealBasis& m,
                                           const MeataxeOptions& opts) {
  if (!is_commutative(a))
    throw Error(ErrorCode::NotCommutative, "algebra " + a.name() + " is not commutative");
  const auto ms = maximal_ideals(a, opts);
  auto idx = find_maximal(ms, m);
  if (!idx) throw Error(ErrorCode::NotMaximal, "ideal is not a maximal ideal of " + a.name());

  CommutativeHausdorff out;
  out.point = ms[*idx];
  out.local = localize_at_max(a, out.point);
  out.local_ideal = out.local.max_ideal;
  out.completion = complete(out.local.algebra, out.local_ideal);
  out.kappa = out.local.f * out.completion.kappa;
  out.kernel_kappa = make_ideal(a, Subspace::span(left_kernel(out.kappa)));
  out.quotient = quotient_algebra(a, out.kernel_kappa);

  const Algebra& q = out.quotient.algebra;
  const auto qms = maximal_ideals(q, opts);
  const IdealBasis m_bar = make_ideal(q, image_of(m.basis, out.quotient.projection));
  auto qidx = find_maximal(qms, m_bar);
  if (!qidx) throw Error(ErrorCode::NotMaximal, "image of m is not maximal in A/ker kappa");
  out.h = localize_at_max(q, qms[*qidx]);

  // e' maps to 1 in the local completion, so kappa restricted to e'Q is the
  // natural map.
  out.to_completion = out.h.embedding * out.quotient.lift * out.kappa;
  out.homomorphism = is_unital_homomorphism(out.h.algebra, out.completion.completed, out.to_completion);
  out.injective = rank(out.to_completion) == out.h.algebra.dim();
  return out;
}

}  // namespace assocloc
