#include "assocloc/oracle.hpp"

#include <string>

#include "assocloc/error.hpp"
#include "assocloc/localization.hpp"

namespace assocloc {

namespace {

void require_commutative(const Algebra& a) {
  if (!is_commutative(a))
    throw Error(ErrorCode::NotCommutative, "algebra " + a.name() + " is not commutative");
}

// e <- 3e^2 - 2e^3 until e^2 = e; `steps` counts the updates.
Vec lift_idempotent(const Algebra& a, Vec e, std::size_t& steps) {
  const PrimeField f = a.field();
  for (steps = 0; steps <= a.dim() + 1; ++steps) {
    const Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    const Vec e3 = a.mul(e2, e);
    e = vec_sub(f, vec_scale(f, e2, 3 % f.p()), vec_scale(f, e3, 2 % f.p()));
  }
  if (a.mul(e, e) != e) throw Error(ErrorCode::NotWellDefined, "idempotent lifting did not stabilize");
  return e;
}

bool nilpotent_ideal(const Algebra& a, const IdealBasis& i) {
  return ideal_power_chain(a, i).powers.back().dim() == 0;
}

}  // namespace

std::vector<MaximalIdealData> maximal_ideals(const Algebra& a, const MeataxeOptions& opts) {
  require_commutative(a);
  const PrimeField f = a.field();
  const auto ss = simples(a, opts);
  const IdealBasis rad = jacobson_radical(a, opts);
  const Quotient q = quotient_algebra(a, rad);

  std::vector<MaximalIdealData> out;
  std::vector<Subspace> bars;
  for (const auto& s : ss) {
    MaximalIdealData md;
    md.ideal = annihilator(a, s);
    md.residue_dim = a.dim() - md.ideal.dim();
    bars.push_back(image_of(md.ideal.basis, q.projection));
    out.push_back(std::move(md));
  }
  const std::size_t nq = q.algebra.dim();
  for (std::size_t i = 0; i < out.size(); ++i) {
    // A/J = F_i + m_i with F_i the intersection of the other maximal ideals.
    Subspace fi = Subspace::full(f, nq);
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) fi = fi.intersect(bars[j]);
    const Mat stacked = vstack(fi.basis(), bars[i].basis());
    auto c = solve_left(stacked, q.algebra.unit());
    if (!c || fi.dim() + bars[i].dim() != nq)
      throw Error(ErrorCode::NotWellDefined, "A/J does not split along maximal ideal " +
                                                 std::to_string(i + 1));
    const Vec part(c->begin(), c->begin() + static_cast<std::ptrdiff_t>(fi.dim()));
    const Vec bar_e = vec_mat(f, part, fi.basis());
    out[i].idempotent = lift_idempotent(a, vec_mat(f, bar_e, q.lift), out[i].newton_steps);
  }
  return out;
}

std::optional<std::size_t> find_maximal(const std::vector<MaximalIdealData>& ms,
                                        const IdealBasis& ideal) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    if (ms[i].ideal.basis == ideal.basis) return i;
  return std::nullopt;
}

LocalAlgebra localize_at_max(const Algebra& a, const MaximalIdealData& md) {
  const PrimeField f = a.field();
  const std::size_t n = a.dim();
  LocalAlgebra out;
  const Mat le = a.left_mult(md.idempotent);
  const Subspace span = Subspace::span(le);
  out.embedding = span.basis();
  const CoordinateSolver solver(out.embedding);
  const std::size_t d = span.dim();

  RawAlgebra raw;
  raw.name = (a.name().empty() ? std::string("A") : a.name()) + "_m";
  raw.p = f.p();
  raw.dim = d;
  raw.unit = solver.solve_or_throw(md.idempotent);
  for (std::size_t i = 0; i < d; ++i) {
    raw.basis_names.push_back("u" + std::to_string(i + 1));
    for (std::size_t j = 0; j < d; ++j)
      raw.products.push_back(
          solver.solve_or_throw(a.mul(out.embedding.row_span(i), out.embedding.row_span(j))));
  }
  out.algebra = Algebra::validate(std::move(raw));

  out.f = Mat(f, n, d);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec c = solver.solve_or_throw(le.row_span(k));
    std::copy(c.begin(), c.end(), out.f.row_span(k).begin());
  }
  out.max_ideal = make_ideal(out.algebra, image_of(md.ideal.basis, out.f));
  out.max_ideal_nilpotent = nilpotent_ideal(out.algebra, out.max_ideal);
  out.residue_matches = d - out.max_ideal.dim() == md.residue_dim;

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d && total <= 4096; ++i) total *= f.p();
  if (total <= 4096) {
    out.exhaustive_checked = true;
    Vec x(d, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = static_cast<Elem>(t % f.p());
        t /= f.p();
      }
      const bool unit = element_inverse(out.algebra, x).has_value();
      if (unit == out.max_ideal.basis.contains(x)) out.exhaustive_ok = false;
    }
  }
  return out;
}

OracleComparison oracle_compare(const Algebra& a, const ModuleRep& simple,
                                const MeataxeOptions& opts) {
  require_commutative(a);
  const auto ms = maximal_ideals(a, opts);
  const IdealBasis ann = annihilator(a, simple);
  auto idx = find_maximal(ms, ann);
  if (!idx) throw Error(ErrorCode::NonSimpleSummand, "module annihilator is not maximal");

  LocalizeOptions lo;
  lo.meataxe = opts;
  const ModuleRep one[] = {simple};
  const LocalFunctionRing l = localize(a, one, lo);
  const LocalAlgebra loc = localize_at_max(a, ms[*idx]);

  OracleComparison out;
  out.point = *idx;
  out.dim_am = l.dim();
  out.dim_local = loc.algebra.dim();
  out.nilradical_dim = loc.max_ideal.dim();
  // xi(e a) = eta(a); well defined because 1 - e annihilates M.
  const Mat xi = loc.embedding * l.eta_coords;
  if (out.dim_am == out.dim_local && rank(xi) == out.dim_am &&
      is_unital_homomorphism(loc.algebra, l.ring, xi)) {
    out.isomorphic = true;
    out.witness = xi;
  }
  return out;
}

std::optional<IdealBasis> local_max_ideal(const Algebra& b, const MeataxeOptions& opts) {
  const auto ss = simples(b, opts);
  if (ss.size() != 1) return std::nullopt;
  IdealBasis rad = jacobson_radical(b, opts);
  // B/J is a division ring iff its regular module is the simple module.
  if (b.dim() - rad.dim() != ss.front().dim) return std::nullopt;
  return rad;
}

std::vector<ProbeResult> representability_probe(const Algebra& a, const MaximalIdealData& md,
                                                std::span<const ProbeTarget> targets,
                                                const MeataxeOptions& opts) {
  require_commutative(a);
  const LocalAlgebra loc = localize_at_max(a, md);
  std::vector<ProbeResult> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const ProbeTarget& tg = targets[t];
    const std::string which = "target " + std::to_string(t + 1);
    if (tg.h.rows() != a.dim() || tg.h.cols() != tg.b.dim())
      throw Error(ErrorCode::Shape, which + ": h must be dim(A) x dim(B)");
    if (!is_unital_homomorphism(a, tg.b, tg.h))
      throw Error(ErrorCode::NotWellDefined, which + ": h is not a unital homomorphism");
    auto mb = local_max_ideal(tg.b, opts);
    if (!mb) throw Error(ErrorCode::InvalidArgument, which + ": B is not local");
    if (!(preimage_of(tg.h, mb->basis) == md.ideal.basis))
      throw Error(ErrorCode::PullbackMismatch, which + ": h^-1(m_B) differs from m");

    ProbeResult r;
    r.xi = loc.embedding * tg.h;
    r.homomorphism = is_unital_homomorphism(loc.algebra, tg.b, r.xi);
    r.commutes = loc.f * r.xi == tg.h;
    r.local = preimage_of(r.xi, mb->basis) == loc.max_ideal.basis;
    r.unique = rank(loc.f) == loc.algebra.dim();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace assocloc
