#include "assocloc/localization.hpp"

#include <string>

#include "assocloc/error.hpp"
#include "assocloc/poly.hpp"
#include "assocloc/report.hpp"

namespace assocloc {

namespace {

std::uint64_t pow_capped(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Calls fn(coeffs) for every nonzero coefficient vector of length d.
template <typename Fn>
void for_each_nonzero(std::size_t d, Elem p, Fn&& fn) {
  Vec c(d, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < d && ++c[pos] == p) c[pos++] = 0;
    if (pos == d) return;
    fn(c);
  }
}

Mat combine(const PrimeField& f, std::span<const Elem> coeffs, const Mat& basis_rows,
            std::size_t m) {
  return Mat::unflatten(f, vec_mat(f, coeffs, basis_rows), m, m);
}

Vec embed_block(const PrimeField& f, const EndRingContext& ctx, std::size_t i,
                std::span<const Elem> flat_block) {
  const std::size_t mi = ctx.block_dim(i);
  Mat big(f, ctx.total_dim(), ctx.total_dim());
  big.set_block(ctx.offsets[i], ctx.offsets[i], Mat::unflatten(f, flat_block, mi, mi));
  return big.flattened();
}

bool all_blocks_nonzero(const EndRingContext& ctx, const Mat& z) {
  for (std::size_t i = 0; i < ctx.r(); ++i)
    if (ctx.block(z, i, i).is_zero()) return false;
  return true;
}

Algebra ring_from_closure(const SubringClosure& c, const std::string& name) {
  const PrimeField f = c.elements.front().field();
  RawAlgebra raw;
  raw.name = name;
  raw.p = f.p();
  raw.dim = c.dim();
  raw.unit = c.solver.solve_or_throw(Mat::identity(f, c.matrix_dim).data());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    raw.basis_names.push_back("b" + std::to_string(i + 1));
    for (std::size_t j = 0; j < c.dim(); ++j) {
      auto coords = c.solver.solve((c.elements[i] * c.elements[j]).data());
      if (!coords)
        throw Error(ErrorCode::NotWellDefined, "closure is not multiplicatively closed");
      raw.products.push_back(std::move(*coords));
    }
  }
  return Algebra::validate(std::move(raw));
}

}  // namespace

Mat EndRingContext::block(const Mat& x, std::size_t i, std::size_t j) const {
  return x.block(offsets[i], offsets[j], block_dim(i), block_dim(j));
}

EndRingContext make_context(std::span<const ModuleRep> summands) {
  if (summands.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one summand");
  EndRingContext ctx;
  ctx.summands.assign(summands.begin(), summands.end());
  ctx.sum = direct_sum(summands);
  ctx.offsets = ctx.sum.block_offsets;
  return ctx;
}

DivisionData commutant(const Algebra& a, const EndRingContext& ctx, const MeataxeOptions& opts) {
  const PrimeField f = a.field();
  DivisionData d;
  d.context = ctx;
  std::vector<Vec> embedded;
  for (std::size_t i = 0; i < ctx.r(); ++i) {
    const ModuleRep& s = ctx.summands[i];
    if (s.dim == 0 || !is_simple(s, opts).simple)
      throw Error(ErrorCode::NonSimpleSummand,
                  "summand " + std::to_string(i + 1) + " (" + s.name + ") is not simple");
    Subspace ci = commutant(std::span<const Mat>(s.action), f, s.dim);
    for (std::size_t k = 0; k < ci.dim(); ++k)
      embedded.push_back(embed_block(f, ctx, i, ci.basis().row_span(k)));
    d.per_summand.push_back(std::move(ci));
  }
  const std::size_t m = ctx.total_dim();
  d.basis = Subspace::span(f, m * m, embedded);
  // A nonzero map out of a division ring is injective; blockwise this means
  // the embedded bases stay independent.
  if (d.basis.dim() != embedded.size())
    throw Error(ErrorCode::NotWellDefined, "D_M -> E_M is not injective");
  return d;
}

SchurResult schur_verify(DivisionData& d, std::uint64_t cap) {
  SchurResult out;
  const PrimeField f = d.basis.field();
  for (const auto& di : d.per_summand) {
    if (pow_capped(f.p(), di.dim(), cap) > cap) {
      out.status = SchurStatus::CapExceeded;
      d.verified = out.status;
      return out;
    }
  }
  for (std::size_t i = 0; i < d.per_summand.size(); ++i) {
    const Subspace& di = d.per_summand[i];
    const std::size_t mi = d.context.block_dim(i);
    for_each_nonzero(di.dim(), f.p(), [&](const Vec& c) {
      const Mat x = combine(f, c, di.basis(), mi);
      const Poly mp = min_poly(x);
      if (mp.coeff(0) == 0) {
        // mp = x * h(x) with h(x) != 0.
        std::vector<Elem> h(mp.coeffs().begin() + 1, mp.coeffs().end());
        const Mat hx = poly_eval(Poly(f, h), x);
        throw Error(ErrorCode::ZeroDivisorFound,
                    "summand " + std::to_string(i + 1) + ": x * h(x) = 0 with x, h(x) nonzero",
                    {"x=" + format_mat(x), "h(x)=" + format_mat(hx)});
      }
      const Mat inv = invert_via_min_poly(x);
      if (!di.contains(inv.data()))
        throw Error(ErrorCode::ZeroDivisorFound,
                    "summand " + std::to_string(i + 1) + ": inverse leaves End_A(M_i)");
      ++out.elements_checked;
    });
  }
  out.status = SchurStatus::ExhaustivelyVerified;
  d.verified = out.status;
  return out;
}

DenominatorSet unit_denominators(const StructureMorphism& eta, const DivisionData& d,
                                 std::uint64_t cap) {
  const PrimeField f = d.basis.field();
  const std::size_t m = d.context.total_dim();
  const Subspace inter = subspace_intersect(eta.image, d.basis);
  DenominatorSet out;
  out.intersection_dim = inter.dim();

  auto make = [&](const Mat& z) {
    auto pre = solve_left(eta.matrix, z.data());
    if (!pre) throw Error(ErrorCode::NotWellDefined, "denominator outside the image of eta");
    return Denominator{std::move(*pre), z, invert_via_min_poly(z)};
  };

  if (pow_capped(f.p(), inter.dim(), cap) <= cap) {
    for_each_nonzero(inter.dim(), f.p(), [&](const Vec& c) {
      const Mat z = combine(f, c, inter.basis(), m);
      if (all_blocks_nonzero(d.context, z)) out.items.push_back(make(z));
    });
    return out;
  }

  // Spanning set of units: the identity, then each basis vector shifted by a
  // scalar so that no diagonal block vanishes.
  out.truncated = true;
  const Mat id = Mat::identity(f, m);
  out.items.push_back(make(id));
  for (std::size_t k = 0; k < inter.dim(); ++k) {
    const Mat b = Mat::unflatten(f, inter.basis().row_span(k), m, m);
    for (Elem lambda = 0; lambda < f.p(); ++lambda) {
      const Mat z = b + id.scaled(lambda);
      if (all_blocks_nonzero(d.context, z)) {
        out.items.push_back(make(z));
        break;
      }
    }
  }
  return out;
}

SubringClosure subring_closure(std::span<const Mat> generators, PrimeField f, std::size_t m) {
  SubringClosure c;
  c.matrix_dim = m;
  EchelonBuilder ech(f, m * m);
  auto try_add = [&](const Mat& x, Word w) {
    if (!ech.add(x.data())) return false;
    c.elements.push_back(x);
    c.words.push_back(w);
    return true;
  };
  try_add(Mat::identity(f, m), Word{Word::Kind::Identity, 0, 0});
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].rows() != m || generators[g].cols() != m)
      throw Error(ErrorCode::Shape, "generator is not an m x m matrix");
    try_add(generators[g], Word{Word::Kind::Generator, g, 0});
  }
  // Products of pairs; each round handles pairs involving a new element.
  std::size_t done = 0;
  while (done < c.elements.size()) {
    const std::size_t size = c.elements.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        if (i < done && j < done) continue;
        try_add(c.elements[i] * c.elements[j], Word{Word::Kind::Product, i, j});
      }
    done = size;
    ++c.rounds;
  }
  std::vector<Vec> flat;
  for (const auto& x : c.elements) flat.push_back(x.data());
  c.solver = CoordinateSolver(Mat::from_rows(f, m * m, flat));
  return c;
}

Vec LocalFunctionRing::coords(const Mat& x) const {
  auto c = closure.coordinates(x);
  if (!c) throw Error(ErrorCode::NotWellDefined, "matrix does not lie in A_M");
  return *c;
}

Mat LocalFunctionRing::element(std::span<const Elem> c) const {
  const PrimeField f = source.field();
  const std::size_t m = context.total_dim();
  Mat x(f, m, m);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) x += closure.elements[k].scaled(c[k]);
  return x;
}

LocalFunctionRing localize(const Algebra& a, std::span<const ModuleRep> summands,
                           const LocalizeOptions& opts) {
  const PrimeField f = a.field();
  LocalFunctionRing l;
  l.source = a;
  l.context = make_context(summands);
  l.division = commutant(a, l.context, opts.meataxe);
  l.eta = structure_morphism(l.context.sum);
  l.kernel = l.eta.kernel;
  l.denominators = unit_denominators(l.eta, l.division, opts.cap);

  for (const auto& x : l.context.sum.action) l.generators.push_back(x);
  for (const auto& d : l.denominators.items) l.generators.push_back(d.inverse);
  l.closure = subring_closure(l.generators, f, l.context.total_dim());

  std::string name = "A_M";
  if (!a.name().empty()) name = a.name() + "_M";
  l.ring = ring_from_closure(l.closure, name);

  l.eta_coords = Mat(f, a.dim(), l.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const Vec c = l.coords(l.context.sum.action[k]);
    std::copy(c.begin(), c.end(), l.eta_coords.row_span(k).begin());
  }
  // Unit condition: eta(s) is invertible inside A_M for every denominator.
  for (const auto& d : l.denominators.items)
    if (!l.closure.coordinates(d.inverse) || !l.closure.coordinates(d.element))
      throw Error(ErrorCode::NotWellDefined, "denominator inverse missing from A_M");
  return l;
}

UniversalMap universal_map(const LocalFunctionRing& l, const Algebra& b, const Mat& kappa) {
  const Algebra& a = l.source;
  const PrimeField f = a.field();
  if (kappa.rows() != a.dim() || kappa.cols() != b.dim() || !(b.field() == f))
    throw Error(ErrorCode::Shape, "kappa must be dim(A) x dim(B) over the same field");

  if (auto w = multiplicativity_witness(a, b, kappa))
    throw Error(ErrorCode::NotWellDefined, "kappa is not multiplicative at (e" +
                                               std::to_string(w->first + 1) + ", e" +
                                               std::to_string(w->second + 1) + ")");
  if (vec_mat(f, a.unit(), kappa) != b.unit())
    throw Error(ErrorCode::NotWellDefined, "kappa is not unital");
  for (std::size_t k = 0; k < l.kernel.dim(); ++k)
    if (!vec_is_zero(vec_mat(f, l.kernel.basis.basis().row_span(k), kappa)))
      throw Error(ErrorCode::KernelNotContained,
                  "ker(eta) basis vector " + std::to_string(k + 1) + " is not killed by kappa");

  std::vector<Vec> forced;
  for (std::size_t g = 0; g < a.dim(); ++g) forced.push_back(kappa.row_vec(g));
  for (std::size_t d = 0; d < l.denominators.items.size(); ++d) {
    const Vec ks = vec_mat(f, l.denominators.items[d].preimage, kappa);
    auto inv = element_inverse(b, ks);
    if (!inv)
      throw Error(ErrorCode::DenominatorNotUnit,
                  "kappa(s) is not a unit in B for denominator " + std::to_string(d + 1));
    forced.push_back(std::move(*inv));
  }

  UniversalMap out;
  out.rho = Mat(f, l.dim(), b.dim());
  for (std::size_t k = 0; k < l.dim(); ++k) {
    const Word& w = l.closure.words[k];
    Vec v;
    switch (w.kind) {
      case Word::Kind::Identity: v = b.unit(); break;
      case Word::Kind::Generator: v = forced[w.left]; break;
      case Word::Kind::Product: v = b.mul(out.rho.row_span(w.left), out.rho.row_span(w.right)); break;
    }
    std::copy(v.begin(), v.end(), out.rho.row_span(k).begin());
  }

  // Every generator, including those absorbed by earlier ones, must land on
  // its forced value; for eta(e_k) this is eta . rho = kappa on a basis of A.
  Mat gen_coords(f, l.generators.size(), l.dim());
  for (std::size_t g = 0; g < l.generators.size(); ++g) {
    const Vec c = l.coords(l.generators[g]);
    std::copy(c.begin(), c.end(), gen_coords.row_span(g).begin());
    if (vec_mat(f, c, out.rho) != forced[g])
      throw Error(ErrorCode::NotWellDefined,
                  "rho disagrees with the forced value on generator " + std::to_string(g + 1));
  }
  if (auto w = multiplicativity_witness(l.ring, b, out.rho))
    throw Error(ErrorCode::NotWellDefined, "rho is not multiplicative at (b" +
                                               std::to_string(w->first + 1) + ", b" +
                                               std::to_string(w->second + 1) + ")");
  if (vec_mat(f, l.ring.unit(), out.rho) != b.unit())
    throw Error(ErrorCode::NotWellDefined, "rho is not unital");

  out.generator_rank = rank(gen_coords);
  // Each basis element is a word in the generators whose images are forced,
  // so rho is determined by kappa.
  out.unique = true;
  return out;
}

bool lfr_morphism_check(const Mat& phi, const LocalFunctionRing& l1, const LocalFunctionRing& l2) {
  if (!l1.context.same_layout(l2.context))
    throw Error(ErrorCode::LayoutMismatch, "the rings act on different block layouts");
  if (phi.rows() != l1.dim() || phi.cols() != l2.dim())
    throw Error(ErrorCode::Shape, "phi must be dim(L1) x dim(L2)");
  if (!is_unital_homomorphism(l1.ring, l2.ring, phi)) return false;
  for (std::size_t k = 0; k < l1.dim(); ++k)
    if (!(l2.element(phi.row_span(k)) == l1.closure.elements[k])) return false;
  return true;
}

ProductComparison product_compare(const Algebra& a, std::span<const ModuleRep> summands,
                                  const LocalizeOptions& opts) {
  const PrimeField f = a.field();
  ProductComparison pc;
  pc.whole = localize(a, summands, opts);
  pc.dim_whole = pc.whole.dim();
  const auto& ctx = pc.whole.context;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    pc.parts.push_back(localize(a, summands.subspan(i, 1), opts));
    const auto& part = pc.parts.back();
    Mat proj(f, pc.whole.dim(), part.dim());
    for (std::size_t k = 0; k < pc.whole.dim(); ++k) {
      const Vec c = part.coords(ctx.block(pc.whole.closure.elements[k], i, i));
      std::copy(c.begin(), c.end(), proj.row_span(k).begin());
    }
    pc.projection_surjective.push_back(rank(proj) == part.dim());
    pc.projection_homomorphism.push_back(is_unital_homomorphism(pc.whole.ring, part.ring, proj));
    pc.dim_product += part.dim();
    pc.projections.push_back(std::move(proj));
  }
  pc.combined = pc.projections.front();
  for (std::size_t i = 1; i < pc.projections.size(); ++i)
    pc.combined = hstack(pc.combined, pc.projections[i]);
  const std::size_t rk = rank(pc.combined);
  pc.injective = rk == pc.dim_whole;
  pc.surjective = rk == pc.dim_product;
  pc.isomorphic = pc.injective && pc.surjective;

  for (std::size_t i = 0; i < summands.size(); ++i) {
    std::size_t cls = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (pc.iso_class[j] != j) continue;
      auto iso = modules_isomorphic(summands[j], summands[i], opts.meataxe.seed);
      if (!iso) continue;
      cls = j;
      pc.has_isomorphic_pair = true;
      // rho_i = F^{-1} rho_j F, hence every element of A_M satisfies the same.
      const Mat finv = *inverse_by_elimination(*iso);
      for (const auto& x : pc.whole.closure.elements)
        if (!(ctx.block(x, i, i) == finv * ctx.block(x, j, j) * *iso))
          pc.diagonal_image_certified = false;
      break;
    }
    pc.iso_class.push_back(cls);
  }
  return pc;
}

}  // namespace assocloc
