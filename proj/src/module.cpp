#include "assocloc/module.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "assocloc/error.hpp"
#include "assocloc/poly.hpp"

namespace assocloc {

namespace {

Subspace spin_matrices(PrimeField f, std::size_t n, std::span<const Mat> mats,
                       std::span<const Vec> seeds) {
  EchelonBuilder ech(f, n);
  std::size_t next = 0;
  for (const auto& s : seeds) ech.add(s);
  while (next < ech.dim()) {
    const Vec v = ech.rows()[next++];
    for (const auto& m : mats) {
      ech.add(vec_mat(f, v, m));
      if (ech.dim() == n) return Subspace::full(f, n);
    }
  }
  return Subspace::span(f, n, ech.rows());
}

std::uint64_t pow_saturating(std::uint64_t base, std::size_t e, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t k) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void chop_into(const ModuleRep& m, const MeataxeOptions& opts, std::vector<ModuleRep>& out) {
  auto res = is_simple(m, opts);
  if (res.simple) {
    out.push_back(m);
    return;
  }
  MeataxeOptions sub_opts = opts;
  sub_opts.seed = child_seed(opts.seed, 0);
  MeataxeOptions quo_opts = opts;
  quo_opts.seed = child_seed(opts.seed, 1);
  chop_into(submodule(m, *res.witness), sub_opts, out);
  chop_into(quotient_module(m, *res.witness), quo_opts, out);
}

}  // namespace

Mat ModuleRep::act(std::span<const Elem> a) const {
  if (a.size() != action.size()) throw Error(ErrorCode::Shape, "element length mismatch");
  Mat r(field(), dim, dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) r += action[i].scaled(a[i]);
  return r;
}

ModuleRep validate_module(const Algebra& a, std::vector<Mat> action, std::string name) {
  if (action.size() != a.dim())
    throw Error(ErrorCode::Shape, "expected " + std::to_string(a.dim()) + " action matrices, got " +
                                      std::to_string(action.size()));
  const std::size_t m = action.empty() ? 0 : action.front().rows();
  for (const auto& x : action)
    if (x.rows() != m || x.cols() != m || !(x.field() == a.field()))
      throw Error(ErrorCode::Shape, "action matrices must be square of equal size");
  ModuleRep rep{a, m, std::move(action), std::move(name), {}};

  std::vector<std::string> violations;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(rep.action[i] * rep.action[j] == rep.act(a.product(i, j))))
        violations.push_back("RelationViolated(" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
  if (!violations.empty())
    throw Error(ErrorCode::RelationViolated,
                std::to_string(violations.size()) + " relation(s) violated; first: " +
                    violations.front(),
                violations);
  if (!rep.act(a.unit()).is_identity())
    throw Error(ErrorCode::UnitNotIdentity, "the unit does not act as the identity");
  return rep;
}

ModuleRep regular_representation(const Algebra& a) {
  std::vector<Mat> action;
  for (std::size_t j = 0; j < a.dim(); ++j) action.push_back(a.right_mult(a.basis(j)));
  return ModuleRep{a, a.dim(), std::move(action), "regular", {}};
}

StructureMorphism structure_morphism(const ModuleRep& m) {
  const std::size_t n = m.algebra.dim();
  Mat eta(m.field(), n, m.dim * m.dim);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& flat = m.action[k].data();
    std::copy(flat.begin(), flat.end(), eta.row_span(k).begin());
  }
  Subspace image = Subspace::span(eta);
  IdealBasis kernel = make_ideal(m.algebra, Subspace::span(left_kernel(eta)));
  if (image.dim() + kernel.dim() != n)
    throw Error(ErrorCode::NotWellDefined, "rank-nullity fails for the structure morphism");
  return {std::move(eta), std::move(image), std::move(kernel)};
}

IdealBasis annihilator(const Algebra& a, const ModuleRep& m) {
  if (!m.algebra.same_as(a) && m.algebra.dim() != a.dim())
    throw Error(ErrorCode::Shape, "module is over a different algebra");
  return structure_morphism(m).kernel;
}

Subspace spin(const ModuleRep& m, std::span<const Vec> seeds) {
  return spin_matrices(m.field(), m.dim, m.action, seeds);
}

Subspace spin(const ModuleRep& m, std::span<const Elem> v) {
  const Vec seed(v.begin(), v.end());
  return spin(m, std::span<const Vec>(&seed, 1));
}

std::optional<Subspace> exhaustive_proper_submodule(const ModuleRep& m) {
  const PrimeField f = m.field();
  const std::size_t n = m.dim;
  Vec v(n, 0);
  // Enumerate projective points: the first nonzero coordinate is 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    Vec digits(tail, 0);
    for (;;) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      std::copy(digits.begin(), digits.end(), v.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      Subspace s = spin(m, v);
      if (s.dim() < n) return s;
      std::size_t pos = 0;
      while (pos < tail && ++digits[pos] == f.p()) digits[pos++] = 0;
      if (pos == tail) break;
    }
  }
  return std::nullopt;
}

SimplicityResult is_simple(const ModuleRep& m, const MeataxeOptions& opts) {
  if (m.dim == 0) throw Error(ErrorCode::ZeroModule, "the zero module is not simple");
  if (m.dim == 1) return {true, std::nullopt, SimplicityMethod::Trivial};
  const PrimeField f = m.field();
  const std::size_t n = m.algebra.dim();

  std::vector<Mat> transposes;
  for (const auto& a : m.action) transposes.push_back(a.transposed());

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<Elem> coeff(0, f.p() - 1);
  for (std::size_t attempt = 0; attempt < opts.attempts; ++attempt) {
    Vec a(n);
    for (auto& x : a) x = coeff(rng);
    const Mat elem = m.act(a);
    for (const auto& g : irreducible_factors(min_poly(elem))) {
      const Mat theta = poly_eval(g, elem);
      const Mat kernel = left_kernel(theta);
      // Any kernel vector spinning to a proper subspace settles reducibility,
      // even when the nullity is too large for the simplicity certificate.
      for (std::size_t r = 0; r < kernel.rows(); ++r) {
        Subspace sub = spin(m, kernel.row_span(r));
        if (sub.dim() < m.dim) return {false, std::move(sub), SimplicityMethod::HoltRees};
      }
      if (kernel.rows() != static_cast<std::size_t>(g.degree())) continue;
      // Norton's dual test on the transposed action.
      const Mat dual_kernel = left_kernel(theta.transposed());
      const Vec w = dual_kernel.row_vec(0);
      Subspace dual = spin_matrices(f, m.dim, transposes, std::span<const Vec>(&w, 1));
      if (dual.dim() < m.dim) {
        // The annihilator of an invariant dual subspace is a submodule.
        Subspace perp = Subspace::span(right_kernel(dual.basis()));
        return {false, std::move(perp), SimplicityMethod::HoltRees};
      }
      return {true, std::nullopt, SimplicityMethod::HoltRees};
    }
  }
  if (pow_saturating(f.p(), m.dim, opts.exhaustive_limit) <= opts.exhaustive_limit) {
    auto sub = exhaustive_proper_submodule(m);
    if (sub) return {false, std::move(sub), SimplicityMethod::Exhaustive};
    return {true, std::nullopt, SimplicityMethod::Exhaustive};
  }
  throw Error(ErrorCode::MeataxeInconclusive,
              "no decisive element after " + std::to_string(opts.attempts) + " attempts");
}

ModuleRep submodule(const ModuleRep& m, const Subspace& sub) {
  const PrimeField f = m.field();
  std::vector<Mat> action;
  for (const auto& x : m.action) {
    Mat r(f, sub.dim(), sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) {
      auto c = sub.coordinates(vec_mat(f, sub.basis().row_span(i), x));
      if (!c) throw Error(ErrorCode::InvalidArgument, "subspace is not invariant");
      std::copy(c->begin(), c->end(), r.row_span(i).begin());
    }
    action.push_back(std::move(r));
  }
  return ModuleRep{m.algebra, sub.dim(), std::move(action), m.name + ".sub", {}};
}

ModuleRep quotient_module(const ModuleRep& m, const Subspace& sub) {
  const PrimeField f = m.field();
  const auto keep = sub.non_pivots();
  std::vector<Mat> action;
  for (const auto& x : m.action) {
    Mat r(f, keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const Vec red = sub.reduce(x.row_span(keep[i]));
      for (std::size_t j = 0; j < keep.size(); ++j) r.set(i, j, red[keep[j]]);
    }
    action.push_back(std::move(r));
  }
  return ModuleRep{m.algebra, keep.size(), std::move(action), m.name + ".quo", {}};
}

std::vector<std::size_t> CompositionSeries::multiplicities() const {
  std::vector<std::size_t> mult(classes.size(), 0);
  for (auto c : class_of) ++mult[c];
  return mult;
}

CompositionSeries chop(const ModuleRep& m, const MeataxeOptions& opts) {
  CompositionSeries series;
  if (m.dim == 0) return series;
  chop_into(m, opts, series.factors);
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    std::size_t cls = series.classes.size();
    for (std::size_t c = 0; c < series.classes.size(); ++c) {
      if (modules_isomorphic(series.factors[series.classes[c]], series.factors[i], opts.seed)) {
        cls = c;
        break;
      }
    }
    if (cls == series.classes.size()) series.classes.push_back(i);
    series.class_of.push_back(cls);
  }
  return series;
}

ModuleSignature module_signature(const ModuleRep& m) {
  ModuleSignature sig{m.dim, {}};
  for (const auto& x : m.action) sig.min_polys.push_back(min_poly(x).coeffs());
  std::sort(sig.min_polys.begin(), sig.min_polys.end());
  return sig;
}

Subspace intertwiners(const ModuleRep& m, const ModuleRep& n) {
  if (m.action.size() != n.action.size())
    throw Error(ErrorCode::Shape, "modules over different algebras");
  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t i = 0; i < m.action.size(); ++i) pairs.emplace_back(m.action[i], n.action[i]);
  return solve_commutant_system(pairs, m.field(), m.dim, n.dim);
}

std::optional<Mat> modules_isomorphic(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
  if (m.dim != n.dim || m.action.size() != n.action.size()) return std::nullopt;
  const PrimeField f = m.field();
  if (m.action == n.action) return Mat::identity(f, m.dim);
  if (!(module_signature(m) == module_signature(n))) return std::nullopt;
  const Subspace space = intertwiners(m, n);
  const std::size_t d = space.dim();
  if (d == 0) return std::nullopt;
  auto as_mat = [&](const Vec& coeffs) {
    return Mat::unflatten(f, vec_mat(f, coeffs, space.basis()), m.dim, n.dim);
  };
  auto accept = [&](const Mat& x) {
    return rank(x) == m.dim;
  };
  for (std::size_t i = 0; i < d; ++i) {
    Mat x = as_mat(unit_vector(d, i));
    if (accept(x)) return x;
  }
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 16;
  if (pow_saturating(f.p(), d, kLimit) <= kLimit) {
    Vec c(d, 0);
    for (;;) {
      std::size_t pos = 0;
      while (pos < d && ++c[pos] == f.p()) c[pos++] = 0;
      if (pos == d) break;
      Mat x = as_mat(c);
      if (accept(x)) return x;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> coeff(0, f.p() - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vec c(d);
    for (auto& x : c) x = coeff(rng);
    Mat x = as_mat(c);
    try {
      invert_via_min_poly(x);
      return x;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAUnit) throw;
    }
  }
  return std::nullopt;
}

std::vector<ModuleRep> simples(const Algebra& a, const MeataxeOptions& opts) {
  auto series = chop(regular_representation(a), opts);
  std::vector<ModuleRep> out;
  for (std::size_t c = 0; c < series.classes.size(); ++c) {
    ModuleRep s = series.factors[series.classes[c]];
    s.name = "S" + std::to_string(c + 1);
    out.push_back(std::move(s));
  }
  return out;
}

ModuleRep direct_sum(std::span<const ModuleRep> modules) {
  if (modules.empty()) throw Error(ErrorCode::InvalidArgument, "direct sum of no modules");
  const Algebra& a = modules.front().algebra;
  std::vector<std::size_t> offsets{0};
  std::string name;
  for (const auto& m : modules) {
    if (m.action.size() != a.dim()) throw Error(ErrorCode::Shape, "summands over different algebras");
    offsets.push_back(offsets.back() + m.dim);
    name += (name.empty() ? "" : "+") + m.name;
  }
  const std::size_t total = offsets.back();
  std::vector<Mat> action;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Mat x(a.field(), total, total);
    for (std::size_t i = 0; i < modules.size(); ++i) x.set_block(offsets[i], offsets[i], modules[i].action[k]);
    action.push_back(std::move(x));
  }
  return ModuleRep{a, total, std::move(action), std::move(name), std::move(offsets)};
}

IdealBasis jacobson_radical(const Algebra& a, const MeataxeOptions& opts) {
  const auto s = simples(a, opts);
  return annihilator(a, direct_sum(s));
}

}  // namespace assocloc
