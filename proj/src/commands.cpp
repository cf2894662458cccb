#include "assocloc/commands.hpp"

#include <algorithm>
#include <functional>

#include "assocloc/completion.hpp"
#include "assocloc/error.hpp"
#include "assocloc/io.hpp"
#include "assocloc/oracle.hpp"

namespace assocloc {

namespace {

// Errors that describe bad input rather than a failed mathematical check.
bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::NotPrime:
    case ErrorCode::Shape:
    case ErrorCode::NonAssociative:
    case ErrorCode::BadUnit:
    case ErrorCode::RelationViolated:
    case ErrorCode::UnitNotIdentity:
    case ErrorCode::ZeroModule:
    case ErrorCode::NonSimpleSummand:
    case ErrorCode::NotCommutative:
    case ErrorCode::NotMaximal:
    case ErrorCode::LayoutMismatch:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

struct Session {
  Report& r;
  Algebra a;
  std::vector<ModuleRep> modules;
  CommandOptions opts;
  MeataxeOptions mx;
  LocalizeOptions lo;

  // Runs a section; a mathematical error becomes a failed check `name`.
  void guard(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (is_input_error(e.code())) throw;
      r.check(name, false, e.what());
    }
  }
};

std::string join_names(std::span<const ModuleRep> ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : "+") + m.name;
  return s;
}

// ---- sections ------------------------------------------------------------

void schur_section(Session& s, const std::string& pre, const ModuleRep& m) {
  const ModuleRep one[] = {m};
  const EndRingContext ctx = make_context(one);
  DivisionData d = commutant(s.a, ctx, s.mx);
  const Subspace& dm = d.per_summand.front();
  s.r.set(pre + "dim_M", m.dim);
  s.r.set(pre + "dim_D", dm.dim());

  bool commutes = true;
  for (std::size_t k = 0; k < dm.dim(); ++k) {
    const Mat x = Mat::unflatten(s.a.field(), dm.basis().row_span(k), m.dim, m.dim);
    for (const auto& act : m.action) commutes = commutes && x * act == act * x;
  }
  s.r.check(pre + "commutes_with_eta", commutes);
  s.r.check(pre + "dim_D_divides_dim_M", dm.dim() > 0 && m.dim % dm.dim() == 0,
            "dim M = " + std::to_string(m.dim) + ", dim D = " + std::to_string(dm.dim()));
  try {
    const SchurResult res = schur_verify(d, s.opts.cap);
    if (res.status == SchurStatus::CapExceeded) {
      s.r.skip(pre + "schur", "p^dim(D) exceeds cap " + std::to_string(s.opts.cap));
    } else {
      s.r.check(pre + "schur", true,
                std::to_string(res.elements_checked) + " nonzero elements invertible");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDivisorFound) throw;
    s.r.check(pre + "schur", false, e.what());
  }
}

void simples_section(Session& s, const std::string& pre) {
  const auto ss = simples(s.a, s.mx);
  const IdealBasis rad = jacobson_radical(s.a, s.mx);
  s.r.set(pre + "count", ss.size());
  s.r.set(pre + "radical_dim", rad.dim());
  std::size_t wedderburn = 0;
  for (const auto& m : ss) {
    const ModuleRep one[] = {m};
    const DivisionData d = commutant(s.a, make_context(one), s.mx);
    const std::size_t dd = d.basis.dim();
    s.r.set(pre + m.name + ".dim", m.dim);
    s.r.set(pre + m.name + ".dim_D", dd);
    wedderburn += m.dim * m.dim / dd;
    const auto res = is_simple(m, s.mx);
    s.r.check(pre + m.name + ".simple", res.simple);
  }
  // A/J = prod M_{n_i}(D_i) with dim S_i = n_i dim D_i.
  s.r.check(pre + "wedderburn_dimension", wedderburn == s.a.dim() - rad.dim(),
            "sum dim(S)^2/dim(D) = " + std::to_string(wedderburn) +
                ", dim A/J = " + std::to_string(s.a.dim() - rad.dim()));
  bool pairwise = true;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i + 1; j < ss.size(); ++j)
      if (modules_isomorphic(ss[i], ss[j], s.mx.seed)) pairwise = false;
  s.r.check(pre + "pairwise_non_isomorphic", pairwise);
}

void localize_section(Session& s, const std::string& pre, std::span<const ModuleRep> summands) {
  const LocalFunctionRing l = localize(s.a, summands, s.lo);
  const PrimeField f = s.a.field();
  s.r.set(pre + "dim_AM", l.dim());
  s.r.set(pre + "rank_eta", l.rank_eta());
  s.r.set(pre + "closure_growth", l.closure_growth());
  s.r.set(pre + "dim_D", l.division.basis.dim());
  s.r.set(pre + "kernel_dim", l.kernel.dim());
  s.r.set(pre + "denominators", l.denominators.items.size());
  s.r.set(pre + "denominators_truncated", l.denominators.truncated);
  s.r.set(pre + "closure_rounds", l.closure.rounds);

  bool closed = true;
  for (const auto& x : l.closure.elements)
    for (const auto& y : l.closure.elements) closed = closed && l.closure.coordinates(x * y);
  s.r.check(pre + "subring_closed", closed);

  bool contains = l.closure.coordinates(Mat::identity(f, l.context.total_dim())).has_value();
  for (const auto& x : l.context.sum.action) contains = contains && l.closure.coordinates(x);
  s.r.check(pre + "contains_identity_and_image", contains);

  bool units = true;
  for (const auto& d : l.denominators.items)
    units = units && (d.element * d.inverse).is_identity() && l.closure.coordinates(d.inverse);
  s.r.check(pre + "unit_condition", units,
            std::to_string(l.denominators.items.size()) + " denominators");

  if (summands.size() == 1) {
    const std::size_t m = summands.front().dim;
    const std::size_t d = l.division.basis.dim();
    const std::size_t n = m / d;
    s.r.check(pre + "density", l.dim() == n * n * d && l.closure_growth() == 0,
              "dim A_M = " + std::to_string(l.dim()) + ", (dim_D M)^2 dim D = " +
                  std::to_string(n * n * d) + ", growth = " + std::to_string(l.closure_growth()));
  }

  s.guard(pre + "universal_identity", [&] {
    const UniversalMap u = universal_map(l, l.ring, l.eta_coords);
    s.r.check(pre + "universal_identity", u.rho.is_identity() && u.unique);
  });
}

void product_section(Session& s, const std::string& pre, std::span<const ModuleRep> summands) {
  const ProductComparison pc = product_compare(s.a, summands, s.lo);
  s.r.set(pre + "dim_whole", pc.dim_whole);
  s.r.set(pre + "dim_product", pc.dim_product);
  s.r.set(pre + "injective", pc.injective);
  s.r.set(pre + "surjective", pc.surjective);
  s.r.set(pre + "isomorphic_to_product", pc.isomorphic);
  const bool homs = std::all_of(pc.projection_homomorphism.begin(),
                                pc.projection_homomorphism.end(), [](bool b) { return b; });
  const bool onto = std::all_of(pc.projection_surjective.begin(),
                                pc.projection_surjective.end(), [](bool b) { return b; });
  s.r.check(pre + "projections_homomorphic", homs);
  s.r.check(pre + "projections_surjective", onto);
  if (!pc.has_isomorphic_pair) {
    s.r.check(pre + "product_iso", pc.isomorphic,
              "dims " + std::to_string(pc.dim_whole) + " vs " + std::to_string(pc.dim_product) +
                  ", map " + format_mat(pc.combined));
  } else {
    s.r.check(pre + "diagonal_image", pc.diagonal_image_certified && pc.injective,
              "dims " + std::to_string(pc.dim_whole) + " vs " + std::to_string(pc.dim_product));
  }
}

void completion_checks(Session& s, const std::string& pre, const CompletionResult& c) {
  const auto dims = c.tower_dims();
  s.r.set(pre + "tower_dims", format_list(dims));
  s.r.set(pre + "stable_exponent", c.stable_exponent);
  s.r.set(pre + "completed_dim", c.completed.dim());
  s.r.set(pre + "kernel_kappa_dim", c.kernel_kappa.dim());
  s.r.check(pre + "tower_stabilizes", c.stable_exponent <= c.base.dim() + 1,
            "N = " + std::to_string(c.stable_exponent));
  s.r.check(pre + "tower_decreasing", std::is_sorted(dims.rbegin(), dims.rend()));
  s.r.check(pre + "transitions", c.transitions_surjective && c.transitions_homomorphic &&
                                     c.tower_commutes);
  s.r.check(pre + "kappa_homomorphism", is_unital_homomorphism(c.base, c.completed, c.kappa));
  s.r.check(pre + "completed_dim", c.completed.dim() == c.base.dim() - dims.back());
}

void completion_section(Session& s, const std::string& pre) {
  if (s.modules.empty()) {
    const IdealBasis rad = jacobson_radical(s.a, s.mx);
    s.r.set(pre + "ideal", std::string("radical"));
    completion_checks(s, pre, complete(s.a, rad));
  } else {
    const LocalFunctionRing l = localize(s.a, s.modules, s.lo);
    s.r.set(pre + "ideal", std::string("ker(A_M -> E_M)"));
    completion_checks(s, pre, complete(l.ring, zero_ideal(l.ring)));
  }
}

void hausdorff_section(Session& s, const std::string& pre, std::span<const ModuleRep> summands) {
  s.guard(pre + "m_zero_collapse", [&] {
    const HausdorffResult h = hausdorff_localize(s.a, summands, s.lo);
    s.r.set(pre + "m_dim", h.m.dim());
    s.r.set(pre + "tower_dims", format_list(h.completion.tower_dims()));
    s.r.set(pre + "kernel_kappa_dim", h.kernel_kappa.dim());
    s.r.set(pre + "quotient_dim", h.quotient.algebra.dim());
    s.r.set(pre + "dim_H", h.h.dim());
    s.r.set(pre + "dim_AM", h.am.dim());
    s.r.set(pre + "embeds_in_completion", h.embeds_in_completion);
    s.r.check(pre + "tower_stabilizes",
              h.completion.stable_exponent <= h.am.dim() + 1);
    if (h.m.dim() == 0) {
      s.r.check(pre + "m_zero_collapse", h.comparison_isomorphic,
                "H -> A_M " + format_mat(h.comparison.rho));
    } else {
      s.r.skip(pre + "m_zero_collapse", "m is nonzero");
    }
  });
}

void hausdorff_commutative_section(Session& s, const std::string& pre, const IdealBasis& m) {
  s.guard(pre + "injective", [&] {
    const CommutativeHausdorff h = hausdorff_commutative(s.a, m, s.mx);
    s.r.set(pre + "dim_Am", h.local.algebra.dim());
    s.r.set(pre + "tower_dims", format_list(h.completion.tower_dims()));
    s.r.set(pre + "completed_dim", h.completion.completed.dim());
    s.r.set(pre + "kernel_kappa_dim", h.kernel_kappa.dim());
    s.r.set(pre + "dim_H", h.h.algebra.dim());
    s.r.check(pre + "homomorphism", h.homomorphism);
    s.r.check(pre + "injective", h.injective,
              "rank " + std::to_string(rank(h.to_completion)) + " of " +
                  std::to_string(h.h.algebra.dim()));
  });
}

void oracle_section(Session& s, const std::string& pre, const ModuleRep& m,
                    const std::vector<MaximalIdealData>& ms, const std::string& lemma_name) {
  const OracleComparison oc = oracle_compare(s.a, m, s.mx);
  s.r.set(pre + "maximal_ideal", oc.point + 1);
  s.r.set(pre + "dim_AM", oc.dim_am);
  s.r.set(pre + "dim_Am", oc.dim_local);
  s.r.set(pre + "nilradical_dim", oc.nilradical_dim);
  if (oc.isomorphic) {
    s.r.check(lemma_name, true, "A_m -> A_M " + format_mat(*oc.witness));
  } else {
    s.r.check(lemma_name, false,
              "documented mismatch: dim A_M = " + std::to_string(oc.dim_am) + ", dim A_m = " +
                  std::to_string(oc.dim_local) + ", nilradical dim = " +
                  std::to_string(oc.nilradical_dim));
  }
  s.r.check(pre + "iso_iff_reduced", oc.isomorphic == (oc.nilradical_dim == 0));

  const MaximalIdealData& md = ms[oc.point];
  const LocalAlgebra loc = localize_at_max(s.a, md);
  s.r.check(pre + "local", loc.local(),
            loc.exhaustive_checked ? "non-units enumerated" : "nilpotency and residue only");
  const Quotient res = quotient_algebra(s.a, md.ideal);
  const ProbeTarget targets[] = {{loc.algebra, loc.f}, {res.algebra, res.projection}};
  s.guard(pre + "representability", [&] {
    const auto probe = representability_probe(s.a, md, targets, s.mx);
    bool ok = true;
    for (const auto& p : probe) ok = ok && p.homomorphism && p.commutes && p.local && p.unique;
    s.r.check(pre + "representability", ok, "targets: A_m, A/m");
  });
}

void oracle_global(Session& s, const std::string& pre, const std::vector<MaximalIdealData>& ms) {
  const PrimeField f = s.a.field();
  std::size_t total = 0;
  Vec sum(s.a.dim(), 0);
  bool orthogonal = true;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    total += localize_at_max(s.a, ms[i]).algebra.dim();
    sum = vec_add(f, sum, ms[i].idempotent);
    for (std::size_t j = 0; j < ms.size(); ++j) {
      const Vec p = s.a.mul(ms[i].idempotent, ms[j].idempotent);
      orthogonal = orthogonal && (i == j ? p == ms[i].idempotent : vec_is_zero(p));
    }
  }
  s.r.set(pre + "maximal_ideals", ms.size());
  s.r.check(pre + "local_dims_sum", total == s.a.dim(),
            std::to_string(total) + " vs dim A = " + std::to_string(s.a.dim()));
  s.r.check(pre + "idempotents", orthogonal && sum == s.a.unit());
}

// ---- commands ------------------------------------------------------------

std::vector<ModuleRep> targets_or_simples(Session& s) {
  return s.modules.empty() ? simples(s.a, s.mx) : s.modules;
}

void cmd_validate(Session& s) {
  s.r.set("name", s.a.name());
  s.r.set("p", std::to_string(s.a.field().p()));
  s.r.set("dim", s.a.dim());
  s.r.set("commutative", is_commutative(s.a));
  s.r.check("associativity", true);
  s.r.check("unit_axioms", true);
  for (const auto& m : s.modules) {
    s.r.set(m.name + ".dim", m.dim);
    s.r.check(m.name + ".relations", true);
  }
}

void cmd_endo(Session& s) {
  for (const auto& m : targets_or_simples(s)) {
    if (!is_simple(m, s.mx).simple) {
      const Subspace c = commutant(std::span<const Mat>(m.action), s.a.field(), m.dim);
      s.r.set(m.name + ".dim_End", c.dim());
      s.r.skip(m.name + ".schur", "module is not simple");
      continue;
    }
    schur_section(s, m.name + ".", m);
  }
}

void cmd_localize(Session& s) {
  if (!s.modules.empty()) {
    s.r.set("summands", join_names(s.modules));
    localize_section(s, "", s.modules);
    return;
  }
  for (const auto& m : simples(s.a, s.mx)) {
    const ModuleRep one[] = {m};
    localize_section(s, m.name + ".", one);
  }
}

void cmd_product(Session& s) {
  if (!s.modules.empty()) {
    product_section(s, "", s.modules);
    return;
  }
  const auto ss = simples(s.a, s.mx);
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i; j < ss.size(); ++j) {
      const ModuleRep pair[] = {ss[i], ss[j]};
      product_section(s, ss[i].name + "+" + ss[j].name + ".", pair);
    }
}

void cmd_hausdorff(Session& s) {
  if (!s.modules.empty()) {
    hausdorff_section(s, "", s.modules);
    return;
  }
  for (const auto& m : simples(s.a, s.mx)) {
    const ModuleRep one[] = {m};
    hausdorff_section(s, m.name + ".", one);
  }
  if (is_commutative(s.a)) {
    const auto ms = maximal_ideals(s.a, s.mx);
    for (std::size_t i = 0; i < ms.size(); ++i)
      hausdorff_commutative_section(s, "m" + std::to_string(i + 1) + ".", ms[i].ideal);
  }
}

void cmd_oracle(Session& s) {
  if (!is_commutative(s.a))
    throw Error(ErrorCode::NotCommutative, "algebra " + s.a.name() + " is not commutative");
  const auto ms = maximal_ideals(s.a, s.mx);
  const auto targets = targets_or_simples(s);
  oracle_global(s, "", ms);
  for (const auto& m : targets) {
    const std::string pre = targets.size() == 1 ? "" : m.name + ".";
    const std::string lemma =
        targets.size() == 1 ? "lemma_AM_iso_Am" : "lemma_AM_iso_Am[" + m.name + "]";
    oracle_section(s, pre, m, ms, lemma);
  }
}

void cmd_verify(Session& s) {
  s.r.set("name", s.a.name());
  s.r.set("dim", s.a.dim());
  simples_section(s, "simples.");
  const auto ss = simples(s.a, s.mx);
  for (const auto& m : ss) {
    const ModuleRep one[] = {m};
    schur_section(s, "schur[" + m.name + "].", m);
    localize_section(s, "localize[" + m.name + "].", one);
  }
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i; j < ss.size(); ++j) {
      const ModuleRep pair[] = {ss[i], ss[j]};
      const std::string tag = ss[i].name + "+" + ss[j].name;
      localize_section(s, "localize[" + tag + "].", pair);
      product_section(s, "product[" + tag + "].", pair);
    }
  completion_section(s, "complete[radical].");
  for (const auto& m : ss) {
    const ModuleRep one[] = {m};
    hausdorff_section(s, "hausdorff[" + m.name + "].", one);
  }
  if (is_commutative(s.a)) {
    const auto ms = maximal_ideals(s.a, s.mx);
    for (std::size_t i = 0; i < ms.size(); ++i)
      hausdorff_commutative_section(s, "hausdorff[m" + std::to_string(i + 1) + "].",
                                    ms[i].ideal);
    oracle_global(s, "oracle.", ms);
    for (const auto& m : ss)
      oracle_section(s, "oracle[" + m.name + "].", m, ms, "oracle[" + m.name + "].lemma_AM_iso_Am");
  } else {
    s.r.skip("oracle", "algebra is not commutative");
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate", "simples",   "endo",
                                                 "localize", "product",   "complete",
                                                 "hausdorff", "oracle-compare", "verify"};
  return names;
}

bool is_known_command(std::string_view name) {
  const auto& n = command_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run_command(const std::string& command, const std::vector<std::string>& paths,
                   const CommandOptions& opts) {
  Report r(command);
  if (!paths.empty()) r.input("algebra", paths.front());
  for (std::size_t i = 1; i < paths.size(); ++i) r.input("module" + std::to_string(i), paths[i]);
  r.input("seed", std::to_string(opts.seed));
  r.input("cap", std::to_string(opts.cap));

  try {
    if (!is_known_command(command))
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    if (paths.empty()) throw Error(ErrorCode::InvalidArgument, "missing algebra file");
    if (command == "verify" && paths.size() > 1)
      throw Error(ErrorCode::InvalidArgument, "verify takes only an algebra file");

    Session s{r, load_algebra(paths.front()), {}, opts, {}, {}};
    s.mx.seed = opts.seed;
    s.lo.meataxe = s.mx;
    s.lo.cap = opts.cap;
    for (std::size_t i = 1; i < paths.size(); ++i) s.modules.push_back(load_module(paths[i], s.a));

    if (command == "validate") cmd_validate(s);
    else if (command == "simples") simples_section(s, "");
    else if (command == "endo") cmd_endo(s);
    else if (command == "localize") cmd_localize(s);
    else if (command == "product") cmd_product(s);
    else if (command == "complete") completion_section(s, "");
    else if (command == "hausdorff") cmd_hausdorff(s);
    else if (command == "oracle-compare") cmd_oracle(s);
    else cmd_verify(s);
  } catch (const Error& e) {
    std::string msg = e.what();
    for (std::size_t i = 1; i < e.details().size(); ++i) msg += "; " + e.details()[i];
    r.set_error(msg);
  }
  return r;
}

}  // namespace assocloc
