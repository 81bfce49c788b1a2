#include "liext/deformation.hpp"

#include <map>

#include "liext/error.hpp"

namespace liext {

std::size_t ClassificationReport::parameter_count() const {
  std::size_t n = 0;
  for (const auto& s : spaces)
    if (s.counts_as_parameter) n += s.dim;
  return n;
}

const ClassSpace* ClassificationReport::space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s.name == name) return &s;
  return nullptr;
}

ClassSpace to_class_space(const std::string& name, const CohomologySpace& h, bool counts) {
  return {name, h.dim(), h.representatives(), counts};
}

const char* to_string(ZetaStage s) {
  switch (s) {
    case ZetaStage::Ok: return "ok";
    case ZetaStage::NotMuCocycle: return "eta-bar undefined: [mu, eta] != 0";
    case ZetaStage::NoBeta: return "[eta-bar] undefined: [delta+lambda, eta] is not a D_mu-coboundary";
    case ZetaStage::PsiImageNonzero: return "D_psi [eta-bar] != 0";
  }
  return "?";
}

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

Matrix stacked(const std::vector<Matrix>& blocks) {
  Matrix m = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) m = m.vstack(blocks[i]);
  return m;
}

Vec concat(const std::vector<Vec>& parts) {
  Vec v;
  for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
  return v;
}

// Kernel of the total cochain d on the slice; images are collected on the
// fly since d is not bihomogeneous.
std::vector<Vec> total_kernel(const Cochain& d, const Slice& slice, Exec exec) {
  auto imgs = apply_columns(d, slice, exec);
  std::map<TermKey, std::size_t> rows;
  for (const auto& img : imgs)
    for (const auto& [k, c] : img.terms()) rows.emplace(k, rows.size());
  Matrix m(rows.size(), slice.dim());
  for (std::size_t j = 0; j < imgs.size(); ++j)
    for (const auto& [k, c] : imgs[j].terms()) m(rows.at(k), j) = c.constant_value();
  return nullspace(m);
}

std::vector<Vec> coords_in(const Slice& target, const std::vector<Cochain>& cs) {
  std::vector<Vec> out;
  for (const auto& c : cs) out.push_back(target.coords(c));
  return out;
}

void check_structure(const Cochain& delta, const Cochain& mu) {
  require(delta.space()->has_split(), "the space needs an M/W split");
  require(supported_on(delta, 0, 2, Part::W) && delta.parity() == Parity::Odd,
          "delta must be an odd element of Hom(W^2, W)");
  require(supported_on(mu, 2, 0, Part::M) && mu.parity() == Parity::Odd,
          "mu must be an odd element of Hom(M^2, M)");
  if (!delta.is_numeric() || !mu.is_numeric()) throw NeedsInstantiation("instantiate parameters first");
  require(is_codifferential(delta).ok, "delta is not a codifferential");
  require(is_codifferential(mu).ok, "mu is not a codifferential");
}

void check_numeric(const ExtensionData& e) {
  if (!e.is_numeric()) throw NeedsInstantiation("instantiate parameters first");
}

// psi in C^{0,2} with [mu, psi] = rhs and [outer, psi] = 0
std::optional<Cochain> solve_psi(const Operator& mu, const Operator& outer, const Cochain& rhs,
                                 const SpacePtr& s, Exec exec) {
  Slice c02 = Slice::hom(s, 0, 2);
  auto a_mu = slice_matrix(mu, c02, exec);
  auto a_out = slice_matrix(outer, c02, exec);
  auto x = solve(stacked({a_mu.matrix, a_out.matrix}),
                 concat({a_mu.codomain.coords(rhs), Vec(a_out.codomain.dim())}));
  if (!x) return std::nullopt;
  return c02.cochain(*x);
}

}  // namespace

DeformationResiduals check_infinitesimal_deformation(const ExtensionData& e, const Cochain& eta,
                                                     const Cochain& zeta) {
  require(supported_on(eta, 1, 1, Part::M), "eta must lie in Hom(MW, M)");
  require(supported_on(zeta, 0, 2, Part::M), "zeta must lie in Hom(W^2, M)");
  require(eta.parity() == Parity::Odd && zeta.parity() == Parity::Odd, "eta and zeta must be odd");
  const Cochain dl = e.delta + e.lambda;
  return {bracket(dl, eta) + bracket(e.mu, zeta), bracket(dl, zeta) + bracket(e.psi, eta),
          bracket(e.mu, eta), bracket(e.psi, zeta)};
}

ZetaResult construct_zeta(const ExtensionData& e, const Cochain& eta) {
  require(supported_on(eta, 1, 1, Part::M) && eta.parity() == Parity::Odd,
          "eta must be an odd element of Hom(MW, M)");
  check_numeric(e);
  if (!eta.is_numeric()) throw NeedsInstantiation("instantiate parameters first");
  const SpacePtr& s = e.space;
  ZetaResult r;
  const Cochain mu_eta = bracket(e.mu, eta);
  if (!mu_eta.is_zero()) {
    r.stage = ZetaStage::NotMuCocycle;
    r.obstruction = mu_eta;
    return r;
  }
  const Operator mu = mu_operator(e), dl = dl_operator(e);
  Slice c02 = Slice::hom(s, 0, 2);
  const Cochain x = bracket(dl.op, eta);
  auto a_mu = slice_matrix(mu, c02);
  auto b = solve(a_mu.matrix, a_mu.codomain.coords(x));
  if (!b) {
    r.stage = ZetaStage::NoBeta;
    r.obstruction = x;
    return r;
  }
  r.beta = c02.cochain(*b);
  const Cochain y = bracket(e.psi, eta) - bracket(dl.op, *r.beta);
  auto a_dl = slice_matrix(dl, c02);
  auto a = solve(stacked({a_dl.matrix, a_mu.matrix}),
                 concat({a_dl.codomain.coords(y), Vec(a_mu.codomain.dim())}));
  if (!a) {
    r.stage = ZetaStage::PsiImageNonzero;
    r.obstruction = y;
    auto h = double_cohomology(e, a_dl.codomain);
    r.obstruction_class = h.project(y).value_or(Vec{});
    return r;
  }
  r.alpha = c02.cochain(*a);
  r.zeta = -(*r.beta + *r.alpha);
  if (!check_infinitesimal_deformation(e, eta, *r.zeta).ok())
    throw IntegrityError("constructed zeta does not satisfy the deformation conditions");
  return r;
}

ClassificationReport classify_deformations(const ExtensionData& e, Exec exec) {
  check_numeric(e);
  require(verify_extension(e).ok, "not an extension");
  const SpacePtr& s = e.space;
  ClassificationReport rep;
  rep.task = "infinitesimal deformations d + t(eta + zeta)";
  auto h_eta = triple_cohomology(e, Slice::hom(s, 1, 1), exec);
  auto h_tau = triple_cohomology(e, Slice::hom(s, 0, 2), exec);
  rep.spaces.push_back(to_class_space("eta", h_eta));
  rep.spaces.push_back(to_class_space("tau", h_tau));
  rep.solvable = true;
  for (std::size_t j = 0; j < h_eta.dim(); ++j) {
    auto z = construct_zeta(e, h_eta.representatives()[j]);
    if (z.stage != ZetaStage::Ok) throw IntegrityError("triple class without a zeta");
    rep.witnesses.emplace_back("zeta[" + std::to_string(j + 1) + "]", *z.zeta);
  }
  return rep;
}

ClassificationReport classify_infinitesimal_extensions(const Cochain& delta, const Cochain& mu,
                                                       Exec exec) {
  check_structure(delta, mu);
  const SpacePtr& s = delta.space();
  const Operator op_mu{mu, kMuShift}, op_delta{delta, kDeltaShift};
  ClassificationReport rep;
  rep.task = "infinitesimal extensions";
  auto h_mu = cohomology_of(op_mu, Slice::hom(s, 1, 1), exec);
  auto restricted = restricted_cohomology(op_mu, op_delta, Slice::hom(s, 1, 2), exec);

  // lambda-bar -> class of [delta, lambda] in H_mu(ker D_delta)
  Matrix cond(restricted.dim(), h_mu.dim());
  for (std::size_t j = 0; j < h_mu.dim(); ++j) {
    auto c = restricted.project(bracket(delta, h_mu.representatives()[j]));
    if (!c) throw IntegrityError("[delta, lambda] is not a cocycle of the restricted complex");
    for (std::size_t i = 0; i < c->size(); ++i) cond(i, j) = (*c)[i];
  }
  for (std::size_t i = 0; i < cond.rows(); ++i) {
    Vec row(cond.cols());
    for (std::size_t j = 0; j < cond.cols(); ++j) row[j] = cond(i, j);
    rep.class_coords.emplace_back("condition[" + std::to_string(i + 1) + "]", row);
  }
  ClassSpace adm{"lambda", 0, {}, true};
  for (const auto& x : nullspace(cond)) adm.representatives.push_back(h_mu.lift(x));
  adm.dim = adm.representatives.size();
  for (std::size_t j = 0; j < adm.dim; ++j) {
    auto psi = solve_psi(op_mu, op_delta, -bracket(delta, adm.representatives[j]), s, exec);
    if (!psi) throw IntegrityError("admissible lambda without psi");
    rep.witnesses.emplace_back("psi[" + std::to_string(j + 1) + "]", *psi);
  }
  rep.spaces.push_back(to_class_space("H_mu^{1,1}", h_mu, false));
  rep.spaces.push_back(std::move(adm));
  rep.spaces.push_back(to_class_space("tau", double_cohomology(op_mu, op_delta, Slice::hom(s, 0, 2), exec)));
  rep.solvable = true;
  return rep;
}

ClassificationReport classify_extension_moduli(const Cochain& delta, const Cochain& mu,
                                               const Cochain& lambda, Exec exec) {
  check_structure(delta, mu);
  require(supported_on(lambda, 1, 1, Part::M) && lambda.parity() == Parity::Odd,
          "lambda must be an odd element of Hom(MW, M)");
  if (!lambda.is_numeric()) throw NeedsInstantiation("instantiate parameters first");
  require(bracket(mu, lambda).is_zero(), "[mu, lambda] != 0");
  const SpacePtr& s = delta.space();
  const Operator op_mu{mu, kMuShift}, op_dl{delta + lambda, kDeltaShift};
  ClassificationReport rep;
  rep.task = "extension moduli for fixed lambda";

  auto h_mu = cohomology_of(op_mu, Slice::hom(s, 1, 1), exec);
  rep.spaces.push_back(to_class_space("H_mu^{1,1}", h_mu, false));
  rep.class_coords.emplace_back("lambda-bar", h_mu.project(lambda).value());

  const Cochain x = bracket(op_dl.op, op_dl.op);
  rep.residuals.emplace_back("[delta+lambda,delta+lambda]", x);
  auto restricted = restricted_cohomology(op_mu, op_dl, Slice::hom(s, 1, 2), exec);
  auto cls = restricted.project(x);
  if (!cls) throw IntegrityError("[delta+lambda, delta+lambda] is not a restricted cocycle");
  rep.class_coords.emplace_back("mc-class", *cls);
  rep.solvable = is_zero(*cls);
  if (!*rep.solvable) return rep;

  auto psi1 = solve_psi(op_mu, op_dl, x, s, exec);
  if (!psi1) throw IntegrityError("MC class vanishes but no psi was found");
  Cochain psi = *psi1 * Scalar(Rational(-1, 2));
  ExtensionData e(delta, mu, lambda, psi);
  if (!verify_extension(e).ok) throw IntegrityError("witness psi does not give an extension");
  rep.witnesses.emplace_back("psi", psi);
  rep.spaces.push_back(to_class_space("tau", double_cohomology(e, Slice::hom(s, 0, 2), exec)));
  return rep;
}

Slice scenario1_slice(const SpacePtr& space) {
  return Slice::weight(space, {0, 1}, Parity::Odd, true);
}

Slice scenario2_slice(const SpacePtr& space) {
  return Slice(space, {Block{2, 0, Part::M}, Block{1, 1, Part::M}}, Parity::Odd);
}

Slice scenario_prev_slice(const SpacePtr& space) {
  return Slice::weight(space, {0, 0}, Parity::Even, true);
}

std::size_t total_cohomology_dim(const Cochain& d, const Slice& slice, const Slice& prev, Exec exec) {
  auto z = total_kernel(d, slice, exec);
  auto b = combinations_in(apply_columns(d, prev, exec), slice);
  return Quotient(z, b, slice.dim()).dim();
}

namespace {

// Projects the kernel of the total d on `slice` to the block `target`, then
// divides by `bounds` (cochains in that block).
CohomologySpace projected_classes(const std::string& name, const ExtensionData& e, const Slice& slice,
                                  const Slice& target, const std::vector<Cochain>& bounds, Exec exec) {
  std::vector<Vec> z;
  for (const auto& k : total_kernel(e.assembled(), slice, exec)) {
    Cochain outside(e.space, slice.parity());
    z.push_back(target.coords(slice.cochain(k), outside));
  }
  return CohomologySpace(name + " on " + target.str(), target, z, coords_in(target, bounds));
}

void check_representation(const ExtensionData& e) {
  check_numeric(e);
  require(e.psi.is_zero(), "psi must vanish (lambda must be a module structure)");
  require(verify_extension(e).ok, "not an extension");
}

}  // namespace

ClassificationReport classify_rep_deformations_scenario1(const ExtensionData& e, Exec exec) {
  check_representation(e);
  const SpacePtr& s = e.space;
  ClassificationReport rep;
  rep.task = "deformations of delta and lambda";
  Slice x = scenario1_slice(s);
  auto bounds = apply_columns(e.delta, Slice::hom_w(s, 1), exec);
  auto delta1 = projected_classes("delta1", e, x, Slice::hom_w(s, 2), bounds, exec);
  auto tau = double_cohomology(e, Slice::hom(s, 1, 1, std::nullopt, true), exec);
  rep.spaces.push_back(to_class_space("delta1", delta1));
  rep.spaces.push_back(to_class_space("tau", tau));
  rep.spaces.push_back(
      {"total", total_cohomology_dim(e.assembled(), x, scenario_prev_slice(s), exec), {}, false});
  rep.solvable = true;
  return rep;
}

ClassificationReport classify_rep_deformations_scenario2(const ExtensionData& e, Exec exec) {
  check_representation(e);
  const SpacePtr& s = e.space;
  ClassificationReport rep;
  rep.task = "deformations of mu and lambda";
  Slice x = scenario2_slice(s);
  auto bounds = apply_columns(e.mu, Slice::hom(s, 1, 0), exec);
  auto mu1 = projected_classes("mu1", e, x, Slice::hom(s, 2, 0), bounds, exec);
  auto tau = double_cohomology(e, Slice::hom(s, 1, 1, std::nullopt, true), exec);
  rep.spaces.push_back(to_class_space("mu1", mu1));
  rep.spaces.push_back(to_class_space("tau", tau));
  rep.spaces.push_back(
      {"total", total_cohomology_dim(e.assembled(), x, scenario_prev_slice(s), exec), {}, false});
  rep.solvable = true;
  return rep;
}

}  // namespace liext
