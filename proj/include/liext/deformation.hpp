#pragma once

// Classifiers: infinitesimal extensions, extension moduli for a fixed lambda,
// infinitesimal deformations d + t(eta + zeta) of an extension, and the two
// deformation scenarios of a representation (psi = 0).

#include <optional>
#include <string>
#include <vector>

#include "liext/cohomology.hpp"

namespace liext {

struct ClassSpace {
  std::string name;
  std::size_t dim = 0;
  std::vector<Cochain> representatives;
  bool counts_as_parameter = true;
};

struct ClassificationReport {
  std::string task;
  std::optional<bool> solvable;
  std::vector<ClassSpace> spaces;
  std::vector<std::pair<std::string, Cochain>> residuals;
  std::vector<std::pair<std::string, Cochain>> witnesses;
  std::vector<std::pair<std::string, Vec>> class_coords;
  std::vector<std::string> notes;

  // Sum of the dimensions of the spaces flagged as parameters.
  std::size_t parameter_count() const;
  const ClassSpace* space(const std::string& name) const;
};

ClassSpace to_class_space(const std::string& name, const CohomologySpace& h, bool counts = true);

// cond1 = [delta+lambda, eta] + [mu, zeta], cond2 = [delta+lambda, zeta] + [psi, eta],
// cond3 = [mu, eta], cond4 = [psi, zeta].
struct DeformationResiduals {
  Cochain cond1, cond2, cond3, cond4;
  bool ok() const { return cond1.is_zero() && cond2.is_zero() && cond3.is_zero() && cond4.is_zero(); }
};

// eta in Hom(MW, M), zeta in Hom(W^2, M); InputError otherwise.
DeformationResiduals check_infinitesimal_deformation(const ExtensionData& e, const Cochain& eta,
                                                     const Cochain& zeta);

enum class ZetaStage {
  Ok,
  NotMuCocycle,       // [mu, eta] != 0: eta-bar undefined
  NoBeta,             // [delta+lambda, eta] not in im D_mu: [eta-bar] undefined
  PsiImageNonzero,    // D_psi [eta-bar] != 0
};
const char* to_string(ZetaStage s);

struct ZetaResult {
  ZetaStage stage = ZetaStage::Ok;
  std::optional<Cochain> zeta;
  std::optional<Cochain> beta;   // [delta+lambda, eta] = [mu, beta]
  std::optional<Cochain> alpha;  // [psi, eta] - [delta+lambda, beta] = [delta+lambda, alpha]
  std::optional<Cochain> obstruction;
  Vec obstruction_class;  // coordinates in H_{mu,delta+lambda} on C^{0,3}
};

// zeta = -(beta + alpha) when the triple class of eta is defined; the result
// is re-verified against all four conditions.
ZetaResult construct_zeta(const ExtensionData& e, const Cochain& eta);

// {[eta-bar]} space on C^{1,1} and {[tau-bar]} space on C^{0,2}.
ClassificationReport classify_deformations(const ExtensionData& e, Exec exec = Exec::Parallel);

// Admissible lambda-bar in H_mu^{1,1} ([delta, lambda]-bar = 0 in H_mu(ker D_delta))
// and the [tau-bar] space H_{mu,delta}^{0,2}.
ClassificationReport classify_infinitesimal_extensions(const Cochain& delta, const Cochain& mu,
                                                       Exec exec = Exec::Parallel);

// MC obstruction for lambda-bar, a witness psi when solvable, and the
// [tau-bar] space H_{mu,delta+lambda}^{0,2}.
ClassificationReport classify_extension_moduli(const Cochain& delta, const Cochain& mu,
                                               const Cochain& lambda, Exec exec = Exec::Parallel);

// Vary delta and lambda (delta_1 in C^2, lambda_1 in C^{1,1}); psi must vanish.
ClassificationReport classify_rep_deformations_scenario1(const ExtensionData& e,
                                                         Exec exec = Exec::Parallel);
// Vary mu and lambda (mu_1 in C^{2,0}, lambda_1 in C^{1,1}); psi must vanish.
ClassificationReport classify_rep_deformations_scenario2(const ExtensionData& e,
                                                         Exec exec = Exec::Parallel);

// dim ker D_d on `slice` minus the dimension of D_d(prev) inside `slice`,
// for the total (not bihomogeneous) cochain d.
std::size_t total_cohomology_dim(const Cochain& d, const Slice& slice, const Slice& prev,
                                 Exec exec = Exec::Parallel);

// Cochains of d on C^2 + C^{1,1} (scenario 1) or C^{2,0} + C^{1,1} (scenario 2).
Slice scenario1_slice(const SpacePtr& space);
Slice scenario2_slice(const SpacePtr& space);
Slice scenario_prev_slice(const SpacePtr& space);

}  // namespace liext
