#pragma once

// Split codifferentials d = delta + mu + lambda + psi on V = M (+) W, the
// extension conditions, restricted equivalences exp(beta) and pullbacks along
// automorphisms of V.

#include <string>
#include <vector>

#include "liext/cochain.hpp"

namespace liext {

// Is every term of c in Hom(M^m W^w, target)?
bool supported_on(const Cochain& c, std::size_t m, std::size_t w, Part target);

struct ExtensionData {
  SpacePtr space;
  Cochain delta;   // Hom(W^2, W)
  Cochain mu;      // Hom(M^2, M)
  Cochain lambda;  // Hom(MW, M)
  Cochain psi;     // Hom(W^2, M)

  // Validates bidegrees and parities.
  ExtensionData(Cochain delta, Cochain mu, Cochain lambda, Cochain psi);

  Cochain assembled() const;
  ExtensionData substitute(const Assignment& values) const;
  bool is_numeric() const;
  bool operator==(const ExtensionData& o) const;
};

// Splits a quadratic odd cochain along the M/W decomposition of its space.
// Throws NotAnIdeal when d sends MW or M^2 into W.
ExtensionData split(const Cochain& d);

struct ExtensionReport {
  Cochain cond_module;   // [delta, lambda] + 1/2 [lambda, lambda] + [mu, psi]
  Cochain cond_compat;   // [mu, lambda]
  Cochain cond_cocycle;  // [delta + lambda, psi]
  bool ok;
};

// Throws InputError when delta or mu is not a codifferential.
ExtensionReport verify_extension(const ExtensionData& e);

// Checks that beta is a (parity preserving) map W -> M.
void check_beta(const Cochain& beta);

// lambda' = lambda - [mu, beta], psi' = psi - [delta + lambda - 1/2 [mu, beta], beta]
ExtensionData apply_beta(const ExtensionData& e, const Cochain& beta);

// Linear endomorphism of V; column j is the image of v_j.
using LinearMap = ScalarMatrix;

LinearMap identity_map(std::size_t n);
// The matrix of a degree-1 cochain viewed as an endomorphism.
LinearMap to_linear_map(const Cochain& phi);
LinearMap compose(const LinearMap& f, const LinearMap& g);  // f o g
Scalar determinant(const LinearMap& f);
LinearMap adjugate(const LinearMap& f);

// S^k(f) applied to a monomial.
std::map<Monomial, Scalar> apply_sym(const LinearMap& f, const Monomial& m, const GradedSpace& space);

struct ScaledCochain {
  Cochain numerator;
  Scalar denominator;
};

// det(f) * f^{-1} o d o S(f), computed with the adjugate; valid for
// parametric f.
ScaledCochain conjugate_scaled(const Cochain& d, const LinearMap& f);
// f^{-1} o d o S(f). The determinant must be a nonzero rational.
Cochain conjugate(const Cochain& d, const LinearMap& f);

struct DiagonalAutomorphism {
  LinearMap m_block;  // over the M basis, in index order
  LinearMap w_block;  // over the W basis, in index order

  LinearMap full(const GradedSpace& space) const;
};

ExtensionData pullback_diag(const ExtensionData& e, const DiagonalAutomorphism& g);

struct ScaledExtension {
  ExtensionData numerator;
  Scalar denominator;
};
ScaledExtension pullback_diag_scaled(const ExtensionData& e, const DiagonalAutomorphism& g);

// Pullback along g o (1 + beta), i.e. lambda' = g*(lambda) + [mu', beta] and
// the matching psi'.
ExtensionData pullback_general(const ExtensionData& e, const DiagonalAutomorphism& g,
                               const Cochain& beta);

// psi == [delta + lambda - 1/2 [mu, beta], beta]
bool semidirect_witness_check(const ExtensionData& e, const Cochain& beta);

}  // namespace liext
