#pragma once

// Cochains phi in Hom(S(W), W), the circle product, the graded bracket and
// the coboundary operators D_a = [a, .].

#include <map>
#include <string>
#include <vector>

#include "liext/gspace.hpp"
#include "liext/scalar.hpp"

namespace liext {

struct TermKey {
  Monomial in;
  std::uint32_t out;

  bool operator<(const TermKey& o) const {
    if (in != o.in) return in < o.in;
    return out < o.out;
  }
  bool operator==(const TermKey& o) const { return in == o.in && out == o.out; }
};

class Cochain {
 public:
  using TermMap = std::map<TermKey, Scalar>;

  Cochain(SpacePtr space, Parity parity);

  // c * psi^{word}_out; the word may be in any order, its Koszul sign is
  // folded into the coefficient. The parity is read off the term.
  static Cochain basis(SpacePtr space, const std::vector<std::uint32_t>& word, std::uint32_t out,
                       const Scalar& coeff = Scalar(1));

  const SpacePtr& space() const { return space_; }
  Parity parity() const { return parity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * psi^{word}_out. Throws InputError on a term of the wrong parity.
  void add(const std::vector<std::uint32_t>& word, std::uint32_t out, const Scalar& c);
  // Same, for an already normalized monomial.
  void add(const Monomial& in, std::uint32_t out, const Scalar& c);

  Scalar coeff(const Monomial& in, std::uint32_t out) const;
  // phi(in) as target index -> coefficient.
  std::map<std::uint32_t, Scalar> value(const Monomial& in) const;

  Cochain component(std::size_t degree) const;
  // Terms whose input has `m` factors from M, `w` from W and whose target
  // lies in `target`.
  Cochain component(std::size_t m, std::size_t w, Part target) const;

  Cochain& operator+=(const Cochain& rhs);
  Cochain& operator-=(const Cochain& rhs);
  Cochain& operator*=(const Scalar& rhs);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(Cochain a, const Scalar& s) { return a *= s; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  Cochain operator-() const;

  // Equality of term maps; parity is ignored when both sides are zero.
  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

  Cochain substitute(const Assignment& values) const;
  // True when every coefficient is a rational constant.
  bool is_numeric() const;
  // The parameter declaration carried by the coefficients (null when none).
  ParamsPtr params() const;

  // "a*psi^{1,3}_3 - psi^{2,3}_1"; 1-based indices, deterministic order.
  std::string str() const;

 private:
  void check_space(const Cochain& o) const;

  SpacePtr space_;
  Parity parity_;
  TermMap terms_;
};

std::string term_label(const Monomial& in, std::uint32_t out);

// (phi o psi)(w_1...w_n) = sum over (l, k-1) shuffles of eps * phi(psi(first) rest).
Cochain circle(const Cochain& phi, const Cochain& psi);
// [phi, psi] = phi o psi - (-1)^{|phi||psi|} psi o phi
Cochain bracket(const Cochain& phi, const Cochain& psi);
// D_alpha(phi) = [alpha, phi]; alpha must be odd. With check, [alpha, alpha]
// must vanish as well.
Cochain coboundary(const Cochain& alpha, const Cochain& phi, bool check = true);

struct CodifferentialReport {
  bool ok;
  Cochain obstruction;  // [d, d]
};
CodifferentialReport is_codifferential(const Cochain& d);

// Direct evaluation of the super Jacobi identity on every ordered triple of
// basis elements, without going through the bracket.
bool jacobi_check(const Cochain& d);

// Rows: targets; columns: degree-`degree` monomials in basis order.
using ScalarMatrix = std::vector<std::vector<Scalar>>;
ScalarMatrix as_matrix(const Cochain& d, const std::vector<std::uint32_t>& rows,
                       const std::vector<Monomial>& cols);
ScalarMatrix as_matrix(const Cochain& d, std::size_t degree = 2);
Cochain from_matrix(SpacePtr space, Parity parity, const ScalarMatrix& m,
                    const std::vector<std::uint32_t>& rows, const std::vector<Monomial>& cols);

}  // namespace liext
