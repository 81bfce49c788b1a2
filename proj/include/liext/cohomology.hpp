#pragma once

// Cohomology of coboundary operators on bidegree slices: H_a, the restricted
// complex H_mu(ker D_{delta+lambda}), the double cohomology H_{mu,delta+lambda}
// and the triple cohomology H_{mu,delta+lambda,psi}. Everything is exact
// linear algebra over Q; parameters must be instantiated first.

#include <optional>
#include <string>
#include <vector>

#include "liext/extension.hpp"
#include "liext/kernels.hpp"

namespace liext {

// A coboundary operator D_op together with the bidegree shift it induces.
struct Operator {
  Cochain op;
  Weight shift;
};

Operator mu_operator(const ExtensionData& e);
Operator delta_operator(const ExtensionData& e);   // delta alone
Operator dl_operator(const ExtensionData& e);      // delta + lambda
Operator lambda_operator(const ExtensionData& e);
Operator psi_operator(const ExtensionData& e);

struct SliceMap {
  Slice domain;
  Slice codomain;
  Matrix matrix;
};

// Codomain: the full slice of weight weight(domain) + shift, opposite parity.
SliceMap slice_matrix(const Operator& d, const Slice& domain, Exec exec = Exec::Parallel);

class CohomologySpace {
 public:
  CohomologySpace(std::string description, Slice slice, const std::vector<Vec>& cocycles,
                  const std::vector<Vec>& coboundaries);

  const std::string& description() const { return description_; }
  const Slice& slice() const { return slice_; }
  std::size_t dim() const { return quotient_.dim(); }
  const Quotient& quotient() const { return quotient_; }

  const std::vector<Cochain>& cocycle_basis() const { return cocycles_; }
  const std::vector<Cochain>& coboundary_basis() const { return coboundaries_; }
  const std::vector<Cochain>& representatives() const { return reps_; }

  bool is_cocycle(const Cochain& c) const;
  bool is_coboundary(const Cochain& c) const;
  // Class coordinates against representatives(); nullopt for non-cocycles.
  std::optional<Vec> project(const Cochain& c) const;
  Cochain lift(const Vec& class_coords) const;

 private:
  std::string description_;
  Slice slice_;
  Quotient quotient_;
  std::vector<Cochain> cocycles_, coboundaries_, reps_;
};

// Spans of the given cochains' combinations that lie inside the slice.
std::vector<Vec> combinations_in(const std::vector<Cochain>& gens, const Slice& slice);
// Kernel of D on the slice, as slice coordinates.
std::vector<Vec> kernel_of(const Operator& d, const Slice& slice, Exec exec = Exec::Parallel);

// ker D / D(previous slice). Requires [op, op] = 0.
CohomologySpace cohomology_of(const Operator& d, const Slice& slice, Exec exec = Exec::Parallel);

// D_inner restricted to ker D_outer.
CohomologySpace restricted_cohomology(const Operator& inner, const Operator& outer,
                                      const Slice& slice, Exec exec = Exec::Parallel);

// Cohomology of the operator induced by `second` on H_first: cocycles are
// phi with D_first phi = 0 and D_second phi in im D_first; coboundaries are
// D_second(a) + D_first(c) with D_first a = 0. IntegrityError when the
// coboundaries are not cocycles (the induced operator does not square to
// zero).
CohomologySpace double_cohomology(const Operator& first, const Operator& second,
                                  const Slice& slice, Exec exec = Exec::Parallel);
CohomologySpace double_cohomology(const ExtensionData& e, const Slice& slice,
                                  Exec exec = Exec::Parallel);

// Operator induced by d between two cohomology spaces, in class coordinates.
Matrix induced_matrix(const Operator& d, const CohomologySpace& from, const CohomologySpace& to,
                      Exec exec = Exec::Parallel);

struct TripleImage {
  Cochain beta;   // a solution of [second, phi] = [first, beta]
  Cochain value;  // [third, phi] - [second, beta]
  Vec coords;     // class of value in the target space
};

// D_third on a class of H_{first,second}. Throws InputError when phi is not
// a representative (no beta exists), IntegrityError when the value is not a
// cocycle of `to`.
TripleImage triple_differential(const Operator& first, const Operator& second, const Operator& third,
                                const Cochain& phi, const CohomologySpace& to,
                                const std::optional<Cochain>& beta = std::nullopt);
TripleImage triple_differential_psi(const ExtensionData& e, const Cochain& phi,
                                    const CohomologySpace& to,
                                    const std::optional<Cochain>& beta = std::nullopt);

// Matrix of D_third from `from` to `to` on class coordinates.
Matrix triple_matrix(const Operator& first, const Operator& second, const Operator& third,
                     const CohomologySpace& from, const CohomologySpace& to);

// Slices adjacent to `slice` along a shift, with the opposite parity and the
// same k >= 1 restriction.
Slice next_slice(const Slice& slice, Weight shift);
Slice prev_slice(const Slice& slice, Weight shift);

CohomologySpace triple_cohomology(const Operator& first, const Operator& second,
                                  const Operator& third, const Slice& slice,
                                  Exec exec = Exec::Parallel);
// H_{mu, delta+lambda, psi}
CohomologySpace triple_cohomology(const ExtensionData& e, const Slice& slice,
                                  Exec exec = Exec::Parallel);

// D_a D_b + D_b D_a on the slice, as a matrix into the slice shifted by both.
Matrix anticommutator(const Operator& a, const Operator& b, const Slice& slice,
                      Exec exec = Exec::Parallel);
// D_a D_b on the slice.
Matrix composite(const Operator& a, const Operator& b, const Slice& slice,
                 Exec exec = Exec::Parallel);

}  // namespace liext
