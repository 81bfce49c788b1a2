#pragma once

// Exact coefficients: rationals and sparse multivariate polynomials over the
// rationals in a declared list of parameters.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liext {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Parameter name -> value.
using Assignment = std::map<std::string, Rational, std::less<>>;

class ParamSet {
 public:
  explicit ParamSet(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const ParamSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ParamsPtr = std::shared_ptr<const ParamSet>;

ParamsPtr make_params(std::vector<std::string> names);

// Sparse polynomial with rational coefficients. A polynomial without a
// parameter declaration is a pure rational and coerces into any declaration.
//
// Canonical form: no stored zero coefficient; every exponent vector has the
// arity of the declaration (empty when there is none).
class Polynomial {
 public:
  using Exponent = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponent, Rational>;

  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
  Polynomial(ParamsPtr params, TermMap terms);

  static Polynomial constant(ParamsPtr params, const Rational& value);
  static Polynomial variable(ParamsPtr params, std::string_view name);
  static Polynomial variable(ParamsPtr params, std::size_t index);

  const ParamsPtr& params() const { return params_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Throws NeedsInstantiation when a parameter still occurs.
  Rational constant_value() const;
  std::uint32_t total_degree() const;
  // Names of the parameters that actually occur.
  std::vector<std::string> occurring() const;

  // Full evaluation; every occurring parameter must be assigned.
  Rational eval(const Assignment& values) const;
  // Partial evaluation: assigned parameters are replaced, the rest stay.
  Polynomial substitute(const Assignment& values) const;
  // Re-express over a different declaration that contains every occurring
  // parameter.
  Polynomial rebase(const ParamsPtr& params) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator/=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator/(Polynomial lhs, const Rational& rhs) { return lhs /= rhs; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;

  // Equality of canonical forms; throws ConfigurationError on incompatible
  // declarations.
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

  std::string str() const;

 private:
  void normalize();
  void coerce_to(const ParamsPtr& params);

  ParamsPtr params_;
  TermMap terms_;
};

using Scalar = Polynomial;

// The common declaration of two operands (null when both are pure rationals).
ParamsPtr unify_params(const ParamsPtr& a, const ParamsPtr& b);

// Recursive-descent parser for "a*y - (1+b)*x", "3/4", "-2*c^2". Division is
// only allowed by nonzero rational constants. Identifiers must be declared in
// `params`.
Polynomial parse_scalar(std::string_view text, const ParamsPtr& params);

}  // namespace liext
