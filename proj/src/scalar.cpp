#include "liext/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "liext/error.hpp"

namespace liext {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ParamSet::ParamSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConfigurationError("duplicate parameter name in declaration");
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; }))
      throw ConfigurationError("invalid parameter name '" + n + "'");
  }
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ParamsPtr make_params(std::vector<std::string> names) {
  return std::make_shared<const ParamSet>(std::move(names));
}

ParamsPtr unify_params(const ParamsPtr& a, const ParamsPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw ConfigurationError("scalars declared over different parameter lists");
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace(Exponent{}, Rational(value));
}

Polynomial::Polynomial(const Rational& value) {
  if (value != 0) terms_.emplace(Exponent{}, value);
}

Polynomial::Polynomial(ParamsPtr params, TermMap terms)
    : params_(std::move(params)), terms_(std::move(terms)) {
  const std::size_t arity = params_ ? params_->size() : 0;
  for (const auto& [e, c] : terms_)
    if (e.size() != arity) throw ConfigurationError("exponent arity does not match declaration");
  normalize();
}

Polynomial Polynomial::constant(ParamsPtr params, const Rational& value) {
  Polynomial p(value);
  p.coerce_to(params);
  return p;
}

Polynomial Polynomial::variable(ParamsPtr params, std::string_view name) {
  if (!params) throw ConfigurationError("no parameters declared");
  auto idx = params->index_of(name);
  if (!idx) throw ConfigurationError("undeclared parameter '" + std::string(name) + "'");
  return variable(std::move(params), *idx);
}

Polynomial Polynomial::variable(ParamsPtr params, std::size_t index) {
  if (!params || index >= params->size()) throw ConfigurationError("parameter index out of range");
  Exponent e(params->size(), 0);
  e[index] = 1;
  TermMap t;
  t.emplace(std::move(e), Rational(1));
  return Polynomial(std::move(params), std::move(t));
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

void Polynomial::coerce_to(const ParamsPtr& params) {
  if (params_ == params) return;
  if (params_ && params && *params_ == *params) {
    params_ = params;
    return;
  }
  if (params_) throw ConfigurationError("cannot coerce a parametric scalar to another declaration");
  // Pure rational: pad the constant exponent.
  params_ = params;
  if (!params_) return;
  TermMap padded;
  for (auto& [e, c] : terms_) padded.emplace(Exponent(params_->size(), 0), c);
  terms_ = std::move(padded);
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational Polynomial::constant_value() const {
  if (!is_constant())
    throw NeedsInstantiation("coefficient '" + str() + "' still depends on parameters");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_)
    best = std::max(best, std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
  return best;
}

std::vector<std::string> Polynomial::occurring() const {
  std::vector<std::string> out;
  if (!params_) return out;
  for (std::size_t i = 0; i < params_->size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] != 0) {
        out.push_back(params_->names()[i]);
        break;
      }
    }
  }
  return out;
}

namespace {

Rational qpow(const Rational& base, std::uint32_t exp) {
  Rational r(1);
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Rational Polynomial::eval(const Assignment& values) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const auto& name = params_->names()[i];
      auto it = values.find(name);
      if (it == values.end()) throw EvaluationError("no value given for parameter '" + name + "'");
      Rational v = it->second;
      v.canonicalize();
      term *= qpow(v, e[i]);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(const Assignment& values) const {
  if (!params_) return *this;
  std::vector<std::optional<Rational>> fixed(params_->size());
  for (std::size_t i = 0; i < params_->size(); ++i) {
    auto it = values.find(params_->names()[i]);
    if (it != values.end()) {
      fixed[i] = it->second;
      fixed[i]->canonicalize();
    }
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent reduced = e;
    Rational coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (fixed[i] && e[i] != 0) {
        coeff *= qpow(*fixed[i], e[i]);
        reduced[i] = 0;
      }
    }
    out[reduced] += coeff;
  }
  return Polynomial(params_, std::move(out));
}

Polynomial Polynomial::rebase(const ParamsPtr& params) const {
  if (params_ == params) return *this;
  if (!params_) return constant(params, constant_value());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponent moved(params ? params->size() : 0, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto idx = params ? params->index_of(params_->names()[i]) : std::nullopt;
      if (!idx)
        throw ConfigurationError("parameter '" + params_->names()[i] +
                                 "' missing from target declaration");
      moved[*idx] = e[i];
    }
    out[moved] += c;
  }
  return Polynomial(params, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  auto common = unify_params(params_, rhs.params_);
  coerce_to(common);
  if (rhs.params_ == common) {
    for (const auto& [e, c] : rhs.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
  } else {
    Polynomial r = rhs;
    r.coerce_to(common);
    *this += r;
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  auto common = unify_params(lhs.params_, rhs.params_);
  Polynomial a = lhs, b = rhs;
  a.coerce_to(common);
  b.coerce_to(common);
  Polynomial out;
  out.params_ = common;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.normalize();
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& rhs) {
  if (rhs == 0) throw EvaluationError("division by zero");
  for (auto& [e, c] : terms_) c /= rhs;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = Polynomial::constant(params_, 1);
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  auto common = unify_params(lhs.params_, rhs.params_);
  if (lhs.params_ == rhs.params_ || (lhs.params_ && rhs.params_)) return lhs.terms_ == rhs.terms_;
  Polynomial a = lhs, b = rhs;
  a.coerce_to(common);
  b.coerce_to(common);
  return a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, then reverse lexicographic on exponents.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::stable_sort(order.begin(), order.end(), [&](auto* x, auto* y) {
    auto dx = degree(x->first), dy = degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    const bool monic = degree(e) > 0;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!monic || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << params_->names()[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const ParamsPtr& params) : text_(text), params_(params) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Polynomial d = unary();
        if (!d.is_constant()) throw ParseError("division by a non-constant expression", at);
        Rational q = d.constant_value();
        if (q == 0) throw ParseError("division by zero", at);
        acc /= q;
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected a non-negative integer exponent", pos_);
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(params_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!params_ || !params_->index_of(name))
        throw ParseError("undeclared parameter '" + name + "'", start);
      return Polynomial::variable(params_, name);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const ParamsPtr& params_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_scalar(std::string_view text, const ParamsPtr& params) {
  return ScalarParser(text, params).parse();
}

}  // namespace liext
