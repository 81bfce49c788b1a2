#include "problem.hpp"

#include <fstream>
#include <sstream>

#include "liext/error.hpp"

namespace liext::cli {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw InputError(where + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string scalar_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where, "expected a scalar string or an integer");
}

Scalar parse_coeff(const json& j, const ParamsPtr& params, const std::string& where) {
  try {
    return parse_scalar(scalar_text(j, where), params);
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

std::uint32_t parse_index(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an index");
  auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n)
    fail(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::uint32_t>(v - 1);
}

std::vector<std::string> names(const json& j, const std::string& where) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) fail(where, "expected an array of names");
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(where + "/" + std::to_string(i), "expected a name");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

SpacePtr parse_space(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::vector<BasisElement> basis;
  for (const auto& n : names(j.value("even", json()), where + "/even")) basis.push_back({n, Parity::Even});
  for (const auto& n : names(j.value("odd", json()), where + "/odd")) basis.push_back({n, Parity::Odd});
  if (basis.empty()) fail(where, "the space has no basis elements");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (basis[i].name == basis[k].name) fail(where, "duplicate basis name '" + basis[i].name + "'");
  std::optional<std::vector<Part>> parts;
  if (j.contains("module")) {
    const auto& m = j.at("module");
    if (!m.is_array()) fail(where + "/module", "expected an array of indices");
    parts = std::vector<Part>(basis.size(), Part::W);
    for (std::size_t i = 0; i < m.size(); ++i)
      (*parts)[parse_index(m[i], basis.size(), where + "/module/" + std::to_string(i))] = Part::M;
  }
  return make_space(std::move(basis), std::move(parts));
}

Assignment parse_values(const json& j, const ParamsPtr& params, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of parameter values");
  Assignment a;
  for (const auto& [k, v] : j.items()) {
    if (!params || !params->index_of(k)) fail(where + "/" + k, "undeclared parameter '" + k + "'");
    try {
      a[k] = parse_rational(scalar_text(v, where + "/" + k));
    } catch (const InputError& e) {
      fail(where + "/" + k, e.what());
    }
  }
  return a;
}

}  // namespace

Cochain parse_cochain(const json& j, const SpacePtr& space, const ParamsPtr& params,
                      const std::string& where) {
  const json* terms = &j;
  std::optional<Parity> parity;
  std::string tw = where;
  if (j.is_object()) {
    terms = &field(j, "terms", where);
    tw = where + "/terms";
    if (j.contains("parity")) {
      const auto p = j.at("parity");
      if (p == "even")
        parity = Parity::Even;
      else if (p == "odd")
        parity = Parity::Odd;
      else
        fail(where + "/parity", "expected \"even\" or \"odd\"");
    }
  }
  if (!terms->is_array()) fail(tw, "expected an array of terms");
  const std::size_t n = space->size();
  auto term_parity = [&](const std::vector<std::uint32_t>& in, std::uint32_t out) {
    Parity q = space->parity(out);
    for (auto i : in) q = q + space->parity(i);
    return q;
  };
  std::vector<std::tuple<std::vector<std::uint32_t>, std::uint32_t, Scalar>> parsed;
  for (std::size_t t = 0; t < terms->size(); ++t) {
    const std::string at = tw + "/" + std::to_string(t);
    const auto& term = (*terms)[t];
    const auto& in = field(term, "in", at);
    if (!in.is_array() || in.empty()) fail(at + "/in", "expected a nonempty array of indices");
    std::vector<std::uint32_t> word;
    for (std::size_t i = 0; i < in.size(); ++i)
      word.push_back(parse_index(in[i], n, at + "/in/" + std::to_string(i)));
    auto out = parse_index(field(term, "out", at), n, at + "/out");
    Scalar c = term.contains("coeff") ? parse_coeff(term.at("coeff"), params, at + "/coeff") : Scalar(1);
    const Parity q = term_parity(word, out);
    if (!parity) parity = q;
    if (q != *parity)
      fail(at, std::string("term of parity ") + to_string(q) + " in a cochain of parity " +
                   to_string(*parity));
    parsed.emplace_back(std::move(word), out, std::move(c));
  }
  Cochain c(space, parity.value_or(Parity::Odd));
  for (auto& [word, out, coeff] : parsed) c.add(word, out, coeff);
  return c;
}

ScalarMatrix parse_matrix(const json& j, const ParamsPtr& params, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  ScalarMatrix m;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = where + "/" + std::to_string(r);
    if (!j[r].is_array() || (r > 0 && j[r].size() != j[0].size())) fail(at, "rows must have equal length");
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(parse_coeff(j[r][c], params, at + "/" + std::to_string(c)));
    m.push_back(std::move(row));
  }
  if (!m.empty() && m.size() != m[0].size()) fail(where, "expected a square matrix");
  return m;
}

Problem parse_problem(const json& j, const std::string& origin) {
  if (!j.is_object()) fail(origin, "expected a JSON object");
  Problem p;
  p.name = j.value("name", origin);
  p.space = parse_space(field(j, "space", origin), origin + ": /space");
  auto declared = names(j.value("params", json::array()), origin + ": /params");
  try {
    p.params = make_params(declared);
  } catch (const ConfigurationError& e) {
    fail(origin + ": /params", e.what());
  }
  const auto& cs = field(j, "cochains", origin);
  if (!cs.is_object()) fail(origin + ": /cochains", "expected an object");
  for (const auto& [name, terms] : cs.items()) {
    if (name.empty() || name.find_first_of("+- ") != std::string::npos)
      fail(origin + ": /cochains", "invalid cochain name '" + name + "'");
    p.cochains.emplace(name, parse_cochain(terms, p.space, p.params, origin + ": /cochains/" + name));
  }
  if (j.contains("task")) {
    p.task = j.at("task");
    if (!p.task.is_object()) fail(origin + ": /task", "expected an object");
  }
  if (j.contains("instantiate")) {
    const auto& pts = j.at("instantiate");
    if (!pts.is_array()) fail(origin + ": /instantiate", "expected an array of assignments");
    for (std::size_t i = 0; i < pts.size(); ++i)
      p.points.push_back(parse_values(pts[i], p.params, origin + ": /instantiate/" + std::to_string(i)));
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_problem(j, path);
}

Assignment parse_point(std::string_view text, const ParamsPtr& params) {
  Assignment a;
  std::string s(text);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--at " + s + ": expected name=value");
    std::string name = item.substr(0, eq);
    if (!params || !params->index_of(name)) throw InputError("--at " + s + ": undeclared parameter '" + name + "'");
    try {
      a[name] = parse_rational(item.substr(eq + 1));
    } catch (const InputError& e) {
      throw InputError("--at " + s + ": " + e.what());
    }
  }
  return a;
}

std::string point_str(const Assignment& a) {
  std::string out;
  for (const auto& [k, v] : a) {
    if (!out.empty()) out += ",";
    out += k + "=" + to_string(v);
  }
  return out;
}

bool has_cochain(const Problem& p, std::string_view expr) {
  std::string s(expr);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    if (!item.empty() && item[0] == '-') item.erase(0, 1);
    if (!p.cochains.count(item)) return false;
  }
  return true;
}

Cochain resolve(const Problem& p, std::string_view expr, const Assignment& at) {
  std::optional<Cochain> total;
  std::string s(expr);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '+')) {
    bool neg = !item.empty() && item[0] == '-';
    if (neg) item.erase(0, 1);
    auto it = p.cochains.find(item);
    if (it == p.cochains.end()) throw InputError("unknown cochain '" + item + "' in '" + s + "'");
    Cochain c = it->second.substitute(at);
    if (neg) c = -c;
    if (!total)
      total = c;
    else
      *total += c;
  }
  if (!total) throw InputError("empty cochain expression");
  return *total;
}

ExtensionData extension_of(const Problem& p, const Assignment& at) {
  if (!p.space->has_split()) throw InputError(p.name + ": /space: no module declared (M/W split)");
  const bool parts = p.cochains.count("delta") || p.cochains.count("mu") || p.cochains.count("lambda") ||
                     p.cochains.count("psi");
  if (!parts && p.cochains.count("d")) return split(resolve(p, "d", at));
  auto get = [&](const char* n) {
    return p.cochains.count(n) ? resolve(p, n, at) : Cochain(p.space, Parity::Odd);
  };
  return ExtensionData(get("delta"), get("mu"), get("lambda"), get("psi"));
}

json to_json(const Cochain& c) {
  json terms = json::array();
  for (const auto& [k, coeff] : c.terms()) {
    json in = json::array();
    for (auto i : k.in.idx) in.push_back(i + 1);
    terms.push_back({{"in", in}, {"out", k.out + 1}, {"coeff", coeff.str()}});
  }
  return {{"text", c.str()}, {"parity", to_string(c.parity())}, {"terms", terms}};
}

json to_json(const Assignment& a) {
  json j = json::object();
  for (const auto& [k, v] : a) j[k] = to_string(v);
  return j;
}

json to_json(const Vec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

}  // namespace liext::cli
