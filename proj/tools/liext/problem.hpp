#pragma once

// Problem files: a graded space, parameters, named cochains, an optional task
// descriptor and instantiation points. Indices in files are 1-based.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "liext/extension.hpp"
#include "liext/linalg.hpp"

namespace liext::cli {

using nlohmann::json;

struct Problem {
  std::string name;
  SpacePtr space;
  ParamsPtr params;
  std::map<std::string, Cochain> cochains;
  json task = json::object();
  std::vector<Assignment> points;
  // Witness file contents, when one was given.
  json witness;
};

// Throws InputError with a location ("file: /cochains/d/0/out: ...").
Problem load_problem(const std::string& path);
Problem parse_problem(const json& j, const std::string& origin);

// "a=0,b=-1/2"; every name must be declared.
Assignment parse_point(std::string_view text, const ParamsPtr& params);
std::string point_str(const Assignment& a);

// Terms of a cochain given as [{in, out, coeff}] (or {parity, terms}).
Cochain parse_cochain(const json& j, const SpacePtr& space, const ParamsPtr& params,
                      const std::string& where);
// A matrix of scalar strings; rows first.
ScalarMatrix parse_matrix(const json& j, const ParamsPtr& params, const std::string& where);

// "delta+lambda", "-beta": sums of declared names, instantiated at `at`.
Cochain resolve(const Problem& p, std::string_view expr, const Assignment& at);
bool has_cochain(const Problem& p, std::string_view expr);

// The extension components delta, mu, lambda, psi (missing ones are zero),
// or the split of `d` when only that is given.
ExtensionData extension_of(const Problem& p, const Assignment& at);

json to_json(const Cochain& c);
json to_json(const Assignment& a);
json to_json(const Vec& v);

}  // namespace liext::cli
