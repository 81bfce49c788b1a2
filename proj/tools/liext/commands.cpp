#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "liext/cohomology.hpp"
#include "liext/deformation.hpp"
#include "liext/error.hpp"
#include "problem.hpp"

#ifndef LIEXT_FIXTURE_DIR
#define LIEXT_FIXTURE_DIR "fixtures"
#endif

namespace liext::cli {

std::string default_fixture_dir() { return LIEXT_FIXTURE_DIR; }

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string file;
  std::vector<std::string> at;
  bool json = false;
  std::string witness;

  std::string cochain, a, b, map, beta;
  std::string op, slice, parity;
  bool k_positive = false;
  std::vector<std::string> classes;
  std::string theorem, task;
  std::string dir;
};

struct Outcome {
  json data = json::object();
  std::vector<std::string> lines;
  int status = 0;
};

using Command = std::function<Outcome(const Problem&, const Options&, const Assignment&)>;

// Fill options the command line left empty from the file's task descriptor.
void apply_task(const Problem& p, Options& o) {
  const json& t = p.task;
  auto str = [&](const char* key, std::string& dst) {
    if (dst.empty() && t.contains(key)) {
      const auto& v = t.at(key);
      dst = v.is_string() ? v.get<std::string>() : v.dump();
    }
  };
  str("cochain", o.cochain);
  str("a", o.a);
  str("b", o.b);
  str("map", o.map);
  str("beta", o.beta);
  str("op", o.op);
  str("slice", o.slice);
  str("parity", o.parity);
  str("theorem", o.theorem);
  str("classify", o.task);
  if (!o.k_positive && t.contains("k_positive")) o.k_positive = t.at("k_positive").get<bool>();
  if (o.classes.empty() && t.contains("classes"))
    for (const auto& c : t.at("classes")) o.classes.push_back(c.get<std::string>());
}

std::string monomial_content(const Scalar& c) {
  if (c.is_zero() || !c.params()) return "1";
  Polynomial::Exponent lo;
  for (const auto& [e, q] : c.terms()) {
    (void)q;
    if (lo.empty())
      lo = e;
    else
      for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  }
  return Polynomial(c.params(), {{lo, Rational(1)}}).str();
}

// Distinct nonzero coefficients, first occurrence order.
json constraints_of(const std::vector<const Cochain*>& cs, std::vector<std::string>& lines) {
  json out = json::array();
  std::set<std::string> seen;
  for (const auto* c : cs)
    for (const auto& [k, v] : c->terms()) {
      (void)k;
      std::string s = v.str();
      if (!seen.insert(s).second) continue;
      out.push_back({{"coeff", s}, {"content", monomial_content(v)}});
      lines.push_back("  " + s + " = 0");
    }
  return out;
}

std::string default_cochain(const Problem& p, const Options& o) {
  if (!o.cochain.empty()) return o.cochain;
  if (p.cochains.count("d")) return "d";
  if (p.cochains.size() == 1) return p.cochains.begin()->first;
  throw InputError(p.name + ": name the cochain to use (--cochain)");
}

Outcome cmd_check(const Problem& p, const Options& o, const Assignment& at) {
  Outcome r;
  const std::string name = default_cochain(p, o);
  const Cochain d = resolve(p, name, at);
  if (!is_odd(d.parity())) throw InputError(name + " is even; codifferentials are odd");
  auto rep = is_codifferential(d);
  r.lines.push_back("cochain: " + name + " = " + d.str());
  r.lines.push_back(std::string("codifferential: ") + (rep.ok ? "true" : "false"));
  r.data["cochain"] = to_json(d);
  r.data["codifferential"] = rep.ok;
  bool quadratic = true;
  for (const auto& [k, v] : d.terms()) quadratic = quadratic && k.in.degree() == 2;
  if (quadratic) r.data["jacobi"] = jacobi_check(d);
  r.data["obstruction"] = to_json(rep.obstruction);
  if (!rep.ok) {
    r.lines.push_back("obstruction: [" + name + ", " + name + "] = " + rep.obstruction.str());
    r.lines.push_back("constraints:");
  }
  std::vector<std::string> cl;
  r.data["constraints"] = constraints_of({&rep.obstruction}, cl);
  r.lines.insert(r.lines.end(), cl.begin(), cl.end());
  r.status = rep.ok ? 0 : 1;
  return r;
}

Outcome cmd_bracket(const Problem& p, const Options& o, const Assignment& at) {
  if (o.a.empty() || o.b.empty()) throw InputError("bracket needs two cochain names");
  Outcome r;
  const Cochain v = bracket(resolve(p, o.a, at), resolve(p, o.b, at));
  r.data["a"] = o.a;
  r.data["b"] = o.b;
  r.data["value"] = to_json(v);
  r.lines.push_back("[" + o.a + ", " + o.b + "] = " + v.str());
  return r;
}

Outcome cmd_conjugate(const Problem& p, const Options& o, const Assignment& at) {
  if (o.map.empty()) throw InputError("conjugate needs --map NAME (a degree-1 cochain)");
  Outcome r;
  const std::string name = default_cochain(p, o);
  const Cochain d = resolve(p, name, at);
  const Cochain g = resolve(p, o.map, at);
  if (g.parity() != Parity::Even) throw InputError(o.map + " must be parity preserving (even)");
  const LinearMap f = to_linear_map(g);
  const Scalar det = determinant(f);
  r.data["cochain"] = name;
  r.data["map"] = o.map;
  r.data["determinant"] = det.str();
  if (det.is_constant()) {
    if (det.is_zero()) throw InputError(o.map + " is not invertible");
    const Cochain v = conjugate(d, f);
    r.data["value"] = to_json(v);
    r.data["denominator"] = "1";
    r.lines.push_back(o.map + "^*(" + name + ") = " + v.str());
  } else {
    auto sc = conjugate_scaled(d, f);
    r.data["value"] = to_json(sc.numerator);
    r.data["denominator"] = sc.denominator.str();
    r.lines.push_back(o.map + "^*(" + name + ") = (" + sc.numerator.str() + ") / (" + sc.denominator.str() + ")");
  }
  return r;
}

void describe_extension(const ExtensionData& e, Outcome& r, const std::string& prime = "") {
  const std::pair<const char*, const Cochain*> parts[] = {
      {"delta", &e.delta}, {"mu", &e.mu}, {"lambda", &e.lambda}, {"psi", &e.psi}};
  for (const auto& [n, c] : parts) {
    r.data[std::string(n) + prime] = to_json(*c);
    r.lines.push_back(std::string(n) + prime + " = " + c->str());
  }
}

Outcome cmd_verify(const Problem& p, const Options&, const Assignment& at) {
  Outcome r;
  const ExtensionData e = extension_of(p, at);
  describe_extension(e, r);
  auto rep = verify_extension(e);
  r.data["module_condition"] = to_json(rep.cond_module);
  r.data["compatibility"] = to_json(rep.cond_compat);
  r.data["cocycle"] = to_json(rep.cond_cocycle);
  r.data["extension"] = rep.ok;
  r.lines.push_back("[delta,lambda] + 1/2[lambda,lambda] + [mu,psi] = " + rep.cond_module.str());
  r.lines.push_back("[mu,lambda] = " + rep.cond_compat.str());
  r.lines.push_back("[delta+lambda,psi] = " + rep.cond_cocycle.str());
  r.lines.push_back(std::string("extension: ") + (rep.ok ? "true" : "false"));
  std::vector<std::string> cl;
  r.data["constraints"] = constraints_of({&rep.cond_module, &rep.cond_compat, &rep.cond_cocycle}, cl);
  if (!rep.ok) {
    r.lines.push_back("constraints:");
    r.lines.insert(r.lines.end(), cl.begin(), cl.end());
  }
  r.status = rep.ok ? 0 : 1;
  return r;
}

DiagonalAutomorphism parse_diag(const json& g, const Problem& p, const std::string& where) {
  const auto mi = p.space->indices_in(Part::M), wi = p.space->indices_in(Part::W);
  DiagonalAutomorphism out{identity_map(mi.size()), identity_map(wi.size())};
  if (g.contains("m")) out.m_block = parse_matrix(g.at("m"), p.params, where + "/m");
  if (g.contains("w")) out.w_block = parse_matrix(g.at("w"), p.params, where + "/w");
  if (out.m_block.size() != mi.size() || out.w_block.size() != wi.size())
    throw InputError(where + ": block sizes must match dim M and dim W");
  return out;
}

Scalar substitute(const Scalar& s, const Assignment& at) { return s.substitute(at); }

Outcome cmd_equiv(const Problem& p, const Options& o, const Assignment& at) {
  Outcome r;
  const ExtensionData e = extension_of(p, at);
  if (o.beta.empty() && p.witness.is_null())
    throw InputError("equiv needs --beta NAME or --witness FILE");
  if (p.witness.is_null()) {
    const Cochain beta = resolve(p, o.beta, at);
    check_beta(beta);
    const ExtensionData t = apply_beta(e, beta);
    r.data["beta"] = to_json(beta);
    describe_extension(t, r, "'");
    r.data["semidirect"] = t.psi.is_zero();
    r.lines.push_back(std::string("semidirect: ") + (t.psi.is_zero() ? "true" : "false"));
    return r;
  }
  const json& w = p.witness;
  const std::string where = o.witness;
  Cochain beta(p.space, Parity::Even);
  if (w.contains("beta")) beta = parse_cochain(w.at("beta"), p.space, p.params, where + ": /beta").substitute(at);
  else if (!o.beta.empty()) beta = resolve(p, o.beta, at);
  check_beta(beta);
  DiagonalAutomorphism g = parse_diag(w.value("g", json::object()), p, where + ": /g");
  for (auto* blk : {&g.m_block, &g.w_block})
    for (auto& row : *blk)
      for (auto& x : row) x = substitute(x, at);
  const ExtensionData t = pullback_general(e, g, beta);
  r.data["beta"] = to_json(beta);
  describe_extension(t, r, "'");
  r.data["semidirect"] = t.psi.is_zero();
  if (w.contains("target")) {
    const json& tg = w.at("target");
    auto part = [&](const char* n, const Cochain& fallback) {
      return tg.contains(n) ? parse_cochain(tg.at(n), p.space, p.params, where + ": /target/" + n).substitute(at)
                            : fallback;
    };
    const Cochain zero(p.space, Parity::Odd);
    const ExtensionData target(part("delta", zero), part("mu", zero), part("lambda", zero), part("psi", zero));
    const bool same = t == target;
    r.data["equivalent"] = same;
    r.lines.push_back(std::string("matches target: ") + (same ? "true" : "false"));
    r.status = same ? 0 : 1;
  }
  return r;
}

Slice parse_slice(const Problem& p, const Options& o) {
  if (o.slice.empty()) throw InputError("--slice k,l is required");
  std::size_t k = 0, l = 0;
  char comma = 0;
  std::istringstream in(o.slice);
  if (!(in >> k >> comma >> l) || comma != ',' || !in.eof())
    throw InputError("--slice " + o.slice + ": expected k,l");
  std::optional<Parity> par;
  if (o.parity == "even") par = Parity::Even;
  else if (o.parity == "odd") par = Parity::Odd;
  else if (!o.parity.empty()) throw InputError("--parity must be even or odd");
  return Slice::hom(p.space, k, l, par, o.k_positive);
}

json reps_json(const std::vector<Cochain>& reps, std::vector<std::string>& lines) {
  json out = json::array();
  for (const auto& c : reps) {
    out.push_back(to_json(c));
    lines.push_back("  " + c.str());
  }
  return out;
}

Outcome cmd_cohomology(const Problem& p, const Options& o, const Assignment& at) {
  Outcome r;
  const ExtensionData e = extension_of(p, at);
  if (!e.is_numeric()) throw NeedsInstantiation("cohomology needs every parameter instantiated (--at)");
  const Slice slice = parse_slice(p, o);
  std::optional<CohomologySpace> h;
  if (o.op == "mu") h = cohomology_of(mu_operator(e), slice);
  else if (o.op == "dl") h = cohomology_of(dl_operator(e), slice);
  else if (o.op == "double") h = double_cohomology(e, slice);
  else if (o.op == "triple") h = triple_cohomology(e, slice);
  else throw InputError("--op must be one of mu, dl, double, triple");
  r.data["op"] = o.op;
  r.data["slice"] = slice.str();
  r.data["parity"] = to_string(slice.parity());
  r.data["slice_dim"] = slice.dim();
  r.data["dim"] = h->dim();
  r.data["cocycle_dim"] = h->cocycle_basis().size();
  r.data["coboundary_dim"] = h->coboundary_basis().size();
  r.lines.push_back("space: " + h->description() + " on " + slice.str() + " (" + to_string(slice.parity()) + ")");
  r.lines.push_back("dim: " + std::to_string(h->dim()));
  if (h->dim()) r.lines.push_back("representatives:");
  r.data["representatives"] = reps_json(h->representatives(), r.lines);
  json classes = json::object();
  for (const auto& name : o.classes) {
    const Cochain c = resolve(p, name, at);
    json cj;
    cj["cochain"] = to_json(c);
    Cochain outside(c.space(), c.parity());
    slice.coords(c, outside);
    if (!outside.is_zero()) throw InputError(name + " does not lie in " + slice.str());
    auto coords = h->project(c);
    cj["cocycle"] = coords.has_value();
    cj["coboundary"] = h->is_coboundary(c);
    cj["class"] = coords ? to_json(*coords) : json(nullptr);
    const bool nonzero = coords && !is_zero(*coords);
    cj["nonzero"] = nonzero;
    classes[name] = cj;
    r.lines.push_back("class of " + name + ": " +
                      (!coords ? std::string("not a cocycle") : nonzero ? "nonzero" : "zero"));
  }
  r.data["classes"] = classes;
  return r;
}

void describe_report(const ClassificationReport& rep, Outcome& r) {
  r.data["task"] = rep.task;
  r.lines.push_back("task: " + rep.task);
  if (rep.solvable) {
    r.data["solvable"] = *rep.solvable;
    r.lines.push_back(std::string("solvable: ") + (*rep.solvable ? "true" : "false"));
  } else {
    r.data["solvable"] = nullptr;
  }
  json spaces = json::array();
  for (const auto& s : rep.spaces) {
    r.lines.push_back("space " + s.name + ": dim " + std::to_string(s.dim) +
                      (s.counts_as_parameter ? "" : " (not a parameter)"));
    json sj{{"name", s.name}, {"dim", s.dim}, {"counts_as_parameter", s.counts_as_parameter}};
    sj["representatives"] = reps_json(s.representatives, r.lines);
    spaces.push_back(sj);
  }
  r.data["spaces"] = spaces;
  r.data["parameter_count"] = rep.parameter_count();
  auto named = [&](const char* key, const char* label, const std::vector<std::pair<std::string, Cochain>>& xs) {
    json arr = json::array();
    for (const auto& [n, c] : xs) {
      arr.push_back({{"name", n}, {"value", to_json(c)}});
      r.lines.push_back(std::string(label) + " " + n + " = " + c.str());
    }
    r.data[key] = arr;
  };
  named("residuals", "residual", rep.residuals);
  named("witnesses", "witness", rep.witnesses);
  json coords = json::array();
  for (const auto& [n, v] : rep.class_coords) {
    coords.push_back({{"name", n}, {"coords", to_json(v)}});
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + to_string(x);
    r.lines.push_back("coordinates " + n + " = (" + s + ")");
  }
  r.data["class_coords"] = coords;
  r.data["notes"] = rep.notes;
  for (const auto& n : rep.notes) r.lines.push_back("note: " + n);
  if (rep.solvable && !*rep.solvable) r.status = 1;
}

Cochain named_or_zero(const Problem& p, const char* name, const Assignment& at) {
  return p.cochains.count(name) ? resolve(p, name, at) : Cochain(p.space, Parity::Odd);
}

Outcome cmd_classify(const Problem& p, const Options& o, const Assignment& at) {
  static const std::map<std::string, std::string> aliases = {
      {"3", "infinitesimal-extensions"}, {"5", "extension-moduli"}, {"8", "deformations"},
      {"9", "scenario1"},                {"10", "scenario2"}};
  std::string task = o.task;
  if (task.empty() && !o.theorem.empty()) {
    auto it = aliases.find(o.theorem);
    if (it == aliases.end()) throw InputError("--theorem must be one of 3, 5, 8, 9, 10");
    task = it->second;
  }
  if (task.empty()) throw InputError("classify needs --theorem N or --task NAME");
  Outcome r;
  ClassificationReport rep;
  if (task == "infinitesimal-extensions" || task == "extension-moduli") {
    if (!p.space->has_split()) throw InputError(p.name + ": /space: no module declared");
    const Cochain delta = named_or_zero(p, "delta", at), mu = named_or_zero(p, "mu", at);
    rep = task == "infinitesimal-extensions"
              ? classify_infinitesimal_extensions(delta, mu)
              : classify_extension_moduli(delta, mu, named_or_zero(p, "lambda", at));
  } else {
    const ExtensionData e = extension_of(p, at);
    if (task == "deformations") rep = classify_deformations(e);
    else if (task == "scenario1") rep = classify_rep_deformations_scenario1(e);
    else if (task == "scenario2") rep = classify_rep_deformations_scenario2(e);
    else throw InputError("unknown classification task '" + task + "'");
  }
  r.data["classification"] = task;
  describe_report(rep, r);
  r.lines.push_back("parameters: " + std::to_string(rep.parameter_count()));
  return r;
}

Outcome cmd_deform(const Problem& p, const Options&, const Assignment& at) {
  Outcome r;
  auto rep = classify_deformations(extension_of(p, at));
  describe_report(rep, r);
  r.lines.push_back("deformation parameters: " + std::to_string(rep.parameter_count()));
  return r;
}

std::vector<Assignment> points_of(const Problem& p, const Options& o) {
  std::vector<Assignment> pts;
  for (const auto& a : o.at) pts.push_back(parse_point(a, p.params));
  if (pts.empty()) pts = p.points;
  if (pts.empty()) pts.emplace_back();
  return pts;
}

int execute(const std::string& command, const Command& fn, Options o, std::ostream& out) {
  Problem p = load_problem(o.file);
  if (!o.witness.empty()) {
    std::ifstream in(o.witness);
    if (!in) throw InputError(o.witness + ": cannot open file");
    try {
      p.witness = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(o.witness + ": " + e.what());
    }
    if (!p.witness.is_object()) throw InputError(o.witness + ": expected a JSON object");
  }
  apply_task(p, o);
  json results = json::array();
  std::vector<std::string> text{"problem: " + p.name};
  int status = 0;
  for (const auto& at : points_of(p, o)) {
    Outcome r = fn(p, o, at);
    r.data["at"] = to_json(at);
    results.push_back(r.data);
    status = std::max(status, r.status);
    const bool labelled = !at.empty();
    if (labelled) text.push_back("at " + point_str(at) + ":");
    for (const auto& l : r.lines) text.push_back((labelled ? "  " : "") + l);
  }
  if (o.json) {
    json doc{{"command", command}, {"problem", p.name}, {"results", results}, {"exit", status}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& l : text) out << l << "\n";
  }
  return status;
}

std::string brief(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// One fixture: every run must exit as expected and match every listed value.
bool run_fixture(const fs::path& file, std::string& line, json& record) {
  const std::string name = file.stem().string();
  record = {{"fixture", name}, {"checks", json::array()}};
  json doc;
  try {
    std::ifstream in(file);
    doc = json::parse(in);
  } catch (const std::exception& e) {
    line = "FAIL " + name + ": unreadable: " + e.what();
    record["pass"] = false;
    return false;
  }
  const json runs = doc.value("expect", json::array());
  if (!runs.is_array() || runs.empty()) {
    line = "FAIL " + name + ": no expectations";
    record["pass"] = false;
    return false;
  }
  bool pass = true;
  std::vector<std::string> parts;
  for (const auto& run : runs) {
    std::vector<std::string> args = run.at("args").get<std::vector<std::string>>();
    std::string shown;
    for (const auto& a : args) shown += (shown.empty() ? "" : " ") + a;
    args.insert(args.begin() + 1, file.string());
    args.push_back("--json");
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    const int want = run.value("exit", 0);
    json check{{"args", shown}, {"exit", code}, {"expected_exit", want}};
    std::string part = shown + " -> exit " + std::to_string(code);
    bool ok = code == want;
    if (!ok) part += " (expected " + std::to_string(want) + ")";
    json got = json::object();
    if (code != 2) {
      try {
        got = json::parse(o.str());
      } catch (const std::exception&) {
        ok = false;
        part += ", unparsable report";
      }
    }
    const json values = run.value("values", json::object());
    for (const auto& [ptr, val] : values.items()) {
      json::json_pointer jp(ptr);
      const bool present = got.contains(jp);
      const json actual = present ? got.at(jp) : json(nullptr);
      const bool eq = present && actual == val;
      ok = ok && eq;
      part += ", " + ptr + " = " + brief(actual);
      if (!eq) part += " (expected " + brief(val) + ")";
      check["values"][ptr] = {{"expected", val}, {"actual", actual}};
    }
    if (run.contains("stderr")) {
      const std::string needle = run.at("stderr").get<std::string>();
      const bool found = e.str().find(needle) != std::string::npos;
      ok = ok && found;
      if (!found) part += ", stderr lacks \"" + needle + "\"";
    }
    check["pass"] = ok;
    record["checks"].push_back(check);
    pass = pass && ok;
    parts.push_back(part);
  }
  line = (pass ? "PASS " : "FAIL ") + name + ":";
  for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? "; " : " ") + parts[i];
  record["pass"] = pass;
  return pass;
}

int run_fixtures(const std::string& dir, bool as_json, std::ostream& out, std::ostream& err) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (fs::is_directory(dir, ec))
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (files.empty()) {
    err << "error: no fixtures found in " << dir << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& x, const fs::path& y) { return x.filename() < y.filename(); });
  std::size_t failed = 0;
  json records = json::array();
  std::vector<std::string> lines;
  for (const auto& f : files) {
    std::string line;
    json rec;
    if (!run_fixture(f, line, rec)) ++failed;
    lines.push_back(line);
    records.push_back(rec);
  }
  if (as_json) {
    out << json{{"fixtures", records}, {"failed", failed}, {"total", files.size()}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines) out << l << "\n";
    out << (files.size() - failed) << "/" << files.size() << " fixtures passed\n";
  }
  return failed ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liext: exact computations with codifferentials on Z2-graded spaces"};
  app.name("liext");
  app.require_subcommand(1);
  Options o;

  struct Entry {
    std::string name;
    Command fn;
    CLI::App* sub;
  };
  std::vector<Entry> entries;
  auto add = [&](const std::string& name, const std::string& help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "problem file")->required();
    sub->add_option("--at", o.at, "instantiate parameters, e.g. a=0,b=-1 (repeat for a sweep)");
    sub->add_flag("--json", o.json, "JSON report");
    sub->add_option("--witness", o.witness, "JSON file with g (blocks m, w), beta and an optional target");
    entries.push_back({name, std::move(fn), sub});
    return sub;
  };

  add("check", "is the cochain a codifferential ([d,d] = 0)?", cmd_check)
      ->add_option("--cochain", o.cochain, "cochain name (default d)");
  auto* br = add("bracket", "the bracket [A, B]", cmd_bracket);
  br->add_option("A", o.a, "first cochain, e.g. delta+lambda");
  br->add_option("B", o.b, "second cochain");
  auto* cj = add("conjugate", "pull a cochain back along a linear map", cmd_conjugate);
  cj->add_option("--map", o.map, "degree-1 even cochain giving the map");
  cj->add_option("--cochain", o.cochain, "cochain name (default d)");
  add("verify-ext", "extension conditions for delta, mu, lambda, psi", cmd_verify);
  add("equiv", "apply a restricted equivalence or a witness automorphism", cmd_equiv)
      ->add_option("--beta", o.beta, "cochain W -> M");
  auto* co = add("cohomology", "cohomology on a bidegree slice", cmd_cohomology);
  co->add_option("--op", o.op, "mu, dl, double or triple");
  co->add_option("--slice", o.slice, "k,l for C^{k,l} = Hom(M^k W^l, M)");
  co->add_option("--parity", o.parity, "even or odd (default (k-1+l) mod 2)");
  co->add_flag("--k-positive", o.k_positive, "drop C^{0,l} from the adjacent slices");
  co->add_option("--class", o.classes, "project a named cochain onto the cohomology");
  auto* cl = add("classify", "classification report", cmd_classify);
  cl->add_option("--theorem", o.theorem, "3, 5, 8, 9 or 10");
  cl->add_option("--task", o.task,
                 "infinitesimal-extensions, extension-moduli, deformations, scenario1, scenario2");
  add("deform", "infinitesimal deformations of an extension", cmd_deform);
  add("run", "run the task named in the file", nullptr);

  auto* fx = app.add_subcommand("fixtures", "replay the fixture corpus");
  fx->add_option("dir", o.dir, "corpus directory");
  fx->add_flag("--json", o.json, "JSON summary");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (fx->parsed()) return run_fixtures(o.dir.empty() ? default_fixture_dir() : o.dir, o.json, out, err);
    for (const auto& entry : entries) {
      if (!entry.sub->parsed()) continue;
      if (entry.name != "run") return execute(entry.name, entry.fn, o, out);
      // dispatch on task.kind
      Problem p = load_problem(o.file);
      const std::string kind = p.task.value("kind", "");
      for (const auto& target : entries)
        if (target.name == kind && target.fn) return execute(kind, target.fn, o, out);
      throw InputError(o.file + ": /task/kind: expected one of check, bracket, conjugate, verify-ext, "
                       "equiv, cohomology, classify, deform");
    }
  } catch (const NeedsInstantiation& e) {
    err << "error: " << e.what() << " (instantiate with --at)\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace liext::cli
