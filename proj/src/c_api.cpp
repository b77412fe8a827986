#include "ut4.h"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "json.hpp"
#include "ut4/oracle.hpp"

using json = nlohmann::json;
using namespace ut4;

struct ut4_context {
  int64_t radius = 4;
  int64_t box = 2;
  int64_t limit = 1000;
  int64_t numeric_q = 120;
  double tolerance = 1e-9;
};

struct ut4_result {
  ut4_status status = UT4_OK;
  json body;
  std::string text;
};

struct ut4_subgroup {
  Subgroup h;
};

namespace {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownCommand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- parsing (the schema check) ---------------------------------------------

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw SchemaError(where + ": " + what);
}

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) bad(where, "unknown key \"" + it.key() + "\"");
  }
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

Int to_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(static_cast<long long>(j.get<int64_t>()));
  if (j.is_string()) {
    try {
      return Int::parse(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  bad(where, "expected an integer");
}

int64_t small_int(const json& j, const std::string& where, int64_t lo, int64_t hi) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  int64_t v = j.get<int64_t>();
  if (v < lo || v > hi) bad(where, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

Element to_element(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Element::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(where, e.what());
    }
  }
  if (!j.is_array() || j.size() != 6) bad(where, "expected \"<a,d,f|b,e|c>\" or 6 integers");
  Int v[6];
  for (size_t i = 0; i < 6; ++i) v[i] = to_int(j[i], where);
  return Element{v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::pair<int, int> to_ranks(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where, "expected [rk1, rk2]");
  int r1 = static_cast<int>(small_int(j[0], where, 0, 3));
  int r2 = static_cast<int>(small_int(j[1], where, 0, 2));
  if (!is_case(r1, r2)) bad(where, "not a classified rank pair");
  return {r1, r2};
}

std::string to_subset(const json& j, int r1, int r2, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a subset label");
  std::string s = j.get<std::string>();
  for (const auto& l : subset_labels(r1, r2))
    if (l == s) return s;
  bad(where, "unknown subset \"" + s + "\"");
}

Reading to_reading(const json& j, const std::string& where) {
  if (j == "literal") return Reading::literal;
  if (j == "reconciled") return Reading::reconciled;
  bad(where, "expected \"literal\" or \"reconciled\"");
}

Params to_params(int r1, int r2, const json& j, const std::string& where) {
  const auto& names = param_names(r1, r2);
  std::vector<Int> v(names.size());
  if (j.is_array()) {
    if (j.size() != names.size()) bad(where, "expected " + std::to_string(names.size()) + " parameters");
    for (size_t i = 0; i < v.size(); ++i) v[i] = to_int(j[i], where);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (std::find(names.begin(), names.end(), it.key()) == names.end())
        bad(where, "unknown parameter \"" + it.key() + "\"");
    for (size_t i = 0; i < v.size(); ++i) v[i] = to_int(need(j, names[i].c_str(), where), where);
  } else {
    bad(where, "expected a list or an object of parameters");
  }
  return Params::make(r1, r2, std::move(v));
}

// A subgroup as given: explicit generators, or phi of case parameters.
struct SubgroupInput {
  std::vector<Element> gens;
  std::optional<Params> params;
};

SubgroupInput to_subgroup(const json& j, const std::string& where) {
  only_keys(j, where, {"generators", "case"});
  SubgroupInput in;
  if (j.contains("generators") == j.contains("case")) bad(where, "give exactly one of \"generators\", \"case\"");
  if (j.contains("generators")) {
    const json& g = j["generators"];
    if (!g.is_array() || g.empty()) bad(where + ".generators", "expected a non-empty list");
    for (size_t i = 0; i < g.size(); ++i)
      in.gens.push_back(to_element(g[i], where + ".generators[" + std::to_string(i) + "]"));
  } else {
    const json& c = j["case"];
    only_keys(c, where + ".case", {"ranks", "params"});
    auto [r1, r2] = to_ranks(need(c, "ranks", where + ".case"), where + ".case.ranks");
    in.params = to_params(r1, r2, need(c, "params", where + ".case"), where + ".case.params");
  }
  return in;
}

struct ValueInput {
  std::optional<UnitValue> exact;
  std::complex<double> numeric;
};

struct CharacterInput {
  std::vector<ValueInput> values;
  std::vector<std::pair<std::string, SymbolClass>> symbols;
};

double to_double(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size() && std::isfinite(v)) return v;
  }
  bad(where, "expected a decimal number");
}

CharacterInput to_character(const json& j, const std::string& where) {
  only_keys(j, where, {"values", "symbols"});
  CharacterInput in;
  if (j.contains("symbols")) {
    const json& s = j["symbols"];
    if (!s.is_object()) bad(where + ".symbols", "expected an object");
    for (auto it = s.begin(); it != s.end(); ++it) {
      SymbolClass cls;
      if (*it == "off_circle")
        cls = SymbolClass::off_circle;
      else if (*it == "circle_free")
        cls = SymbolClass::circle_free;
      else
        bad(where + ".symbols." + it.key(), "expected \"off_circle\" or \"circle_free\"");
      in.symbols.emplace_back(it.key(), cls);
    }
  }
  const json& v = need(j, "values", where);
  if (!v.is_array()) bad(where + ".values", "expected a list");
  for (size_t i = 0; i < v.size(); ++i) {
    const std::string w = where + ".values[" + std::to_string(i) + "]";
    ValueInput x;
    if (v[i].is_string()) {
      try {
        x.exact = UnitValue::parse(v[i].get<std::string>());
      } catch (const std::exception& e) {
        bad(w, e.what());
      }
      for (const auto& [name, q] : x.exact->exponents()) {
        bool declared = false;
        for (const auto& s : in.symbols) declared = declared || s.first == name;
        if (!declared) bad(w, "undeclared symbol \"" + name + "\"");
      }
    } else if (v[i].is_object()) {
      only_keys(v[i], w, {"re", "im"});
      x.numeric = {to_double(need(v[i], "re", w), w + ".re"), to_double(need(v[i], "im", w), w + ".im")};
      if (std::abs(x.numeric) == 0) bad(w, "zero is not a unit");
    } else {
      bad(w, "expected a value string or {\"re\", \"im\"}");
    }
    in.values.push_back(std::move(x));
  }
  return in;
}

// ---- options ------------------------------------------------------------------

ut4_context with_options(const ut4_context& base, const json& req) {
  ut4_context o = base;
  if (!req.contains("options")) return o;
  const json& j = req["options"];
  only_keys(j, "options", {"radius", "box", "limit", "numeric_q", "tolerance"});
  if (j.contains("radius")) o.radius = small_int(j["radius"], "options.radius", 0, 12);
  if (j.contains("box")) o.box = small_int(j["box"], "options.box", 0, 50);
  if (j.contains("limit")) o.limit = small_int(j["limit"], "options.limit", 1, std::numeric_limits<int64_t>::max());
  if (j.contains("numeric_q")) o.numeric_q = small_int(j["numeric_q"], "options.numeric_q", 1, 100000);
  if (j.contains("tolerance")) {
    o.tolerance = to_double(j["tolerance"], "options.tolerance");
    if (!(o.tolerance > 0 && o.tolerance <= 1e-3)) bad("options.tolerance", "must lie in (0, 1e-3]");
  }
  return o;
}

// ---- building core objects ----------------------------------------------------

std::vector<Element> generators_of(const SubgroupInput& in) {
  return in.params ? phi_generators(*in.params) : in.gens;
}

struct Pair {
  Character chi;
  SymbolTable syms;
  std::map<std::string, std::complex<double>> numeric;  // numeric value of each fresh symbol
};

Pair build_pair(const SubgroupInput& hs, const CharacterInput& cs, const ut4_context& o,
                const std::string& tag) {
  const auto gens = generators_of(hs);
  if (cs.values.size() != gens.size())
    throw SchemaError("character.values: expected " + std::to_string(gens.size()) +
                      " values, one per generator");
  Pair p;
  for (const auto& [name, cls] : cs.symbols) p.syms.declare(name, cls);
  std::vector<UnitValue> vals;
  for (size_t i = 0; i < cs.values.size(); ++i) {
    const ValueInput& v = cs.values[i];
    if (v.exact) {
      vals.push_back(*v.exact);
      continue;
    }
    mpq_class tor;
    bool lifted;
    try {
      lifted = lift_root_of_unity(v.numeric, static_cast<int>(o.numeric_q), o.tolerance, tor);
    } catch (const std::invalid_argument& e) {
      throw NumericError("character.values[" + std::to_string(i) + "]: " + e.what());
    }
    if (lifted) {
      vals.push_back(UnitValue::root(tor));
      continue;
    }
    // Not a root of unity up to Q: a fresh generic symbol.
    std::string name = "n" + tag + std::to_string(i);
    while (p.syms.has(name)) name += "_";
    bool circle = std::abs(std::abs(v.numeric) - 1.0) <= o.tolerance;
    p.syms.declare(name, circle ? SymbolClass::circle_free : SymbolClass::off_circle);
    p.numeric[name] = v.numeric;
    vals.push_back(UnitValue::symbol(name));
  }
  p.chi = Character::from_generators(gens, vals);
  return p;
}

// ---- serialization ---------------------------------------------------------------

json int_json(const Int& x) {
  try {
    return x.to_int64();
  } catch (const std::overflow_error&) {
    return x.str();
  }
}

json params_json(const Params& p) {
  json j = json::object();
  const auto& names = param_names(p.rk1, p.rk2);
  for (size_t i = 0; i < names.size(); ++i) j[names[i]] = int_json(p.v[i]);
  return j;
}

json ranks_json(const Ranks& r) { return {{"rk1", r.rk1}, {"rk2", r.rk2}, {"rk3", r.rk3}}; }

json elements_json(const std::vector<Element>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.str());
  return j;
}

json subgroup_json(const Subgroup& h) {
  return {{"generators", elements_json(h.generators())}, {"ranks", ranks_json(h.ranks())}};
}

json normal_form_json(const NormalForm& nf) {
  return {{"case", nf.id.str()},
          {"ranks", {nf.id.rk1, nf.id.rk2}},
          {"subset", nf.id.subset},
          {"params", params_json(nf.params)},
          {"conjugator", nf.conjugator.str()},
          {"generators", elements_json(phi_generators(nf.params))}};
}

json values_json(const CaseValues& v) {
  json j = json::object();
  for (size_t i = 0; i < v.names.size(); ++i) j[v.names[i]] = v.values[i].str();
  return j;
}

json verdict_json(const Verdict& v) {
  json conds = json::array();
  for (const auto& c : v.conditions)
    conds.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
  return {{"irreducible", v.irreducible}, {"values", values_json(v.values)}, {"conditions", conds}};
}

json stratum_json(const StratumRow& r, const Verdict& v, const SymbolTable& syms) {
  json fibers = json::array();
  for (size_t i = 0; i < r.fibers.size(); ++i)
    fibers.push_back({{"column", r.columns[i]}, {"fiber", r.fibers[i].str()}});
  json mod = json::object();
  for (size_t i = 0; i < v.values.names.size(); ++i)
    mod[v.values.names[i]] = to_string(v.values.values[i].modulus_class(syms));
  return {{"block", r.block}, {"row", r.row}, {"fibers", fibers}, {"modulus_class", mod}};
}

json symbols_json(const Pair& p) {
  json j = json::object();
  for (const auto& [name, z] : p.numeric)
    j[name] = {{"class", to_string(p.syms.cls(name))}, {"re", z.real()}, {"im", z.imag()}};
  return j;
}

json witness_json(const SWitness& w) {
  json checks = json::array();
  for (const auto& [u, v] : w.character_check) checks.push_back({u.str(), v.str()});
  return {{"g", w.g.str()},
          {"intersection", elements_json(w.intersection.generators())},
          {"character_check", checks}};
}

json report_json(const VerifyReport& r) {
  json ds = json::array();
  for (const auto& d : r.discrepancies)
    ds.push_back({{"params", params_json(d.params)},
                  {"kind", d.kind},
                  {"what", d.what},
                  {"displayed", d.displayed},
                  {"actual", d.actual}});
  return {{"case", r.id.str()},
          {"box", r.box},
          {"reading", r.reading == Reading::literal ? "literal" : "reconciled"},
          {"params_checked", r.params_checked},
          {"action_checks", r.action_checks},
          {"commutator_checks", r.commutator_checks},
          {"action_discrepancies", r.action_discrepancies},
          {"commutator_discrepancies", r.commutator_discrepancies},
          {"normalize_failures", r.normalize_failures},
          {"opposite_orientation_matches", r.opposite_orientation_matches},
          {"discrepancies", ds}};
}

// ---- commands --------------------------------------------------------------------

struct Parsed {
  SubgroupInput h;
  std::optional<CharacterInput> chi;
};

Parsed subgroup_payload(const json& p, bool want_chi, bool need_chi) {
  only_keys(p, "payload", want_chi ? std::initializer_list<const char*>{"subgroup", "character"}
                                   : std::initializer_list<const char*>{"subgroup"});
  Parsed out{to_subgroup(need(p, "subgroup", "payload"), "payload.subgroup"), std::nullopt};
  if (p.contains("character")) out.chi = to_character(p["character"], "payload.character");
  if (need_chi && !out.chi) bad("payload", "missing \"character\"");
  return out;
}

json cmd_ranks(const json& p, const ut4_context&) {
  Parsed in = subgroup_payload(p, false, false);
  return ranks_json(Subgroup::generate(generators_of(in.h)).ranks());
}

json cmd_isolator(const json& p, const ut4_context&) {
  Parsed in = subgroup_payload(p, false, false);
  Subgroup h = Subgroup::generate(generators_of(in.h));
  Subgroup hs = isolator(h);
  return {{"subgroup", subgroup_json(h)},
          {"isolator", subgroup_json(hs)},
          {"isolated", h == hs},
          {"index", int_json(index(hs, h))}};
}

json cmd_classify(const json& p, const ut4_context& o) {
  Parsed in = subgroup_payload(p, true, false);
  Subgroup h = Subgroup::generate(generators_of(in.h));
  json out = {{"ranks", ranks_json(h.ranks())}, {"normal_form", normal_form_json(normal_form(h))}};
  if (in.chi) {
    Pair pr = build_pair(in.h, *in.chi, o, "");
    Verdict v = is_irreducible(pr.chi);
    out["verdict"] = verdict_json(v);
    if (v.irreducible) out["stratum"] = stratum_json(stratum(v, pr.syms), v, pr.syms);
    if (!pr.numeric.empty()) out["numeric_symbols"] = symbols_json(pr);
  }
  return out;
}

json cmd_irreducible(const json& p, const ut4_context& o) {
  Parsed in = subgroup_payload(p, true, true);
  Pair pr = build_pair(in.h, *in.chi, o, "");
  Verdict v = is_irreducible(pr.chi);
  json out = verdict_json(v);
  out["normal_form"] = normal_form_json(v.nf);
  // Brute-force corroboration: a witness refutes irreducibility.
  auto w = s_chi_witness(pr.chi, static_cast<int>(o.radius));
  out["oracle"] = {{"radius", o.radius}, {"witness", w ? witness_json(*w) : json(nullptr)}};
  // Without a witness a reducible verdict is merely not corroborated at this radius.
  out["oracle"]["consistent"] = !(v.irreducible && w);
  if (!pr.numeric.empty()) out["numeric_symbols"] = symbols_json(pr);
  return out;
}

json cmd_stratum(const json& p, const ut4_context& o) {
  Parsed in = subgroup_payload(p, true, true);
  Pair pr = build_pair(in.h, *in.chi, o, "");
  Verdict v = is_irreducible(pr.chi);
  json out = stratum_json(stratum(v, pr.syms), v, pr.syms);
  out["normal_form"] = normal_form_json(v.nf);
  if (!pr.numeric.empty()) out["numeric_symbols"] = symbols_json(pr);
  return out;
}

json cmd_equivalent(const json& p, const ut4_context& o) {
  only_keys(p, "payload", {"first", "second", "hints"});
  Parsed a = subgroup_payload(need(p, "first", "payload"), true, true);
  Parsed b = subgroup_payload(need(p, "second", "payload"), true, true);
  std::vector<Element> hints;
  if (p.contains("hints")) {
    if (!p["hints"].is_array()) bad("payload.hints", "expected a list");
    for (size_t i = 0; i < p["hints"].size(); ++i)
      hints.push_back(to_element(p["hints"][i], "payload.hints[" + std::to_string(i) + "]"));
  }
  // Symbols are shared between the two characters; numeric ones are fresh per side.
  Pair x = build_pair(a.h, *a.chi, o, "a");
  Pair y = build_pair(b.h, *b.chi, o, "b");
  EquivalenceResult r = equivalent(x.chi, y.chi, static_cast<int>(o.radius), hints);
  json out = {{"status", to_string(r.status)}, {"reason", r.reason}, {"radius", o.radius}};
  if (r.status == Equivalence::equivalent) {
    out["g"] = r.g.str();
    out["certified"] = certifies(x.chi, y.chi, r.g);
  }
  return out;
}

json cmd_f_equivalents(const json& p, const ut4_context& o) {
  Parsed in = subgroup_payload(p, true, true);
  Pair pr = build_pair(in.h, *in.chi, o, "");
  json list = json::array();
  for (const auto& f : f_equivalents(pr.chi, static_cast<size_t>(o.limit))) {
    CaseValues v = case_values(f.nf.params, conjugate_character(f.chi, inv(f.nf.conjugator)));
    list.push_back({{"normal_form", normal_form_json(f.nf)},
                    {"subgroup", subgroup_json(f.chi.domain())},
                    {"values", values_json(v)}});
  }
  return {{"count", list.size()}, {"pairs", list}};
}

json cmd_verify(const json& p, const ut4_context& o) {
  only_keys(p, "payload", {"ranks", "subset", "reading", "max_listed"});
  auto [r1, r2] = to_ranks(need(p, "ranks", "payload"), "payload.ranks");
  std::vector<std::string> subs = subset_labels(r1, r2);
  if (p.contains("subset")) subs = {to_subset(p["subset"], r1, r2, "payload.subset")};
  Reading rd = p.contains("reading") ? to_reading(p["reading"], "payload.reading") : Reading::reconciled;
  size_t listed = p.contains("max_listed")
                      ? static_cast<size_t>(small_int(p["max_listed"], "payload.max_listed", 0, 1000000))
                      : 50;
  json reports = json::array();
  for (const auto& s : subs)
    reports.push_back(report_json(verify_case(CaseId{r1, r2, s}, static_cast<int>(o.box), rd, listed)));
  return {{"reports", reports}};
}

json cmd_enumerate(const json& p, const ut4_context& o) {
  only_keys(p, "payload", {"ranks", "subset", "reading"});
  auto [r1, r2] = to_ranks(need(p, "ranks", "payload"), "payload.ranks");
  std::string sub = p.contains("subset") ? to_subset(p["subset"], r1, r2, "payload.subset") : "";
  Reading rd = p.contains("reading") ? to_reading(p["reading"], "payload.reading") : Reading::reconciled;
  json list = json::array();
  for (const auto& q : enumerate_params(r1, r2, sub, static_cast<int>(o.box),
                                        static_cast<size_t>(o.limit), rd))
    list.push_back({{"subset", param_set_of(q, rd).subset},
                    {"params", params_json(q)},
                    {"generators", elements_json(phi_generators(q))}});
  return {{"count", list.size()}, {"tuples", list}};
}

json dispatch(const std::string& cmd, const json& payload, const ut4_context& o) {
  if (cmd == "ranks") return cmd_ranks(payload, o);
  if (cmd == "isolator") return cmd_isolator(payload, o);
  if (cmd == "classify") return cmd_classify(payload, o);
  if (cmd == "irreducible") return cmd_irreducible(payload, o);
  if (cmd == "stratum") return cmd_stratum(payload, o);
  if (cmd == "equivalent") return cmd_equivalent(payload, o);
  if (cmd == "f-equivalents") return cmd_f_equivalents(payload, o);
  if (cmd == "verify") return cmd_verify(payload, o);
  if (cmd == "enumerate") return cmd_enumerate(payload, o);
  throw UnknownCommand("unknown command \"" + cmd + "\"");
}

ut4_result* fail(ut4_status s, const std::string& msg, const std::string& cmd) {
  auto* r = new ut4_result;
  r->status = s;
  r->body = {{"ok", false}, {"error", {{"code", ut4_status_name(s)}, {"message", msg}}}};
  if (!cmd.empty()) r->body["command"] = cmd;
  return r;
}

template <class Fn>
ut4_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::bad_alloc&) {
    return UT4_E_INTERNAL;
  } catch (...) {
    return UT4_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* ut4_version(void) { return "1.0.0"; }

const char* ut4_status_name(ut4_status s) {
  switch (s) {
    case UT4_OK: return "ok";
    case UT4_E_ARGUMENT: return "argument";
    case UT4_E_SCHEMA: return "schema";
    case UT4_E_UNKNOWN_COMMAND: return "unknown_command";
    case UT4_E_PRECONDITION: return "precondition";
    case UT4_E_NUMERIC: return "numeric";
    case UT4_E_INTERNAL: return "internal";
  }
  return "invalid";
}

ut4_status ut4_context_new(ut4_context** out) {
  if (!out) return UT4_E_ARGUMENT;
  return guard([&] {
    *out = new ut4_context;
    return UT4_OK;
  });
}

void ut4_context_free(ut4_context* ctx) { delete ctx; }

ut4_status ut4_context_set_int(ut4_context* ctx, const char* key, int64_t v) {
  if (!ctx || !key) return UT4_E_ARGUMENT;
  const std::string k = key;
  if (k == "radius" && v >= 0 && v <= 12) ctx->radius = v;
  else if (k == "box" && v >= 0 && v <= 50) ctx->box = v;
  else if (k == "limit" && v >= 1) ctx->limit = v;
  else if (k == "numeric_q" && v >= 1 && v <= 100000) ctx->numeric_q = v;
  else return UT4_E_ARGUMENT;
  return UT4_OK;
}

ut4_status ut4_context_set_tolerance(ut4_context* ctx, double tol) {
  if (!ctx || !(tol > 0 && tol <= 1e-3)) return UT4_E_ARGUMENT;
  ctx->tolerance = tol;
  return UT4_OK;
}

ut4_status ut4_run(ut4_context* ctx, const char* request, ut4_result** out) {
  if (!ctx || !request || !out) return UT4_E_ARGUMENT;
  *out = nullptr;
  return guard([&] {
    std::string cmd;
    try {
      json req = json::parse(request);
      only_keys(req, "request", {"command", "payload", "options"});
      const json& c = need(req, "command", "request");
      if (!c.is_string()) bad("request.command", "expected a string");
      cmd = c.get<std::string>();
      ut4_context o = with_options(*ctx, req);
      json payload = req.contains("payload") ? req["payload"] : json::object();
      json res = dispatch(cmd, payload, o);
      auto* r = new ut4_result;
      r->body = {{"ok", true}, {"command", cmd}, {"result", std::move(res)}};
      *out = r;
    } catch (const json::exception& e) {
      *out = fail(UT4_E_SCHEMA, e.what(), cmd);
    } catch (const SchemaError& e) {
      *out = fail(UT4_E_SCHEMA, e.what(), cmd);
    } catch (const UnknownCommand& e) {
      *out = fail(UT4_E_UNKNOWN_COMMAND, e.what(), cmd);
    } catch (const NumericError& e) {
      *out = fail(UT4_E_NUMERIC, e.what(), cmd);
    } catch (const std::invalid_argument& e) {  // structure, precondition, relations
      *out = fail(UT4_E_PRECONDITION, e.what(), cmd);
    } catch (const std::out_of_range& e) {
      *out = fail(UT4_E_PRECONDITION, e.what(), cmd);
    } catch (const std::exception& e) {
      *out = fail(UT4_E_INTERNAL, e.what(), cmd);
    }
    return (*out)->status;
  });
}

ut4_status ut4_result_status(const ut4_result* r) { return r ? r->status : UT4_E_ARGUMENT; }

const char* ut4_result_json(ut4_result* r, int indent) {
  if (!r) return nullptr;
  r->text = r->body.dump(indent < 0 ? -1 : indent);
  return r->text.c_str();
}

void ut4_result_free(ut4_result* r) { delete r; }

ut4_status ut4_subgroup_new(const int64_t* coords, size_t n, ut4_subgroup** out) {
  if (!out || (n > 0 && !coords)) return UT4_E_ARGUMENT;
  return guard([&] {
    std::vector<Element> gens;
    for (size_t i = 0; i < n; ++i) {
      const int64_t* c = coords + 6 * i;
      gens.push_back(Element::make(c[0], c[1], c[2], c[3], c[4], c[5]));
    }
    *out = new ut4_subgroup{Subgroup::generate(gens)};
    return UT4_OK;
  });
}

void ut4_subgroup_free(ut4_subgroup* h) { delete h; }

ut4_status ut4_subgroup_ranks(const ut4_subgroup* h, int* rk1, int* rk2, int* rk3) {
  if (!h || !rk1 || !rk2 || !rk3) return UT4_E_ARGUMENT;
  Ranks r = h->h.ranks();
  *rk1 = r.rk1;
  *rk2 = r.rk2;
  *rk3 = r.rk3;
  return UT4_OK;
}

ut4_status ut4_subgroup_contains(const ut4_subgroup* h, const int64_t* c, int* out) {
  if (!h || !c || !out) return UT4_E_ARGUMENT;
  return guard([&] {
    *out = h->h.contains(Element::make(c[0], c[1], c[2], c[3], c[4], c[5])) ? 1 : 0;
    return UT4_OK;
  });
}

ut4_status ut4_subgroup_index(const ut4_subgroup* h, int64_t* out) {
  if (!h || !out) return UT4_E_ARGUMENT;
  return guard([&] {
    try {
      *out = index(Subgroup::whole_group(), h->h).to_int64();
    } catch (const std::overflow_error&) {
      return UT4_E_NUMERIC;
    }
    return UT4_OK;
  });
}

ut4_status ut4_subgroup_is_isolated(const ut4_subgroup* h, int* out) {
  if (!h || !out) return UT4_E_ARGUMENT;
  return guard([&] {
    *out = is_isolated(h->h) ? 1 : 0;
    return UT4_OK;
  });
}

ut4_status ut4_lift_root(double re, double im, int max_q, double tol, int64_t* p, int64_t* q) {
  if (!p || !q || max_q < 1 || !(tol > 0)) return UT4_E_ARGUMENT;
  return guard([&] {
    mpq_class t;
    try {
      if (!lift_root_of_unity({re, im}, max_q, tol, t)) return UT4_E_NUMERIC;
    } catch (const std::invalid_argument&) {
      return UT4_E_NUMERIC;
    }
    *p = t.get_num().get_si();
    *q = t.get_den().get_si();
    return UT4_OK;
  });
}

}  // extern "C"
