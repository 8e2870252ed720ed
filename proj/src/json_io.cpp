#include "glens/json_io.hpp"

#include <fstream>
#include <sstream>

namespace glens {

namespace {

const json& need(const json& j, const char* field, const std::string& where) {
  if (!j.is_object())
    throw ParseError(where + ": expected an object");
  auto it = j.find(field);
  if (it == j.end())
    throw ParseError(where + ": missing field '" + field + "'");
  return *it;
}

int need_int(const json& j, const char* field, const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_number_integer())
    throw ParseError(where + ": field '" + field + "' must be an integer");
  return v.get<int>();
}

long long need_ll(const json& j, const char* field, const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_number_integer())
    throw ParseError(where + ": field '" + field + "' must be an integer");
  return v.get<long long>();
}

std::vector<int> need_int_array(const json& j, const char* field,
                                const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_array())
    throw ParseError(where + ": field '" + field + "' must be an array");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer())
      throw ParseError(where + ": field '" + field +
                       "' must contain only integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::string need_string(const json& j, const char* field,
                        const std::string& where) {
  const json& v = need(j, field, where);
  if (!v.is_string())
    throw ParseError(where + ": field '" + field + "' must be a string");
  return v.get<std::string>();
}

void need_schema(const json& j, const std::string& expected,
                 const std::string& where) {
  std::string got = need_string(j, "schema", where);
  if (got != expected)
    throw ParseError(where + ": schema is '" + got + "', expected '" +
                     expected + "'");
}

}  // namespace

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json parse_string(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str(), path);
}

std::string schema_of(const json& j) {
  return need_string(j, "schema", "document");
}

// ---------------------------------------------------------------------------

json fn_to_json(const FinFn& f) {
  return {{"schema", "glens/v1/function"},
          {"dom", f.dom},
          {"cod", f.cod},
          {"table", f.table}};
}

FinFn fn_from_json(const json& j) {
  std::string where = "function";
  need_schema(j, "glens/v1/function", where);
  FinFn f;
  f.dom = need_int(j, "dom", where);
  f.cod = need_int(j, "cod", where);
  f.table = need_int_array(j, "table", where);
  validate_fn(f);  // range errors are data errors, not parse errors
  return f;
}

json category_to_json(const FinCategory& c) {
  json mors = json::array();
  for (int m = 0; m < c.mor_count(); ++m)
    mors.push_back({{"dom", c.dom(m)}, {"cod", c.cod(m)}});
  json comp = json::array();
  for (int f = 0; f < c.mor_count(); ++f)
    for (int g = 0; g < c.mor_count(); ++g)
      if (c.composable(f, g)) comp.push_back({f, g, c.comp_raw(f, g)});
  return {{"schema", "glens/v1/category"},
          {"objects", c.n_objects},
          {"morphisms", mors},
          {"identity", c.identity},
          {"comp", comp}};
}

FinCategory category_from_json(const json& j) {
  std::string where = "category";
  need_schema(j, "glens/v1/category", where);
  FinCategory c;
  c.n_objects = need_int(j, "objects", where);
  if (c.n_objects < 0) throw MalformedData(where + ": negative object count");
  const json& mors = need(j, "morphisms", where);
  if (!mors.is_array())
    throw ParseError(where + ": field 'morphisms' must be an array");
  for (size_t m = 0; m < mors.size(); ++m) {
    std::string at = where + ".morphisms[" + std::to_string(m) + "]";
    int d = need_int(mors[m], "dom", at);
    int cd = need_int(mors[m], "cod", at);
    if (d < 0 || d >= c.n_objects || cd < 0 || cd >= c.n_objects)
      throw MalformedData(at + ": endpoint out of range");
    c.morphisms.push_back({d, cd});
  }
  c.identity = need_int_array(j, "identity", where);
  if ((int)c.identity.size() != c.n_objects)
    throw MalformedData(where + ": one identity per object expected");
  for (int i : c.identity)
    if (i < 0 || i >= c.mor_count())
      throw MalformedData(where + ": identity id out of range");
  const json& comp = need(j, "comp", where);
  if (!comp.is_array())
    throw ParseError(where + ": field 'comp' must be an array");
  c.comp_table.assign((size_t)c.mor_count() * c.mor_count(), -1);
  for (size_t t = 0; t < comp.size(); ++t) {
    std::string at = where + ".comp[" + std::to_string(t) + "]";
    const json& triple = comp[t];
    if (!triple.is_array() || triple.size() != 3 ||
        !triple[0].is_number_integer() || !triple[1].is_number_integer() ||
        !triple[2].is_number_integer())
      throw ParseError(at + ": expected an integer triple");
    int f = triple[0].get<int>(), g = triple[1].get<int>(),
        fg = triple[2].get<int>();
    if (f < 0 || f >= c.mor_count() || g < 0 || g >= c.mor_count() ||
        fg < 0 || fg >= c.mor_count())
      throw MalformedData(at + ": morphism id out of range");
    c.comp_table[(size_t)f * c.mor_count() + g] = fg;
  }
  return c;
}

json indexed_to_json(const IndexedCat& f, Variance v) {
  json fibers = json::array();
  for (const FinCategory& fib : f.fibers) fibers.push_back(category_to_json(fib));
  json reindex = json::array();
  for (const FunctorData& r : f.reindex)
    reindex.push_back({{"obj_map", r.obj_map}, {"mor_map", r.mor_map}});
  return {{"schema", "glens/v1/indexed"},
          {"variance",
           v == Variance::contravariant ? "contravariant" : "covariant"},
          {"base", category_to_json(f.base)},
          {"fibers", fibers},
          {"reindex", reindex}};
}

IndexedDoc indexed_from_json(const json& j) {
  std::string where = "indexed";
  need_schema(j, "glens/v1/indexed", where);
  IndexedDoc doc;
  std::string v = need_string(j, "variance", where);
  if (v == "contravariant")
    doc.variance = Variance::contravariant;
  else if (v == "covariant")
    doc.variance = Variance::covariant;
  else
    throw ParseError(where + ": unknown variance '" + v + "'");
  doc.data.base = category_from_json(need(j, "base", where));
  const json& fibers = need(j, "fibers", where);
  if (!fibers.is_array())
    throw ParseError(where + ": field 'fibers' must be an array");
  for (const json& fib : fibers)
    doc.data.fibers.push_back(category_from_json(fib));
  const json& reindex = need(j, "reindex", where);
  if (!reindex.is_array())
    throw ParseError(where + ": field 'reindex' must be an array");
  if ((int)doc.data.fibers.size() != doc.data.base.n_objects)
    throw MalformedData(where + ": one fiber per base object expected");
  if ((int)reindex.size() != doc.data.base.mor_count())
    throw MalformedData(where + ": one reindex entry per base morphism");
  for (size_t m = 0; m < reindex.size(); ++m) {
    std::string at = where + ".reindex[" + std::to_string(m) + "]";
    FunctorData r;
    int src = doc.variance == Variance::contravariant
                  ? doc.data.base.cod((int)m)
                  : doc.data.base.dom((int)m);
    int dst = doc.variance == Variance::contravariant
                  ? doc.data.base.dom((int)m)
                  : doc.data.base.cod((int)m);
    r.source = doc.data.fibers[src];
    r.target = doc.data.fibers[dst];
    r.obj_map = need_int_array(reindex[m], "obj_map", at);
    r.mor_map = need_int_array(reindex[m], "mor_map", at);
    doc.data.reindex.push_back(std::move(r));
  }
  return doc;
}

json family_to_json(const std::vector<int>& sizes) {
  return {{"schema", "glens/v1/family"},
          {"base", (int)sizes.size()},
          {"sizes", sizes}};
}

std::vector<int> family_from_json(const json& j) {
  std::string where = "family";
  need_schema(j, "glens/v1/family", where);
  std::vector<int> sizes = need_int_array(j, "sizes", where);
  int base = need_int(j, "base", where);
  if (base != (int)sizes.size())
    throw MalformedData(where + ": base size does not match the family");
  for (int s : sizes)
    if (s < 0) throw MalformedData(where + ": negative fiber size");
  return sizes;
}

json lens_to_json(const ClassicLens& l) {
  return {{"schema", "glens/v1/lens"},
          {"get", fn_to_json(l.get)},
          {"put", fn_to_json(l.put)}};
}

ClassicLens lens_from_json(const json& j) {
  std::string where = "lens";
  need_schema(j, "glens/v1/lens", where);
  return {fn_from_json(need(j, "get", where)),
          fn_from_json(need(j, "put", where))};
}

json prism_to_json(const PrismData& p) {
  return {{"schema", "glens/v1/prism"},
          {"get", fn_to_json(p.get)},
          {"put", fn_to_json(p.put)}};
}

PrismData prism_from_json(const json& j) {
  std::string where = "prism";
  need_schema(j, "glens/v1/prism", where);
  return {fn_from_json(need(j, "get", where)),
          fn_from_json(need(j, "put", where))};
}

json family_lens_to_json(const FamilyLens& l) {
  json puts = json::array();
  for (const FinFn& p : l.puts) puts.push_back(fn_to_json(p));
  return {{"schema", "glens/v1/flens"},
          {"get", fn_to_json(l.get)},
          {"src", l.src},
          {"dst", l.dst},
          {"puts", puts}};
}

FamilyLens family_lens_from_json(const json& j) {
  std::string where = "flens";
  need_schema(j, "glens/v1/flens", where);
  FamilyLens l;
  l.get = fn_from_json(need(j, "get", where));
  l.src = need_int_array(j, "src", where);
  l.dst = need_int_array(j, "dst", where);
  const json& puts = need(j, "puts", where);
  if (!puts.is_array())
    throw ParseError(where + ": field 'puts' must be an array");
  for (const json& p : puts) l.puts.push_back(fn_from_json(p));
  validate_family_lens(l);
  return l;
}

json machine_to_json(const MooreMachine& m) {
  return {{"schema", "glens/v1/machine"},
          {"states", m.states},
          {"inputs", m.inputs},
          {"outputs", m.outputs},
          {"readout", fn_to_json(m.readout)},
          {"update", fn_to_json(m.update)}};
}

MooreMachine machine_from_json(const json& j) {
  std::string where = "machine";
  need_schema(j, "glens/v1/machine", where);
  MooreMachine m;
  m.states = need_int(j, "states", where);
  m.inputs = need_int(j, "inputs", where);
  m.outputs = need_int(j, "outputs", where);
  m.readout = fn_from_json(need(j, "readout", where));
  m.update = fn_from_json(need(j, "update", where));
  validate_machine(m);
  return m;
}

json trace_to_json(const Trace& t) {
  return {{"schema", "glens/v1/trace"},
          {"initial", t.initial},
          {"inputs", t.inputs},
          {"outputs", t.outputs},
          {"final", t.final}};
}

StrictSmc smc_by_name(const std::string& name) {
  if (name == "finset-cartesian") return finset_cartesian_smc();
  if (name == "finset-cocartesian") return finset_cocartesian_smc();
  throw ParseError("unknown monoidal structure '" + name + "'");
}

json smc_comonoids_to_json(const SmcComonoidsDoc& doc) {
  json cs = json::array();
  for (const Comonoid& c : doc.comonoids)
    cs.push_back({{"object", c.object},
                  {"counit", fn_rank(c.counit)},
                  {"comult", fn_rank(c.comult)}});
  return {{"schema", "glens/v1/smc-comonoids"},
          {"smc", doc.smc_name},
          {"comonoids", cs}};
}

SmcComonoidsDoc smc_comonoids_from_json(const json& j) {
  std::string where = "smc-comonoids";
  need_schema(j, "glens/v1/smc-comonoids", where);
  SmcComonoidsDoc doc;
  doc.smc_name = need_string(j, "smc", where);
  StrictSmc smc = smc_by_name(doc.smc_name);
  const json& cs = need(j, "comonoids", where);
  if (!cs.is_array())
    throw ParseError(where + ": field 'comonoids' must be an array");
  for (size_t i = 0; i < cs.size(); ++i) {
    std::string at = where + ".comonoids[" + std::to_string(i) + "]";
    int object = need_int(cs[i], "object", at);
    if (object < 0) throw MalformedData(at + ": negative carrier");
    long long counit = need_ll(cs[i], "counit", at);
    long long comult = need_ll(cs[i], "comult", at);
    if (counit < 0 || comult < 0)
      throw MalformedData(at + ": negative structure-map rank");
    long long counit_total = count_fns(object, smc.unit, counit);
    long long comult_total =
        count_fns(object, smc.tensor_obj(object, object), comult);
    if (counit >= counit_total || comult >= comult_total)
      throw MalformedData(at + ": structure-map rank out of range");
    doc.comonoids.push_back(
        {object, fn_unrank(object, smc.unit, counit),
         fn_unrank(object, smc.tensor_obj(object, object), comult)});
  }
  return doc;
}

namespace {

json violations_to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const Violation& v : vs) {
    json e = {{"rule", v.rule}, {"at", v.at}};
    if (!v.note.empty()) e["note"] = v.note;
    out.push_back(e);
  }
  return out;
}

}  // namespace

json report_to_json(const LawReport& r) {
  return {{"schema", "glens/v1/report"},
          {"subject", r.subject},
          {"checks", r.checks},
          {"pass", r.pass()},
          {"violations", violations_to_json(r.violations)}};
}

json report_to_json(const IsoReport& r) {
  return {{"schema", "glens/v1/report"},
          {"subject", r.subject},
          {"checks", r.checks},
          {"pass", r.pass()},
          {"violations", violations_to_json(r.violations)}};
}

}  // namespace glens
