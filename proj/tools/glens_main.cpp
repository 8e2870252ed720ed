// command-line front end: law checking, isomorphism comparisons,
// composition of serialized lenses, machine simulation, and comonoid
// enumeration over finite-set data.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glens/json_io.hpp"

namespace {

using namespace glens;

std::string g_format = "text";
long long g_limit = 0;

template <typename Report>
void print_report_text(const Report& r) {
  std::ostringstream out;
  out << "subject: " << r.subject << "\n";
  out << "checks: " << r.checks << "\n";
  for (const Violation& v : r.violations) {
    out << "violation: " << v.rule << " at [";
    for (size_t i = 0; i < v.at.size(); ++i)
      out << (i ? " " : "") << v.at[i];
    out << "]";
    if (!v.note.empty()) out << " " << v.note;
    out << "\n";
  }
  out << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  std::cout << out.str();
}

template <typename Report>
int emit_report(const Report& r) {
  if (g_format == "json")
    std::cout << canonical_dump(report_to_json(r));
  else
    print_report_text(r);
  return r.pass() ? 0 : 1;
}

int run_laws(const std::string& path) {
  json doc = parse_file(path);
  std::string schema = schema_of(doc);
  if (schema == "glens/v1/category") {
    return emit_report(check_category_laws(category_from_json(doc)));
  }
  if (schema == "glens/v1/indexed") {
    IndexedDoc idx = indexed_from_json(doc);
    return emit_report(check_indexed_laws(idx.data, idx.variance));
  }
  if (schema == "glens/v1/smc-comonoids") {
    SmcComonoidsDoc cs = smc_comonoids_from_json(doc);
    StrictSmc smc = smc_by_name(cs.smc_name);
    LawReport merged;
    merged.subject = cs.smc_name + "-comonoids(" +
                     std::to_string(cs.comonoids.size()) + ")";
    for (size_t i = 0; i < cs.comonoids.size(); ++i) {
      LawReport r = check_comonoid(smc, cs.comonoids[i]);
      merged.checks += r.checks;
      for (Violation& v : r.violations) {
        v.at.insert(v.at.begin(), (long long)i);
        merged.violations.push_back(std::move(v));
      }
    }
    return emit_report(merged);
  }
  throw ParseError("laws: unsupported schema '" + schema + "'");
}

int run_iso(const std::string& path) {
  json doc = parse_file(path);
  std::string schema = schema_of(doc);
  if (schema == "glens/v1/indexed") {
    IndexedDoc idx = indexed_from_json(doc);
    if (idx.variance != Variance::contravariant)
      throw MalformedData("iso: the comparison needs contravariant data");
    return emit_report(check_three_way_iso(idx.data, g_limit));
  }
  if (schema == "glens/v1/category") {
    return emit_report(
        check_twisted_arrow_iso(category_from_json(doc), g_limit));
  }
  throw ParseError("iso: unsupported schema '" + schema + "'");
}

int run_compose(const std::string& path1, const std::string& path2,
                const std::string& out_path) {
  json doc1 = parse_file(path1);
  json doc2 = parse_file(path2);
  std::string s1 = schema_of(doc1), s2 = schema_of(doc2);

  json composite;
  if (s1 == "glens/v1/function" && s2 == "glens/v1/function") {
    composite = fn_to_json(compose(fn_from_json(doc1), fn_from_json(doc2)));
  } else if (s1 == "glens/v1/lens" && s2 == "glens/v1/lens") {
    composite = lens_to_json(
        compose_classic(lens_from_json(doc1), lens_from_json(doc2)));
  } else if (s1 == "glens/v1/prism" && s2 == "glens/v1/prism") {
    composite = prism_to_json(
        compose_prism(prism_from_json(doc1), prism_from_json(doc2)));
  } else if (s1 == "glens/v1/flens" && s2 == "glens/v1/flens") {
    composite = family_lens_to_json(
        compose_family(family_lens_from_json(doc1),
                       family_lens_from_json(doc2)));
  } else if (s1 == "glens/v1/machine" && s2 == "glens/v1/lens") {
    composite = machine_to_json(
        wire(machine_from_json(doc1), lens_from_json(doc2)));
  } else {
    throw ParseError("compose: unsupported schema pair '" + s1 + "' + '" +
                     s2 + "'");
  }

  if (out_path.empty()) {
    std::cout << canonical_dump(composite);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << canonical_dump(composite);
    if (g_format == "json")
      std::cout << canonical_dump(
          json{{"schema", "glens/v1/written"}, {"path", out_path}});
    else
      std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

std::vector<int> parse_inputs(const std::string& spec) {
  std::vector<int> out;
  std::string cur;
  std::stringstream ss(spec);
  while (std::getline(ss, cur, ',')) {
    if (cur.empty()) continue;
    try {
      size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("inputs: '" + cur + "' is not an integer");
    }
  }
  return out;
}

int run_simulate(const std::string& path, int initial,
                 const std::string& inputs_spec, bool oracle) {
  MooreMachine m = machine_from_json(parse_file(path));
  std::vector<int> inputs = parse_inputs(inputs_spec);
  Trace t = run(m, initial, inputs);
  if (oracle) {
    Trace via = run_via_lens(m, initial, inputs);
    if (!(via == t))
      throw Error("simulation disagrees with its lens-composition oracle");
  }
  if (g_format == "json") {
    std::cout << canonical_dump(trace_to_json(t));
  } else {
    std::ostringstream out;
    out << "outputs:";
    for (int o : t.outputs) out << " " << o;
    out << "\nfinal: " << t.final << "\n";
    std::cout << out.str();
  }
  return 0;
}

int run_enumerate(const std::string& smc_name, int object) {
  StrictSmc smc = smc_by_name(smc_name);
  std::vector<Comonoid> found = enumerate_comonoids(smc, object, g_limit);
  if (g_format == "json") {
    std::cout << canonical_dump(
        smc_comonoids_to_json({smc_name, found}));
  } else {
    std::ostringstream out;
    out << "object: " << object << "\n";
    out << "count: " << found.size() << "\n";
    for (const Comonoid& c : found)
      out << "comonoid: counit=" << fn_rank(c.counit)
          << " comult=" << fn_rank(c.comult) << "\n";
    std::cout << out.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();

  CLI::App app{"finite lens algebra toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit", g_limit,
                 "construction size bound (0 = default / GLENS_LIMIT)");

  std::string laws_file;
  CLI::App* laws = app.add_subcommand("laws", "check the laws of a document");
  laws->add_option("file", laws_file, "input document")->required();

  std::string iso_file;
  CLI::App* iso =
      app.add_subcommand("iso", "run the isomorphism comparison for a document");
  iso->add_option("file", iso_file, "input document")->required();

  std::string comp_a, comp_b, comp_out;
  CLI::App* comp = app.add_subcommand("compose", "compose two documents");
  comp->add_option("first", comp_a, "first factor")->required();
  comp->add_option("second", comp_b, "second factor")->required();
  comp->add_option("-o,--output", comp_out, "write the composite here");

  std::string sim_file, sim_inputs;
  int sim_initial = 0;
  bool sim_oracle = false;
  CLI::App* sim = app.add_subcommand("simulate", "run a machine on a word");
  sim->add_option("file", sim_file, "machine document")->required();
  sim->add_option("--initial", sim_initial, "starting state")->required();
  sim->add_option("--inputs", sim_inputs, "comma-separated input word");
  sim->add_flag("--oracle", sim_oracle,
                "cross-check against stepwise lens composition");

  std::string enum_smc = "finset-cartesian";
  int enum_object = 0;
  CLI::App* enu =
      app.add_subcommand("enumerate-comonoids", "list comonoids on a carrier");
  enu->add_option("--smc", enum_smc, "monoidal structure");
  enu->add_option("--object", enum_object, "carrier size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  int code = 0;
  try {
    if (laws->parsed())
      code = run_laws(laws_file);
    else if (iso->parsed())
      code = run_iso(iso_file);
    else if (comp->parsed())
      code = run_compose(comp_a, comp_b, comp_out);
    else if (sim->parsed())
      code = run_simulate(sim_file, sim_initial, sim_inputs, sim_oracle);
    else if (enu->parsed())
      code = run_enumerate(enum_smc, enum_object);
  } catch (const glens::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const glens::MalformedData& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const glens::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed ms: " << elapsed.count() << "\n";
  return code;
}
