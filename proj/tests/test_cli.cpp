#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "glens/json_io.hpp"

using namespace glens;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* cli_path() {
  const char* p = std::getenv("GLENS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "GLENS_CLI must point at the tool binary");
  return p;
}

std::string fixture(const std::string& name) {
  const char* d = std::getenv("GLENS_FIXTURES");
  REQUIRE_MESSAGE(d != nullptr, "GLENS_FIXTURES must point at the corpus");
  return (fs::path(d) / name).string();
}

// Run the tool through the shell, capturing exit code and both streams.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path();
  std::string tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
  fs::path out = dir / ("glens_test_out_" + tag);
  fs::path err = dir / ("glens_test_err_" + tag);
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" +
                    std::string(cli_path()) + "\" " + args + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

// A scratch file holding canonical JSON, removed on destruction.
struct TempDoc {
  fs::path path;
  explicit TempDoc(const json& doc) {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("glens_doc_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".json");
    std::ofstream out(path);
    out << canonical_dump(doc);
  }
  ~TempDoc() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("law checking a sound category exits zero") {
  CliResult r = run_cli("laws " + fixture("walking_arrow.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "result: PASS"));
  CHECK(contains(r.out, "subject: category(objects=2"));
  CHECK(contains(r.err, "elapsed ms:"));

  // The fixture is exactly the built-in two-object arrow category.
  CHECK(category_from_json(parse_file(fixture("walking_arrow.json"))) ==
        walking_arrow());
}

TEST_CASE("exit codes separate law violations from malformed input") {
  CliResult bad = run_cli("laws " + fixture("parallel_pair_corrupt.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "violation: right-unit at [2 1]"));
  CHECK(contains(bad.out, "result: FAIL"));

  CHECK(run_cli("laws " + fixture("truncated.json")).code == 2);
  CHECK(run_cli("laws " + fixture("bad_schema.json")).code == 2);
  CHECK(run_cli("laws " + fixture("out_of_range.json")).code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("simulate " + fixture("toggle.json")).code == 2);  // no --initial
}

TEST_CASE("reports are byte-identical across runs") {
  std::string cmd = "--format json laws " + fixture("walking_arrow.json");
  CliResult a = run_cli(cmd), b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json parsed = parse_string(a.out, "report");
  CHECK(parsed["pass"] == true);

  // And identical to the in-process rendering of the same report.
  CHECK(a.out == canonical_dump(report_to_json(
                     check_category_laws(walking_arrow()))));
}

TEST_CASE("law checking dispatches on the document schema") {
  SliceIndexed s = slice_indexed(1, 1);
  TempDoc indexed(indexed_to_json(s.data, Variance::contravariant));
  CliResult r = run_cli("laws " + indexed.str());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "result: PASS"));

  CliResult good = run_cli("laws " + fixture("comonoids_diagonal.json"));
  CHECK(good.code == 0);
  CHECK(contains(good.out, "subject: finset-cartesian-comonoids(3)"));

  CliResult bad = run_cli("laws " + fixture("comonoids_bad.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "counit-right"));
}

TEST_CASE("the isomorphism comparisons run from serialized data") {
  SliceIndexed s = slice_indexed(1, 1);
  TempDoc indexed(indexed_to_json(s.data, Variance::contravariant));
  CliResult r = run_cli("iso " + indexed.str());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "subject: three-way lens-category comparison"));
  CHECK(contains(r.out, "result: PASS"));

  CliResult tw = run_cli("iso " + fixture("walking_arrow.json"));
  CHECK(tw.code == 0);
  CHECK(contains(tw.out, "lens-category-vs-twisted-arrow"));

  TempDoc cov(indexed_to_json(s.data, Variance::covariant));
  CHECK(run_cli("iso " + cov.str()).code == 2);
}

TEST_CASE("compose handles every documented schema pairing") {
  FinFn f{1, 3, {2}}, g{3, 2, {0, 0, 1}};
  TempDoc fd(fn_to_json(f)), gd(fn_to_json(g));
  CliResult fn_r = run_cli("compose " + fd.str() + " " + gd.str());
  CHECK(fn_r.code == 0);
  CHECK(fn_r.out == canonical_dump(fn_to_json(compose(f, g))));

  ClassicLens swap = lens_from_json(parse_file(fixture("lens_swap.json")));
  ClassicLens toggleput =
      lens_from_json(parse_file(fixture("lens_toggleput.json")));
  CliResult lens_r = run_cli("compose " + fixture("lens_swap.json") + " " +
                             fixture("lens_toggleput.json"));
  CHECK(lens_r.code == 0);
  CHECK(lens_r.out ==
        canonical_dump(lens_to_json(compose_classic(swap, toggleput))));

  PrismData inj = prism_from_json(parse_file(fixture("prism_inject.json")));
  PrismData flip = prism_from_json(parse_file(fixture("prism_flip.json")));
  CliResult prism_r = run_cli("compose " + fixture("prism_inject.json") + " " +
                              fixture("prism_flip.json"));
  CHECK(prism_r.code == 0);
  CHECK(prism_r.out == canonical_dump(prism_to_json(compose_prism(inj, flip))));

  FamilyLens count = family_lens_from_json(parse_file(fixture("flens_count.json")));
  FamilyLens pick = family_lens_from_json(parse_file(fixture("flens_pick.json")));
  CliResult flens_r = run_cli("compose " + fixture("flens_count.json") + " " +
                              fixture("flens_pick.json"));
  CHECK(flens_r.code == 0);
  CHECK(flens_r.out ==
        canonical_dump(family_lens_to_json(compose_family(count, pick))));

  MooreMachine toggle = machine_from_json(parse_file(fixture("toggle.json")));
  ClassicLens feed_one{identity_fn(2), constant_fn(2, 2, 1)};
  TempDoc wd(lens_to_json(feed_one));
  CliResult wire_r = run_cli("compose " + fixture("toggle.json") + " " + wd.str());
  CHECK(wire_r.code == 0);
  CHECK(wire_r.out == canonical_dump(machine_to_json(wire(toggle, feed_one))));

  CHECK(run_cli("compose " + fixture("lens_swap.json") + " " +
                fixture("lens_tiny.json")).code == 1);
  CHECK(run_cli("compose " + fixture("toggle.json") + " " +
                fixture("toggle.json")).code == 2);
}

TEST_CASE("compose can write its result to a file") {
  fs::path target = fs::temp_directory_path() /
                    ("glens_composite_" + std::to_string(::getpid()) + ".json");
  CliResult r = run_cli("compose " + fixture("lens_swap.json") + " " +
                        fixture("lens_toggleput.json") + " -o " +
                        target.string());
  CHECK(r.code == 0);
  CHECK(r.out == "wrote " + target.string() + "\n");
  ClassicLens swap = lens_from_json(parse_file(fixture("lens_swap.json")));
  ClassicLens toggleput =
      lens_from_json(parse_file(fixture("lens_toggleput.json")));
  CHECK(slurp(target) ==
        canonical_dump(lens_to_json(compose_classic(swap, toggleput))));

  CliResult rj = run_cli("--format json compose " + fixture("lens_swap.json") +
                         " " + fixture("lens_toggleput.json") + " -o " +
                         target.string());
  CHECK(rj.code == 0);
  json written = parse_string(rj.out, "written");
  CHECK(written["schema"] == "glens/v1/written");
  CHECK(written["path"] == target.string());
  fs::remove(target);
}

TEST_CASE("simulation renders traces and honors the oracle flag") {
  std::string base = "simulate " + fixture("toggle.json") +
                     " --initial 0 --inputs 1,1,0,1";
  CliResult r = run_cli(base);
  CHECK(r.code == 0);
  CHECK(r.out == "outputs: 0 1 0 0 1\nfinal: 1\n");
  CHECK(run_cli(base + " --oracle").code == 0);

  CliResult rj = run_cli("--format json " + base);
  MooreMachine toggle = machine_from_json(parse_file(fixture("toggle.json")));
  CHECK(rj.out == canonical_dump(trace_to_json(run(toggle, 0, {1, 1, 0, 1}))));
  CliResult rj2 = run_cli("--format json " + base);
  CHECK(rj.out == rj2.out);

  CHECK(run_cli("simulate " + fixture("toggle.json") +
                " --initial 5 --inputs 1").code == 1);
  CHECK(run_cli("simulate " + fixture("toggle.json") +
                " --initial 0 --inputs 1,x").code == 2);
}

TEST_CASE("comonoid enumeration is exact about what it finds") {
  CliResult r = run_cli("enumerate-comonoids --object 2");
  CHECK(r.code == 0);
  CHECK(r.out == "object: 2\ncount: 1\ncomonoid: counit=0 comult=3\n");

  CliResult rj = run_cli("--format json enumerate-comonoids --object 2");
  CHECK(rj.out == canonical_dump(smc_comonoids_to_json(
                      {"finset-cartesian", {diagonal_comonoid(2)}})));

  CliResult none = run_cli(
      "enumerate-comonoids --smc finset-cocartesian --object 1");
  CHECK(none.code == 0);
  CHECK(none.out == "object: 1\ncount: 0\n");

  CHECK(run_cli("--limit 10 enumerate-comonoids --object 3").code == 1);
  CHECK(run_cli("enumerate-comonoids --object 3", "GLENS_LIMIT=10").code == 1);
  CHECK(run_cli("enumerate-comonoids --smc bogus --object 1").code == 2);
}
