#pragma once

// Canonical JSON codecs for every datum the tool reads or writes.  Every
// document carries a "schema" field of the form glens/v1/<kind>.  Output is
// byte-deterministic: sorted keys, two-space indent, trailing newline.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glens/comonoid.hpp"
#include "glens/dynamics.hpp"
#include "glens/instances.hpp"

namespace glens {

using json = nlohmann::json;

std::string canonical_dump(const json& j);
json parse_string(const std::string& text, const std::string& where);
json parse_file(const std::string& path);
// The document's schema tag, e.g. "glens/v1/lens".
std::string schema_of(const json& j);

json fn_to_json(const FinFn& f);
FinFn fn_from_json(const json& j);

// Composition is stored sparsely as [f, g, composite] triples.
json category_to_json(const FinCategory& c);
FinCategory category_from_json(const json& j);

struct IndexedDoc {
  IndexedCat data;
  Variance variance = Variance::contravariant;
};

json indexed_to_json(const IndexedCat& f, Variance v);
IndexedDoc indexed_from_json(const json& j);

json family_to_json(const std::vector<int>& sizes);
std::vector<int> family_from_json(const json& j);

json lens_to_json(const ClassicLens& l);
ClassicLens lens_from_json(const json& j);

json prism_to_json(const PrismData& p);
PrismData prism_from_json(const json& j);

json family_lens_to_json(const FamilyLens& l);
FamilyLens family_lens_from_json(const json& j);

json machine_to_json(const MooreMachine& m);
MooreMachine machine_from_json(const json& j);

json trace_to_json(const Trace& t);

// Comonoid structure maps are stored by their lexicographic table rank;
// the named SMC supplies the endpoint sizes needed to unrank them.
struct SmcComonoidsDoc {
  std::string smc_name;
  std::vector<Comonoid> comonoids;
};

StrictSmc smc_by_name(const std::string& name);
json smc_comonoids_to_json(const SmcComonoidsDoc& doc);
SmcComonoidsDoc smc_comonoids_from_json(const json& j);

json report_to_json(const LawReport& r);
json report_to_json(const IsoReport& r);

}  // namespace glens
