#pragma once

// Comonoids in a strict symmetric monoidal category of finite sets, the
// category they form, coKleisli fibers over them, and the resulting
// duplicate-then-update lens category.

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "glens/indexed.hpp"

namespace glens {

// A strict symmetric monoidal category presented by its operations.  The
// carrier is intensional: objects are sizes, morphisms are concrete tables,
// and hom-sets are only enumerated on demand (tensor-closed dense carriers
// would be astronomically large).
struct StrictSmc {
  std::string name;
  int unit = 0;
  std::function<int(int, int)> tensor_obj;
  std::function<FinFn(const FinFn&, const FinFn&)> tensor_mor;
  std::function<FinFn(int, int)> symmetry;  // a (x) b -> b (x) a
  std::function<FinFn(int)> identity;
  std::function<FinFn(const FinFn&, const FinFn&)> compose;  // f then g
  std::function<int(const FinFn&)> src;
  std::function<int(const FinFn&)> dst;
  std::function<long long(int, int, long long)> hom_count;  // capped
  std::function<std::vector<FinFn>(int, int)> hom;
};

StrictSmc finset_cartesian_smc();    // product tensor, unit 1
StrictSmc finset_cocartesian_smc();  // coproduct tensor, unit 0

// Exhaustive law check over all objects up to probe_bound: tensor
// functoriality and interchange, unit strictness, symmetry involution,
// naturality and the strict hexagon.
LawReport check_smc(const StrictSmc& smc, int probe_bound);

// ---------------------------------------------------------------------------
// comonoids

struct Comonoid {
  int object = 0;
  FinFn counit;  // object -> unit
  FinFn comult;  // object -> object (x) object
  bool operator==(const Comonoid&) const = default;
};

// The three comonoid axioms (right counit, cocommutativity,
// coassociativity) plus the left counit law they imply, checked separately.
LawReport check_comonoid(const StrictSmc& smc, const Comonoid& c);

// Every (counit, comult) candidate pair on the given carrier, filtered by
// the axioms.  Throws ResourceBound if the candidate count exceeds limit.
std::vector<Comonoid> enumerate_comonoids(const StrictSmc& smc, int object,
                                          long long limit = 0);

// Copying and deleting: the canonical comonoid on a finite set.
Comonoid diagonal_comonoid(int c);

// Carrier a (x) b with componentwise counit and the middle-swap comult.
Comonoid tensor_comonoid(const StrictSmc& smc, const Comonoid& a,
                         const Comonoid& b);

// ---------------------------------------------------------------------------
// the category of comonoids

// Objects are the supplied comonoids; morphisms are the carrier maps
// commuting with counit and comult, grouped by (dom, cod) and ordered by
// table within each hom-set.
struct ComonCategory {
  FinCategory cat;
  std::vector<Comonoid> objects;
  std::vector<FinFn> fns;
  std::map<std::tuple<int, int, std::vector<int>>, int> mor_index;

  const FinFn& fn_of(int m) const { return fns[m]; }
  int morphism_id(int src, int dst, const FinFn& f) const;
};

ComonCategory comonoid_category(const StrictSmc& smc,
                                const std::vector<Comonoid>& objs,
                                long long limit = 0);

// ---------------------------------------------------------------------------
// coKleisli fibers and the lens category over them

// Fiber over a comonoid c: objects are sizes 0..size_bound, a morphism
// x -> y is a table c (x) x -> y, composed by duplicating the comonoid
// coordinate.  Reindexing along a comonoid map is precomposition.
struct CoKleisliIndexed {
  IndexedCat data;
  ComonCategory base;
  int size_bound = 0;
  std::vector<std::vector<FinFn>> fiber_fns;  // per base object
  std::vector<std::map<std::tuple<int, int, std::vector<int>>, int>>
      fiber_index;

  int fiber_mor_id(int base_obj, int x, int y, const FinFn& f) const;
};

CoKleisliIndexed cokleisli_indexed(const StrictSmc& smc,
                                   const ComonCategory& comons,
                                   int size_bound, long long limit = 0);

// Direct construction of the lens category over an SMC with chosen
// comonoids: objects pair a comonoid with a size, morphisms pair a comonoid
// map with an update table, composed by the duplicate-sight-update recipe.
struct SmcLensCat {
  FinCategory cat;
  std::vector<std::pair<int, int>> objects;  // (comonoid index, size)
  struct Payload {
    FinFn get;
    FinFn put;
  };
  std::vector<Payload> payloads;
  std::map<std::pair<int, int>, int> obj_index;
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int>
      mor_index;

  int object_id(int comonoid, int size) const;
  int morphism_id(int src, int dst, const FinFn& get, const FinFn& put) const;
};

SmcLensCat smc_lens_category(const StrictSmc& smc, const ComonCategory& comons,
                             int size_bound, long long limit = 0);

// The direct construction and the glued category of coKleisli fibers must
// agree morphism-for-morphism, including composition tables and payloads.
IsoReport check_recover_usual(const StrictSmc& smc,
                              const ComonCategory& comons, int size_bound,
                              long long limit = 0);

}  // namespace glens
