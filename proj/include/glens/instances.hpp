#pragma once

// Concrete indexed categories and lens flavours over finite sets:
// families/bundles over a base set, dependent sum/product, classical
// get/put lenses, prisms, and coslice fibers whose lens category is the
// twisted-arrow category.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glens/indexed.hpp"

namespace glens {

// ---------------------------------------------------------------------------
// families and bundles

// A family over a base of size c is a tuple of c fiber sizes.
//
// bundle_to_family: tally preimage sizes of a labeling p : e -> b.
// family_to_bundle: canonical bundle with fiber blocks laid out in order.
// bundle_sort_bijection: the permutation s with s ; canonical == original.
std::vector<int> bundle_to_family(const FinFn& p);
FinFn family_to_bundle(const std::vector<int>& sizes);
FinFn bundle_sort_bijection(const FinFn& p);

// Reindex a family over b along f : a -> b to a family over a.
std::vector<int> reindex_family(const FinFn& f, const std::vector<int>& over_b);

// Dependent sum / product along f : a -> b; entry j aggregates over the
// preimage of j (empty product is 1).
std::vector<int> dep_sum(const FinFn& f, const std::vector<int>& over_a);
std::vector<int> dep_prod(const FinFn& f, const std::vector<int>& over_a);

// Explicit transposes of the two adjunctions.  A family map between
// families over the same base is one function per base element.
//
// sum:  maps (dep_sum(f,x) -> y over b)  <->  (x -> reindex(f,y) over a)
// prod: maps (y -> dep_prod(f,x) over b) <->  (reindex(f,y) -> x over a)
std::vector<FinFn> sum_transpose(const FinFn& f, const std::vector<int>& x,
                                 const std::vector<int>& y,
                                 const std::vector<FinFn>& over_b);
std::vector<FinFn> sum_untranspose(const FinFn& f, const std::vector<int>& x,
                                   const std::vector<int>& y,
                                   const std::vector<FinFn>& over_a);
std::vector<FinFn> prod_transpose(const FinFn& f, const std::vector<int>& x,
                                  const std::vector<int>& y,
                                  const std::vector<FinFn>& over_b);
std::vector<FinFn> prod_untranspose(const FinFn& f, const std::vector<int>& x,
                                    const std::vector<int>& y,
                                    const std::vector<FinFn>& over_a);

// ---------------------------------------------------------------------------
// slice-style indexed category: fibers are families over each base set

struct SliceIndexed {
  IndexedCat data;
  int max_size = 0;     // base objects are the sets 0..max_size
  int fiber_bound = 0;  // fiber sizes range over 0..fiber_bound
  FinSetCat base_fs;
  FinSetCat component;                 // single-coordinate fiber category
  std::vector<ProductCat> fiber_prod;  // one product category per base object

  // Codecs between size tuples / component maps and fiber-category ids.
  int family_obj(int c, const std::vector<int>& sizes) const;
  std::vector<int> family_of(int c, int obj) const;
  int family_mor(int c, const std::vector<FinFn>& components) const;
  std::vector<FinFn> family_mor_of(int c, int mor) const;
};

// fiber_bound < 0 means "same as max_size".
SliceIndexed slice_indexed(int max_size, int fiber_bound = -1,
                           long long limit = 0);

// Strict-monoidal data on the slice construction: cartesian product on the
// base, pointwise product of families on fibers.  Entries whose sizes leave
// the carrier are left undefined.
std::pair<MonoidalBaseData, LaxatorData> slice_tensor_data(
    const SliceIndexed& s);

// ---------------------------------------------------------------------------
// data-level dependent lenses between families

struct FamilyLens {
  FinFn get;             // base map c -> d
  std::vector<int> src;  // family over c
  std::vector<int> dst;  // family over d
  std::vector<FinFn> puts;  // per i in c: dst[get(i)] -> src[i]
  bool operator==(const FamilyLens&) const = default;
};

void validate_family_lens(const FamilyLens& l);
FamilyLens family_identity(const std::vector<int>& fam);
FamilyLens compose_family(const FamilyLens& l1, const FamilyLens& l2);
FamilyLens tensor_family(const FamilyLens& l1, const FamilyLens& l2);
std::vector<FamilyLens> enumerate_family_lenses(const std::vector<int>& src,
                                                const std::vector<int>& dst);

// Round-trips between data-level lenses and morphisms of the glued lens
// category built from the same slice data.
int family_lens_id(const SliceIndexed& s, const GluedCategory& lens,
                   const FamilyLens& l);
FamilyLens family_lens_of(const SliceIndexed& s, const GluedCategory& lens,
                          int mor);

// ---------------------------------------------------------------------------
// generic get/put lens categories over a choice of monoidal structure

// The operations of a strict monoidal category whose objects are sizes and
// whose morphisms are realized as concrete FinFn tables.  For the cartesian
// structure the realization is the function itself; for the opposite of the
// cocartesian structure a morphism a -> b is realized as a table b -> a.
struct CartesianOps {
  std::string name;
  int unit = 1;
  std::function<int(int, int)> tensor_size;
  std::function<FinFn(int)> identity;
  std::function<FinFn(const FinFn&, const FinFn&)> compose;  // f then g
  std::function<FinFn(const FinFn&, const FinFn&)> tensor;
  std::function<FinFn(int)> dup;   // c -> c (x) c
  std::function<FinFn(int)> drop;  // c -> unit
  std::function<int(const FinFn&)> src;
  std::function<int(const FinFn&)> dst;
  std::function<std::vector<FinFn>(int, int)> hom;
  std::function<long long(int, int, long long)> hom_count;  // capped
};

CartesianOps finset_cartesian_ops();
CartesianOps finset_op_coproduct_ops();

struct GenericLensCat {
  FinCategory cat;
  std::vector<std::pair<int, int>> objects;  // (c, x) pairs of sizes
  struct Payload {
    FinFn get;
    FinFn put;
  };
  std::vector<Payload> payloads;
  std::map<std::pair<int, int>, int> obj_index;
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, int>
      mor_index;
  int object_id(int c, int x) const;
  int morphism_id(int src, int dst, const FinFn& get, const FinFn& put) const;
};

// All objects (c, x) with c, x <= max_size; morphisms are (get, put) pairs
// realized through the supplied operations, composed by the usual
// duplicate-then-update recipe.
GenericLensCat generic_lens_category(const CartesianOps& ops, int max_size,
                                     long long limit = 0);
GenericLensCat classic_lens_category(int max_size, long long limit = 0);
GenericLensCat prism_category(int max_size, long long limit = 0);

// ---------------------------------------------------------------------------
// standalone prisms
//
// A prism (c, x) -> (d, y) stores its parts as the tables they act by:
// matching runs d -> c and rebuilding runs x -> c + y.

struct PrismData {
  FinFn get;  // table d -> c
  FinFn put;  // table x -> c + y
  bool operator==(const PrismData&) const = default;
};

PrismData prism_identity(int c, int x);
PrismData compose_prism(const PrismData& p1, const PrismData& p2);

// ---------------------------------------------------------------------------
// standalone classical lenses

struct ClassicLens {
  FinFn get;  // c -> d
  FinFn put;  // c*y -> x
  bool operator==(const ClassicLens&) const = default;
};

ClassicLens classic_identity(int c, int x);
ClassicLens compose_classic(const ClassicLens& l1, const ClassicLens& l2);
// The proxy sizes y1, y2 cannot always be recovered from the tables (the
// put source collapses when the view side is empty), so tensoring takes
// them explicitly.
ClassicLens tensor_classic(const ClassicLens& l1, int y1,
                           const ClassicLens& l2, int y2);
std::vector<ClassicLens> enumerate_classic_lenses(int c, int x, int d, int y);

// Classical lenses embed into the slice lens category as the constant
// families; the returned functor is full and faithful (bijective on every
// hom-set).  On objects it is injective except over the empty base, where
// every view size yields the same empty family.
FunctorData embed_classic(const GenericLensCat& classic,
                          const SliceIndexed& slice,
                          const GluedCategory& slens);

// ---------------------------------------------------------------------------
// coslice fibers and the twisted-arrow comparison

// Fiber over c is the category of morphisms out of c with commuting
// triangles; reindexing along f is precomposition with f.
struct CosliceIndexed {
  IndexedCat data;
  std::vector<std::vector<int>> fiber_objs;  // per base object: source mor ids
  std::vector<std::vector<int>> fiber_mors;  // per base object: triangle legs
};

CosliceIndexed coslice_indexed(const FinCategory& c, long long limit = 0);

// The lens category of the coslice construction is the twisted-arrow
// category: objects are arrows, morphisms are wedges (front, back) with
// front ; target ; back == source.
IsoReport check_twisted_arrow_iso(const FinCategory& c, long long limit = 0);

}  // namespace glens
