#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "glens/catkit.hpp"
#include "glens/report.hpp"

namespace glens {

// A strictly indexed category: a fiber category per base object and a
// reindexing functor per base morphism. In the default (contravariant)
// reading, reindex[m] maps fibers[cod(m)] -> fibers[dom(m)] and
// reindex(f ; g) == reindex(g) ; reindex(f) holds on the nose.
// The covariant reading flips both.
struct IndexedCat {
  FinCategory base;
  std::vector<FinCategory> fibers;
  std::vector<FunctorData> reindex;

  bool operator==(const IndexedCat&) const = default;
};

enum class Variance { contravariant, covariant };

LawReport check_indexed_laws(const IndexedCat& f,
                             Variance v = Variance::contravariant);

// Same base, each fiber replaced by its opposite; reindexing maps unchanged.
IndexedCat pointwise_opposite(const IndexedCat& f);
// Base replaced by its opposite (turns a contravariant reading into a
// covariant one over the opposite base); fibers and reindexing unchanged.
IndexedCat base_opposed(const IndexedCat& f);

// Total category of a glued construction. Objects are pairs
// (base object c, fiber object x), row-major. A morphism is keyed by
// (base morphism, auxiliary fiber object, fiber morphism); the auxiliary
// object is the fiber component of whichever endpoint the fiber morphism
// does not determine (reindexing need not be injective on objects).
// Morphisms are grouped by (dom object, cod object) row-major and ordered
// lexicographically by key within each hom-set.
struct GluedCategory {
  FinCategory cat;
  std::vector<std::pair<int, int>> objects;  // id -> (base obj, fiber obj)
  struct Key {
    int base_mor = 0;
    int aux_obj = 0;
    int fiber_mor = 0;
  };
  std::vector<Key> keys;
  FunctorData to_base;  // projection functor

  std::map<std::pair<int, int>, int> obj_index;
  std::map<std::tuple<int, int, int>, int> mor_index;

  int object_id(int c, int x) const;
  int morphism_id(int base_mor, int aux_obj, int fiber_mor) const;
};

// Covariant total category: a morphism (c,x) -> (d,y) is a base morphism
// f : c -> d together with a fiber morphism reindex(f)(x) -> y in fibers[d];
// aux_obj is x. Composite fiber part: reindex(g)(k) ; l.
GluedCategory groth_covariant(const IndexedCat& f, long long limit = 0);

// Contravariant total category: a morphism (c,x) -> (d,y) is f : c -> d
// with a fiber morphism x -> reindex(f)(y) in fibers[c]; aux_obj is y.
// Composite fiber part: k ; reindex(f)(l).
GluedCategory groth_contravariant(const IndexedCat& f, long long limit = 0);

// Lens category: a morphism (c,x) -> (d,y) is f : c -> d with a fiber
// morphism reindex(f)(y) -> x in fibers[c] ("put runs backwards");
// aux_obj is y. Composite fiber part: reindex(f)(l) ; k.
GluedCategory lens_category(const IndexedCat& f, long long limit = 0);

// Builds the lens category three ways — directly, as the opposite of the
// covariant total category over the opposite base, and as the contravariant
// total category of the pointwise opposite — and verifies the explicit
// bijections commute with composition, identities and the base projections.
IsoReport check_three_way_iso(const IndexedCat& f, long long limit = 0);

// --- monoidal structure on a lens category ---

// Partial strict monoidal data on the base category; -1 marks pairs outside
// the enumerated range.
struct MonoidalBaseData {
  int unit_obj = -1;
  std::vector<std::vector<int>> obj_tensor;
  std::vector<std::vector<int>> mor_tensor;
};

// Partial laxator: for base objects (c, d) with c (x) d defined, a functor
// fibers[c] x fibers[d] -> fibers[c (x) d] given by tables; -1 = undefined.
struct LaxatorData {
  // obj_phi[c][d][x][y], mor_phi[c][d][k][l]
  std::vector<std::vector<std::vector<std::vector<int>>>> obj_phi;
  std::vector<std::vector<std::vector<std::vector<int>>>> mor_phi;
};

// Tensor on a built lens category, defined wherever the base data and
// laxator are. Tables hold lens-category ids, -1 where undefined.
struct LensTensor {
  std::vector<std::vector<int>> obj_tensor;
  std::vector<std::vector<int>> mor_tensor;
  LawReport interchange;  // exhaustive over the defined range

  int tensor_obj(int p, int q) const { return obj_tensor[p][q]; }
  int tensor_mor(int m, int n) const { return mor_tensor[m][n]; }
};

// Validates the supplied data (bifunctoriality of the base tensor,
// functoriality and reindex-naturality of the laxator; throws
// LaxatorIncoherent naming the failing square), then builds the tensor and
// checks interchange over every defined composable 4-tuple.
LensTensor lens_tensor(const IndexedCat& f, const GluedCategory& lens,
                       const MonoidalBaseData& base_data,
                       const LaxatorData& laxator);

}  // namespace glens
