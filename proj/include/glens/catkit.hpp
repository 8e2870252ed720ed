#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "glens/finset.hpp"
#include "glens/report.hpp"

namespace glens {

struct MorData {
  int dom = 0;
  int cod = 0;

  bool operator==(const MorData&) const = default;
};

// A finite category as explicit data: numbered objects and morphisms, an
// identity per object, and a dense composition table (-1 = not composable).
// Composition is diagrammatic: comp(f, g) is "f then g".
struct FinCategory {
  int n_objects = 0;
  std::vector<MorData> morphisms;
  std::vector<int> identity;    // object -> morphism id
  std::vector<int> comp_table;  // mor_count*mor_count entries, -1 sentinel

  int mor_count() const { return (int)morphisms.size(); }
  int dom(int m) const { return morphisms[m].dom; }
  int cod(int m) const { return morphisms[m].cod; }
  int id_of(int o) const { return identity[o]; }
  bool composable(int f, int g) const { return cod(f) == dom(g); }
  int comp_raw(int f, int g) const {
    return comp_table[(size_t)f * morphisms.size() + g];
  }
  // Checked composition: throws CodomainMismatch / MalformedData.
  int comp(int f, int g) const;
  // Morphism ids from a to b, ascending.
  std::vector<int> hom(int a, int b) const;

  bool operator==(const FinCategory&) const = default;
};

// Structural validation (throws MalformedData) plus unit/associativity laws.
LawReport check_category_laws(const FinCategory& c);

// A functor as explicit data. Source and target are carried by value so the
// record is self-contained.
struct FunctorData {
  FinCategory source;
  FinCategory target;
  std::vector<int> obj_map;
  std::vector<int> mor_map;

  bool operator==(const FunctorData&) const = default;
};

LawReport check_functor_laws(const FunctorData& f);
FunctorData identity_functor(const FinCategory& c);
// Diagrammatic composite: apply f, then g. Requires f.target == g.source.
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);

// Same objects and morphism ids, dom/cod swapped, composition transposed.
FinCategory opposite(const FinCategory& c);

// Explicit-bijection isomorphism check: obj_map/mor_map must be bijections
// preserving dom/cod, identities and composites.
IsoReport check_isomorphism(const FinCategory& a, const FinCategory& b,
                            const std::vector<int>& obj_map,
                            const std::vector<int>& mor_map,
                            const std::string& subject);

// --- concrete builders ---

// Full subcategory of skeletal finite sets on the given (strictly increasing)
// sizes. Morphisms are grouped by (dom object, cod object) row-major and
// ordered lexicographically by table within each hom-set.
struct FinSetCat {
  FinCategory cat;
  std::vector<int> sizes;        // object id -> set size
  std::vector<FinFn> fns;        // morphism id -> table
  std::vector<int> size_to_obj;  // set size -> object id, -1 if absent

  const FinFn& fn_of(int m) const { return fns[m]; }
  int obj_of_size(int n) const;
  // Morphism id of a function between carried sizes (by lexicographic rank).
  int id_of_fn(const FinFn& f) const;

 private:
  friend FinSetCat finset_category_on(std::vector<int>, long long);
  std::vector<std::vector<int>> block_start_;  // [dom obj][cod obj]
};

FinSetCat finset_category_on(std::vector<int> sizes, long long limit = 0);
FinSetCat finset_category(int max_size, long long limit = 0);

// Thin category of a preorder: at most one morphism i -> j, present iff
// leq[i][j]. Throws MalformedData if leq is not reflexive/transitive.
FinCategory thin_category(const std::vector<std::vector<bool>>& leq);
FinCategory walking_arrow();       // 0 -> 1
FinCategory commutative_square();  // poset product of two walking arrows
// One object, k morphisms composing as addition mod k.
FinCategory cyclic_monoid_category(int k);

// Product of categories; objects and morphisms are tuples coded in mixed
// radix with the first factor most significant.
struct ProductCat {
  FinCategory cat;
  std::vector<int> obj_radix;  // component object counts
  std::vector<int> mor_radix;  // component morphism counts

  std::vector<int> obj_tuple(int o) const;
  std::vector<int> mor_tuple(int m) const;
  int obj_code(const std::vector<int>& t) const;
  int mor_code(const std::vector<int>& t) const;
};
ProductCat product_category(const std::vector<const FinCategory*>& factors,
                            long long limit = 0);

// Objects are the morphisms of c; a morphism x -> y is a pair (front, back)
// with front ; y ; back == x. Composition: (f, b) ; (f', b') = (f;f', b';b).
struct TwistedArrow {
  FinCategory cat;
  // morphism id -> (front, back)
  std::vector<std::pair<int, int>> wedges;
  std::map<std::tuple<int, int, int>, int> index;  // (obj x, front, back) -> id

  int id_of(int x, int front, int back) const;
};
TwistedArrow twisted_arrow(const FinCategory& c, long long limit = 0);

}  // namespace glens
