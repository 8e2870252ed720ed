#include <doctest.h>

#include <vector>

#include "glens/indexed.hpp"
#include "glens/instances.hpp"

using namespace glens;

namespace {

long long ipow(long long b, long long e) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) r *= b;
  return r;
}

// Same fiber everywhere, identity reindexing: the simplest strict data.
IndexedCat constant_indexed(const FinCategory& base, const FinCategory& fiber) {
  IndexedCat f;
  f.base = base;
  f.fibers.assign(base.n_objects, fiber);
  f.reindex.assign(base.mor_count(), identity_functor(fiber));
  return f;
}

FinCategory terminal_category() {
  FinCategory c;
  c.n_objects = 1;
  c.morphisms = {{0, 0}};
  c.identity = {0};
  c.comp_table = {0};
  return c;
}

}  // namespace

TEST_CASE("constant indexed data passes the strictness laws both ways") {
  IndexedCat f = constant_indexed(walking_arrow(), finset_category(1).cat);
  CHECK(check_indexed_laws(f, Variance::contravariant).pass());
  CHECK(check_indexed_laws(f, Variance::covariant).pass());
  CHECK(pointwise_opposite(pointwise_opposite(f)) == f);
  CHECK(base_opposed(base_opposed(f)) == f);
}

TEST_CASE("gluing a constant indexed category gives a product category") {
  FinCategory w = walking_arrow();
  FinCategory fib = finset_category(1).cat;
  IndexedCat f = constant_indexed(w, fib);

  GluedCategory cov = groth_covariant(f);
  GluedCategory con = groth_contravariant(f);
  GluedCategory lens = lens_category(f);
  for (const GluedCategory* g : {&cov, &con, &lens}) {
    CHECK(g->cat.n_objects == w.n_objects * fib.n_objects);
    CHECK(g->cat.mor_count() == w.mor_count() * fib.mor_count());
    CHECK(check_category_laws(g->cat).pass());
    CHECK(check_functor_laws(g->to_base).pass());
    for (int o = 0; o < g->cat.n_objects; ++o)
      CHECK(g->to_base.obj_map[o] == g->objects[o].first);
    for (int m = 0; m < g->cat.mor_count(); ++m)
      CHECK(g->to_base.mor_map[m] == g->keys[m].base_mor);
  }

  // Covariant and contravariant gluings are the product with the fiber;
  // the lens gluing is the product with the opposite fiber.
  ProductCat straight = product_category({&w, &fib});
  FinCategory fop = opposite(fib);
  ProductCat flipped = product_category({&w, &fop});
  for (auto [g, p] : {std::pair{&cov, &straight}, std::pair{&con, &straight},
                      std::pair{&lens, &flipped}}) {
    std::vector<int> obj_map(g->cat.n_objects);
    for (int o = 0; o < g->cat.n_objects; ++o)
      obj_map[o] = p->obj_code({g->objects[o].first, g->objects[o].second});
    std::vector<int> mor_map(g->cat.mor_count());
    for (int m = 0; m < g->cat.mor_count(); ++m)
      mor_map[m] = p->mor_code({g->keys[m].base_mor, g->keys[m].fiber_mor});
    CHECK(check_isomorphism(g->cat, p->cat, obj_map, mor_map,
                            "glued-vs-product")
              .pass());
  }
}

TEST_CASE("composite keys combine base and fiber parts as documented") {
  FinCategory w = walking_arrow();
  FinCategory fib = finset_category(1).cat;
  IndexedCat f = constant_indexed(w, fib);
  GluedCategory cov = groth_covariant(f);
  GluedCategory lens = lens_category(f);

  for (int m1 = 0; m1 < cov.cat.mor_count(); ++m1)
    for (int m2 = 0; m2 < cov.cat.mor_count(); ++m2) {
      if (!cov.cat.composable(m1, m2)) continue;
      const auto &k1 = cov.keys[m1], &k2 = cov.keys[m2];
      CHECK(cov.cat.comp_raw(m1, m2) ==
            cov.morphism_id(w.comp_raw(k1.base_mor, k2.base_mor), k1.aux_obj,
                            fib.comp_raw(k1.fiber_mor, k2.fiber_mor)));
    }
  for (int m1 = 0; m1 < lens.cat.mor_count(); ++m1)
    for (int m2 = 0; m2 < lens.cat.mor_count(); ++m2) {
      if (!lens.cat.composable(m1, m2)) continue;
      const auto &k1 = lens.keys[m1], &k2 = lens.keys[m2];
      // The fiber part runs backwards: second put first.
      CHECK(lens.cat.comp_raw(m1, m2) ==
            lens.morphism_id(w.comp_raw(k1.base_mor, k2.base_mor), k2.aux_obj,
                             fib.comp_raw(k2.fiber_mor, k1.fiber_mor)));
    }
}

TEST_CASE("identity violations in reindexing are reported and block gluing") {
  FinCategory w = walking_arrow();
  IndexedCat bad = constant_indexed(w, walking_arrow());
  bad.reindex[2] = FunctorData{walking_arrow(), walking_arrow(), {0, 0},
                               {0, 0, 0}};  // collapse instead of identity
  LawReport r = check_indexed_laws(bad);
  CHECK(!r.pass());
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].rule == "reindex-identity");
  CHECK_THROWS_AS(lens_category(bad), MalformedData);
}

TEST_CASE("a non-functorial reindexing is caught inside its fiber") {
  FinCategory w = walking_arrow();
  FinCategory c3 = cyclic_monoid_category(3);
  IndexedCat bad = constant_indexed(w, c3);
  bad.reindex[1] = FunctorData{c3, c3, {0}, {0, 1, 1}};
  LawReport r = check_indexed_laws(bad);
  CHECK(!r.pass());
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].rule == "reindex-functor/composition-preservation");
  CHECK(r.violations[0].at.front() == 1);  // the offending base morphism
}

TEST_CASE("reindexing must respect base composition") {
  FinCategory base = cyclic_monoid_category(2);
  FinCategory fib = walking_arrow();
  IndexedCat bad = constant_indexed(base, fib);
  bad.reindex[1] = FunctorData{fib, fib, {0, 0}, {0, 0, 0}};
  LawReport r = check_indexed_laws(bad);
  CHECK(!r.pass());
  bool saw = false;
  for (const auto& v : r.violations) saw = saw || v.rule == "reindex-composition";
  CHECK(saw);
}

TEST_CASE("family lens categories have hom-sets counted by the put formula") {
  SliceIndexed s = slice_indexed(2, 2);
  CHECK(check_indexed_laws(s.data).pass());
  GluedCategory lens = lens_category(s.data);
  CHECK(lens.cat.n_objects == 13);
  CHECK(lens.cat.mor_count() == 633);
  CHECK(check_category_laws(lens.cat).pass());
  CHECK(check_functor_laws(lens.to_base).pass());

  for (int p = 0; p < lens.cat.n_objects; ++p)
    for (int q = 0; q < lens.cat.n_objects; ++q) {
      auto [c, xo] = lens.objects[p];
      auto [d, yo] = lens.objects[q];
      std::vector<int> x = s.family_of(c, xo), y = s.family_of(d, yo);
      long long expected = 0;
      for (const FinFn& f : all_fns(c, d)) {
        long long ways = 1;
        for (int i = 0; i < c; ++i) ways *= ipow(x[i], y[f.table[i]]);
        expected += ways;
      }
      CHECK((long long)lens.cat.hom(p, q).size() == expected);
    }
}

TEST_CASE("the three glued constructions are one category in three guises") {
  SliceIndexed s22 = slice_indexed(2, 2);
  IsoReport r = check_three_way_iso(s22.data);
  CHECK(r.pass());
  CHECK(r.checks > 633);

  SliceIndexed s13 = slice_indexed(1, 3);
  CHECK(check_three_way_iso(s13.data).pass());

  IndexedCat term = constant_indexed(commutative_square(), terminal_category());
  CHECK(check_three_way_iso(term).pass());

  // Over one-point fibers the lens category is the base itself.
  GluedCategory lens = lens_category(term);
  CHECK(check_isomorphism(lens.cat, commutative_square(), lens.to_base.obj_map,
                          lens.to_base.mor_map, "lens-vs-base")
            .pass());
}

TEST_CASE("the auxiliary key component separates collapsing targets") {
  SliceIndexed s = slice_indexed(1, 1);
  GluedCategory lens = lens_category(s.data);
  CHECK(lens.cat.n_objects == 3);
  CHECK(lens.cat.mor_count() == 6);

  int src = lens.object_id(0, s.family_obj(0, {}));
  int t0 = lens.object_id(1, s.family_obj(1, {0}));
  int t1 = lens.object_id(1, s.family_obj(1, {1}));
  auto h0 = lens.cat.hom(src, t0), h1 = lens.cat.hom(src, t1);
  REQUIRE(h0.size() == 1);
  REQUIRE(h1.size() == 1);
  const auto &k0 = lens.keys[h0[0]], &k1 = lens.keys[h1[0]];
  CHECK(k0.base_mor == k1.base_mor);
  CHECK(k0.fiber_mor == k1.fiber_mor);
  CHECK(k0.aux_obj != k1.aux_obj);
}

TEST_CASE("gluing respects the resource limit") {
  SliceIndexed s = slice_indexed(2, 2);
  CHECK_THROWS_AS(lens_category(s.data, 10), ResourceBound);
}

TEST_CASE("the family tensor is total on the unit-bounded carrier") {
  SliceIndexed s = slice_indexed(1, 1);
  auto [base_data, laxator] = slice_tensor_data(s);
  GluedCategory lens = lens_category(s.data);
  LensTensor t = lens_tensor(s.data, lens, base_data, laxator);
  CHECK(t.interchange.pass());
  CHECK(t.interchange.checks > 0);

  int unit = lens.object_id(1, s.family_obj(1, {1}));
  for (int p = 0; p < lens.cat.n_objects; ++p) {
    CHECK(t.tensor_obj(unit, p) == p);
    CHECK(t.tensor_obj(p, unit) == p);
  }
  int id_unit = lens.cat.id_of(unit);
  for (int m = 0; m < lens.cat.mor_count(); ++m) {
    CHECK(t.tensor_mor(id_unit, m) == m);
    CHECK(t.tensor_mor(m, id_unit) == m);
  }
  for (int p = 0; p < lens.cat.n_objects; ++p)
    for (int q = 0; q < lens.cat.n_objects; ++q) {
      int pq = t.tensor_obj(p, q);
      REQUIRE(pq >= 0);
      CHECK(t.tensor_mor(lens.cat.id_of(p), lens.cat.id_of(q)) ==
            lens.cat.id_of(pq));
    }
}

TEST_CASE("the partial family tensor is defined exactly within the carrier") {
  SliceIndexed s = slice_indexed(2, 2);
  auto [base_data, laxator] = slice_tensor_data(s);
  GluedCategory lens = lens_category(s.data);
  LensTensor t = lens_tensor(s.data, lens, base_data, laxator);
  CHECK(t.interchange.pass());

  int big = lens.object_id(2, s.family_obj(2, {2, 2}));
  int ones = lens.object_id(2, s.family_obj(2, {1, 1}));
  int two = lens.object_id(1, s.family_obj(1, {2}));
  CHECK(t.tensor_obj(big, ones) == -1);   // base size would be 4
  CHECK(t.tensor_obj(two, two) == -1);    // fiber size would be 4
  CHECK(t.tensor_obj(two, ones) == big);  // (2)*(1,1) = (2,2) over 2

  int unit = lens.object_id(1, s.family_obj(1, {1}));
  int id_unit = lens.cat.id_of(unit);
  for (int m = 0; m < lens.cat.mor_count(); ++m) {
    CHECK(t.tensor_mor(id_unit, m) == m);
    CHECK(t.tensor_mor(m, id_unit) == m);
  }
  for (int p = 0; p < lens.cat.n_objects; ++p)
    for (int q = 0; q < lens.cat.n_objects; ++q) {
      int pq = t.tensor_obj(p, q);
      if (pq < 0) continue;
      CHECK(t.tensor_mor(lens.cat.id_of(p), lens.cat.id_of(q)) ==
            lens.cat.id_of(pq));
    }
}

TEST_CASE("incoherent tensor data is rejected with a diagnosis") {
  SliceIndexed s = slice_indexed(1, 1);
  GluedCategory lens = lens_category(s.data);
  auto data = slice_tensor_data(s);

  auto bad_phi = data;
  bad_phi.second.obj_phi[1][1][1][1] = 0;  // (1)*(1) is not the empty family
  CHECK_THROWS_AS(lens_tensor(s.data, lens, bad_phi.first, bad_phi.second),
                  LaxatorIncoherent);

  auto bad_base = data;
  int id1 = s.base_fs.cat.id_of(s.base_fs.obj_of_size(1));
  bad_base.first.mor_tensor[id1][id1] =
      s.base_fs.id_of_fn(FinFn{0, 1, {}});  // wrong endpoints for id*id
  CHECK_THROWS_AS(lens_tensor(s.data, lens, bad_base.first, bad_base.second),
                  LaxatorIncoherent);
}
