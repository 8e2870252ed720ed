#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "glens/catkit.hpp"

using namespace glens;

namespace {

// Independent count of maps between carried sizes: sum of cod^dom.
long long expected_mor_count(const std::vector<int>& sizes) {
  long long total = 0;
  for (int a : sizes)
    for (int b : sizes) total += (long long)std::llround(std::pow(b, a));
  return total;
}

// Unique morphism a -> b of a thin category.
int thin_mor(const FinCategory& c, int a, int b) {
  auto h = c.hom(a, b);
  REQUIRE(h.size() == 1);
  return h[0];
}

// id0, id1, a and b : 0 -> 1, with a ; id1 deliberately miswired to b.
FinCategory parallel_pair_with_unit_defect() {
  FinCategory c;
  c.n_objects = 2;
  c.morphisms = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
  c.identity = {0, 1};
  c.comp_table.assign(16, -1);
  auto set = [&](int f, int g, int fg) { c.comp_table[f * 4 + g] = fg; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(0, 2, 2);
  set(0, 3, 3);
  set(2, 1, 3);  // should be 2
  set(3, 1, 3);
  return c;
}

}  // namespace

TEST_CASE("finite-set categories carry one morphism per table") {
  for (int n = 1; n <= 4; ++n) {
    FinSetCat fs = finset_category(n);
    CHECK(fs.cat.n_objects == n + 1);
    std::vector<int> sizes(n + 1);
    for (int i = 0; i <= n; ++i) sizes[i] = i;
    CHECK(fs.cat.mor_count() == expected_mor_count(sizes));
  }
  CHECK(finset_category(1).cat.mor_count() == 3);
  CHECK(finset_category(2).cat.mor_count() == 11);
  CHECK(finset_category(3).cat.mor_count() == 60);
  CHECK(finset_category(4).cat.mor_count() == 499);

  FinSetCat on12 = finset_category_on({1, 2});
  CHECK(on12.cat.n_objects == 2);
  CHECK(on12.cat.mor_count() == expected_mor_count({1, 2}));
  CHECK(on12.obj_of_size(2) == 1);
}

TEST_CASE("finite-set morphisms are blocked row-major and lex within blocks") {
  FinSetCat fs = finset_category(2);
  // Blocks: (0,0) (0,1) (0,2) | (1,0) empty | (1,1) (1,2) | (2,0) empty ...
  CHECK(fs.cat.identity == std::vector<int>{0, 3, 8});
  CHECK(fs.cat.hom(1, 2) == std::vector<int>{4, 5});
  CHECK(fs.fn_of(4).table == std::vector<int>{0});
  CHECK(fs.fn_of(5).table == std::vector<int>{1});
  CHECK(fs.fn_of(8) == identity_fn(2));
  for (int m = 0; m < fs.cat.mor_count(); ++m) {
    CHECK(fs.id_of_fn(fs.fn_of(m)) == m);
    CHECK(fs.cat.dom(m) == fs.obj_of_size(fs.fn_of(m).dom));
    CHECK(fs.cat.cod(m) == fs.obj_of_size(fs.fn_of(m).cod));
  }
}

TEST_CASE("categorical composition of maps is table composition") {
  FinSetCat fs = finset_category(3);
  const FinCategory& c = fs.cat;
  for (int f = 0; f < c.mor_count(); ++f)
    for (int g = 0; g < c.mor_count(); ++g) {
      if (!c.composable(f, g)) {
        CHECK(c.comp_raw(f, g) == -1);
        continue;
      }
      CHECK(c.comp(f, g) == fs.id_of_fn(compose(fs.fn_of(f), fs.fn_of(g))));
    }
  CHECK_THROWS_AS(c.comp(c.id_of(0), fs.id_of_fn(identity_fn(2))),
                  CodomainMismatch);
}

TEST_CASE("builder categories satisfy unit and associativity laws") {
  CHECK(check_category_laws(finset_category(3).cat).pass());
  CHECK(check_category_laws(walking_arrow()).pass());
  CHECK(check_category_laws(commutative_square()).pass());
  CHECK(check_category_laws(cyclic_monoid_category(3)).pass());
  CHECK(check_category_laws(opposite(finset_category(2).cat)).pass());
}

TEST_CASE("thin categories have the shape of their preorder") {
  FinCategory w = walking_arrow();
  CHECK(w.n_objects == 2);
  CHECK(w.mor_count() == 3);
  CHECK(w.identity == std::vector<int>{0, 2});
  CHECK(w.hom(0, 1).size() == 1);
  CHECK(w.hom(1, 0).empty());

  FinCategory sq = commutative_square();
  CHECK(sq.n_objects == 4);
  CHECK(sq.mor_count() == 9);
  // One bottom seeing everything, one top seen by everything, two
  // incomparable middles; the two paths around the square agree.
  int bottom = -1, top = -1;
  for (int o = 0; o < 4; ++o) {
    bool from_all = true, to_all = true;
    for (int p = 0; p < 4; ++p) {
      from_all = from_all && !sq.hom(o, p).empty();
      to_all = to_all && !sq.hom(p, o).empty();
    }
    if (from_all) bottom = o;
    if (to_all) top = o;
  }
  REQUIRE(bottom >= 0);
  REQUIRE(top >= 0);
  std::vector<int> mids;
  for (int o = 0; o < 4; ++o)
    if (o != bottom && o != top) mids.push_back(o);
  CHECK(sq.hom(mids[0], mids[1]).empty());
  CHECK(sq.hom(mids[1], mids[0]).empty());
  int via0 = sq.comp(thin_mor(sq, bottom, mids[0]), thin_mor(sq, mids[0], top));
  int via1 = sq.comp(thin_mor(sq, bottom, mids[1]), thin_mor(sq, mids[1], top));
  CHECK(via0 == via1);
  CHECK(via0 == thin_mor(sq, bottom, top));

  // Not transitive: 0 <= 1 and 1 <= 2 but not 0 <= 2.
  std::vector<std::vector<bool>> bad = {{true, true, false},
                                        {false, true, true},
                                        {false, false, true}};
  CHECK_THROWS_AS(thin_category(bad), MalformedData);
}

TEST_CASE("the cyclic monoid composes by addition of exponents") {
  FinCategory c = cyclic_monoid_category(3);
  CHECK(c.n_objects == 1);
  CHECK(c.mor_count() == 3);
  CHECK(c.id_of(0) == 0);
  for (int f = 0; f < 3; ++f)
    for (int g = 0; g < 3; ++g) CHECK(c.comp_raw(f, g) == (f + g) % 3);
}

TEST_CASE("opposite swaps hom-sets and is an involution") {
  FinCategory c = finset_category(2).cat;
  FinCategory op = opposite(c);
  CHECK(opposite(op) == c);
  CHECK(op.identity == c.identity);
  for (int a = 0; a < c.n_objects; ++a)
    for (int b = 0; b < c.n_objects; ++b) CHECK(op.hom(a, b) == c.hom(b, a));
  for (int f = 0; f < c.mor_count(); ++f)
    for (int g = 0; g < c.mor_count(); ++g)
      CHECK(op.comp_raw(f, g) == c.comp_raw(g, f));
}

TEST_CASE("product categories compose componentwise") {
  FinCategory w = walking_arrow();
  ProductCat p = product_category({&w, &w});
  CHECK(p.cat.n_objects == 4);
  CHECK(p.cat.mor_count() == 9);
  CHECK(check_category_laws(p.cat).pass());
  for (int m = 0; m < p.cat.mor_count(); ++m) {
    auto t = p.mor_tuple(m);
    CHECK(p.mor_code(t) == m);
    CHECK(p.cat.dom(m) == p.obj_code({w.dom(t[0]), w.dom(t[1])}));
  }
  for (int f = 0; f < p.cat.mor_count(); ++f)
    for (int g = 0; g < p.cat.mor_count(); ++g) {
      if (!p.cat.composable(f, g)) continue;
      auto tf = p.mor_tuple(f), tg = p.mor_tuple(g);
      CHECK(p.cat.comp_raw(f, g) ==
            p.mor_code({w.comp_raw(tf[0], tg[0]), w.comp_raw(tf[1], tg[1])}));
    }

  ProductCat unit = product_category({});
  CHECK(unit.cat.n_objects == 1);
  CHECK(unit.cat.mor_count() == 1);
  CHECK(check_category_laws(unit.cat).pass());
}

TEST_CASE("the square of the walking arrow is the commutative square") {
  FinCategory w = walking_arrow();
  ProductCat p = product_category({&w, &w});
  FinCategory sq = commutative_square();
  // Match objects by in/out degree (the swap symmetry of the square makes
  // either assignment of the two middles an isomorphism), then match
  // morphisms by endpoints.
  std::vector<int> obj_map(4, -1);
  auto signature = [](const FinCategory& c, int o) {
    int out = 0, in = 0;
    for (int q = 0; q < c.n_objects; ++q) {
      out += (int)c.hom(o, q).size();
      in += (int)c.hom(q, o).size();
    }
    return std::pair<int, int>{out, in};
  };
  std::vector<bool> used(4, false);
  for (int o = 0; o < 4; ++o)
    for (int q = 0; q < 4; ++q)
      if (!used[q] && signature(p.cat, o) == signature(sq, q)) {
        obj_map[o] = q;
        used[q] = true;
        break;
      }
  std::vector<int> mor_map(p.cat.mor_count());
  for (int m = 0; m < p.cat.mor_count(); ++m)
    mor_map[m] = thin_mor(sq, obj_map[p.cat.dom(m)], obj_map[p.cat.cod(m)]);
  CHECK(check_isomorphism(p.cat, sq, obj_map, mor_map, "square-compare")
            .pass());
}

TEST_CASE("twisted arrows are wedges around the arrows of the base") {
  FinCategory w = walking_arrow();
  TwistedArrow tw = twisted_arrow(w);
  CHECK(tw.cat.n_objects == 3);
  CHECK(tw.cat.mor_count() == 5);
  CHECK(check_category_laws(tw.cat).pass());

  FinCategory sq = commutative_square();
  TwistedArrow tsq = twisted_arrow(sq);
  CHECK(tsq.cat.n_objects == sq.mor_count());
  CHECK(check_category_laws(tsq.cat).pass());

  // Every morphism is a wedge front ; target ; back == source, and
  // composition concatenates fronts while reversing backs.
  for (auto* t : {&tw, &tsq}) {
    const FinCategory& base = t == &tw ? w : sq;
    for (int m = 0; m < t->cat.mor_count(); ++m) {
      auto [front, back] = t->wedges[m];
      int x = t->cat.dom(m), y = t->cat.cod(m);
      CHECK(base.comp(base.comp(front, y), back) == x);
      CHECK(t->id_of(x, front, back) == m);
    }
    for (int m1 = 0; m1 < t->cat.mor_count(); ++m1)
      for (int m2 = 0; m2 < t->cat.mor_count(); ++m2) {
        if (!t->cat.composable(m1, m2)) continue;
        auto [f1, b1] = t->wedges[m1];
        auto [f2, b2] = t->wedges[m2];
        CHECK(t->cat.comp_raw(m1, m2) ==
              t->id_of(t->cat.dom(m1), base.comp(f1, f2), base.comp(b2, b1)));
      }
  }
}

TEST_CASE("functor law checking accepts identities and composites") {
  FinCategory c = finset_category(2).cat;
  FunctorData idc = identity_functor(c);
  CHECK(check_functor_laws(idc).pass());
  CHECK(compose_functors(idc, idc) == idc);

  FinCategory w = walking_arrow();
  FinCategory sq = commutative_square();
  // Bottom edge of the square, then collapse to the arrow again.
  FunctorData edge{w, sq, {0, 1}, {0, 1, 4}};
  REQUIRE(check_functor_laws(edge).pass());
  FunctorData collapse{sq, w, {0, 0, 1, 1}, {0, 0, 1, 1, 0, 1, 2, 2, 2}};
  REQUIRE(check_functor_laws(collapse).pass());
  FunctorData both = compose_functors(edge, collapse);
  CHECK(check_functor_laws(both).pass());
  CHECK(both.obj_map == std::vector<int>{0, 0});
  CHECK_THROWS_AS(compose_functors(collapse, collapse), MalformedData);
}

TEST_CASE("a functor that forgets one power of the generator is caught") {
  FinCategory c3 = cyclic_monoid_category(3);
  FunctorData f{c3, c3, {0}, {0, 1, 1}};
  LawReport r = check_functor_laws(f);
  CHECK(!r.pass());
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].rule == "composition-preservation");
  CHECK(r.violations[0].at == std::vector<long long>{1, 1});
}

TEST_CASE("isomorphism checking is sensitive to composition") {
  FinCategory c = finset_category(2).cat;
  FunctorData idc = identity_functor(c);
  CHECK(check_isomorphism(c, c, idc.obj_map, idc.mor_map, "self").pass());

  // Swapping the two maps 1 -> 2 breaks composition with the map 2 -> 1.
  std::vector<int> mor_map = idc.mor_map;
  std::swap(mor_map[4], mor_map[5]);
  IsoReport r = check_isomorphism(c, c, idc.obj_map, mor_map, "swapped");
  CHECK(!r.pass());
  bool saw_comp = false;
  for (const auto& v : r.violations)
    saw_comp = saw_comp || v.rule == "composition-preservation";
  CHECK(saw_comp);

  IsoReport counts = check_isomorphism(walking_arrow(),
                                       cyclic_monoid_category(3), {0, 0},
                                       {0, 0, 0}, "count-mismatch");
  CHECK(!counts.pass());
  CHECK(counts.violations[0].rule == "object-count");
}

TEST_CASE("structural defects are rejected before law checking") {
  FinCategory w = walking_arrow();

  FinCategory missing = w;
  missing.comp_table[0 * 3 + 1] = -1;  // id0 ; a entry removed
  CHECK_THROWS_AS(check_category_laws(missing), MalformedData);

  FinCategory bad_id = w;
  bad_id.identity[0] = 1;  // a : 0 -> 1 cannot be an identity of 0
  CHECK_THROWS_AS(check_category_laws(bad_id), MalformedData);

  FinCategory bad_entry = w;
  bad_entry.comp_table[0 * 3 + 1] = 2;  // composite of 0 -> 1 said to be id1
  CHECK_THROWS_AS(check_category_laws(bad_entry), MalformedData);

  FinCategory stray = w;
  stray.morphisms[1].cod = 5;
  CHECK_THROWS_AS(check_category_laws(stray), MalformedData);
}

TEST_CASE("a type-correct unit defect is reported, not thrown") {
  FinCategory c = parallel_pair_with_unit_defect();
  LawReport r = check_category_laws(c);
  CHECK(!r.pass());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].rule == "right-unit");
  CHECK(r.violations[0].at == std::vector<long long>{2, 1});
}

TEST_CASE("enumerations refuse to exceed the resource limit") {
  CHECK_THROWS_AS(finset_category(4, 100), ResourceBound);
  FinSetCat fs = finset_category(2);
  CHECK_THROWS_AS(twisted_arrow(fs.cat, 3), ResourceBound);
  CHECK_THROWS_AS(product_category({&fs.cat, &fs.cat}, 5), ResourceBound);
}
