#include "glens/comonoid.hpp"

#include <algorithm>

namespace glens {

StrictSmc finset_cartesian_smc() {
  StrictSmc s;
  s.name = "finset-cartesian";
  s.unit = 1;
  s.tensor_obj = [](int a, int b) { return a * b; };
  s.tensor_mor = [](const FinFn& f, const FinFn& g) {
    return product_fn(f, g);
  };
  s.symmetry = [](int a, int b) { return symmetry(a, b); };
  s.identity = [](int c) { return identity_fn(c); };
  s.compose = [](const FinFn& f, const FinFn& g) { return compose(f, g); };
  s.src = [](const FinFn& f) { return f.dom; };
  s.dst = [](const FinFn& f) { return f.cod; };
  s.hom_count = [](int a, int b, long long cap) {
    return count_fns(a, b, cap);
  };
  s.hom = [](int a, int b) { return all_fns(a, b); };
  return s;
}

StrictSmc finset_cocartesian_smc() {
  StrictSmc s;
  s.name = "finset-cocartesian";
  s.unit = 0;
  s.tensor_obj = [](int a, int b) { return a + b; };
  s.tensor_mor = [](const FinFn& f, const FinFn& g) {
    return coproduct_fn(f, g);
  };
  s.symmetry = [](int a, int b) {
    return copair_fns(inr(b, a), inl(b, a));
  };
  s.identity = [](int c) { return identity_fn(c); };
  s.compose = [](const FinFn& f, const FinFn& g) { return compose(f, g); };
  s.src = [](const FinFn& f) { return f.dom; };
  s.dst = [](const FinFn& f) { return f.cod; };
  s.hom_count = [](int a, int b, long long cap) {
    return count_fns(a, b, cap);
  };
  s.hom = [](int a, int b) { return all_fns(a, b); };
  return s;
}

LawReport check_smc(const StrictSmc& smc, int probe_bound) {
  LawReport report;
  report.subject = smc.name + "(probe=" + std::to_string(probe_bound) + ")";
  int n = probe_bound;

  for (int a = 0; a <= n; ++a) {
    FinFn ida = smc.identity(a);
    ++report.checks;
    if (smc.src(ida) != a || smc.dst(ida) != a)
      report.fail("identity-endpoints", {a});
    // strict unit on objects and morphisms
    ++report.checks;
    if (smc.tensor_obj(a, smc.unit) != a || smc.tensor_obj(smc.unit, a) != a)
      report.fail("strict-unit-object", {a});
    ++report.checks;
    if (!(smc.tensor_mor(ida, smc.identity(smc.unit)) == ida) ||
        !(smc.tensor_mor(smc.identity(smc.unit), ida) == ida))
      report.fail("strict-unit-morphism", {a});
    ++report.checks;
    if (!(smc.symmetry(a, smc.unit) == ida) ||
        !(smc.symmetry(smc.unit, a) == ida))
      report.fail("unit-symmetry", {a});
  }

  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      ++report.checks;
      FinFn s_ab = smc.symmetry(a, b);
      FinFn s_ba = smc.symmetry(b, a);
      if (!(smc.compose(s_ab, s_ba) == smc.identity(smc.tensor_obj(a, b))))
        report.fail("symmetry-involution", {a, b});
      ++report.checks;
      if (!(smc.tensor_mor(smc.identity(a), smc.identity(b)) ==
            smc.identity(smc.tensor_obj(a, b))))
        report.fail("tensor-identities", {a, b});
      for (int c = 0; c <= n; ++c) {
        ++report.checks;
        // strict hexagon: swapping a (x) b past c factors through c twice
        FinFn lhs = smc.symmetry(smc.tensor_obj(a, b), c);
        FinFn rhs = smc.compose(
            smc.tensor_mor(smc.identity(a), smc.symmetry(b, c)),
            smc.tensor_mor(smc.symmetry(a, c), smc.identity(b)));
        if (!(lhs == rhs)) report.fail("hexagon", {a, b, c});
      }
    }

  // naturality of symmetry and interchange over all probe-bounded homs
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
          for (const FinFn& f : smc.hom(a, b))
            for (const FinFn& g : smc.hom(p, q)) {
              ++report.checks;
              FinFn lhs = smc.compose(smc.tensor_mor(f, g), smc.symmetry(b, q));
              FinFn rhs = smc.compose(smc.symmetry(a, p), smc.tensor_mor(g, f));
              if (!(lhs == rhs)) report.fail("symmetry-naturality", {a, b, p, q});
            }
          for (int b2 = 0; b2 <= n; ++b2)
            for (int q2 = 0; q2 <= n; ++q2)
              for (const FinFn& f : smc.hom(a, b))
                for (const FinFn& f2 : smc.hom(b, b2))
                  for (const FinFn& g : smc.hom(p, q))
                    for (const FinFn& g2 : smc.hom(q, q2)) {
                      ++report.checks;
                      FinFn lhs = smc.tensor_mor(smc.compose(f, f2),
                                                 smc.compose(g, g2));
                      FinFn rhs = smc.compose(smc.tensor_mor(f, g),
                                              smc.tensor_mor(f2, g2));
                      if (!(lhs == rhs))
                        report.fail("tensor-interchange", {a, b, p, q});
                    }
        }
  return report;
}

// ---------------------------------------------------------------------------
// comonoids

LawReport check_comonoid(const StrictSmc& smc, const Comonoid& c) {
  LawReport report;
  report.subject = smc.name + "-comonoid(" + std::to_string(c.object) + ")";
  int n = c.object;
  if (smc.src(c.counit) != n || smc.dst(c.counit) != smc.unit)
    throw MalformedData("counit endpoints do not match the carrier");
  if (smc.src(c.comult) != n || smc.dst(c.comult) != smc.tensor_obj(n, n))
    throw MalformedData("comultiplication endpoints do not match the carrier");

  FinFn idn = smc.identity(n);
  ++report.checks;
  if (!(smc.compose(c.comult, smc.tensor_mor(idn, c.counit)) == idn))
    report.fail("counit-right", {n});
  ++report.checks;
  if (!(smc.compose(c.comult, smc.tensor_mor(c.counit, idn)) == idn))
    report.fail("counit-left", {n});
  ++report.checks;
  if (!(smc.compose(c.comult, smc.symmetry(n, n)) == c.comult))
    report.fail("cocommutative", {n});
  ++report.checks;
  if (!(smc.compose(c.comult, smc.tensor_mor(c.comult, idn)) ==
        smc.compose(c.comult, smc.tensor_mor(idn, c.comult))))
    report.fail("coassociative", {n});
  return report;
}

std::vector<Comonoid> enumerate_comonoids(const StrictSmc& smc, int object,
                                          long long limit) {
  if (limit <= 0) limit = default_limit();
  long long counits = smc.hom_count(object, smc.unit, limit);
  long long comults =
      smc.hom_count(object, smc.tensor_obj(object, object), limit);
  if (counits > limit || comults > limit || counits * comults > limit)
    throw ResourceBound("comonoid candidate count exceeds limit " +
                        std::to_string(limit));
  std::vector<Comonoid> out;
  for (const FinFn& e : smc.hom(object, smc.unit))
    for (const FinFn& d :
         smc.hom(object, smc.tensor_obj(object, object))) {
      Comonoid c{object, e, d};
      if (check_comonoid(smc, c).pass()) out.push_back(std::move(c));
    }
  return out;
}

Comonoid diagonal_comonoid(int c) {
  return {c, terminal_map(c), diagonal(c)};
}

Comonoid tensor_comonoid(const StrictSmc& smc, const Comonoid& a,
                         const Comonoid& b) {
  Comonoid out;
  out.object = smc.tensor_obj(a.object, b.object);
  out.counit = smc.tensor_mor(a.counit, b.counit);
  FinFn middle_swap = smc.tensor_mor(
      smc.tensor_mor(smc.identity(a.object), smc.symmetry(a.object, b.object)),
      smc.identity(b.object));
  out.comult =
      smc.compose(smc.tensor_mor(a.comult, b.comult), middle_swap);
  return out;
}

// ---------------------------------------------------------------------------
// the category of comonoids

int ComonCategory::morphism_id(int src, int dst, const FinFn& f) const {
  auto it = mor_index.find({src, dst, f.table});
  if (it == mor_index.end())
    throw IndexOutOfRange("no comonoid morphism with the given table");
  return it->second;
}

ComonCategory comonoid_category(const StrictSmc& smc,
                                const std::vector<Comonoid>& objs,
                                long long limit) {
  if (limit <= 0) limit = default_limit();
  for (const Comonoid& c : objs) {
    LawReport r = check_comonoid(smc, c);
    if (!r.pass())
      throw MalformedData("object is not a comonoid: violates " +
                          r.violations.front().rule);
  }

  ComonCategory cc;
  cc.objects = objs;
  cc.cat.n_objects = (int)objs.size();

  long long total = 0;
  for (const Comonoid& a : objs)
    for (const Comonoid& b : objs) {
      total += smc.hom_count(a.object, b.object, limit);
      if (total > limit)
        throw ResourceBound("comonoid category exceeds limit " +
                            std::to_string(limit));
    }

  for (int i = 0; i < cc.cat.n_objects; ++i) {
    const Comonoid& a = objs[i];
    for (int j = 0; j < cc.cat.n_objects; ++j) {
      const Comonoid& b = objs[j];
      for (const FinFn& p : smc.hom(a.object, b.object)) {
        if (!(smc.compose(p, b.counit) == a.counit)) continue;
        if (!(smc.compose(p, b.comult) ==
              smc.compose(a.comult, smc.tensor_mor(p, p))))
          continue;
        cc.mor_index[{i, j, p.table}] = cc.cat.mor_count();
        cc.fns.push_back(p);
        cc.cat.morphisms.push_back({i, j});
      }
    }
  }

  cc.cat.identity.resize(cc.cat.n_objects);
  for (int i = 0; i < cc.cat.n_objects; ++i)
    cc.cat.identity[i] =
        cc.morphism_id(i, i, smc.identity(objs[i].object));

  int mc = cc.cat.mor_count();
  cc.cat.comp_table.assign((size_t)mc * mc, -1);
  for (int m1 = 0; m1 < mc; ++m1)
    for (int m2 = 0; m2 < mc; ++m2) {
      if (!cc.cat.composable(m1, m2)) continue;
      cc.cat.comp_table[(size_t)m1 * mc + m2] =
          cc.morphism_id(cc.cat.dom(m1), cc.cat.cod(m2),
                         smc.compose(cc.fns[m1], cc.fns[m2]));
    }
  return cc;
}

// ---------------------------------------------------------------------------
// coKleisli fibers

int CoKleisliIndexed::fiber_mor_id(int base_obj, int x, int y,
                                   const FinFn& f) const {
  auto it = fiber_index[base_obj].find({x, y, f.table});
  if (it == fiber_index[base_obj].end())
    throw IndexOutOfRange("no coKleisli morphism with the given table");
  return it->second;
}

CoKleisliIndexed cokleisli_indexed(const StrictSmc& smc,
                                   const ComonCategory& comons,
                                   int size_bound, long long limit) {
  if (limit <= 0) limit = default_limit();
  CoKleisliIndexed k;
  k.base = comons;
  k.size_bound = size_bound;
  k.data.base = comons.cat;
  k.fiber_fns.resize(comons.cat.n_objects);
  k.fiber_index.resize(comons.cat.n_objects);

  long long total = 0;
  for (int i = 0; i < comons.cat.n_objects; ++i) {
    const Comonoid& co = comons.objects[i];
    FinCategory fib;
    fib.n_objects = size_bound + 1;
    for (int x = 0; x <= size_bound; ++x)
      for (int y = 0; y <= size_bound; ++y) {
        total += smc.hom_count(smc.tensor_obj(co.object, x), y, limit);
        if (total > limit)
          throw ResourceBound("coKleisli fibers exceed limit " +
                              std::to_string(limit));
        for (const FinFn& f : smc.hom(smc.tensor_obj(co.object, x), y)) {
          k.fiber_index[i][{x, y, f.table}] = fib.mor_count();
          k.fiber_fns[i].push_back(f);
          fib.morphisms.push_back({x, y});
        }
      }
    fib.identity.resize(fib.n_objects);
    for (int x = 0; x <= size_bound; ++x)
      fib.identity[x] = k.fiber_index[i].at(
          {x, x, smc.tensor_mor(co.counit, smc.identity(x)).table});
    int mc = fib.mor_count();
    fib.comp_table.assign((size_t)mc * mc, -1);
    for (int m1 = 0; m1 < mc; ++m1)
      for (int m2 = 0; m2 < mc; ++m2) {
        if (!fib.composable(m1, m2)) continue;
        int x = fib.dom(m1), z = fib.cod(m2);
        FinFn stage = smc.tensor_mor(co.comult, smc.identity(x));
        stage = smc.compose(
            stage, smc.tensor_mor(smc.identity(co.object), k.fiber_fns[i][m1]));
        FinFn whole = smc.compose(stage, k.fiber_fns[i][m2]);
        fib.comp_table[(size_t)m1 * mc + m2] =
            k.fiber_index[i].at({x, z, whole.table});
      }
    k.data.fibers.push_back(std::move(fib));
  }

  for (int m = 0; m < comons.cat.mor_count(); ++m) {
    int i = comons.cat.dom(m), j = comons.cat.cod(m);
    const FinFn& p = comons.fns[m];
    FunctorData r;
    r.source = k.data.fibers[j];
    r.target = k.data.fibers[i];
    r.obj_map.resize(r.source.n_objects);
    for (int x = 0; x < r.source.n_objects; ++x) r.obj_map[x] = x;
    r.mor_map.resize(r.source.mor_count());
    for (int f = 0; f < r.source.mor_count(); ++f) {
      int x = r.source.dom(f), y = r.source.cod(f);
      FinFn pulled = smc.compose(smc.tensor_mor(p, smc.identity(x)),
                                 k.fiber_fns[j][f]);
      r.mor_map[f] = k.fiber_index[i].at({x, y, pulled.table});
    }
    k.data.reindex.push_back(std::move(r));
  }
  return k;
}

// ---------------------------------------------------------------------------
// the lens category over an SMC with chosen comonoids

int SmcLensCat::object_id(int comonoid, int size) const {
  auto it = obj_index.find({comonoid, size});
  if (it == obj_index.end())
    throw IndexOutOfRange("no lens object (" + std::to_string(comonoid) +
                          ", " + std::to_string(size) + ")");
  return it->second;
}

int SmcLensCat::morphism_id(int src, int dst, const FinFn& get,
                            const FinFn& put) const {
  auto it = mor_index.find({src, dst, get.table, put.table});
  if (it == mor_index.end())
    throw IndexOutOfRange("no lens morphism with the given tables");
  return it->second;
}

SmcLensCat smc_lens_category(const StrictSmc& smc, const ComonCategory& comons,
                             int size_bound, long long limit) {
  if (limit <= 0) limit = default_limit();
  SmcLensCat g;
  for (int i = 0; i < comons.cat.n_objects; ++i)
    for (int x = 0; x <= size_bound; ++x) {
      g.obj_index[{i, x}] = (int)g.objects.size();
      g.objects.emplace_back(i, x);
    }
  g.cat.n_objects = (int)g.objects.size();

  long long total = 0;
  for (int src = 0; src < g.cat.n_objects; ++src) {
    auto [i, x] = g.objects[src];
    for (int dst = 0; dst < g.cat.n_objects; ++dst) {
      auto [j, y] = g.objects[dst];
      long long gets = (long long)comons.cat.hom(i, j).size();
      long long puts = smc.hom_count(
          smc.tensor_obj(comons.objects[i].object, y), x, limit);
      if (puts > limit || (total += gets * puts) > limit)
        throw ResourceBound("lens category exceeds limit " +
                            std::to_string(limit));
      for (int gm : comons.cat.hom(i, j))
        for (const FinFn& put : smc.hom(
                 smc.tensor_obj(comons.objects[i].object, y), x)) {
          g.mor_index[{src, dst, comons.fns[gm].table, put.table}] =
              (int)g.payloads.size();
          g.payloads.push_back({comons.fns[gm], put});
          g.cat.morphisms.push_back({src, dst});
        }
    }
  }

  int m_count = g.cat.mor_count();
  if ((long long)m_count * m_count > 100'000'000LL)
    throw ResourceBound("dense composition table too large (" +
                        std::to_string(m_count) + " morphisms)");

  g.cat.identity.resize(g.cat.n_objects);
  for (int o = 0; o < g.cat.n_objects; ++o) {
    auto [i, x] = g.objects[o];
    const Comonoid& co = comons.objects[i];
    g.cat.identity[o] =
        g.morphism_id(o, o, smc.identity(co.object),
                      smc.tensor_mor(co.counit, smc.identity(x)));
  }

  g.cat.comp_table.assign((size_t)m_count * m_count, -1);
  for (int m1 = 0; m1 < m_count; ++m1) {
    auto [i, x] = g.objects[g.cat.dom(m1)];
    (void)x;
    const Comonoid& co = comons.objects[i];
    for (int m2 = 0; m2 < m_count; ++m2) {
      if (!g.cat.composable(m1, m2)) continue;
      auto [j, z] = g.objects[g.cat.cod(m2)];
      (void)j;
      const auto& p1 = g.payloads[m1];
      const auto& p2 = g.payloads[m2];
      FinFn get = smc.compose(p1.get, p2.get);
      FinFn stage = smc.tensor_mor(co.comult, smc.identity(z));
      stage = smc.compose(
          stage, smc.tensor_mor(smc.identity(co.object),
                                smc.tensor_mor(p1.get, smc.identity(z))));
      stage = smc.compose(stage,
                          smc.tensor_mor(smc.identity(co.object), p2.put));
      FinFn put = smc.compose(stage, p1.put);
      g.cat.comp_table[(size_t)m1 * m_count + m2] =
          g.morphism_id(g.cat.dom(m1), g.cat.cod(m2), get, put);
    }
  }
  return g;
}

IsoReport check_recover_usual(const StrictSmc& smc,
                              const ComonCategory& comons, int size_bound,
                              long long limit) {
  SmcLensCat direct = smc_lens_category(smc, comons, size_bound, limit);
  CoKleisliIndexed k = cokleisli_indexed(smc, comons, size_bound, limit);
  GluedCategory glued = lens_category(k.data, limit);

  IsoReport report;
  report.subject = "direct-vs-glued lens category";
  if (direct.cat.n_objects != glued.cat.n_objects) {
    report.fail("object-count", {direct.cat.n_objects, glued.cat.n_objects});
    return report;
  }
  if (direct.cat.mor_count() != glued.cat.mor_count()) {
    report.fail("morphism-count",
                {direct.cat.mor_count(), glued.cat.mor_count()});
    return report;
  }
  for (int o = 0; o < direct.cat.n_objects; ++o) {
    ++report.checks;
    if (direct.objects[o] != glued.objects[o]) {
      report.fail("object-order", {o});
      return report;
    }
  }
  for (int m = 0; m < direct.cat.mor_count(); ++m) {
    ++report.checks;
    if (direct.cat.dom(m) != glued.cat.dom(m) ||
        direct.cat.cod(m) != glued.cat.cod(m))
      report.fail("endpoints", {m});
    const GluedCategory::Key& key = glued.keys[m];
    auto [i, x] = direct.objects[direct.cat.dom(m)];
    (void)x;
    if (!(direct.payloads[m].get == comons.fn_of(key.base_mor)) ||
        !(direct.payloads[m].put == k.fiber_fns[i][key.fiber_mor]))
      report.fail("payload", {m});
  }
  for (int o = 0; o < direct.cat.n_objects; ++o) {
    ++report.checks;
    if (direct.cat.id_of(o) != glued.cat.id_of(o))
      report.fail("identity", {o});
  }
  int mc = direct.cat.mor_count();
  for (int m1 = 0; m1 < mc; ++m1)
    for (int m2 = 0; m2 < mc; ++m2) {
      if (!direct.cat.composable(m1, m2)) continue;
      ++report.checks;
      if (direct.cat.comp_raw(m1, m2) != glued.cat.comp_raw(m1, m2))
        report.fail("composition", {m1, m2});
    }
  return report;
}

}  // namespace glens
