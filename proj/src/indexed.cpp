#include "glens/indexed.hpp"

#include <algorithm>

namespace glens {

namespace {

void validate_indexed(const IndexedCat& f, Variance v) {
  if ((int)f.fibers.size() != f.base.n_objects)
    throw MalformedData("fiber count " + std::to_string(f.fibers.size()) +
                        " does not match base object count");
  if ((int)f.reindex.size() != f.base.mor_count())
    throw MalformedData("reindex count " + std::to_string(f.reindex.size()) +
                        " does not match base morphism count");
  for (int m = 0; m < f.base.mor_count(); ++m) {
    int src_fiber =
        v == Variance::contravariant ? f.base.cod(m) : f.base.dom(m);
    int dst_fiber =
        v == Variance::contravariant ? f.base.dom(m) : f.base.cod(m);
    if (!(f.reindex[m].source == f.fibers[src_fiber]))
      throw MalformedData("reindex of base morphism " + std::to_string(m) +
                          " has the wrong source fiber");
    if (!(f.reindex[m].target == f.fibers[dst_fiber]))
      throw MalformedData("reindex of base morphism " + std::to_string(m) +
                          " has the wrong target fiber");
  }
}

}  // namespace

LawReport check_indexed_laws(const IndexedCat& f, Variance v) {
  validate_indexed(f, v);
  LawReport report;
  report.subject = "indexed(base-morphisms=" +
                   std::to_string(f.base.mor_count()) + ")";

  for (int m = 0; m < f.base.mor_count(); ++m) {
    LawReport fr = check_functor_laws(f.reindex[m]);
    report.checks += fr.checks;
    for (Violation& viol : fr.violations) {
      viol.rule = "reindex-functor/" + viol.rule;
      viol.at.insert(viol.at.begin(), m);
      report.violations.push_back(std::move(viol));
    }
  }

  for (int c = 0; c < f.base.n_objects; ++c) {
    const FunctorData& r = f.reindex[f.base.id_of(c)];
    for (size_t x = 0; x < r.obj_map.size(); ++x) {
      ++report.checks;
      if (r.obj_map[x] != (int)x)
        report.fail("reindex-identity", {c, (long long)x},
                    "object image " + std::to_string(r.obj_map[x]));
    }
    for (size_t k = 0; k < r.mor_map.size(); ++k) {
      ++report.checks;
      if (r.mor_map[k] != (int)k)
        report.fail("reindex-identity", {c, (long long)k},
                    "morphism image " + std::to_string(r.mor_map[k]));
    }
  }

  int m_count = f.base.mor_count();
  for (int a = 0; a < m_count; ++a)
    for (int b = 0; b < m_count; ++b) {
      if (!f.base.composable(a, b)) continue;
      int ab = f.base.comp_raw(a, b);
      // Contravariantly reindex(a;b) applies reindex(b) first, covariantly
      // reindex(a) first.
      const FunctorData& first =
          v == Variance::contravariant ? f.reindex[b] : f.reindex[a];
      const FunctorData& second =
          v == Variance::contravariant ? f.reindex[a] : f.reindex[b];
      const FunctorData& joint = f.reindex[ab];
      for (size_t x = 0; x < joint.obj_map.size(); ++x) {
        ++report.checks;
        if (joint.obj_map[x] != second.obj_map[first.obj_map[x]])
          report.fail("reindex-composition", {a, b, (long long)x},
                      "object images differ");
      }
      for (size_t k = 0; k < joint.mor_map.size(); ++k) {
        ++report.checks;
        if (joint.mor_map[k] != second.mor_map[first.mor_map[k]])
          report.fail("reindex-composition", {a, b, (long long)k},
                      "morphism images differ");
      }
    }
  return report;
}

IndexedCat pointwise_opposite(const IndexedCat& f) {
  IndexedCat out;
  out.base = f.base;
  out.fibers.reserve(f.fibers.size());
  for (const FinCategory& fib : f.fibers) out.fibers.push_back(opposite(fib));
  out.reindex.reserve(f.reindex.size());
  for (int m = 0; m < f.base.mor_count(); ++m) {
    const FunctorData& r = f.reindex[m];
    out.reindex.push_back(FunctorData{opposite(r.source), opposite(r.target),
                                      r.obj_map, r.mor_map});
  }
  return out;
}

IndexedCat base_opposed(const IndexedCat& f) {
  IndexedCat out = f;
  out.base = opposite(f.base);
  return out;
}

int GluedCategory::object_id(int c, int x) const {
  auto it = obj_index.find({c, x});
  if (it == obj_index.end())
    throw IndexOutOfRange("no glued object (" + std::to_string(c) + ", " +
                          std::to_string(x) + ")");
  return it->second;
}

int GluedCategory::morphism_id(int base_mor, int aux_obj, int fiber_mor) const {
  auto it = mor_index.find({base_mor, aux_obj, fiber_mor});
  if (it == mor_index.end())
    throw IndexOutOfRange("no glued morphism with key (" +
                          std::to_string(base_mor) + ", " +
                          std::to_string(aux_obj) + ", " +
                          std::to_string(fiber_mor) + ")");
  return it->second;
}

namespace {

enum class GlueMode { covariant, contravariant, lens };

GluedCategory build_glued(const IndexedCat& f, GlueMode mode, long long limit) {
  if (limit <= 0) limit = default_limit();
  Variance v = mode == GlueMode::covariant ? Variance::covariant
                                           : Variance::contravariant;
  validate_indexed(f, v);
  {
    LawReport strict = check_indexed_laws(f, v);
    if (!strict.pass())
      throw MalformedData(
          "glued construction requires strict reindexing; first failure: " +
          strict.violations.front().rule);
  }

  GluedCategory g;
  for (int c = 0; c < f.base.n_objects; ++c)
    for (int x = 0; x < f.fibers[c].n_objects; ++x) {
      g.obj_index[{c, x}] = (int)g.objects.size();
      g.objects.emplace_back(c, x);
    }
  g.cat.n_objects = (int)g.objects.size();

  // Morphisms grouped by (dom object, cod object), then by
  // (base morphism, fiber morphism) lexicographically.
  for (int src = 0; src < g.cat.n_objects; ++src) {
    auto [c, x] = g.objects[src];
    for (int dst = 0; dst < g.cat.n_objects; ++dst) {
      auto [d, y] = g.objects[dst];
      for (int f_base : f.base.hom(c, d)) {
        const FunctorData& r = f.reindex[f_base];
        std::vector<int> fiber_homs;
        int aux = 0;
        switch (mode) {
          case GlueMode::covariant:
            // fiber part lives in fibers[d]: reindex(f)(x) -> y
            fiber_homs = f.fibers[d].hom(r.obj_map[x], y);
            aux = x;
            break;
          case GlueMode::contravariant:
            // fiber part lives in fibers[c]: x -> reindex(f)(y)
            fiber_homs = f.fibers[c].hom(x, r.obj_map[y]);
            aux = y;
            break;
          case GlueMode::lens:
            // fiber part lives in fibers[c]: reindex(f)(y) -> x
            fiber_homs = f.fibers[c].hom(r.obj_map[y], x);
            aux = y;
            break;
        }
        for (int k : fiber_homs) {
          if ((long long)g.keys.size() >= limit)
            throw ResourceBound("glued category exceeds limit " +
                                std::to_string(limit));
          g.mor_index[{f_base, aux, k}] = (int)g.keys.size();
          g.keys.push_back({f_base, aux, k});
          g.cat.morphisms.push_back({src, dst});
        }
      }
    }
  }

  int m_count = g.cat.mor_count();
  if ((long long)m_count * m_count > 100'000'000LL)
    throw ResourceBound("dense composition table too large (" +
                        std::to_string(m_count) + " morphisms)");

  g.cat.identity.resize(g.cat.n_objects);
  for (int o = 0; o < g.cat.n_objects; ++o) {
    auto [c, x] = g.objects[o];
    g.cat.identity[o] =
        g.morphism_id(f.base.id_of(c), x, f.fibers[c].id_of(x));
  }

  g.cat.comp_table.assign((size_t)m_count * m_count, -1);
  for (int m1 = 0; m1 < m_count; ++m1) {
    for (int m2 = 0; m2 < m_count; ++m2) {
      if (!g.cat.composable(m1, m2)) continue;
      const GluedCategory::Key& k1 = g.keys[m1];
      const GluedCategory::Key& k2 = g.keys[m2];
      int fg = f.base.comp_raw(k1.base_mor, k2.base_mor);
      auto [c, x] = g.objects[g.cat.dom(m1)];
      int fiber_part = -1, aux = -1;
      switch (mode) {
        case GlueMode::covariant: {
          // reindex(g)(k1) ; k2 in the fiber over the final base object
          auto [e, z] = g.objects[g.cat.cod(m2)];
          const FunctorData& rg = f.reindex[k2.base_mor];
          fiber_part =
              f.fibers[e].comp_raw(rg.mor_map[k1.fiber_mor], k2.fiber_mor);
          aux = x;
          break;
        }
        case GlueMode::contravariant: {
          // k1 ; reindex(f)(k2) in the fiber over the initial base object
          const FunctorData& rf = f.reindex[k1.base_mor];
          fiber_part =
              f.fibers[c].comp_raw(k1.fiber_mor, rf.mor_map[k2.fiber_mor]);
          aux = k2.aux_obj;
          break;
        }
        case GlueMode::lens: {
          // reindex(f)(k2) ; k1 in the fiber over the initial base object
          const FunctorData& rf = f.reindex[k1.base_mor];
          fiber_part =
              f.fibers[c].comp_raw(rf.mor_map[k2.fiber_mor], k1.fiber_mor);
          aux = k2.aux_obj;
          break;
        }
      }
      g.cat.comp_table[(size_t)m1 * m_count + m2] =
          g.morphism_id(fg, aux, fiber_part);
    }
  }

  g.to_base.source = g.cat;
  g.to_base.target = f.base;
  g.to_base.obj_map.resize(g.cat.n_objects);
  for (int o = 0; o < g.cat.n_objects; ++o)
    g.to_base.obj_map[o] = g.objects[o].first;
  g.to_base.mor_map.resize(m_count);
  for (int m = 0; m < m_count; ++m) g.to_base.mor_map[m] = g.keys[m].base_mor;
  return g;
}

}  // namespace

GluedCategory groth_covariant(const IndexedCat& f, long long limit) {
  return build_glued(f, GlueMode::covariant, limit);
}

GluedCategory groth_contravariant(const IndexedCat& f, long long limit) {
  return build_glued(f, GlueMode::contravariant, limit);
}

GluedCategory lens_category(const IndexedCat& f, long long limit) {
  return build_glued(f, GlueMode::lens, limit);
}

IsoReport check_three_way_iso(const IndexedCat& f, long long limit) {
  GluedCategory lens = lens_category(f, limit);
  GluedCategory cov = groth_covariant(base_opposed(f), limit);
  FinCategory cov_op = opposite(cov.cat);
  GluedCategory contra = groth_contravariant(pointwise_opposite(f), limit);

  IsoReport report;
  report.subject = "three-way lens-category comparison";
  if (lens.cat.n_objects != cov.cat.n_objects ||
      lens.cat.n_objects != contra.cat.n_objects) {
    report.fail("object-count",
                {lens.cat.n_objects, cov.cat.n_objects, contra.cat.n_objects});
    return report;
  }
  if (lens.cat.mor_count() != cov.cat.mor_count() ||
      lens.cat.mor_count() != contra.cat.mor_count()) {
    report.fail("morphism-count", {lens.cat.mor_count(), cov.cat.mor_count(),
                                   contra.cat.mor_count()});
    return report;
  }

  std::vector<int> obj_to_cov(lens.cat.n_objects),
      obj_to_contra(lens.cat.n_objects);
  for (int o = 0; o < lens.cat.n_objects; ++o) {
    auto [c, x] = lens.objects[o];
    ++report.checks;
    try {
      obj_to_cov[o] = cov.object_id(c, x);
      obj_to_contra[o] = contra.object_id(c, x);
    } catch (const IndexOutOfRange&) {
      report.fail("object-correspondence", {o});
      return report;
    }
  }

  int m_count = lens.cat.mor_count();
  std::vector<int> mor_to_cov(m_count), mor_to_contra(m_count);
  for (int m = 0; m < m_count; ++m) {
    const GluedCategory::Key& key = lens.keys[m];
    ++report.checks;
    try {
      // In the covariant build over the opposite base, the same key
      // (base morphism, codomain fiber object, fiber morphism) names the
      // reversed morphism; the contravariant build of the pointwise
      // opposite reuses fiber morphism ids unchanged.
      mor_to_cov[m] = cov.morphism_id(key.base_mor, key.aux_obj, key.fiber_mor);
      mor_to_contra[m] =
          contra.morphism_id(key.base_mor, key.aux_obj, key.fiber_mor);
    } catch (const IndexOutOfRange&) {
      report.fail("morphism-correspondence", {m});
      return report;
    }
  }

  for (int m = 0; m < m_count; ++m) {
    ++report.checks;
    int a = mor_to_cov[m];
    if (cov_op.dom(a) != obj_to_cov[lens.cat.dom(m)] ||
        cov_op.cod(a) != obj_to_cov[lens.cat.cod(m)])
      report.fail("endpoints-via-covariant", {m, a});
    int b = mor_to_contra[m];
    if (contra.cat.dom(b) != obj_to_contra[lens.cat.dom(m)] ||
        contra.cat.cod(b) != obj_to_contra[lens.cat.cod(m)])
      report.fail("endpoints-via-contravariant", {m, b});
    // All three must project to the same base morphism.
    if (lens.to_base.mor_map[m] != cov.to_base.mor_map[a] ||
        lens.to_base.mor_map[m] != contra.to_base.mor_map[b])
      report.fail("projection-agreement", {m, a, b});
  }

  for (int o = 0; o < lens.cat.n_objects; ++o) {
    ++report.checks;
    if (mor_to_cov[lens.cat.id_of(o)] != cov.cat.id_of(obj_to_cov[o]))
      report.fail("identity-via-covariant", {o});
    if (mor_to_contra[lens.cat.id_of(o)] !=
        contra.cat.id_of(obj_to_contra[o]))
      report.fail("identity-via-contravariant", {o});
  }

  for (int m1 = 0; m1 < m_count; ++m1)
    for (int m2 = 0; m2 < m_count; ++m2) {
      if (!lens.cat.composable(m1, m2)) continue;
      ++report.checks;
      int direct = lens.cat.comp_raw(m1, m2);
      int via_cov = cov_op.comp_raw(mor_to_cov[m1], mor_to_cov[m2]);
      if (via_cov != mor_to_cov[direct])
        report.fail("composition-via-covariant", {m1, m2},
                    "composite of images " + std::to_string(via_cov) +
                        " vs image of composite " +
                        std::to_string(mor_to_cov[direct]));
      int via_contra =
          contra.cat.comp_raw(mor_to_contra[m1], mor_to_contra[m2]);
      if (via_contra != mor_to_contra[direct])
        report.fail("composition-via-contravariant", {m1, m2},
                    "composite of images " + std::to_string(via_contra) +
                        " vs image of composite " +
                        std::to_string(mor_to_contra[direct]));
    }
  return report;
}

namespace {

int phi_obj(const LaxatorData& lax, int c, int d, int x, int y) {
  if (c >= (int)lax.obj_phi.size() || d >= (int)lax.obj_phi[c].size())
    return -1;
  const auto& block = lax.obj_phi[c][d];
  if (x >= (int)block.size() || y >= (int)block[x].size()) return -1;
  return block[x][y];
}

int phi_mor(const LaxatorData& lax, int c, int d, int k, int l) {
  if (c >= (int)lax.mor_phi.size() || d >= (int)lax.mor_phi[c].size())
    return -1;
  const auto& block = lax.mor_phi[c][d];
  if (k >= (int)block.size() || l >= (int)block[k].size()) return -1;
  return block[k][l];
}

int base_obj_tensor(const MonoidalBaseData& mb, int a, int b) {
  if (a >= (int)mb.obj_tensor.size() || b >= (int)mb.obj_tensor[a].size())
    return -1;
  return mb.obj_tensor[a][b];
}

int base_mor_tensor(const MonoidalBaseData& mb, int f, int g) {
  if (f >= (int)mb.mor_tensor.size() || g >= (int)mb.mor_tensor[f].size())
    return -1;
  return mb.mor_tensor[f][g];
}

std::string square(int a, int b, int c, int d) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ", " + std::to_string(d) + ")";
}

void validate_tensor_data(const IndexedCat& f, const MonoidalBaseData& mb,
                          const LaxatorData& lax) {
  const FinCategory& base = f.base;
  int m_count = base.mor_count();

  // Base tensor: endpoints, identities, interchange over the defined range.
  for (int a = 0; a < m_count; ++a)
    for (int b = 0; b < m_count; ++b) {
      int ab = base_mor_tensor(mb, a, b);
      if (ab < 0) continue;
      int dd = base_obj_tensor(mb, base.dom(a), base.dom(b));
      int cc = base_obj_tensor(mb, base.cod(a), base.cod(b));
      if (dd < 0 || cc < 0 || base.dom(ab) != dd || base.cod(ab) != cc)
        throw LaxatorIncoherent("base tensor of morphisms (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ") has undefined or wrong endpoints");
    }
  for (int a = 0; a < base.n_objects; ++a)
    for (int b = 0; b < base.n_objects; ++b) {
      int ab = base_obj_tensor(mb, a, b);
      if (ab < 0) continue;
      if (base_mor_tensor(mb, base.id_of(a), base.id_of(b)) != base.id_of(ab))
        throw LaxatorIncoherent("base tensor does not preserve identities at " +
                                square(a, b, -1, -1));
    }
  for (int a = 0; a < m_count; ++a)
    for (int a2 = 0; a2 < m_count; ++a2) {
      if (!base.composable(a, a2)) continue;
      for (int b = 0; b < m_count; ++b) {
        if (base_mor_tensor(mb, a, b) < 0) continue;
        for (int b2 = 0; b2 < m_count; ++b2) {
          if (!base.composable(b, b2)) continue;
          int t1 = base_mor_tensor(mb, a, b), t2 = base_mor_tensor(mb, a2, b2);
          int tc = base_mor_tensor(mb, base.comp_raw(a, a2),
                                   base.comp_raw(b, b2));
          if (t1 < 0 || t2 < 0 || tc < 0) continue;
          if (base.comp_raw(t1, t2) != tc)
            throw LaxatorIncoherent("base tensor interchange fails at " +
                                    square(a, a2, b, b2));
        }
      }
    }

  // Laxator blocks: endpoints, functoriality, naturality in the base.
  for (int c = 0; c < base.n_objects; ++c)
    for (int d = 0; d < base.n_objects; ++d) {
      int t = base_obj_tensor(mb, c, d);
      const FinCategory& fc = f.fibers[c];
      const FinCategory& fd = f.fibers[d];
      for (int x = 0; x < fc.n_objects; ++x)
        for (int y = 0; y < fd.n_objects; ++y) {
          int z = phi_obj(lax, c, d, x, y);
          if (z < 0) continue;
          if (t < 0 || z >= f.fibers[t].n_objects)
            throw LaxatorIncoherent("laxator object image out of range at (" +
                                    std::to_string(c) + ", " +
                                    std::to_string(d) + ")");
          int idz = phi_mor(lax, c, d, fc.id_of(x), fd.id_of(y));
          if (idz != f.fibers[t].id_of(z))
            throw LaxatorIncoherent(
                "laxator does not preserve identities at (" +
                std::to_string(c) + ", " + std::to_string(d) + ", " +
                std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      for (int k = 0; k < fc.mor_count(); ++k)
        for (int l = 0; l < fd.mor_count(); ++l) {
          int kl = phi_mor(lax, c, d, k, l);
          if (kl < 0) continue;
          int zd = phi_obj(lax, c, d, fc.dom(k), fd.dom(l));
          int zc = phi_obj(lax, c, d, fc.cod(k), fd.cod(l));
          if (t < 0 || zd < 0 || zc < 0 || f.fibers[t].dom(kl) != zd ||
              f.fibers[t].cod(kl) != zc)
            throw LaxatorIncoherent(
                "laxator morphism image has undefined or wrong endpoints at (" +
                std::to_string(c) + ", " + std::to_string(d) + ", " +
                std::to_string(k) + ", " + std::to_string(l) + ")");
        }
      for (int k = 0; k < fc.mor_count(); ++k)
        for (int k2 = 0; k2 < fc.mor_count(); ++k2) {
          if (!fc.composable(k, k2)) continue;
          for (int l = 0; l < fd.mor_count(); ++l) {
            if (phi_mor(lax, c, d, k, l) < 0) continue;
            for (int l2 = 0; l2 < fd.mor_count(); ++l2) {
              if (!fd.composable(l, l2)) continue;
              int p1 = phi_mor(lax, c, d, k, l);
              int p2 = phi_mor(lax, c, d, k2, l2);
              int pc = phi_mor(lax, c, d, fc.comp_raw(k, k2),
                               fd.comp_raw(l, l2));
              if (p1 < 0 || p2 < 0 || pc < 0) continue;
              if (f.fibers[t].comp_raw(p1, p2) != pc)
                throw LaxatorIncoherent(
                    "laxator functoriality fails at (" + std::to_string(c) +
                    ", " + std::to_string(d) + ") square " +
                    square(k, k2, l, l2));
            }
          }
        }
    }

  // Naturality: reindexing commutes with the laxator.
  for (int a = 0; a < m_count; ++a)
    for (int b = 0; b < m_count; ++b) {
      int ab = base_mor_tensor(mb, a, b);
      if (ab < 0) continue;
      int c = base.dom(a), c2 = base.cod(a);
      int d = base.dom(b), d2 = base.cod(b);
      const FunctorData& ra = f.reindex[a];
      const FunctorData& rb = f.reindex[b];
      const FunctorData& rab = f.reindex[ab];
      // Reindexing can shrink families into the defined range, so the
      // square is only required to commute where its upper entry exists.
      for (int x = 0; x < f.fibers[c2].n_objects; ++x)
        for (int y = 0; y < f.fibers[d2].n_objects; ++y) {
          int up = phi_obj(lax, c2, d2, x, y);
          if (up < 0) continue;
          int down =
              phi_obj(lax, c, d, ra.obj_map[x], rb.obj_map[y]);
          if (down < 0 || rab.obj_map[up] != down)
            throw LaxatorIncoherent(
                "laxator naturality fails on objects at base pair (" +
                std::to_string(a) + ", " + std::to_string(b) + "), fibers (" +
                std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      for (int k = 0; k < f.fibers[c2].mor_count(); ++k)
        for (int l = 0; l < f.fibers[d2].mor_count(); ++l) {
          int up = phi_mor(lax, c2, d2, k, l);
          if (up < 0) continue;
          int down = phi_mor(lax, c, d, ra.mor_map[k], rb.mor_map[l]);
          if (down < 0 || rab.mor_map[up] != down)
            throw LaxatorIncoherent(
                "laxator naturality fails on morphisms at base pair (" +
                std::to_string(a) + ", " + std::to_string(b) +
                "), fiber morphisms (" + std::to_string(k) + ", " +
                std::to_string(l) + ")");
        }
    }
}

}  // namespace

LensTensor lens_tensor(const IndexedCat& f, const GluedCategory& lens,
                       const MonoidalBaseData& base_data,
                       const LaxatorData& laxator) {
  validate_tensor_data(f, base_data, laxator);

  LensTensor t;
  int n_obj = lens.cat.n_objects;
  int m_count = lens.cat.mor_count();
  t.obj_tensor.assign(n_obj, std::vector<int>(n_obj, -1));
  for (int p = 0; p < n_obj; ++p) {
    auto [c, x] = lens.objects[p];
    for (int q = 0; q < n_obj; ++q) {
      auto [d, y] = lens.objects[q];
      int cd = base_obj_tensor(base_data, c, d);
      if (cd < 0) continue;
      int xy = phi_obj(laxator, c, d, x, y);
      if (xy < 0) continue;
      t.obj_tensor[p][q] = lens.object_id(cd, xy);
    }
  }

  t.mor_tensor.assign(m_count, std::vector<int>(m_count, -1));
  for (int m = 0; m < m_count; ++m) {
    const GluedCategory::Key& mk = lens.keys[m];
    auto [c, x] = lens.objects[lens.cat.dom(m)];
    auto [d, y] = lens.objects[lens.cat.cod(m)];
    (void)x;
    (void)y;
    for (int n = 0; n < m_count; ++n) {
      const GluedCategory::Key& nk = lens.keys[n];
      auto [c2, x2] = lens.objects[lens.cat.dom(n)];
      auto [d2, y2] = lens.objects[lens.cat.cod(n)];
      (void)x2;
      (void)y2;
      int fg = base_mor_tensor(base_data, mk.base_mor, nk.base_mor);
      if (fg < 0) continue;
      int aux = phi_obj(laxator, d, d2, mk.aux_obj, nk.aux_obj);
      if (aux < 0) continue;
      int put = phi_mor(laxator, c, c2, mk.fiber_mor, nk.fiber_mor);
      if (put < 0) continue;
      t.mor_tensor[m][n] = lens.morphism_id(fg, aux, put);
    }
  }

  // Interchange over every defined composable 4-tuple, grouped by the
  // source object pair of the second factor to keep the loop tight.
  t.interchange.subject = "lens-tensor interchange";
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_src;
  for (int m = 0; m < m_count; ++m)
    for (int n = 0; n < m_count; ++n)
      if (t.mor_tensor[m][n] >= 0)
        by_src[{lens.cat.dom(m), lens.cat.dom(n)}].emplace_back(m, n);

  for (const auto& [src, firsts] : by_src) {
    (void)src;
    for (auto [alpha, beta] : firsts) {
      auto it = by_src.find({lens.cat.cod(alpha), lens.cat.cod(beta)});
      if (it == by_src.end()) continue;
      for (auto [gamma, delta] : it->second) {
        ++t.interchange.checks;
        int lhs = t.mor_tensor[lens.cat.comp_raw(alpha, gamma)]
                              [lens.cat.comp_raw(beta, delta)];
        int tensored1 = t.mor_tensor[alpha][beta];
        int tensored2 = t.mor_tensor[gamma][delta];
        int rhs = lens.cat.comp_raw(tensored1, tensored2);
        if (lhs != rhs)
          t.interchange.fail(
              "interchange", {alpha, beta, gamma, delta},
              "tensor of composites " + std::to_string(lhs) +
                  " vs composite of tensors " + std::to_string(rhs));
      }
    }
  }
  return t;
}

}  // namespace glens
