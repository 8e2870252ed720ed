#include "glens/instances.hpp"

#include <algorithm>
#include <numeric>

namespace glens {

namespace {

// positions of each codomain element's preimage, in ascending order
std::vector<std::vector<int>> preimages(const FinFn& f) {
  std::vector<std::vector<int>> pre(f.cod);
  for (int i = 0; i < f.dom; ++i) pre[f.table[i]].push_back(i);
  return pre;
}

void require_family(const FinFn& f, const std::vector<int>& over_a,
                    const std::vector<int>& over_b) {
  validate_fn(f);
  if ((int)over_a.size() != f.dom)
    throw MalformedData("family over the source has length " +
                        std::to_string(over_a.size()) + ", expected " +
                        std::to_string(f.dom));
  if ((int)over_b.size() != f.cod)
    throw MalformedData("family over the target has length " +
                        std::to_string(over_b.size()) + ", expected " +
                        std::to_string(f.cod));
}

}  // namespace

std::vector<int> bundle_to_family(const FinFn& p) {
  validate_fn(p);
  std::vector<int> sizes(p.cod, 0);
  for (int e = 0; e < p.dom; ++e) ++sizes[p.table[e]];
  return sizes;
}

FinFn family_to_bundle(const std::vector<int>& sizes) {
  FinFn p;
  p.cod = (int)sizes.size();
  for (int i = 0; i < (int)sizes.size(); ++i) {
    if (sizes[i] < 0) throw MalformedData("negative fiber size");
    p.table.insert(p.table.end(), sizes[i], i);
  }
  p.dom = (int)p.table.size();
  return p;
}

FinFn bundle_sort_bijection(const FinFn& p) {
  validate_fn(p);
  std::vector<int> sizes = bundle_to_family(p);
  // start of each fiber block in the canonical bundle
  std::vector<int> next(p.cod, 0);
  for (int i = 1; i < p.cod; ++i) next[i] = next[i - 1] + sizes[i - 1];
  FinFn s;
  s.dom = s.cod = p.dom;
  s.table.resize(p.dom);
  for (int e = 0; e < p.dom; ++e) s.table[e] = next[p.table[e]]++;
  return s;
}

std::vector<int> reindex_family(const FinFn& f,
                                const std::vector<int>& over_b) {
  validate_fn(f);
  if ((int)over_b.size() != f.cod)
    throw MalformedData("family length does not match the map's target");
  std::vector<int> out(f.dom);
  for (int i = 0; i < f.dom; ++i) out[i] = over_b[f.table[i]];
  return out;
}

std::vector<int> dep_sum(const FinFn& f, const std::vector<int>& over_a) {
  validate_fn(f);
  if ((int)over_a.size() != f.dom)
    throw MalformedData("family length does not match the map's source");
  std::vector<int> out(f.cod, 0);
  for (int i = 0; i < f.dom; ++i) out[f.table[i]] += over_a[i];
  return out;
}

std::vector<int> dep_prod(const FinFn& f, const std::vector<int>& over_a) {
  validate_fn(f);
  if ((int)over_a.size() != f.dom)
    throw MalformedData("family length does not match the map's source");
  std::vector<int> out(f.cod, 1);
  for (int i = 0; i < f.dom; ++i) out[f.table[i]] *= over_a[i];
  return out;
}

std::vector<FinFn> sum_transpose(const FinFn& f, const std::vector<int>& x,
                                 const std::vector<int>& y,
                                 const std::vector<FinFn>& over_b) {
  require_family(f, x, y);
  std::vector<int> sums = dep_sum(f, x);
  if (over_b.size() != y.size())
    throw MalformedData("component count does not match the target base");
  for (int j = 0; j < f.cod; ++j)
    if (over_b[j].dom != sums[j] || over_b[j].cod != y[j])
      throw MalformedData("component " + std::to_string(j) +
                          " is not a map from the summed fiber");
  // block offset of each source element within its fiber's concatenation
  std::vector<int> offset(f.dom, 0), seen(f.cod, 0);
  for (int i = 0; i < f.dom; ++i) {
    offset[i] = seen[f.table[i]];
    seen[f.table[i]] += x[i];
  }
  std::vector<FinFn> out(f.dom);
  for (int i = 0; i < f.dom; ++i) {
    FinFn c;
    c.dom = x[i];
    c.cod = y[f.table[i]];
    c.table.resize(x[i]);
    for (int t = 0; t < x[i]; ++t)
      c.table[t] = over_b[f.table[i]].table[offset[i] + t];
    out[i] = c;
  }
  return out;
}

std::vector<FinFn> sum_untranspose(const FinFn& f, const std::vector<int>& x,
                                   const std::vector<int>& y,
                                   const std::vector<FinFn>& over_a) {
  require_family(f, x, y);
  if (over_a.size() != x.size())
    throw MalformedData("component count does not match the source base");
  for (int i = 0; i < f.dom; ++i)
    if (over_a[i].dom != x[i] || over_a[i].cod != y[f.table[i]])
      throw MalformedData("component " + std::to_string(i) +
                          " has the wrong endpoints");
  std::vector<int> sums = dep_sum(f, x);
  std::vector<FinFn> out(f.cod);
  for (int j = 0; j < f.cod; ++j) {
    out[j].dom = sums[j];
    out[j].cod = y[j];
  }
  std::vector<int> seen(f.cod, 0);
  for (int i = 0; i < f.dom; ++i) {
    FinFn& target = out[f.table[i]];
    (void)seen[f.table[i]];
    for (int t = 0; t < x[i]; ++t) target.table.push_back(over_a[i].table[t]);
  }
  return out;
}

std::vector<FinFn> prod_transpose(const FinFn& f, const std::vector<int>& x,
                                  const std::vector<int>& y,
                                  const std::vector<FinFn>& over_b) {
  require_family(f, x, y);
  std::vector<int> prods = dep_prod(f, x);
  if (over_b.size() != y.size())
    throw MalformedData("component count does not match the target base");
  for (int j = 0; j < f.cod; ++j)
    if (over_b[j].dom != y[j] || over_b[j].cod != prods[j])
      throw MalformedData("component " + std::to_string(j) +
                          " is not a map into the fiber product");
  std::vector<std::vector<int>> pre = preimages(f);
  // suffix products give each coordinate's place value (first coordinate
  // most significant, matching the pairing convention)
  std::vector<FinFn> out(f.dom);
  for (int j = 0; j < f.cod; ++j) {
    const std::vector<int>& ps = pre[j];
    for (size_t s = 0; s < ps.size(); ++s) {
      int place = 1;
      for (size_t s2 = s + 1; s2 < ps.size(); ++s2) place *= x[ps[s2]];
      int i = ps[s];
      FinFn c;
      c.dom = y[j];
      c.cod = x[i];
      c.table.resize(y[j]);
      for (int v = 0; v < y[j]; ++v)
        c.table[v] = x[i] == 0 ? 0 : (over_b[j].table[v] / place) % x[i];
      out[i] = c;
    }
  }
  return out;
}

std::vector<FinFn> prod_untranspose(const FinFn& f, const std::vector<int>& x,
                                    const std::vector<int>& y,
                                    const std::vector<FinFn>& over_a) {
  require_family(f, x, y);
  if (over_a.size() != x.size())
    throw MalformedData("component count does not match the source base");
  for (int i = 0; i < f.dom; ++i)
    if (over_a[i].dom != y[f.table[i]] || over_a[i].cod != x[i])
      throw MalformedData("component " + std::to_string(i) +
                          " has the wrong endpoints");
  std::vector<int> prods = dep_prod(f, x);
  std::vector<std::vector<int>> pre = preimages(f);
  std::vector<FinFn> out(f.cod);
  for (int j = 0; j < f.cod; ++j) {
    out[j].dom = y[j];
    out[j].cod = prods[j];
    out[j].table.resize(y[j]);
    for (int v = 0; v < y[j]; ++v) {
      int code = 0;
      for (int i : pre[j]) code = code * x[i] + over_a[i].table[v];
      out[j].table[v] = code;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// slice-style indexed category

int SliceIndexed::family_obj(int c, const std::vector<int>& sizes) const {
  if (c < 0 || c > max_size)
    throw IndexOutOfRange("base size " + std::to_string(c) +
                          " outside the carrier");
  if ((int)sizes.size() != c)
    throw MalformedData("family length does not match the base size");
  for (int s : sizes)
    if (s < 0 || s > fiber_bound)
      throw IndexOutOfRange("fiber size " + std::to_string(s) +
                            " outside the carrier");
  return fiber_prod[c].obj_code(sizes);
}

std::vector<int> SliceIndexed::family_of(int c, int obj) const {
  return fiber_prod[c].obj_tuple(obj);
}

int SliceIndexed::family_mor(int c, const std::vector<FinFn>& components) const {
  if ((int)components.size() != c)
    throw MalformedData("component count does not match the base size");
  std::vector<int> ids(c);
  for (int i = 0; i < c; ++i) ids[i] = component.id_of_fn(components[i]);
  return fiber_prod[c].mor_code(ids);
}

std::vector<FinFn> SliceIndexed::family_mor_of(int c, int mor) const {
  std::vector<int> ids = fiber_prod[c].mor_tuple(mor);
  std::vector<FinFn> out(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) out[i] = component.fn_of(ids[i]);
  return out;
}

SliceIndexed slice_indexed(int max_size, int fiber_bound, long long limit) {
  if (max_size < 0) throw MalformedData("negative carrier bound");
  if (fiber_bound < 0) fiber_bound = max_size;
  if (limit <= 0) limit = default_limit();

  SliceIndexed s;
  s.max_size = max_size;
  s.fiber_bound = fiber_bound;
  s.base_fs = finset_category(max_size, limit);
  s.component = finset_category(fiber_bound, limit);
  s.data.base = s.base_fs.cat;

  for (int c = 0; c <= max_size; ++c) {
    std::vector<const FinCategory*> factors(c, &s.component.cat);
    s.fiber_prod.push_back(product_category(factors, limit));
    s.data.fibers.push_back(s.fiber_prod.back().cat);
  }

  for (int m = 0; m < s.data.base.mor_count(); ++m) {
    const FinFn& f = s.base_fs.fn_of(m);
    int a = f.dom, b = f.cod;
    FunctorData r;
    r.source = s.data.fibers[b];
    r.target = s.data.fibers[a];
    r.obj_map.resize(r.source.n_objects);
    for (int o = 0; o < r.source.n_objects; ++o) {
      std::vector<int> tb = s.fiber_prod[b].obj_tuple(o);
      std::vector<int> ta(a);
      for (int i = 0; i < a; ++i) ta[i] = tb[f.table[i]];
      r.obj_map[o] = s.fiber_prod[a].obj_code(ta);
    }
    r.mor_map.resize(r.source.mor_count());
    for (int k = 0; k < r.source.mor_count(); ++k) {
      std::vector<int> tb = s.fiber_prod[b].mor_tuple(k);
      std::vector<int> ta(a);
      for (int i = 0; i < a; ++i) ta[i] = tb[f.table[i]];
      r.mor_map[k] = s.fiber_prod[a].mor_code(ta);
    }
    s.data.reindex.push_back(std::move(r));
  }
  return s;
}

std::pair<MonoidalBaseData, LaxatorData> slice_tensor_data(
    const SliceIndexed& s) {
  if (s.max_size < 1)
    throw MalformedData("tensor data needs the singleton in the carrier");
  const FinCategory& base = s.data.base;
  MonoidalBaseData mb;
  mb.unit_obj = 1;
  mb.obj_tensor.assign(base.n_objects,
                       std::vector<int>(base.n_objects, -1));
  for (int a = 0; a < base.n_objects; ++a)
    for (int b = 0; b < base.n_objects; ++b)
      if (a * b <= s.max_size) mb.obj_tensor[a][b] = a * b;
  mb.mor_tensor.assign(base.mor_count(),
                       std::vector<int>(base.mor_count(), -1));
  for (int f = 0; f < base.mor_count(); ++f) {
    const FinFn& ff = s.base_fs.fn_of(f);
    for (int g = 0; g < base.mor_count(); ++g) {
      const FinFn& gf = s.base_fs.fn_of(g);
      if (ff.dom * gf.dom > s.max_size || ff.cod * gf.cod > s.max_size)
        continue;
      mb.mor_tensor[f][g] = s.base_fs.id_of_fn(product_fn(ff, gf));
    }
  }

  LaxatorData lax;
  lax.obj_phi.resize(base.n_objects);
  lax.mor_phi.resize(base.n_objects);
  for (int c = 0; c < base.n_objects; ++c) {
    lax.obj_phi[c].resize(base.n_objects);
    lax.mor_phi[c].resize(base.n_objects);
    for (int d = 0; d < base.n_objects; ++d) {
      if (mb.obj_tensor[c][d] < 0) continue;
      int t = c * d;
      const FinCategory& fc = s.data.fibers[c];
      const FinCategory& fd = s.data.fibers[d];
      auto& ob = lax.obj_phi[c][d];
      ob.assign(fc.n_objects, std::vector<int>(fd.n_objects, -1));
      for (int x = 0; x < fc.n_objects; ++x) {
        std::vector<int> xs = s.family_of(c, x);
        for (int y = 0; y < fd.n_objects; ++y) {
          std::vector<int> ys = s.family_of(d, y);
          std::vector<int> zs(t);
          bool ok = true;
          for (int i = 0; i < c && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
              int prod = xs[i] * ys[j];
              if (prod > s.fiber_bound)
                ok = false;
              else
                zs[pair_index(d, i, j)] = prod;
            }
          if (ok) ob[x][y] = s.family_obj(t, zs);
        }
      }
      auto& mo = lax.mor_phi[c][d];
      mo.assign(fc.mor_count(), std::vector<int>(fd.mor_count(), -1));
      for (int k = 0; k < fc.mor_count(); ++k) {
        std::vector<FinFn> ks = s.family_mor_of(c, k);
        for (int l = 0; l < fd.mor_count(); ++l) {
          std::vector<FinFn> ls = s.family_mor_of(d, l);
          std::vector<FinFn> zs(t);
          bool ok = true;
          for (int i = 0; i < c && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
              FinFn prod = product_fn(ks[i], ls[j]);
              if (prod.dom > s.fiber_bound || prod.cod > s.fiber_bound)
                ok = false;
              else
                zs[pair_index(d, i, j)] = std::move(prod);
            }
          if (ok) mo[k][l] = s.family_mor(t, zs);
        }
      }
    }
  }
  return {std::move(mb), std::move(lax)};
}

// ---------------------------------------------------------------------------
// data-level dependent lenses

void validate_family_lens(const FamilyLens& l) {
  validate_fn(l.get);
  if ((int)l.src.size() != l.get.dom || (int)l.dst.size() != l.get.cod)
    throw MalformedData("family lengths do not match the base map");
  if ((int)l.puts.size() != l.get.dom)
    throw MalformedData("one update component per source element expected");
  for (int i = 0; i < l.get.dom; ++i) {
    validate_fn(l.puts[i]);
    if (l.puts[i].dom != l.dst[l.get.table[i]] || l.puts[i].cod != l.src[i])
      throw MalformedData("update component " + std::to_string(i) +
                          " has the wrong endpoints");
  }
}

FamilyLens family_identity(const std::vector<int>& fam) {
  FamilyLens l;
  l.get = identity_fn((int)fam.size());
  l.src = fam;
  l.dst = fam;
  for (int s : fam) l.puts.push_back(identity_fn(s));
  return l;
}

FamilyLens compose_family(const FamilyLens& l1, const FamilyLens& l2) {
  validate_family_lens(l1);
  validate_family_lens(l2);
  if (l1.get.cod != l2.get.dom || l1.dst != l2.src)
    throw CodomainMismatch("middle families do not match");
  FamilyLens out;
  out.get = compose(l1.get, l2.get);
  out.src = l1.src;
  out.dst = l2.dst;
  out.puts.resize(l1.get.dom);
  for (int i = 0; i < l1.get.dom; ++i)
    out.puts[i] = compose(l2.puts[l1.get.table[i]], l1.puts[i]);
  return out;
}

FamilyLens tensor_family(const FamilyLens& l1, const FamilyLens& l2) {
  validate_family_lens(l1);
  validate_family_lens(l2);
  int c1 = l1.get.dom, c2 = l2.get.dom;
  int d2 = l2.get.cod;
  FamilyLens out;
  out.get = product_fn(l1.get, l2.get);
  out.src.resize(c1 * c2);
  out.puts.resize(c1 * c2);
  for (int i = 0; i < c1; ++i)
    for (int j = 0; j < c2; ++j) {
      out.src[pair_index(c2, i, j)] = l1.src[i] * l2.src[j];
      out.puts[pair_index(c2, i, j)] = product_fn(l1.puts[i], l2.puts[j]);
    }
  out.dst.resize(l1.get.cod * d2);
  for (int i = 0; i < l1.get.cod; ++i)
    for (int j = 0; j < d2; ++j)
      out.dst[pair_index(d2, i, j)] = l1.dst[i] * l2.dst[j];
  return out;
}

std::vector<FamilyLens> enumerate_family_lenses(const std::vector<int>& src,
                                                const std::vector<int>& dst) {
  int c = (int)src.size(), d = (int)dst.size();
  std::vector<FamilyLens> out;
  for (const FinFn& get : all_fns(c, d)) {
    std::vector<std::vector<FinFn>> choices(c);
    for (int i = 0; i < c; ++i)
      choices[i] = all_fns(dst[get.table[i]], src[i]);
    bool any_empty = false;
    for (int i = 0; i < c; ++i) any_empty = any_empty || choices[i].empty();
    if (any_empty) continue;
    std::vector<size_t> idx(c, 0);
    while (true) {
      FamilyLens l;
      l.get = get;
      l.src = src;
      l.dst = dst;
      for (int i = 0; i < c; ++i) l.puts.push_back(choices[i][idx[i]]);
      out.push_back(std::move(l));
      int pos = c - 1;  // last coordinate varies fastest
      while (pos >= 0 && ++idx[pos] == choices[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

int family_lens_id(const SliceIndexed& s, const GluedCategory& lens,
                   const FamilyLens& l) {
  validate_family_lens(l);
  int base_id = s.base_fs.id_of_fn(l.get);
  int aux = s.family_obj(l.get.cod, l.dst);
  int fiber = s.family_mor(l.get.dom, l.puts);
  return lens.morphism_id(base_id, aux, fiber);
}

FamilyLens family_lens_of(const SliceIndexed& s, const GluedCategory& lens,
                          int mor) {
  if (mor < 0 || mor >= lens.cat.mor_count())
    throw IndexOutOfRange("morphism id " + std::to_string(mor) +
                          " out of range");
  const GluedCategory::Key& key = lens.keys[mor];
  auto [c, x] = lens.objects[lens.cat.dom(mor)];
  auto [d, y] = lens.objects[lens.cat.cod(mor)];
  FamilyLens l;
  l.get = s.base_fs.fn_of(key.base_mor);
  l.src = s.family_of(c, x);
  l.dst = s.family_of(d, y);
  l.puts = s.family_mor_of(c, key.fiber_mor);
  return l;
}

// ---------------------------------------------------------------------------
// generic get/put lens categories

CartesianOps finset_cartesian_ops() {
  CartesianOps o;
  o.name = "finset-cartesian";
  o.unit = 1;
  o.tensor_size = [](int a, int b) { return a * b; };
  o.identity = [](int c) { return identity_fn(c); };
  o.compose = [](const FinFn& f, const FinFn& g) { return compose(f, g); };
  o.tensor = [](const FinFn& f, const FinFn& g) { return product_fn(f, g); };
  o.dup = [](int c) { return diagonal(c); };
  o.drop = [](int c) { return terminal_map(c); };
  o.src = [](const FinFn& f) { return f.dom; };
  o.dst = [](const FinFn& f) { return f.cod; };
  o.hom = [](int a, int b) { return all_fns(a, b); };
  o.hom_count = [](int a, int b, long long cap) {
    return count_fns(a, b, cap);
  };
  return o;
}

CartesianOps finset_op_coproduct_ops() {
  CartesianOps o;
  o.name = "finset-op-coproduct";
  o.unit = 0;
  o.tensor_size = [](int a, int b) { return a + b; };
  o.identity = [](int c) { return identity_fn(c); };
  // a formal morphism runs against its table, so "f then g" realizes as
  // the table of g followed by the table of f
  o.compose = [](const FinFn& f, const FinFn& g) { return compose(g, f); };
  o.tensor = [](const FinFn& f, const FinFn& g) { return coproduct_fn(f, g); };
  o.dup = [](int c) { return codiagonal(c); };
  o.drop = [](int c) { return checked_fn(0, c, {}); };
  o.src = [](const FinFn& f) { return f.cod; };
  o.dst = [](const FinFn& f) { return f.dom; };
  o.hom = [](int a, int b) { return all_fns(b, a); };
  o.hom_count = [](int a, int b, long long cap) {
    return count_fns(b, a, cap);
  };
  return o;
}

namespace {

// composite update: duplicate the source, sight it through the first get,
// update with the second put, then update with the first
FinFn staged_put(const CartesianOps& ops, const FinFn& get1,
                 const FinFn& put1, const FinFn& put2, int c, int z) {
  FinFn stage = ops.tensor(ops.dup(c), ops.identity(z));
  stage = ops.compose(
      stage, ops.tensor(ops.identity(c), ops.tensor(get1, ops.identity(z))));
  stage = ops.compose(stage, ops.tensor(ops.identity(c), put2));
  return ops.compose(stage, put1);
}

}  // namespace

int GenericLensCat::object_id(int c, int x) const {
  auto it = obj_index.find({c, x});
  if (it == obj_index.end())
    throw IndexOutOfRange("no lens object (" + std::to_string(c) + ", " +
                          std::to_string(x) + ")");
  return it->second;
}

int GenericLensCat::morphism_id(int src, int dst, const FinFn& get,
                                const FinFn& put) const {
  auto it = mor_index.find({src, dst, get.table, put.table});
  if (it == mor_index.end())
    throw IndexOutOfRange("no lens morphism with the given tables");
  return it->second;
}

GenericLensCat generic_lens_category(const CartesianOps& ops, int max_size,
                                     long long limit) {
  if (max_size < 0) throw MalformedData("negative carrier bound");
  if (limit <= 0) limit = default_limit();

  GenericLensCat g;
  for (int c = 0; c <= max_size; ++c)
    for (int x = 0; x <= max_size; ++x) {
      g.obj_index[{c, x}] = (int)g.objects.size();
      g.objects.emplace_back(c, x);
    }
  g.cat.n_objects = (int)g.objects.size();

  long long total = 0;
  for (auto [c, x] : g.objects)
    for (auto [d, y] : g.objects) {
      long long gets = ops.hom_count(c, d, limit);
      long long puts = ops.hom_count(ops.tensor_size(c, y), x, limit);
      if (gets > limit || puts > limit || (total += gets * puts) > limit)
        throw ResourceBound("lens category exceeds limit " +
                            std::to_string(limit));
    }

  for (int src = 0; src < g.cat.n_objects; ++src) {
    auto [c, x] = g.objects[src];
    for (int dst = 0; dst < g.cat.n_objects; ++dst) {
      auto [d, y] = g.objects[dst];
      for (const FinFn& get : ops.hom(c, d))
        for (const FinFn& put : ops.hom(ops.tensor_size(c, y), x)) {
          g.mor_index[{src, dst, get.table, put.table}] =
              (int)g.payloads.size();
          g.payloads.push_back({get, put});
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
    auto [c, x] = g.objects[o];
    FinFn get = ops.identity(c);
    FinFn put = ops.tensor(ops.drop(c), ops.identity(x));
    g.cat.identity[o] = g.morphism_id(o, o, get, put);
  }

  g.cat.comp_table.assign((size_t)m_count * m_count, -1);
  for (int m1 = 0; m1 < m_count; ++m1) {
    auto [c, x] = g.objects[g.cat.dom(m1)];
    (void)x;
    for (int m2 = 0; m2 < m_count; ++m2) {
      if (!g.cat.composable(m1, m2)) continue;
      auto [e, z] = g.objects[g.cat.cod(m2)];
      (void)e;
      const auto& p1 = g.payloads[m1];
      const auto& p2 = g.payloads[m2];
      FinFn get = ops.compose(p1.get, p2.get);
      FinFn put = staged_put(ops, p1.get, p1.put, p2.put, c, z);
      g.cat.comp_table[(size_t)m1 * m_count + m2] =
          g.morphism_id(g.cat.dom(m1), g.cat.cod(m2), get, put);
    }
  }
  return g;
}

GenericLensCat classic_lens_category(int max_size, long long limit) {
  return generic_lens_category(finset_cartesian_ops(), max_size, limit);
}

GenericLensCat prism_category(int max_size, long long limit) {
  return generic_lens_category(finset_op_coproduct_ops(), max_size, limit);
}

// ---------------------------------------------------------------------------
// standalone prisms

PrismData prism_identity(int c, int x) {
  return {identity_fn(c), inr(c, x)};
}

PrismData compose_prism(const PrismData& p1, const PrismData& p2) {
  validate_fn(p1.get);
  validate_fn(p1.put);
  validate_fn(p2.get);
  validate_fn(p2.put);
  int c = p1.get.cod, d = p1.get.dom;
  if (p2.get.cod != d)
    throw CodomainMismatch("middle sets differ: " + std::to_string(d) +
                           " vs " + std::to_string(p2.get.cod));
  int y = p1.put.cod - c;
  if (y < 0)
    throw CodomainMismatch("first rebuild lands in fewer than " +
                           std::to_string(c) + " cases");
  if (p2.put.dom != y)
    throw CodomainMismatch("second rebuild starts from " +
                           std::to_string(p2.put.dom) + ", expected " +
                           std::to_string(y));
  int z = p2.put.cod - d;
  if (z < 0)
    throw CodomainMismatch("second rebuild lands in fewer than " +
                           std::to_string(d) + " cases");
  CartesianOps ops = finset_op_coproduct_ops();
  return {ops.compose(p1.get, p2.get),
          staged_put(ops, p1.get, p1.put, p2.put, c, z)};
}

// ---------------------------------------------------------------------------
// standalone classical lenses

ClassicLens classic_identity(int c, int x) {
  return {identity_fn(c), product_fn(terminal_map(c), identity_fn(x))};
}

ClassicLens compose_classic(const ClassicLens& l1, const ClassicLens& l2) {
  validate_fn(l1.get);
  validate_fn(l1.put);
  validate_fn(l2.get);
  validate_fn(l2.put);
  int c = l1.get.dom, d = l1.get.cod;
  if (l2.get.dom != d)
    throw CodomainMismatch("middle sets differ: " + std::to_string(d) +
                           " vs " + std::to_string(l2.get.dom));
  int y = l2.put.cod;
  if (l1.put.dom != c * y)
    throw CodomainMismatch("first update expects source size " +
                           std::to_string(l1.put.dom) + ", got " +
                           std::to_string(c * y));
  if (d > 0 && l2.put.dom % d != 0)
    throw CodomainMismatch("second update source is not a multiple of " +
                           std::to_string(d));
  int z = d > 0 ? l2.put.dom / d : 0;
  FinFn stage = product_fn(diagonal(c), identity_fn(z));
  stage = compose(stage,
                  product_fn(identity_fn(c), product_fn(l1.get, identity_fn(z))));
  stage = compose(stage, product_fn(identity_fn(c), l2.put));
  return {compose(l1.get, l2.get), compose(stage, l1.put)};
}

ClassicLens tensor_classic(const ClassicLens& l1, int y1,
                           const ClassicLens& l2, int y2) {
  validate_fn(l1.get);
  validate_fn(l1.put);
  validate_fn(l2.get);
  validate_fn(l2.put);
  int c1 = l1.get.dom, c2 = l2.get.dom;
  if (l1.put.dom != c1 * y1 || l2.put.dom != c2 * y2)
    throw CodomainMismatch("update sources do not match the stated sizes");
  FinFn put = compose(middle_interchange(c1, c2, y1, y2),
                      product_fn(l1.put, l2.put));
  return {product_fn(l1.get, l2.get), put};
}

std::vector<ClassicLens> enumerate_classic_lenses(int c, int x, int d, int y) {
  std::vector<ClassicLens> out;
  for (const FinFn& get : all_fns(c, d))
    for (const FinFn& put : all_fns(c * y, x)) out.push_back({get, put});
  return out;
}

FunctorData embed_classic(const GenericLensCat& classic,
                          const SliceIndexed& slice,
                          const GluedCategory& slens) {
  for (auto [c, x] : classic.objects)
    if (c > slice.max_size || x > slice.fiber_bound)
      throw MalformedData("slice carrier too small for the embedding");

  FunctorData e;
  e.source = classic.cat;
  e.target = slens.cat;
  e.obj_map.resize(classic.cat.n_objects);
  for (int o = 0; o < classic.cat.n_objects; ++o) {
    auto [c, x] = classic.objects[o];
    e.obj_map[o] =
        slens.object_id(c, slice.family_obj(c, std::vector<int>(c, x)));
  }
  e.mor_map.resize(classic.cat.mor_count());
  for (int m = 0; m < classic.cat.mor_count(); ++m) {
    auto [c, x] = classic.objects[classic.cat.dom(m)];
    auto [d, y] = classic.objects[classic.cat.cod(m)];
    const auto& p = classic.payloads[m];
    int base_id = slice.base_fs.id_of_fn(p.get);
    int aux = slice.family_obj(d, std::vector<int>(d, y));
    std::vector<FinFn> comps(c);
    for (int i = 0; i < c; ++i) {
      FinFn comp_fn;
      comp_fn.dom = y;
      comp_fn.cod = x;
      comp_fn.table.resize(y);
      for (int j = 0; j < y; ++j)
        comp_fn.table[j] = p.put.table[pair_index(y, i, j)];
      comps[i] = std::move(comp_fn);
    }
    e.mor_map[m] =
        slens.morphism_id(base_id, aux, slice.family_mor(c, comps));
  }
  return e;
}

// ---------------------------------------------------------------------------
// coslice fibers and the twisted-arrow comparison

CosliceIndexed coslice_indexed(const FinCategory& c, long long limit) {
  if (limit <= 0) limit = default_limit();
  check_category_laws(c);  // malformed input surfaces before building

  CosliceIndexed out;
  out.data.base = c;
  out.fiber_objs.resize(c.n_objects);
  out.fiber_mors.resize(c.n_objects);
  // position of each arrow inside its fiber's object list
  std::vector<int> pos(c.mor_count(), -1);
  for (int u = 0; u < c.mor_count(); ++u) {
    pos[u] = (int)out.fiber_objs[c.dom(u)].size();
    out.fiber_objs[c.dom(u)].push_back(u);
  }

  long long total = 0;
  std::vector<std::map<std::tuple<int, int, int>, int>> midx(c.n_objects);
  for (int b = 0; b < c.n_objects; ++b) {
    const std::vector<int>& objs = out.fiber_objs[b];
    FinCategory fib;
    fib.n_objects = (int)objs.size();
    for (int s = 0; s < fib.n_objects; ++s) {
      int u = objs[s];
      for (int t = 0; t < fib.n_objects; ++t) {
        int v = objs[t];
        for (int w : c.hom(c.cod(u), c.cod(v))) {
          if (c.comp_raw(u, w) != v) continue;
          if (++total > limit)
            throw ResourceBound("coslice fibers exceed limit " +
                                std::to_string(limit));
          midx[b][{s, t, w}] = fib.mor_count();
          out.fiber_mors[b].push_back(w);
          fib.morphisms.push_back({s, t});
        }
      }
    }
    fib.identity.resize(fib.n_objects);
    for (int s = 0; s < fib.n_objects; ++s)
      fib.identity[s] = midx[b].at({s, s, c.id_of(c.cod(objs[s]))});
    int mc = fib.mor_count();
    fib.comp_table.assign((size_t)mc * mc, -1);
    for (int m1 = 0; m1 < mc; ++m1)
      for (int m2 = 0; m2 < mc; ++m2) {
        if (!fib.composable(m1, m2)) continue;
        int w = c.comp_raw(out.fiber_mors[b][m1], out.fiber_mors[b][m2]);
        fib.comp_table[(size_t)m1 * mc + m2] =
            midx[b].at({fib.dom(m1), fib.cod(m2), w});
      }
    out.data.fibers.push_back(std::move(fib));
  }

  for (int f = 0; f < c.mor_count(); ++f) {
    int a = c.dom(f), b = c.cod(f);
    FunctorData r;
    r.source = out.data.fibers[b];
    r.target = out.data.fibers[a];
    r.obj_map.resize(r.source.n_objects);
    for (int t = 0; t < r.source.n_objects; ++t)
      r.obj_map[t] = pos[c.comp_raw(f, out.fiber_objs[b][t])];
    r.mor_map.resize(r.source.mor_count());
    for (int m = 0; m < r.source.mor_count(); ++m) {
      int s = r.source.dom(m), t = r.source.cod(m);
      r.mor_map[m] =
          midx[a].at({r.obj_map[s], r.obj_map[t], out.fiber_mors[b][m]});
    }
    out.data.reindex.push_back(std::move(r));
  }
  return out;
}

IsoReport check_twisted_arrow_iso(const FinCategory& c, long long limit) {
  CosliceIndexed cos = coslice_indexed(c, limit);
  GluedCategory lens = lens_category(cos.data, limit);
  TwistedArrow tw = twisted_arrow(c, limit);

  std::vector<int> obj_map(lens.cat.n_objects);
  for (int o = 0; o < lens.cat.n_objects; ++o) {
    auto [b, s] = lens.objects[o];
    obj_map[o] = cos.fiber_objs[b][s];
  }
  std::vector<int> mor_map(lens.cat.mor_count());
  for (int m = 0; m < lens.cat.mor_count(); ++m) {
    const GluedCategory::Key& key = lens.keys[m];
    auto [a, s] = lens.objects[lens.cat.dom(m)];
    int u = cos.fiber_objs[a][s];
    int back = cos.fiber_mors[a][key.fiber_mor];
    mor_map[m] = tw.id_of(u, key.base_mor, back);
  }
  return check_isomorphism(lens.cat, tw.cat, obj_map, mor_map,
                           "lens-category-vs-twisted-arrow");
}

}  // namespace glens
