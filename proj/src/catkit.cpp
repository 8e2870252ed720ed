#include "glens/catkit.hpp"

#include <algorithm>

namespace glens {

namespace {

std::string mor_desc(const FinCategory& c, int m) {
  return std::to_string(m) + " (" + std::to_string(c.dom(m)) + " -> " +
         std::to_string(c.cod(m)) + ")";
}

// Structural well-formedness; throws MalformedData naming the offending site.
void validate_category(const FinCategory& c) {
  if (c.n_objects < 0) throw MalformedData("negative object count");
  int m_count = c.mor_count();
  for (int m = 0; m < m_count; ++m) {
    const MorData& md = c.morphisms[m];
    if (md.dom < 0 || md.dom >= c.n_objects || md.cod < 0 ||
        md.cod >= c.n_objects)
      throw MalformedData("morphism " + std::to_string(m) +
                          " has endpoints out of range");
  }
  if ((int)c.identity.size() != c.n_objects)
    throw MalformedData("identity list length " +
                        std::to_string(c.identity.size()) +
                        " does not match object count");
  for (int o = 0; o < c.n_objects; ++o) {
    int i = c.identity[o];
    if (i < 0 || i >= m_count)
      throw MalformedData("identity of object " + std::to_string(o) +
                          " out of range");
    if (c.dom(i) != o || c.cod(i) != o)
      throw MalformedData("identity of object " + std::to_string(o) +
                          " is not an endomorphism of it");
  }
  if (c.comp_table.size() != (size_t)m_count * m_count)
    throw MalformedData("composition table has " +
                        std::to_string(c.comp_table.size()) +
                        " entries, expected " +
                        std::to_string((long long)m_count * m_count));
  for (int f = 0; f < m_count; ++f)
    for (int g = 0; g < m_count; ++g) {
      int fg = c.comp_raw(f, g);
      if (!c.composable(f, g)) {
        if (fg != -1)
          throw MalformedData("composition entry for non-composable pair (" +
                              std::to_string(f) + ", " + std::to_string(g) +
                              ") is present");
        continue;
      }
      if (fg == -1)
        throw MalformedData("composition entry missing for composable pair (" +
                            std::to_string(f) + ", " + std::to_string(g) + ")");
      if (fg < 0 || fg >= m_count)
        throw MalformedData("composition entry out of range at (" +
                            std::to_string(f) + ", " + std::to_string(g) + ")");
      if (c.dom(fg) != c.dom(f) || c.cod(fg) != c.cod(g))
        throw MalformedData("composite of " + mor_desc(c, f) + " and " +
                            mor_desc(c, g) + " has wrong endpoints: " +
                            mor_desc(c, fg));
    }
}

void validate_functor(const FunctorData& fd) {
  if ((int)fd.obj_map.size() != fd.source.n_objects)
    throw MalformedData("functor object map length mismatch");
  if ((int)fd.mor_map.size() != fd.source.mor_count())
    throw MalformedData("functor morphism map length mismatch");
  for (int o = 0; o < fd.source.n_objects; ++o)
    if (fd.obj_map[o] < 0 || fd.obj_map[o] >= fd.target.n_objects)
      throw MalformedData("functor object map out of range at " +
                          std::to_string(o));
  for (int m = 0; m < fd.source.mor_count(); ++m) {
    int fm = fd.mor_map[m];
    if (fm < 0 || fm >= fd.target.mor_count())
      throw MalformedData("functor morphism map out of range at " +
                          std::to_string(m));
    if (fd.target.dom(fm) != fd.obj_map[fd.source.dom(m)] ||
        fd.target.cod(fm) != fd.obj_map[fd.source.cod(m)])
      throw MalformedData("functor image of morphism " + std::to_string(m) +
                          " has wrong endpoints");
  }
}

}  // namespace

int FinCategory::comp(int f, int g) const {
  int m_count = mor_count();
  if (f < 0 || f >= m_count || g < 0 || g >= m_count)
    throw IndexOutOfRange("morphism id out of range in composition");
  if (!composable(f, g))
    throw CodomainMismatch("morphisms " + mor_desc(*this, f) + " and " +
                           mor_desc(*this, g) + " do not compose");
  int fg = comp_raw(f, g);
  if (fg < 0)
    throw MalformedData("composition entry missing for composable pair (" +
                        std::to_string(f) + ", " + std::to_string(g) + ")");
  return fg;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (int m = 0; m < mor_count(); ++m)
    if (dom(m) == a && cod(m) == b) out.push_back(m);
  return out;
}

LawReport check_category_laws(const FinCategory& c) {
  validate_category(c);
  LawReport report;
  report.subject = "category(objects=" + std::to_string(c.n_objects) +
                   ", morphisms=" + std::to_string(c.mor_count()) + ")";
  int m_count = c.mor_count();

  for (int f = 0; f < m_count; ++f) {
    ++report.checks;
    int left = c.comp_raw(c.id_of(c.dom(f)), f);
    if (left != f)
      report.fail("left-unit", {c.id_of(c.dom(f)), f},
                  "id ; f = " + std::to_string(left));
    ++report.checks;
    int right = c.comp_raw(f, c.id_of(c.cod(f)));
    if (right != f)
      report.fail("right-unit", {f, c.id_of(c.cod(f))},
                  "f ; id = " + std::to_string(right));
  }

  // Adjacency lists keep the triple loop proportional to composable triples.
  std::vector<std::vector<int>> into(c.n_objects), out_of(c.n_objects);
  for (int m = 0; m < m_count; ++m) {
    into[c.cod(m)].push_back(m);
    out_of[c.dom(m)].push_back(m);
  }
  for (int g = 0; g < m_count; ++g) {
    for (int f : into[c.dom(g)]) {
      int fg = c.comp_raw(f, g);
      for (int h : out_of[c.cod(g)]) {
        ++report.checks;
        int gh = c.comp_raw(g, h);
        if (c.comp_raw(fg, h) != c.comp_raw(f, gh))
          report.fail("associativity", {f, g, h},
                      "(f;g);h = " + std::to_string(c.comp_raw(fg, h)) +
                          ", f;(g;h) = " + std::to_string(c.comp_raw(f, gh)));
      }
    }
  }
  return report;
}

LawReport check_functor_laws(const FunctorData& fd) {
  validate_functor(fd);
  LawReport report;
  report.subject = "functor(" + std::to_string(fd.source.mor_count()) +
                   " morphisms)";
  for (int o = 0; o < fd.source.n_objects; ++o) {
    ++report.checks;
    if (fd.mor_map[fd.source.id_of(o)] != fd.target.id_of(fd.obj_map[o]))
      report.fail("identity-preservation", {o},
                  "image of id_" + std::to_string(o) + " is " +
                      std::to_string(fd.mor_map[fd.source.id_of(o)]));
  }
  int m_count = fd.source.mor_count();
  for (int f = 0; f < m_count; ++f)
    for (int g = 0; g < m_count; ++g) {
      if (!fd.source.composable(f, g)) continue;
      ++report.checks;
      int lhs = fd.mor_map[fd.source.comp_raw(f, g)];
      int rhs = fd.target.comp_raw(fd.mor_map[f], fd.mor_map[g]);
      if (lhs != rhs)
        report.fail("composition-preservation", {f, g},
                    "F(f;g) = " + std::to_string(lhs) + ", F(f);F(g) = " +
                        std::to_string(rhs));
    }
  return report;
}

FunctorData identity_functor(const FinCategory& c) {
  FunctorData fd{c, c, std::vector<int>(c.n_objects),
                 std::vector<int>(c.mor_count())};
  for (int o = 0; o < c.n_objects; ++o) fd.obj_map[o] = o;
  for (int m = 0; m < c.mor_count(); ++m) fd.mor_map[m] = m;
  return fd;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  if (!(f.target == g.source))
    throw MalformedData("functor composite endpoints do not meet");
  FunctorData fd{f.source, g.target, std::vector<int>(f.obj_map.size()),
                 std::vector<int>(f.mor_map.size())};
  for (size_t o = 0; o < f.obj_map.size(); ++o)
    fd.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (size_t m = 0; m < f.mor_map.size(); ++m)
    fd.mor_map[m] = g.mor_map[f.mor_map[m]];
  return fd;
}

FinCategory opposite(const FinCategory& c) {
  FinCategory op;
  op.n_objects = c.n_objects;
  op.identity = c.identity;
  op.morphisms.resize(c.mor_count());
  for (int m = 0; m < c.mor_count(); ++m)
    op.morphisms[m] = {c.cod(m), c.dom(m)};
  size_t n = c.morphisms.size();
  op.comp_table.assign(n * n, -1);
  for (size_t f = 0; f < n; ++f)
    for (size_t g = 0; g < n; ++g) op.comp_table[f * n + g] = c.comp_table[g * n + f];
  return op;
}

IsoReport check_isomorphism(const FinCategory& a, const FinCategory& b,
                            const std::vector<int>& obj_map,
                            const std::vector<int>& mor_map,
                            const std::string& subject) {
  IsoReport report;
  report.subject = subject;
  if (a.n_objects != b.n_objects) {
    report.fail("object-count", {a.n_objects, b.n_objects});
    return report;
  }
  if (a.mor_count() != b.mor_count()) {
    report.fail("morphism-count", {a.mor_count(), b.mor_count()});
    return report;
  }
  if ((int)obj_map.size() != a.n_objects ||
      (int)mor_map.size() != a.mor_count()) {
    report.fail("map-length", {(long long)obj_map.size(),
                               (long long)mor_map.size()});
    return report;
  }
  std::vector<bool> obj_hit(b.n_objects, false), mor_hit(b.mor_count(), false);
  for (int o = 0; o < a.n_objects; ++o) {
    ++report.checks;
    int im = obj_map[o];
    if (im < 0 || im >= b.n_objects || obj_hit[im]) {
      report.fail("object-bijection", {o, im});
      return report;
    }
    obj_hit[im] = true;
  }
  for (int m = 0; m < a.mor_count(); ++m) {
    ++report.checks;
    int im = mor_map[m];
    if (im < 0 || im >= b.mor_count() || mor_hit[im]) {
      report.fail("morphism-bijection", {m, im});
      return report;
    }
    mor_hit[im] = true;
    if (b.dom(im) != obj_map[a.dom(m)] || b.cod(im) != obj_map[a.cod(m)])
      report.fail("endpoint-preservation", {m, im});
  }
  for (int o = 0; o < a.n_objects; ++o) {
    ++report.checks;
    if (mor_map[a.id_of(o)] != b.id_of(obj_map[o]))
      report.fail("identity-preservation", {o});
  }
  for (int f = 0; f < a.mor_count(); ++f)
    for (int g = 0; g < a.mor_count(); ++g) {
      if (!a.composable(f, g)) continue;
      ++report.checks;
      int lhs = mor_map[a.comp_raw(f, g)];
      int rhs = b.comp_raw(mor_map[f], mor_map[g]);
      if (lhs != rhs)
        report.fail("composition-preservation", {f, g},
                    "image of composite " + std::to_string(lhs) +
                        " vs composite of images " + std::to_string(rhs));
    }
  return report;
}

int FinSetCat::obj_of_size(int n) const {
  if (n < 0 || n >= (int)size_to_obj.size() || size_to_obj[n] < 0)
    throw IndexOutOfRange("no object of size " + std::to_string(n));
  return size_to_obj[n];
}

int FinSetCat::id_of_fn(const FinFn& f) const {
  int a = obj_of_size(f.dom), b = obj_of_size(f.cod);
  int start = block_start_[a][b];
  if (start < 0)
    throw IndexOutOfRange("empty hom-set for " + std::to_string(f.dom) +
                          " -> " + std::to_string(f.cod));
  return start + (int)fn_rank(f);
}

FinSetCat finset_category_on(std::vector<int> sizes, long long limit) {
  if (limit <= 0) limit = default_limit();
  for (size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] >= sizes[i + 1])
      throw MalformedData("object sizes must be strictly increasing");
  if (!sizes.empty() && sizes.front() < 0)
    throw MalformedData("negative object size");

  int n = (int)sizes.size();
  long long total = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      total += count_fns(sizes[a], sizes[b], limit);
      if (total > limit)
        throw ResourceBound("morphism count exceeds limit " +
                            std::to_string(limit));
    }

  FinSetCat fc;
  fc.sizes = sizes;
  fc.size_to_obj.assign(sizes.empty() ? 0 : sizes.back() + 1, -1);
  for (int o = 0; o < n; ++o) fc.size_to_obj[sizes[o]] = o;
  fc.cat.n_objects = n;
  fc.block_start_.assign(n, std::vector<int>(n, -1));

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<FinFn> block = all_fns(sizes[a], sizes[b]);
      if (!block.empty()) fc.block_start_[a][b] = (int)fc.fns.size();
      for (FinFn& f : block) {
        fc.cat.morphisms.push_back({a, b});
        fc.fns.push_back(std::move(f));
      }
    }

  fc.cat.identity.resize(n);
  for (int o = 0; o < n; ++o)
    fc.cat.identity[o] = fc.id_of_fn(identity_fn(sizes[o]));

  int m_count = (int)fc.fns.size();
  fc.cat.comp_table.assign((size_t)m_count * m_count, -1);
  for (int f = 0; f < m_count; ++f)
    for (int g = 0; g < m_count; ++g) {
      if (!fc.cat.composable(f, g)) continue;
      fc.cat.comp_table[(size_t)f * m_count + g] =
          fc.id_of_fn(compose(fc.fns[f], fc.fns[g]));
    }
  return fc;
}

FinSetCat finset_category(int max_size, long long limit) {
  std::vector<int> sizes(max_size + 1);
  for (int i = 0; i <= max_size; ++i) sizes[i] = i;
  return finset_category_on(std::move(sizes), limit);
}

FinCategory thin_category(const std::vector<std::vector<bool>>& leq) {
  int n = (int)leq.size();
  for (const auto& row : leq)
    if ((int)row.size() != n) throw MalformedData("relation matrix not square");
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) throw MalformedData("relation not reflexive");

  FinCategory c;
  c.n_objects = n;
  std::vector<std::vector<int>> id_at(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        id_at[i][j] = c.mor_count();
        c.morphisms.push_back({i, j});
      }
  c.identity.resize(n);
  for (int i = 0; i < n; ++i) c.identity[i] = id_at[i][i];
  int m_count = c.mor_count();
  c.comp_table.assign((size_t)m_count * m_count, -1);
  for (int f = 0; f < m_count; ++f)
    for (int g = 0; g < m_count; ++g) {
      if (!c.composable(f, g)) continue;
      int fg = id_at[c.dom(f)][c.cod(g)];
      if (fg < 0) throw MalformedData("relation not transitive");
      c.comp_table[(size_t)f * m_count + g] = fg;
    }
  return c;
}

FinCategory walking_arrow() {
  return thin_category({{true, true}, {false, true}});
}

FinCategory commutative_square() {
  // objects 0,1,2,3 ordered by bit inclusion: 0 <= 1 <= 3, 0 <= 2 <= 3
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) leq[i][j] = (i & j) == i;
  return thin_category(leq);
}

FinCategory cyclic_monoid_category(int k) {
  if (k <= 0) throw MalformedData("cyclic monoid needs at least one element");
  FinCategory c;
  c.n_objects = 1;
  c.morphisms.assign(k, {0, 0});
  c.identity = {0};
  c.comp_table.assign((size_t)k * k, -1);
  for (int f = 0; f < k; ++f)
    for (int g = 0; g < k; ++g) c.comp_table[(size_t)f * k + g] = (f + g) % k;
  return c;
}

namespace {

std::vector<int> decode_mixed(int code, const std::vector<int>& radix) {
  std::vector<int> t(radix.size());
  for (int i = (int)radix.size() - 1; i >= 0; --i) {
    t[i] = code % radix[i];
    code /= radix[i];
  }
  return t;
}

int encode_mixed(const std::vector<int>& t, const std::vector<int>& radix) {
  int code = 0;
  for (size_t i = 0; i < radix.size(); ++i) code = code * radix[i] + t[i];
  return code;
}

}  // namespace

std::vector<int> ProductCat::obj_tuple(int o) const {
  return decode_mixed(o, obj_radix);
}
std::vector<int> ProductCat::mor_tuple(int m) const {
  return decode_mixed(m, mor_radix);
}
int ProductCat::obj_code(const std::vector<int>& t) const {
  return encode_mixed(t, obj_radix);
}
int ProductCat::mor_code(const std::vector<int>& t) const {
  return encode_mixed(t, mor_radix);
}

ProductCat product_category(const std::vector<const FinCategory*>& factors,
                            long long limit) {
  if (limit <= 0) limit = default_limit();
  ProductCat pc;
  long long n_obj = 1, n_mor = 1;
  for (const FinCategory* f : factors) {
    pc.obj_radix.push_back(f->n_objects);
    pc.mor_radix.push_back(f->mor_count());
    n_obj *= f->n_objects;
    n_mor *= f->mor_count();
    if (n_obj > limit || n_mor > limit)
      throw ResourceBound("product category exceeds limit " +
                          std::to_string(limit));
  }
  pc.cat.n_objects = (int)n_obj;
  pc.cat.morphisms.resize(n_mor);
  for (int m = 0; m < (int)n_mor; ++m) {
    std::vector<int> t = pc.mor_tuple(m);
    std::vector<int> d(factors.size()), c(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
      d[i] = factors[i]->dom(t[i]);
      c[i] = factors[i]->cod(t[i]);
    }
    pc.cat.morphisms[m] = {pc.obj_code(d), pc.obj_code(c)};
  }
  pc.cat.identity.resize(n_obj);
  for (int o = 0; o < (int)n_obj; ++o) {
    std::vector<int> t = pc.obj_tuple(o);
    std::vector<int> ids(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
      ids[i] = factors[i]->id_of(t[i]);
    pc.cat.identity[o] = pc.mor_code(ids);
  }
  pc.cat.comp_table.assign((size_t)n_mor * n_mor, -1);
  for (int f = 0; f < (int)n_mor; ++f) {
    std::vector<int> ft = pc.mor_tuple(f);
    for (int g = 0; g < (int)n_mor; ++g) {
      if (!pc.cat.composable(f, g)) continue;
      std::vector<int> gt = pc.mor_tuple(g);
      std::vector<int> fg(factors.size());
      for (size_t i = 0; i < factors.size(); ++i)
        fg[i] = factors[i]->comp_raw(ft[i], gt[i]);
      pc.cat.comp_table[(size_t)f * n_mor + g] = pc.mor_code(fg);
    }
  }
  return pc;
}

int TwistedArrow::id_of(int x, int front, int back) const {
  auto it = index.find({x, front, back});
  if (it == index.end())
    throw IndexOutOfRange("no twisted-arrow morphism with the given wedge");
  return it->second;
}

TwistedArrow twisted_arrow(const FinCategory& c, long long limit) {
  if (limit <= 0) limit = default_limit();
  TwistedArrow tw;
  int n = c.mor_count();  // objects of the result
  tw.cat.n_objects = n;

  // Morphisms x -> y: wedges (front : dom x -> dom y, back : cod y -> cod x)
  // with front ; y ; back == x. Grouped by (x, y), then (front, back) lex.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int front : c.hom(c.dom(x), c.dom(y)))
        for (int back : c.hom(c.cod(y), c.cod(x))) {
          if (c.comp_raw(c.comp_raw(front, y), back) != x) continue;
          if ((long long)tw.cat.mor_count() >= limit)
            throw ResourceBound("twisted-arrow category exceeds limit " +
                                std::to_string(limit));
          tw.index[{x, front, back}] = tw.cat.mor_count();
          tw.cat.morphisms.push_back({x, y});
          tw.wedges.emplace_back(front, back);
        }

  tw.cat.identity.resize(n);
  for (int x = 0; x < n; ++x)
    tw.cat.identity[x] =
        tw.id_of(x, c.id_of(c.dom(x)), c.id_of(c.cod(x)));

  int m_count = tw.cat.mor_count();
  tw.cat.comp_table.assign((size_t)m_count * m_count, -1);
  for (int f = 0; f < m_count; ++f)
    for (int g = 0; g < m_count; ++g) {
      if (!tw.cat.composable(f, g)) continue;
      int front = c.comp_raw(tw.wedges[f].first, tw.wedges[g].first);
      int back = c.comp_raw(tw.wedges[g].second, tw.wedges[f].second);
      tw.cat.comp_table[(size_t)f * m_count + g] =
          tw.id_of(tw.cat.dom(f), front, back);
    }
  return tw;
}

}  // namespace glens
