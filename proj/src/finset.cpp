#include "glens/finset.hpp"

#include <cstdlib>
#include <string>

namespace glens {

namespace {

std::string fn_desc(const FinFn& f) {
  return "function " + std::to_string(f.dom) + " -> " + std::to_string(f.cod);
}

}  // namespace

void validate_fn(const FinFn& f) {
  if (f.dom < 0 || f.cod < 0)
    throw MalformedData("negative set size in " + fn_desc(f));
  if ((int)f.table.size() != f.dom)
    throw MalformedData("table length " + std::to_string(f.table.size()) +
                        " does not match domain in " + fn_desc(f));
  for (int i = 0; i < f.dom; ++i)
    if (f.table[i] < 0 || f.table[i] >= f.cod)
      throw MalformedData("entry " + std::to_string(f.table[i]) + " at index " +
                          std::to_string(i) + " out of range in " + fn_desc(f));
}

FinFn checked_fn(int dom, int cod, std::vector<int> table) {
  FinFn f{dom, cod, std::move(table)};
  validate_fn(f);
  return f;
}

FinFn identity_fn(int n) {
  FinFn f{n, n, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) f.table[i] = i;
  return f;
}

FinFn constant_fn(int dom, int cod, int value) {
  if (value < 0 || value >= cod)
    throw MalformedData("constant value " + std::to_string(value) +
                        " out of range for codomain " + std::to_string(cod));
  return FinFn{dom, cod, std::vector<int>(dom, value)};
}

FinFn compose(const FinFn& f, const FinFn& g) {
  if (f.cod != g.dom)
    throw CodomainMismatch("cannot compose " + fn_desc(f) + " with " + fn_desc(g));
  FinFn h{f.dom, g.cod, std::vector<int>(f.dom)};
  for (int i = 0; i < f.dom; ++i) h.table[i] = g.table[f.table[i]];
  return h;
}

int pair_index(int b, int i, int j) { return i * b + j; }

FinFn proj1(int a, int b) {
  FinFn f{a * b, a, std::vector<int>(a * b)};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) f.table[pair_index(b, i, j)] = i;
  return f;
}

FinFn proj2(int a, int b) {
  FinFn f{a * b, b, std::vector<int>(a * b)};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) f.table[pair_index(b, i, j)] = j;
  return f;
}

FinFn pair_fns(const FinFn& f, const FinFn& g) {
  if (f.dom != g.dom)
    throw CodomainMismatch("tupling needs a shared domain: " + fn_desc(f) +
                           " vs " + fn_desc(g));
  FinFn h{f.dom, f.cod * g.cod, std::vector<int>(f.dom)};
  for (int i = 0; i < f.dom; ++i)
    h.table[i] = pair_index(g.cod, f.table[i], g.table[i]);
  return h;
}

FinFn product_fn(const FinFn& f, const FinFn& g) {
  FinFn h{f.dom * g.dom, f.cod * g.cod, std::vector<int>(f.dom * g.dom)};
  for (int i = 0; i < f.dom; ++i)
    for (int j = 0; j < g.dom; ++j)
      h.table[pair_index(g.dom, i, j)] =
          pair_index(g.cod, f.table[i], g.table[j]);
  return h;
}

FinFn diagonal(int c) {
  FinFn f{c, c * c, std::vector<int>(c)};
  for (int i = 0; i < c; ++i) f.table[i] = pair_index(c, i, i);
  return f;
}

FinFn terminal_map(int c) { return FinFn{c, 1, std::vector<int>(c, 0)}; }

FinFn symmetry(int a, int b) {
  FinFn f{a * b, b * a, std::vector<int>(a * b)};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      f.table[pair_index(b, i, j)] = pair_index(a, j, i);
  return f;
}

FinFn middle_interchange(int a, int b, int c, int d) {
  int n = a * b * c * d;
  FinFn f{n, n, std::vector<int>(n)};
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k)
        for (int l = 0; l < d; ++l) {
          int src = pair_index(c * d, pair_index(b, i, j), pair_index(d, k, l));
          int dst = pair_index(b * d, pair_index(c, i, k), pair_index(d, j, l));
          f.table[src] = dst;
        }
  return f;
}

FinFn inl(int a, int b) {
  FinFn f{a, a + b, std::vector<int>(a)};
  for (int i = 0; i < a; ++i) f.table[i] = i;
  return f;
}

FinFn inr(int a, int b) {
  FinFn f{b, a + b, std::vector<int>(b)};
  for (int j = 0; j < b; ++j) f.table[j] = a + j;
  return f;
}

FinFn copair_fns(const FinFn& f, const FinFn& g) {
  if (f.cod != g.cod)
    throw CodomainMismatch("case split needs a shared codomain: " + fn_desc(f) +
                           " vs " + fn_desc(g));
  FinFn h{f.dom + g.dom, f.cod, std::vector<int>(f.dom + g.dom)};
  for (int i = 0; i < f.dom; ++i) h.table[i] = f.table[i];
  for (int j = 0; j < g.dom; ++j) h.table[f.dom + j] = g.table[j];
  return h;
}

FinFn coproduct_fn(const FinFn& f, const FinFn& g) {
  FinFn h{f.dom + g.dom, f.cod + g.cod, std::vector<int>(f.dom + g.dom)};
  for (int i = 0; i < f.dom; ++i) h.table[i] = f.table[i];
  for (int j = 0; j < g.dom; ++j) h.table[f.dom + j] = f.cod + g.table[j];
  return h;
}

FinFn codiagonal(int c) {
  FinFn f{c + c, c, std::vector<int>(c + c)};
  for (int i = 0; i < c; ++i) {
    f.table[i] = i;
    f.table[c + i] = i;
  }
  return f;
}

Pullback pullback(const FinFn& f, const FinFn& g) {
  if (f.cod != g.cod)
    throw CodomainMismatch("pullback needs a shared codomain: " + fn_desc(f) +
                           " vs " + fn_desc(g));
  Pullback p;
  for (int i = 0; i < f.dom; ++i)
    for (int j = 0; j < g.dom; ++j)
      if (f.table[i] == g.table[j]) p.elems.emplace_back(i, j);
  p.size = (int)p.elems.size();
  p.into_left = FinFn{p.size, f.dom, std::vector<int>(p.size)};
  p.into_right = FinFn{p.size, g.dom, std::vector<int>(p.size)};
  for (int k = 0; k < p.size; ++k) {
    p.into_left.table[k] = p.elems[k].first;
    p.into_right.table[k] = p.elems[k].second;
  }
  return p;
}

FinFn Pullback::mediate(const FinFn& q1, const FinFn& q2) const {
  if (q1.dom != q2.dom)
    throw CodomainMismatch("cone legs need a shared apex: " + fn_desc(q1) +
                           " vs " + fn_desc(q2));
  if (q1.cod != into_left.cod || q2.cod != into_right.cod)
    throw CodomainMismatch("cone legs do not target the pullback feet");
  FinFn h{q1.dom, size, std::vector<int>(q1.dom)};
  for (int k = 0; k < q1.dom; ++k) {
    std::pair<int, int> want{q1.table[k], q2.table[k]};
    int found = -1;
    for (int e = 0; e < size; ++e)
      if (elems[e] == want) {
        found = e;
        break;
      }
    if (found < 0)
      throw NoFactorization("cone does not commute at apex element " +
                            std::to_string(k));
    h.table[k] = found;
  }
  return h;
}

std::vector<FinFn> all_fns(int dom, int cod) {
  std::vector<FinFn> out;
  if (dom == 0) {
    out.push_back(FinFn{0, cod, {}});
    return out;
  }
  if (cod == 0) return out;  // no maps from nonempty into empty
  std::vector<int> t(dom, 0);
  while (true) {
    out.push_back(FinFn{dom, cod, t});
    int i = dom - 1;
    while (i >= 0 && t[i] == cod - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  return out;
}

long long count_fns(int dom, int cod, long long cap) {
  if (dom == 0) return 1;
  if (cod == 0) return 0;
  long long n = 1;
  for (int i = 0; i < dom; ++i) {
    if (n > cap / cod) return cap + 1;
    n *= cod;
  }
  return n;
}

long long fn_rank(const FinFn& f) {
  long long r = 0;
  for (int i = 0; i < f.dom; ++i) r = r * f.cod + f.table[i];
  return r;
}

FinFn fn_unrank(int dom, int cod, long long rank) {
  FinFn f{dom, cod, std::vector<int>(dom)};
  for (int i = dom - 1; i >= 0; --i) {
    f.table[i] = (int)(rank % cod);
    rank /= cod;
  }
  return f;
}

long long default_limit() {
  static const long long value = [] {
    if (const char* env = std::getenv("GLENS_LIMIT")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return 5'000'000LL;
  }();
  return value;
}

}  // namespace glens
