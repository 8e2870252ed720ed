#pragma once

#include <utility>
#include <vector>

#include "glens/error.hpp"

namespace glens {

// Skeletal finite sets: an object is a size n and its elements are 0..n-1.
// A function is a lookup table; composition is diagrammatic (f then g).
struct FinFn {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;  // length == dom, entries in [0, cod)

  bool operator==(const FinFn&) const = default;
};

// Validating factory; internal construction sites build tables directly.
FinFn checked_fn(int dom, int cod, std::vector<int> table);
void validate_fn(const FinFn& f);

FinFn identity_fn(int n);
FinFn constant_fn(int dom, int cod, int value);

// Diagrammatic composite: apply f, then g. Throws CodomainMismatch.
FinFn compose(const FinFn& f, const FinFn& g);

// --- products (row-major: pair(i, j) = i*b + j over a x b) ---
int pair_index(int b, int i, int j);
FinFn proj1(int a, int b);
FinFn proj2(int a, int b);
// Tupling <f, g> : x -> a*b for f : x -> a, g : x -> b.
FinFn pair_fns(const FinFn& f, const FinFn& g);
// f x g : a*c -> b*d for f : a -> b, g : c -> d.
FinFn product_fn(const FinFn& f, const FinFn& g);
FinFn diagonal(int c);           // c -> c*c
FinFn terminal_map(int c);       // c -> 1
FinFn symmetry(int a, int b);    // a*b -> b*a, pair(i,j) -> pair(j,i)
// (a*b)*(c*d) -> (a*c)*(b*d), exchanging the middle factors.
FinFn middle_interchange(int a, int b, int c, int d);

// --- coproducts (left block then right block: a+b has a's elements first) ---
FinFn inl(int a, int b);
FinFn inr(int a, int b);
// Case split [f, g] : a+b -> c for f : a -> c, g : b -> c.
FinFn copair_fns(const FinFn& f, const FinFn& g);
// f + g : a+c -> b+d.
FinFn coproduct_fn(const FinFn& f, const FinFn& g);
FinFn codiagonal(int c);  // c+c -> c

// --- pullbacks ---
// Carrier of f : a -> c, g : b -> c is {(i, j) : f(i) = g(j)} in
// lexicographic (i, j) order.
struct Pullback {
  int size = 0;
  std::vector<std::pair<int, int>> elems;
  FinFn into_left;   // carrier -> a
  FinFn into_right;  // carrier -> b

  // Unique mediating map for a commuting cone (q1 : w -> a, q2 : w -> b).
  // Throws NoFactorization if the cone does not commute.
  FinFn mediate(const FinFn& q1, const FinFn& q2) const;
};
Pullback pullback(const FinFn& f, const FinFn& g);

// --- enumeration ---
// All tables dom -> cod in lexicographic order (table[0] most significant).
std::vector<FinFn> all_fns(int dom, int cod);
// Count cod^dom, saturating at cap+1 when it would exceed cap.
long long count_fns(int dom, int cod, long long cap);
// Lexicographic rank of f.table among all tables dom -> cod.
long long fn_rank(const FinFn& f);
// Inverse of fn_rank.
FinFn fn_unrank(int dom, int cod, long long rank);

// Default resource limit for enumerations; reads GLENS_LIMIT once.
long long default_limit();

}  // namespace glens
