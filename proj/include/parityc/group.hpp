#pragma once

// Finite groups as dense multiplication tables over element indices 0..n-1.
// The identity always sits at index 0 (ingest relabels if needed); every
// higher layer addresses elements by index and treats labels as I/O fluff.

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace parityc {

struct FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
  std::string name;
  int n = 0;
  std::vector<int> table;            // n*n, row-major: table[a*n+b] = a*b
  std::vector<int> inv;              // inv[a]*a = a*inv[a] = 0
  std::vector<std::string> labels;   // size n
  bool abelian = false;

  int mul(int a, int b) const { return table[a * n + b]; }
  int invof(int a) const { return inv[a]; }
  int unit() const { return 0; }

  int order_of(int a) const {
    int x = a, k = 1;
    while (x != 0) { x = mul(x, a); ++k; }
    return k;
  }

  int conj(int g, int x) const { return mul(mul(g, x), inv[g]); }
};

// Validation bound: tables beyond 64x64 (4096 entries) are refused.
inline constexpr int kMaxGroupOrder = 64;

// Checks the group axioms, relabels so the identity is index 0, and freezes
// the result.  Witnesses carry the offending element indices of the input
// table (before any relabel).
inline GroupRef validate_group(std::string name, std::vector<std::vector<int>> rows,
                               std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(rows.size());
  if (n <= 0) fail(errc::bad_input, "empty multiplication table");
  if (n > kMaxGroupOrder)
    fail(errc::order_bound_exceeded,
         "order " + std::to_string(n) + " exceeds bound " + std::to_string(kMaxGroupOrder));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      fail(errc::bad_input, "table is not square at row " + std::to_string(a), {a});
    for (int b = 0; b < n; ++b)
      if (rows[a][b] < 0 || rows[a][b] >= n)
        fail(errc::not_closed, "entry out of range", {a, b, rows[a][b]});
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = rows[c][x] == x && rows[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) fail(errc::no_identity, "no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          fail(errc::not_associative, "product is not associative", {a, b, c});

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (rows[a][b] == e && rows[b][a] == e) { inv[a] = b; break; }
    if (inv[a] < 0) fail(errc::no_inverse, "element has no inverse", {a});
  }

  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      fail(errc::bad_input, "label count does not match order");
  } else {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }

  // Relabel so the identity lands at index 0 (swap 0 <-> e).
  if (e != 0) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    perm[0] = e;
    perm[e] = 0;
    std::vector<std::vector<int>> relab(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) relab[perm[a]][perm[b]] = perm[rows[a][b]];
    rows = std::move(relab);
    std::vector<std::string> rl(n);
    for (int i = 0; i < n; ++i) rl[perm[i]] = labels[i];
    labels = std::move(rl);
    std::vector<int> ri(n);
    for (int a = 0; a < n; ++a) ri[perm[a]] = perm[inv[a]];
    inv = std::move(ri);
  }

  auto g = std::make_shared<FiniteGroup>();
  g->name = std::move(name);
  g->n = n;
  g->table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table[a * n + b] = rows[a][b];
  g->inv = std::move(inv);
  g->labels = std::move(labels);
  g->abelian = true;
  for (int a = 0; a < n && g->abelian; ++a)
    for (int b = a + 1; b < n; ++b)
      if (g->mul(a, b) != g->mul(b, a)) { g->abelian = false; break; }
  return g;
}

// ---------------------------------------------------------------------------
// Subsets, subgroups, quotients.

inline std::vector<int> generated_subgroup(const FiniteGroup& G, std::vector<int> seeds) {
  std::vector<char> in(G.n, 0);
  in[0] = 1;
  std::vector<int> work{0};
  for (int s : seeds)
    if (s < 0 || s >= G.n) fail(errc::bad_input, "seed out of range", {s});
    else if (!in[s]) { in[s] = 1; work.push_back(s); }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      int p = G.mul(work[i], work[j]);
      if (!in[p]) { in[p] = 1; work.push_back(p); }
    }
  std::vector<int> out;
  for (int x = 0; x < G.n; ++x)
    if (in[x]) out.push_back(x);
  return out;  // sorted by construction
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& members) {
  std::vector<char> in(G.n, 0);
  for (int m : members) {
    if (m < 0 || m >= G.n) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[G.mul(a, b)]) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& G, const std::vector<int>& members) {
  std::vector<char> in(G.n, 0);
  for (int m : members) in[m] = 1;
  for (int g = 0; g < G.n; ++g)
    for (int x : members)
      if (!in[G.conj(g, x)]) return false;
  return true;
}

inline std::vector<int> center(const FiniteGroup& G) {
  std::vector<int> out;
  for (int z = 0; z < G.n; ++z) {
    bool c = true;
    for (int x = 0; x < G.n && c; ++x) c = G.mul(z, x) == G.mul(x, z);
    if (c) out.push_back(z);
  }
  return out;
}

inline std::vector<int> centralizer(const FiniteGroup& G, const std::vector<int>& members) {
  std::vector<int> out;
  for (int z = 0; z < G.n; ++z) {
    bool c = true;
    for (int x : members)
      if (G.mul(z, x) != G.mul(x, z)) { c = false; break; }
    if (c) out.push_back(z);
  }
  return out;
}

// All subgroups reachable from generator seeds of size <= 3.  Every group of
// order <= 24 that arises here needs at most three generators, so for our
// orders this is the full subgroup lattice; results are sorted member lists,
// deduplicated, in lexicographic order.
inline std::vector<std::vector<int>> list_subgroups(const FiniteGroup& G) {
  std::map<std::vector<int>, char> seen;
  seen[{0}] = 1;
  auto add = [&](std::vector<int> seeds) { seen[generated_subgroup(G, std::move(seeds))] = 1; };
  for (int a = 1; a < G.n; ++a) {
    add({a});
    for (int b = a + 1; b < G.n; ++b) {
      add({a, b});
      for (int c = b + 1; c < G.n; ++c) add({a, b, c});
    }
  }
  std::vector<std::vector<int>> out;
  for (auto& [members, _] : seen) out.push_back(members);
  return out;
}

struct SubgroupView {
  GroupRef parent;
  std::vector<int> members;   // sorted, members[0] == 0
  GroupRef group;             // the subgroup on local indices
  std::vector<int> to_local;  // parent index -> local index or -1
};

inline SubgroupView materialize_subgroup(GroupRef parent, std::vector<int> members,
                                         std::string name = "") {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subgroup(*parent, members))
    fail(errc::bad_input, "member set is not a subgroup");
  const int m = static_cast<int>(members.size());
  std::vector<int> to_local(parent->n, -1);
  for (int i = 0; i < m; ++i) to_local[members[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = parent->labels[members[i]];
    for (int j = 0; j < m; ++j) rows[i][j] = to_local[parent->mul(members[i], members[j])];
  }
  if (name.empty()) name = parent->name + "-sub" + std::to_string(m);
  SubgroupView v;
  v.parent = std::move(parent);
  v.members = std::move(members);
  v.group = validate_group(std::move(name), std::move(rows), std::move(labels));
  v.to_local = std::move(to_local);
  return v;
}

struct QuotientView {
  GroupRef group;             // cosets as elements, identity coset at index 0
  std::vector<int> coset_of;  // parent element -> coset index
  std::vector<int> reps;      // coset index -> minimal member
};

// Quotient by a normal subgroup.  Cosets are ordered by minimal member
// (identity coset first) and represented by that member, which keeps every
// downstream artifact deterministic.
inline QuotientView quotient_group(const FiniteGroup& E, const std::vector<int>& normal_members) {
  if (!is_subgroup(E, normal_members)) fail(errc::bad_input, "quotient by a non-subgroup");
  if (!is_normal(E, normal_members)) fail(errc::bad_input, "quotient by a non-normal subgroup");
  std::vector<int> coset_of(E.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < E.n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);  // first unseen element is the minimal member
    for (int m : normal_members) coset_of[E.mul(x, m)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = "[" + E.labels[reps[i]] + "]";
    for (int j = 0; j < q; ++j) rows[i][j] = coset_of[E.mul(reps[i], reps[j])];
  }
  QuotientView v;
  v.group = validate_group(E.name + "-quot", std::move(rows), std::move(labels));
  v.coset_of = std::move(coset_of);
  v.reps = std::move(reps);
  return v;
}

inline GroupRef opposite_group(const FiniteGroup& G) {
  std::vector<std::vector<int>> rows(G.n, std::vector<int>(G.n));
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) rows[a][b] = G.mul(b, a);
  return validate_group(G.name + "^op", std::move(rows), G.labels);
}

// ---------------------------------------------------------------------------
// Maps between groups: image tables, automorphisms, isomorphism search.

inline std::vector<int> compose_images(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

inline std::vector<int> invert_images(const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = static_cast<int>(x);
  return out;
}

inline bool is_bijection(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

inline bool is_automorphism(const FiniteGroup& G, const std::vector<int>& f) {
  if (!is_bijection(f, G.n) || f[0] != 0) return false;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (f[G.mul(a, b)] != G.mul(f[a], f[b])) return false;
  return true;
}

inline std::vector<int> conjugation_map(const FiniteGroup& G, int g) {
  std::vector<int> out(G.n);
  for (int x = 0; x < G.n; ++x) out[x] = G.conj(g, x);
  return out;
}

// Order histogram as (order, count) pairs, ascending order; equal profiles
// are a cheap necessary condition for isomorphism and the serialized
// "profile" of a group.
inline std::vector<std::array<int, 2>> order_profile(const FiniteGroup& G) {
  std::map<int, int> h;
  for (int x = 0; x < G.n; ++x) ++h[G.order_of(x)];
  std::vector<std::array<int, 2>> out;
  for (auto [o, c] : h) out.push_back({o, c});
  return out;
}

// Greedy generating set: repeatedly adjoin the smallest element outside the
// closure.  Deterministic and small (<= log2 n generators).
inline std::vector<int> generating_set(const FiniteGroup& G) {
  std::vector<int> gens;
  std::vector<int> have{0};
  while (static_cast<int>(have.size()) < G.n) {
    std::vector<char> in(G.n, 0);
    for (int x : have) in[x] = 1;
    int next = -1;
    for (int x = 0; x < G.n; ++x)
      if (!in[x]) { next = x; break; }
    gens.push_back(next);
    have = generated_subgroup(G, gens);
  }
  return gens;
}

namespace detail {

// BFS expression of every element as parent*generator, so a choice of
// generator images extends to at most one homomorphism.
struct WordTable {
  std::vector<int> parent, genof;  // x = parent[x] * gens[genof[x]], x != 0
  std::vector<int> order;          // BFS discovery order (starts with 0)
};

inline WordTable word_table(const FiniteGroup& G, const std::vector<int>& gens) {
  WordTable w;
  w.parent.assign(G.n, -1);
  w.genof.assign(G.n, -1);
  w.order.push_back(0);
  std::vector<char> seen(G.n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < w.order.size(); ++i)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      int x = G.mul(w.order[i], gens[gi]);
      if (!seen[x]) {
        seen[x] = 1;
        w.parent[x] = w.order[i];
        w.genof[x] = static_cast<int>(gi);
        w.order.push_back(x);
      }
    }
  return w;
}

// Extends generator images to a full map via the word table; returns empty
// if the extension is not a homomorphism A -> B or not injective.
inline std::vector<int> extend_hom(const FiniteGroup& A, const FiniteGroup& B,
                                   const std::vector<int>& gens, const WordTable& w,
                                   const std::vector<int>& gen_images) {
  std::vector<int> f(A.n, -1);
  f[0] = 0;
  for (std::size_t i = 1; i < w.order.size(); ++i) {
    int x = w.order[i];
    f[x] = B.mul(f[w.parent[x]], gen_images[w.genof[x]]);
  }
  if (!is_bijection(f, A.n)) return {};
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b)
      if (f[A.mul(a, b)] != B.mul(f[a], f[b])) return {};
  return f;
}

template <typename Visit>
inline void for_each_iso(const FiniteGroup& A, const FiniteGroup& B, Visit&& visit) {
  if (A.n != B.n) return;
  if (order_profile(A) != order_profile(B)) return;
  auto gens = generating_set(A);
  auto words = word_table(A, gens);
  // Candidate images per generator: same element order.
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int o = A.order_of(gens[i]);
    for (int y = 0; y < B.n; ++y)
      if (B.order_of(y) == o) cand[i].push_back(y);
    if (cand[i].empty()) return;
  }
  std::vector<int> pick(gens.size(), 0);
  std::vector<int> images(gens.size());
  // Odometer over candidate tuples, ascending: visitation order is
  // deterministic and the first hit is the lexicographically least choice.
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = cand[i][pick[i]];
    auto f = extend_hom(A, B, gens, words, images);
    if (!f.empty() && !visit(f)) return;
    std::size_t i = gens.size();
    while (i > 0 && ++pick[i - 1] == static_cast<int>(cand[i - 1].size())) pick[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace detail

inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
  std::optional<std::vector<int>> out;
  detail::for_each_iso(A, B, [&](const std::vector<int>& f) {
    out = f;
    return false;  // stop at the first (deterministic) hit
  });
  return out;
}

inline bool isomorphic(const FiniteGroup& A, const FiniteGroup& B) {
  return find_isomorphism(A, B).has_value();
}

// Aut(N) with elements addressed by index: image tables sorted
// lexicographically.  Automorphisms fix index 0 and are injective, so the
// identity table is lex-minimal and always lands at index 0.
struct AutomorphismGroup {
  GroupRef base;                           // N
  std::vector<std::vector<int>> elements;  // sorted image tables
  GroupRef group;                          // composition table: i*j applies j, then i
  std::map<std::vector<int>, int> index;

  int size() const { return static_cast<int>(elements.size()); }

  int index_of(const std::vector<int>& images) const {
    auto it = index.find(images);
    if (it == index.end())
      fail(errc::target_mismatch, "map is not an automorphism of " + base->name);
    return it->second;
  }

  int conj_index(int n) const { return index_of(conjugation_map(*base, n)); }

  // Inner automorphisms as a sorted index set.
  std::vector<int> inner_indices() const {
    std::vector<int> out;
    for (int n = 0; n < base->n; ++n) out.push_back(conj_index(n));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

inline constexpr int kDefaultAutOrderBound = 12;

inline AutomorphismGroup automorphism_group(GroupRef N, int order_bound = kDefaultAutOrderBound) {
  if (N->n > order_bound)
    fail(errc::order_bound_exceeded,
         "automorphism search bound " + std::to_string(order_bound) + " exceeded by order " +
             std::to_string(N->n));
  AutomorphismGroup A;
  A.base = N;
  detail::for_each_iso(*N, *N, [&](const std::vector<int>& f) {
    A.elements.push_back(f);
    return true;
  });
  std::sort(A.elements.begin(), A.elements.end());
  A.elements.erase(std::unique(A.elements.begin(), A.elements.end()), A.elements.end());
  for (int i = 0; i < A.size(); ++i) A.index[A.elements[i]] = i;
  const int m = A.size();
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[i][j] = A.index.at(compose_images(A.elements[i], A.elements[j]));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string s;
    for (int x = 0; x < N->n; ++x) s += (x ? "," : "") + std::to_string(A.elements[i][x]);
    labels[i] = "(" + s + ")";
  }
  A.group = validate_group("Aut(" + N->name + ")", std::move(rows), std::move(labels));
  return A;
}

// ---------------------------------------------------------------------------
// Catalog of built-in groups.

inline GroupRef make_trivial() {
  return validate_group("trivial", {{0}}, {"e"});
}

inline GroupRef make_cyclic(int n) {
  if (n < 1 || n > 12) fail(errc::bad_input, "cyclic order must be in 1..12");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  return validate_group("cyclic:" + std::to_string(n), std::move(rows), std::move(labels));
}

inline GroupRef make_klein() {
  // Z2 x Z2 with bitwise-xor indices.
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) rows[a][b] = a ^ b;
  return validate_group("klein", std::move(rows), {"e", "a", "b", "ab"});
}

// Dihedral group on n rotations: elements r^i s^j with index i + n*j and
// s r = r^{-1} s.
inline GroupRef make_dihedral(int n) {
  if (n < 3 || n > 6) fail(errc::bad_input, "dihedral rotation order must be in 3..6");
  const int m = 2 * n;
  auto idx = [n](int i, int j) { return ((i % n) + n) % n + n * (j & 1); };
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l)
          rows[idx(i, j)][idx(k, l)] = idx(j ? i - k : i + k, j + l);
  std::vector<std::string> labels(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string s = i == 0 ? "" : i == 1 ? "r" : "r" + std::to_string(i);
      if (j) s += "s";
      labels[idx(i, j)] = s.empty() ? "e" : s;
    }
  return validate_group("dihedral:" + std::to_string(n), std::move(rows), std::move(labels));
}

inline GroupRef make_sym3() {
  // Symmetric group on three letters, presented on rotations/reflections.
  auto d = make_dihedral(3);
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) rows[a][b] = d->mul(a, b);
  return validate_group("sym:3", std::move(rows), d->labels);
}

inline GroupRef make_quat8() {
  // Unit quaternions {±1, ±i, ±j, ±k}: index = 2*axis + (sign < 0),
  // axes ordered 1, i, j, k.
  static constexpr int axis_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_mul[a][b] = 1 iff the axis product a*b carries a minus sign:
  // i*i = j*j = k*k = -1, j*i = -k, k*j = -i, i*k = -j.
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ax = a / 2, bx = b / 2;
      int sign = (a & 1) ^ (b & 1) ^ sign_mul[ax][bx];
      rows[a][b] = 2 * axis_mul[ax][bx] + sign;
    }
  return validate_group("quat:8", std::move(rows),
                        {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

// Parses a catalog name: trivial | cyclic:1..12 | klein | sym:3 |
// dihedral:4 | quat:8.
inline GroupRef builtin_group(const std::string& name) {
  if (name == "trivial") return make_trivial();
  if (name == "klein") return make_klein();
  if (name == "sym:3") return make_sym3();
  if (name == "dihedral:4") return make_dihedral(4);
  if (name == "quat:8") return make_quat8();
  if (name.rfind("cyclic:", 0) == 0) {
    int n = -1;
    try {
      std::size_t pos = 0;
      n = std::stoi(name.substr(7), &pos);
      if (pos != name.size() - 7) n = -1;
    } catch (...) { n = -1; }
    if (n >= 1 && n <= 12) return make_cyclic(n);
  }
  fail(errc::bad_input,
       "unknown builtin group '" + name +
           "' (catalog: trivial, cyclic:1..12, klein, sym:3, dihedral:4, quat:8)");
}

}  // namespace parityc
