#pragma once

// Nonabelian cochains (f, L) on a base group G with coefficients in a fiber
// group N: f is a normalized function G^p -> N and L a normalized map
// G -> Aut(N) (a quasiaction: L(1) = id, multiplicativity NOT assumed).
// The two halves of the simplicial boundary are kept separate: the plus
// boundary multiplies the even cofaces in ascending order, the minus
// boundary the odd cofaces in descending order.  Cocycles are the tables
// where both sides agree pointwise.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace parityc {

inline constexpr int kMaxDegree = 3;
inline constexpr long long kDefaultBudget = 10'000'000;

inline long long pow_ll(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Flat tables over G^p, first argument most significant.
inline long long tuple_count(int n, int p) { return pow_ll(n, p); }

inline void unpack_tuple(long long idx, int n, int p, int* args) {
  for (int i = p - 1; i >= 0; --i) {
    args[i] = static_cast<int>(idx % n);
    idx /= n;
  }
}

inline long long pack_tuple(const int* args, int n, int p) {
  long long idx = 0;
  for (int i = 0; i < p; ++i) idx = idx * n + args[i];
  return idx;
}

// Flat indices of the tuples with no identity argument: the free positions
// of a normalized cochain (all other positions are pinned to the identity).
inline std::vector<long long> free_positions(int n, int p) {
  std::vector<long long> out;
  const long long total = tuple_count(n, p);
  int args[kMaxDegree + 1];
  for (long long t = 0; t < total; ++t) {
    unpack_tuple(t, n, p, args);
    bool free = true;
    for (int i = 0; i < p; ++i)
      if (args[i] == 0) { free = false; break; }
    if (free) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quasiactions.

struct Quasiaction {
  GroupRef G, N;
  std::vector<std::vector<int>> maps;  // maps[g] = image table of L_g on N

  int apply(int g, int n) const { return maps[g][n]; }
  const std::vector<int>& at(int g) const { return maps[g]; }
};

inline void validate_quasiaction(const Quasiaction& L) {
  if (!L.G || !L.N) fail(errc::bad_input, "quasiaction without base or fiber");
  if (static_cast<int>(L.maps.size()) != L.G->n)
    fail(errc::degree_mismatch, "quasiaction needs one map per base element");
  for (int g = 0; g < L.G->n; ++g)
    if (!is_automorphism(*L.N, L.maps[g]))
      fail(errc::target_mismatch, "L[" + std::to_string(g) + "] is not an automorphism of " + L.N->name,
           {g});
  for (int x = 0; x < L.N->n; ++x)
    if (L.maps[0][x] != x) fail(errc::not_normalized, "L[identity] must be the identity map");
}

inline bool is_action(const Quasiaction& L) {
  for (int g = 0; g < L.G->n; ++g)
    for (int h = 0; h < L.G->n; ++h)
      if (compose_images(L.maps[g], L.maps[h]) != L.maps[L.G->mul(g, h)]) return false;
  return true;
}

inline Quasiaction trivial_quasiaction(GroupRef G, GroupRef N) {
  Quasiaction L;
  L.G = std::move(G);
  L.N = std::move(N);
  std::vector<int> id(L.N->n);
  for (int x = 0; x < L.N->n; ++x) id[x] = x;
  L.maps.assign(L.G->n, id);
  return L;
}

// Quasiaction built from automorphism-group indices (one per base element).
inline Quasiaction quasiaction_from_indices(GroupRef G, const AutomorphismGroup& A,
                                            const std::vector<int>& idx) {
  Quasiaction L;
  L.G = std::move(G);
  L.N = A.base;
  if (static_cast<int>(idx.size()) != L.G->n)
    fail(errc::degree_mismatch, "need one automorphism index per base element");
  for (int i : idx) L.maps.push_back(A.elements.at(i));
  validate_quasiaction(L);
  return L;
}

// ---------------------------------------------------------------------------
// Cochains.

struct Cochain {
  Quasiaction L;
  int p = 0;
  std::vector<int> f;  // |G|^p values in N; p = 0 is a single value

  const FiniteGroup& G() const { return *L.G; }
  const FiniteGroup& N() const { return *L.N; }
};

inline void validate_cochain(const Cochain& c) {
  validate_quasiaction(c.L);
  if (c.p < 0 || c.p > kMaxDegree)
    fail(errc::degree_out_of_range, "degree must be in 0.." + std::to_string(kMaxDegree));
  const int n = c.G().n;
  if (static_cast<long long>(c.f.size()) != tuple_count(n, c.p))
    fail(errc::degree_mismatch, "table size does not match |G|^p");
  int args[kMaxDegree + 1];
  for (long long t = 0; t < static_cast<long long>(c.f.size()); ++t) {
    if (c.f[t] < 0 || c.f[t] >= c.N().n) fail(errc::target_mismatch, "value out of range", {t});
    unpack_tuple(t, n, c.p, args);
    for (int i = 0; i < c.p; ++i)
      if (args[i] == 0 && c.f[t] != 0)
        fail(errc::not_normalized, "nonidentity value on an identity argument", {t});
  }
}

inline Cochain identity_cochain(const Quasiaction& L, int p) {
  Cochain c;
  c.L = L;
  c.p = p;
  c.f.assign(tuple_count(L.G->n, p), 0);
  return c;
}

// The i-th coface of a p-cochain at a (p+1)-tuple:
//   i = 0      twist the tail by the leading argument,
//   0 < i <= p multiply arguments i and i+1,
//   i = p+1    forget the trailing argument.
inline int coface_value(const Quasiaction& L, int p, const std::vector<int>& f, int i,
                        const int* args) {
  const int n = L.G->n;
  int sub[kMaxDegree + 1];
  if (i == 0) {
    for (int k = 0; k < p; ++k) sub[k] = args[k + 1];
    return L.apply(args[0], f[pack_tuple(sub, n, p)]);
  }
  if (i <= p) {
    for (int k = 0; k < i - 1; ++k) sub[k] = args[k];
    sub[i - 1] = L.G->mul(args[i - 1], args[i]);
    for (int k = i; k < p; ++k) sub[k] = args[k + 1];
    return f[pack_tuple(sub, n, p)];
  }
  return f[pack_tuple(args, n, p)];
}

// Which p-positions a coface reads at a given (p+1)-tuple (for incremental
// constraint checking during enumeration).
inline long long coface_position(const FiniteGroup& G, int p, int i, const int* args) {
  int sub[kMaxDegree + 1];
  if (i == 0) {
    for (int k = 0; k < p; ++k) sub[k] = args[k + 1];
  } else if (i <= p) {
    for (int k = 0; k < i - 1; ++k) sub[k] = args[k];
    sub[i - 1] = G.mul(args[i - 1], args[i]);
    for (int k = i; k < p; ++k) sub[k] = args[k + 1];
  } else {
    for (int k = 0; k < p; ++k) sub[k] = args[k];
  }
  return pack_tuple(sub, G.n, p);
}

// One side of the boundary at a single tuple: the ordered product of the
// even cofaces ascending (sign > 0) or the odd cofaces descending (sign < 0).
inline int parity_boundary_value(const Quasiaction& L, int p, const std::vector<int>& f,
                                 const int* args, int sign) {
  const FiniteGroup& N = *L.N;
  int out = 0;
  if (sign > 0) {
    for (int i = 0; i <= p + 1; i += 2) out = N.mul(out, coface_value(L, p, f, i, args));
  } else {
    for (int i = (p + 1) % 2 ? p + 1 : p; i >= 1; i -= 2)
      out = N.mul(out, coface_value(L, p, f, i, args));
  }
  return out;
}

inline std::vector<int> coface(const Cochain& c, int i) {
  if (i < 0 || i > c.p + 1) fail(errc::degree_out_of_range, "coface index out of range");
  const int n = c.G().n;
  std::vector<int> out(tuple_count(n, c.p + 1));
  int args[kMaxDegree + 2];
  for (long long t = 0; t < static_cast<long long>(out.size()); ++t) {
    unpack_tuple(t, n, c.p + 1, args);
    out[t] = coface_value(c.L, c.p, c.f, i, args);
  }
  return out;
}

// Ordered product of cofaces of one parity.  sign > 0 multiplies the even
// cofaces ascending, sign < 0 the odd cofaces descending.
inline std::vector<int> parity_boundary(const Cochain& c, int sign) {
  std::vector<int> order;
  if (sign > 0) {
    for (int i = 0; i <= c.p + 1; i += 2) order.push_back(i);
  } else {
    for (int i = (c.p + 1) % 2 ? c.p + 1 : c.p; i >= 1; i -= 2) order.push_back(i);
  }
  const FiniteGroup& N = c.N();
  std::vector<int> out(tuple_count(c.G().n, c.p + 1), 0);
  for (int i : order) {
    auto face = coface(c, i);
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = N.mul(out[t], face[t]);
  }
  return out;
}

// Hand-written rows for degrees 0..3: an independent path used to cross-check
// the generic coface product.
inline std::vector<int> parity_boundary_explicit(const Cochain& c, int sign) {
  const FiniteGroup& G = c.G();
  const FiniteGroup& N = c.N();
  const int n = G.n;
  const auto& L = c.L;
  const auto& f = c.f;
  std::vector<int> out(tuple_count(n, c.p + 1));
  auto at1 = [&](int a) { return f[a]; };
  auto at2 = [&](int a, int b) { return f[a * n + b]; };
  auto at3 = [&](int a, int b, int cc) { return f[(a * n + b) * n + cc]; };
  switch (c.p) {
    case 0:
      for (int a = 0; a < n; ++a)
        out[a] = sign > 0 ? L.apply(a, f[0]) : f[0];
      break;
    case 1:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          out[a * n + b] = sign > 0 ? N.mul(L.apply(a, at1(b)), at1(a)) : at1(G.mul(a, b));
      break;
    case 2:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc)
            out[(a * n + b) * n + cc] =
                sign > 0 ? N.mul(L.apply(a, at2(b, cc)), at2(a, G.mul(b, cc)))
                         : N.mul(at2(a, b), at2(G.mul(a, b), cc));
      break;
    case 3:
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int cc = 0; cc < n; ++cc)
            for (int d = 0; d < n; ++d)
              out[((a * n + b) * n + cc) * n + d] =
                  sign > 0 ? N.mul(N.mul(L.apply(a, at3(b, cc, d)), at3(a, G.mul(b, cc), d)),
                                   at3(a, b, cc))
                           : N.mul(at3(a, b, G.mul(cc, d)), at3(G.mul(a, b), cc, d));
      break;
    default:
      fail(errc::degree_out_of_range, "explicit rows cover degrees 0..3");
  }
  return out;
}

// Pointwise defect delta = d+ . (d-)^{-1}; bar swaps the factors to
// (d-)^{-1} . d+.  Either is the identity table exactly on cocycles.
inline Cochain delta(const Cochain& c, bool bar = false) {
  auto plus = parity_boundary(c, +1);
  auto minus = parity_boundary(c, -1);
  const FiniteGroup& N = c.N();
  Cochain out;
  out.L = c.L;
  out.p = c.p + 1;
  out.f.resize(plus.size());
  for (std::size_t t = 0; t < plus.size(); ++t)
    out.f[t] = bar ? N.mul(N.invof(minus[t]), plus[t]) : N.mul(plus[t], N.invof(minus[t]));
  return out;
}

inline bool is_cocycle(const Cochain& c) {
  return parity_boundary(c, +1) == parity_boundary(c, -1);
}

// ---------------------------------------------------------------------------
// Equivalences between cochains of matching degree.

inline void check_table_degree(const Cochain& w, const std::vector<int>& t, const char* what) {
  if (static_cast<long long>(t.size()) != tuple_count(w.G().n, w.p + 1))
    fail(errc::degree_mismatch, std::string(what) + " must be a table on G^" + std::to_string(w.p + 1));
}

// w is a cobordism from c to c2 when its minus boundary is c and its plus
// boundary is c2.
inline bool is_cobordant(const std::vector<int>& c, const std::vector<int>& c2, const Cochain& w) {
  check_table_degree(w, c, "source");
  check_table_degree(w, c2, "target");
  return parity_boundary(w, -1) == c && parity_boundary(w, +1) == c2;
}

// Witnessed move: c2 = (d+ w) . c . (d- w)^{-1} pointwise.  The variant flag
// flips the bracketing to c . (d- w) = (d+ w) . c2.
inline bool is_cohomologous(const std::vector<int>& c, const std::vector<int>& c2,
                            const Cochain& w, bool variant_ordering = false) {
  check_table_degree(w, c, "source");
  check_table_degree(w, c2, "target");
  auto plus = parity_boundary(w, +1);
  auto minus = parity_boundary(w, -1);
  const FiniteGroup& N = w.N();
  for (std::size_t t = 0; t < c.size(); ++t) {
    bool ok = variant_ordering ? N.mul(c[t], minus[t]) == N.mul(plus[t], c2[t])
                               : N.mul(plus[t], c[t]) == N.mul(c2[t], minus[t]);
    if (!ok) return false;
  }
  return true;
}

inline std::vector<int> cohomologous_move(const std::vector<int>& c, const Cochain& w) {
  check_table_degree(w, c, "source");
  auto plus = parity_boundary(w, +1);
  auto minus = parity_boundary(w, -1);
  const FiniteGroup& N = w.N();
  std::vector<int> out(c.size());
  for (std::size_t t = 0; t < c.size(); ++t)
    out[t] = N.mul(N.mul(plus[t], c[t]), N.invof(minus[t]));
  return out;
}

// Weak equivalence moves the quasiaction too: witness gamma (a normalized
// 1-table) relates (f, L) to (f', L') when  d+_{L'} gamma . f = f' . d- gamma
// pointwise; the minus boundary never uses a quasiaction.
inline bool is_weak_cohomologous(const Cochain& c, const Cochain& c2,
                                 const std::vector<int>& gamma) {
  if (c.p != 2 || c2.p != 2) fail(errc::degree_mismatch, "weak equivalence is for degree 2");
  if (c.L.G != c2.L.G && c.G().table != c2.G().table)
    fail(errc::fiber_mismatch, "cochains live over different base groups");
  if (c.L.N != c2.L.N && c.N().table != c2.N().table)
    fail(errc::fiber_mismatch, "cochains live in different fibers");
  const FiniteGroup& G = c.G();
  const FiniteGroup& N = c.N();
  if (static_cast<int>(gamma.size()) != G.n) fail(errc::degree_mismatch, "witness must be a 1-table");
  if (gamma[0] != 0) fail(errc::not_normalized, "witness must fix the identity");
  Cochain w;
  w.L = c2.L;  // plus boundary of the witness is taken with the primed action
  w.p = 1;
  w.f = gamma;
  auto plus = parity_boundary(w, +1);
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) {
      long long t = a * G.n + b;
      if (N.mul(plus[t], c.f[t]) != N.mul(c2.f[t], gamma[G.mul(a, b)])) return false;
    }
  return true;
}

// Gauge move by gamma: conjugates the quasiaction pointwise and drags f
// along, producing a weakly equivalent cochain.
inline Cochain conjugate_by(const Cochain& c, const std::vector<int>& gamma) {
  if (c.p != 2) fail(errc::degree_mismatch, "gauge moves are for degree 2");
  const FiniteGroup& G = c.G();
  const FiniteGroup& N = c.N();
  if (static_cast<int>(gamma.size()) != G.n) fail(errc::degree_mismatch, "witness must be a 1-table");
  if (gamma[0] != 0) fail(errc::not_normalized, "witness must fix the identity");
  Cochain out;
  out.L.G = c.L.G;
  out.L.N = c.L.N;
  out.L.maps.resize(G.n);
  for (int g = 0; g < G.n; ++g)
    out.L.maps[g] = compose_images(conjugation_map(N, gamma[g]), c.L.maps[g]);
  out.p = 2;
  Cochain w;
  w.L = out.L;
  w.p = 1;
  w.f = gamma;
  auto plus = parity_boundary(w, +1);
  out.f.resize(c.f.size());
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) {
      long long t = a * G.n + b;
      out.f[t] = N.mul(N.mul(plus[t], c.f[t]), N.invof(gamma[G.mul(a, b)]));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Pushforward along conjugation N -> Aut(N), n |-> C_n.

// The conjugation image of a cochain: values become automorphism indices in
// Aut(N) and the quasiaction becomes conjugation by (the index of) L_g.
// This is a chain map for both parities.
inline Cochain push_conjugation(const Cochain& c, const AutomorphismGroup& A) {
  if (c.L.N != A.base && c.N().table != A.base->table)
    fail(errc::fiber_mismatch, "automorphism group is for a different fiber");
  Cochain out;
  out.L.G = c.L.G;
  out.L.N = A.group;
  out.L.maps.resize(c.G().n);
  for (int g = 0; g < c.G().n; ++g)
    out.L.maps[g] = conjugation_map(*A.group, A.index_of(c.L.maps[g]));
  out.p = c.p;
  out.f.resize(c.f.size());
  for (std::size_t t = 0; t < c.f.size(); ++t) out.f[t] = A.conj_index(c.f[t]);
  return out;
}

// Counts the stages of the center -> fiber -> inner chain on degree-p
// cochains: kernel of the pushforward vs center-valued tables, image vs
// inner-valued tables.  The counts are quasiaction-independent (only values
// of f are involved), so the report covers every fiber at once.
struct ExactnessReport {
  long long free_count = 0;       // free positions of a normalized table
  long long total = 0;            // |N|^free_count
  long long center_valued = 0;
  long long kernel = 0;           // pushforward is the identity table
  long long inner_valued = 0;     // (|Inn|)^free_count, arithmetic
  long long image = 0;            // distinct pushed tables
  bool kernel_matches_center = false;
  bool image_matches_inner = false;
};

inline ExactnessReport exactness_check(GroupRef G, GroupRef N, int p,
                                       long long budget = kDefaultBudget) {
  if (p < 0 || p > kMaxDegree) fail(errc::degree_out_of_range, "degree must be in 0..3");
  auto A = automorphism_group(N);
  auto free = free_positions(G->n, p);
  const long long k = static_cast<long long>(free.size());
  ExactnessReport r;
  r.free_count = k;
  r.total = pow_ll(N->n, static_cast<int>(k));
  if (r.total > budget)
    fail(errc::budget_exceeded, "cochain space has " + std::to_string(r.total) + " members",
         {r.total});
  auto cen = center(*N);
  std::vector<char> in_cen(N->n, 0);
  for (int z : cen) in_cen[z] = 1;
  const long long inner_order = static_cast<long long>(A.inner_indices().size());
  r.inner_valued = pow_ll(inner_order, static_cast<int>(k));
  std::vector<int> conj_of(N->n);
  for (int x = 0; x < N->n; ++x) conj_of[x] = A.conj_index(x);

  std::set<std::vector<int>> image;
  std::vector<int> values(k, 0);
  bool consistent = true;
  for (long long count = 0; count < r.total; ++count) {
    bool cen_valued = true, in_kernel = true;
    std::vector<int> pushed(k);
    for (long long i = 0; i < k; ++i) {
      cen_valued = cen_valued && in_cen[values[i]];
      pushed[i] = conj_of[values[i]];
      in_kernel = in_kernel && pushed[i] == 0;
    }
    if (cen_valued) ++r.center_valued;
    if (in_kernel) ++r.kernel;
    if (cen_valued != in_kernel) consistent = false;
    image.insert(std::move(pushed));
    long long i = k;
    while (i > 0 && ++values[i - 1] == N->n) values[--i] = 0;
  }
  r.image = static_cast<long long>(image.size());
  r.kernel_matches_center = consistent && r.kernel == r.center_valued;
  r.image_matches_inner = r.image == r.inner_valued;
  return r;
}

}  // namespace parityc
