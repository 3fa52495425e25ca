#pragma once

// The categorified picture.  Three families of small strict monoidal
// categories over a group G:
//   base kind:       objects G, only identity arrows (one per object),
//   fiber kinds:     objects G, Hom(a,b) = G for every pair, composition is
//                    the group product; the tensor twists the second value
//                    by the first arrow's endpoints (twisted) or just keeps
//                    it (untwisted),
//   bundle kind:     objects are the pairs of a quasi-extension, arrows are
//                    vertical (same base coordinate) with values in the
//                    ambient fiber group.
// Vectors are the arrows val = dst . src^{-1}; they compose to vectors and
// the twisted/bundle tensors preserve them.

#include <array>
#include <memory>
#include <vector>

#include "cochain.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "rng.hpp"

namespace parityc {

enum class CatKind { base, fiber_twisted, fiber_untwisted, bundle };

struct Morphism {
  int src = 0, dst = 0, val = 0;
  bool operator==(const Morphism&) const = default;
};

struct FiniteCategory {
  CatKind kind = CatKind::base;
  GroupRef objects;                            // base/fiber kinds
  GroupRef values;                             // where arrow values live
  std::shared_ptr<const QuasiExtension> ext;   // bundle kind

  int object_count() const {
    return kind == CatKind::bundle ? ext->size() : objects->n;
  }

  bool has_hom(int a, int b) const {
    switch (kind) {
      case CatKind::base: return a == b;
      case CatKind::bundle: return ext->gpart(a) == ext->gpart(b);
      default: return true;
    }
  }

  Morphism identity(int a) const { return {a, a, 0}; }

  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (f.dst != g.src) fail(errc::target_mismatch, "arrows do not chain", {f.dst, g.src});
    return {f.src, g.dst, values->mul(g.val, f.val)};
  }

  int tensor_obj(int a, int b) const {
    return kind == CatKind::bundle ? ext->mul(a, b) : objects->mul(a, b);
  }

  Morphism tensor(const Morphism& x, const Morphism& y) const {
    Morphism out;
    out.src = tensor_obj(x.src, y.src);
    out.dst = tensor_obj(x.dst, y.dst);
    switch (kind) {
      case CatKind::base:
        out.val = 0;
        break;
      case CatKind::fiber_twisted:
        out.val = values->mul(values->mul(x.dst, y.val), values->invof(x.src));
        break;
      case CatKind::fiber_untwisted:
        out.val = y.val;
        break;
      case CatKind::bundle: {
        const auto& E = *ext;
        out.val = E.N().mul(
            E.N().mul(E.npart(x.dst), E.data.L.apply(E.gpart(x.src), y.val)),
            E.N().invof(E.npart(x.src)));
        break;
      }
    }
    return out;
  }

  Morphism vector(int a, int b) const {
    if (!has_hom(a, b)) fail(errc::fiber_mismatch, "no arrows between these objects", {a, b});
    switch (kind) {
      case CatKind::base: return {a, b, 0};
      case CatKind::bundle: return {a, b, ext->vector_between(a, b)};
      default: return {a, b, values->mul(b, values->invof(a))};
    }
  }

  bool is_vector(const Morphism& m) const { return m == vector(m.src, m.dst); }
};

inline FiniteCategory build_base_B(GroupRef G) {
  FiniteCategory c;
  c.kind = CatKind::base;
  c.objects = std::move(G);
  c.values = make_trivial();
  return c;
}

inline FiniteCategory build_fiber_F(GroupRef G) {
  FiniteCategory c;
  c.kind = CatKind::fiber_twisted;
  c.objects = G;
  c.values = G;
  return c;
}

inline FiniteCategory build_untwisted_F(GroupRef G) {
  FiniteCategory c;
  c.kind = CatKind::fiber_untwisted;
  c.objects = G;
  c.values = G;
  return c;
}

inline FiniteCategory build_bundle_C(QuasiExtension E) {
  FiniteCategory c;
  c.kind = CatKind::bundle;
  c.values = E.data.L.N;
  c.ext = std::make_shared<QuasiExtension>(std::move(E));
  return c;
}

// The opposite is the same construction over the opposite group: object
// products reverse, and the value rules are re-read through the reversed
// table (so the twisted rule becomes src^{-1} . val . dst).
inline FiniteCategory make_opposite(const FiniteCategory& c) {
  switch (c.kind) {
    case CatKind::base: return build_base_B(opposite_group(*c.objects));
    case CatKind::fiber_twisted: return build_fiber_F(opposite_group(*c.objects));
    case CatKind::fiber_untwisted: return build_untwisted_F(opposite_group(*c.objects));
    case CatKind::bundle: fail(errc::bad_input, "no opposite construction for bundle hosts");
  }
  fail(errc::bad_input, "unknown category kind");
}

// Structural equality: same objects, same hom pattern, same composition,
// same tensor, arrow by arrow.
inline bool categories_table_equal(const FiniteCategory& c1, const FiniteCategory& c2) {
  const int n = c1.object_count();
  if (n != c2.object_count()) return false;
  if (c1.values->n != c2.values->n) return false;
  const int v = c1.values->n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (c1.has_hom(a, b) != c2.has_hom(a, b)) return false;
      if (c1.tensor_obj(a, b) != c2.tensor_obj(a, b)) return false;
    }
  std::vector<Morphism> all;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c1.has_hom(a, b))
        for (int val = 0; val < v; ++val) all.push_back({a, b, val});
  for (const auto& x : all)
    for (const auto& y : all) {
      if (c1.tensor(x, y) != c2.tensor(x, y)) return false;
      if (x.dst == y.src && c1.compose(y, x) != c2.compose(y, x)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Generic check report.

struct CheckReport {
  long long checks = 0;
  std::vector<std::vector<long long>> failures;  // bounded witness list
  bool pass() const { return failures.empty(); }
  void record(std::initializer_list<long long> w) {
    if (failures.size() < 8) failures.emplace_back(w);
  }
};

// Interchange: tensoring two composable chains equals composing the
// tensors.  Holds strictly in every kind; checked exhaustively.
inline CheckReport interchange_check(const FiniteCategory& c) {
  CheckReport r;
  const int n = c.object_count();
  const int v = c.values->n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!c.has_hom(a, b)) continue;
      for (int b2 = 0; b2 < n; ++b2) {
        if (!c.has_hom(b, b2)) continue;
        for (int a2 = 0; a2 < n; ++a2)
          for (int b3 = 0; b3 < n; ++b3) {
            if (!c.has_hom(a2, b3)) continue;
            for (int b4 = 0; b4 < n; ++b4) {
              if (!c.has_hom(b3, b4)) continue;
              for (int u1 = 0; u1 < v; ++u1)
                for (int u2 = 0; u2 < v; ++u2)
                  for (int w1 = 0; w1 < v; ++w1)
                    for (int w2 = 0; w2 < v; ++w2) {
                      Morphism x1{a, b, u1}, x2{b, b2, u2};
                      Morphism y1{a2, b3, w1}, y2{b3, b4, w2};
                      ++r.checks;
                      if (c.tensor(c.compose(x2, x1), c.compose(y2, y1)) !=
                          c.compose(c.tensor(x2, y2), c.tensor(x1, y1)))
                        r.record({a, b, b2, a2, b3, b4, u1, u2, w1, w2});
                    }
            }
          }
      }
    }
  return r;
}

// Vectors compose to vectors and (twisted/bundle kinds) tensor to vectors.
inline CheckReport vectors_check(const FiniteCategory& c) {
  CheckReport r;
  const int n = c.object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!c.has_hom(a, b)) continue;
      for (int d = 0; d < n; ++d) {
        if (!c.has_hom(b, d)) continue;
        ++r.checks;
        if (c.compose(c.vector(b, d), c.vector(a, b)) != c.vector(a, d)) r.record({a, b, d});
      }
    }
  if (c.kind == CatKind::fiber_twisted || c.kind == CatKind::bundle) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!c.has_hom(a, b)) continue;
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2) {
            if (!c.has_hom(a2, b2)) continue;
            ++r.checks;
            if (c.tensor(c.vector(a, b), c.vector(a2, b2)) !=
                c.vector(c.tensor_obj(a, a2), c.tensor_obj(b, b2)))
              r.record({a, b, a2, b2});
          }
      }
  }
  return r;
}

// D(x: a -> b) = b^{-1} x a is a strict monoidal isomorphism from the
// twisted tensor to the untwisted one (identity on objects).
struct UntwistReport {
  CheckReport functorial, monoidal;
  bool bijective = false;
  bool pass() const { return functorial.pass() && monoidal.pass() && bijective; }
};

inline UntwistReport untwist_check(GroupRef G) {
  auto tw = build_fiber_F(G);
  auto un = build_untwisted_F(G);
  const FiniteGroup& g = *G;
  auto D = [&](const Morphism& m) {
    return Morphism{m.src, m.dst, g.mul(g.mul(g.invof(m.dst), m.val), m.src)};
  };
  UntwistReport r;
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            Morphism x{a, b, u}, y{b, c, v};
            ++r.functorial.checks;
            if (D(tw.compose(y, x)) != un.compose(D(y), D(x)))
              r.functorial.record({a, b, c, u, v});
          }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
              Morphism x{a, b, u}, y{a2, b2, v};
              ++r.monoidal.checks;
              if (D(tw.tensor(x, y)) != un.tensor(D(x), D(y)))
                r.monoidal.record({a, b, a2, b2, u, v});
            }
  r.bijective = true;
  for (int a = 0; a < n && r.bijective; ++a)
    for (int b = 0; b < n && r.bijective; ++b) {
      std::vector<char> hit(n, 0);
      for (int u = 0; u < n; ++u) {
        int im = D({a, b, u}).val;
        if (hit[im]) { r.bijective = false; break; }
        hit[im] = 1;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Families of arrows over base tuples and their parity boundaries.

// A p-family assigns an arrow of the target to every p-tuple of base
// elements.  Faces: the outer ones whisker with an identity (tensored in
// `outer`, which is the host itself except for the commutativity check,
// where it is the opposite host), the inner ones reindex through the base
// product.  The parity boundary composes even faces ascending / odd faces
// descending, so its value agrees with the group-side parity boundary.
inline std::vector<Morphism> cat_parity_boundary(
    const FiniteCategory& host, const FiniteCategory& outer, const FiniteGroup& base, int p,
    const std::vector<Morphism>& fam, const std::vector<int>& obj_dst,
    const std::vector<int>& obj_src, int sign) {
  if (p < 1 || p + 1 > kMaxDegree + 1) fail(errc::degree_out_of_range, "family degree out of range");
  const int n = base.n;
  std::vector<Morphism> out(tuple_count(n, p + 1));
  std::vector<int> order;
  if (sign > 0) {
    for (int i = 0; i <= p + 1; i += 2) order.push_back(i);
  } else {
    for (int i = (p + 1) % 2 ? p + 1 : p; i >= 1; i -= 2) order.push_back(i);
  }
  int args[kMaxDegree + 2], sub[kMaxDegree + 1];
  for (long long t = 0; t < static_cast<long long>(out.size()); ++t) {
    unpack_tuple(t, n, p + 1, args);
    bool first = true;
    Morphism acc;
    for (int i : order) {
      Morphism face;
      if (i == 0) {
        for (int k = 0; k < p; ++k) sub[k] = args[k + 1];
        face = outer.tensor(outer.identity(obj_dst[args[0]]), fam[pack_tuple(sub, n, p)]);
      } else if (i <= p) {
        for (int k = 0; k < i - 1; ++k) sub[k] = args[k];
        sub[i - 1] = base.mul(args[i - 1], args[i]);
        for (int k = i; k < p; ++k) sub[k] = args[k + 1];
        face = fam[pack_tuple(sub, n, p)];
      } else {
        face = outer.tensor(fam[pack_tuple(args, n, p)], outer.identity(obj_src[args[p]]));
      }
      acc = first ? face : host.compose(acc, face);
      first = false;
    }
    out[t] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Comparison cells of the functor attached to a plain function s: G -> N.

// F sends an object a to s(a) and every arrow a -> b to the vector
// s(a) -> s(b); the comparison cell Phi(a,b) is the vector from s(ab) to
// s(a)s(b).  F is strict exactly when s is a group morphism.
struct FunctorReport {
  bool functorial = false;       // images of composable arrows compose
  bool natural = false;          // comparison cells against image arrows
  bool coherent = false;         // the two reassociation routes agree
  bool strict = false;
  bool s_is_morphism = false;
  bool strict_iff_morphism = false;
  long long checks = 0;
};

inline FunctorReport functor_of_function(GroupRef G, GroupRef N, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != G->n) fail(errc::degree_mismatch, "need one value per object");
  for (int v : s)
    if (v < 0 || v >= N->n) fail(errc::target_mismatch, "value out of range");
  if (s[0] != 0) fail(errc::not_normalized, "the identity must map to the identity");
  auto D = build_fiber_F(N);
  const FiniteGroup& g = *G;
  auto F = [&](int a, int b) { return D.vector(s[a], s[b]); };
  auto Phi = [&](int a, int b) { return D.vector(s[g.mul(a, b)], N->mul(s[a], s[b])); };

  FunctorReport r;
  r.functorial = true;
  for (int a = 0; a < g.n && r.functorial; ++a)
    for (int b = 0; b < g.n && r.functorial; ++b)
      for (int c = 0; c < g.n; ++c) {
        ++r.checks;
        if (D.compose(F(b, c), F(a, b)) != F(a, c)) { r.functorial = false; break; }
      }
  r.natural = true;
  for (int a = 0; a < g.n && r.natural; ++a)
    for (int b = 0; b < g.n && r.natural; ++b)
      for (int a2 = 0; a2 < g.n && r.natural; ++a2)
        for (int b2 = 0; b2 < g.n; ++b2) {
          // Arrows x: a -> a2, y: b -> b2; their images depend only on the
          // endpoints, so one representative per pair of hom-sets suffices.
          ++r.checks;
          auto lhs = D.compose(D.tensor(F(a, a2), F(b, b2)), Phi(a, b));
          auto rhs = D.compose(Phi(a2, b2), F(g.mul(a, b), g.mul(a2, b2)));
          if (lhs != rhs) { r.natural = false; break; }
        }
  r.coherent = true;
  for (int a = 0; a < g.n && r.coherent; ++a)
    for (int b = 0; b < g.n && r.coherent; ++b)
      for (int c = 0; c < g.n; ++c) {
        ++r.checks;
        auto left = D.compose(D.tensor(Phi(a, b), D.identity(s[c])), Phi(g.mul(a, b), c));
        auto right = D.compose(D.tensor(D.identity(s[a]), Phi(b, c)), Phi(a, g.mul(b, c)));
        if (left != right) { r.coherent = false; break; }
      }
  r.strict = true;
  r.s_is_morphism = true;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      if (Phi(a, b) != D.identity(s[g.mul(a, b)])) r.strict = false;
      if (s[g.mul(a, b)] != N->mul(s[a], s[b])) r.s_is_morphism = false;
    }
  r.strict_iff_morphism = r.strict == r.s_is_morphism;
  return r;
}

// Dictionary between the two boundary computations: the comparison cells of
// F(s) form a 2-family whose categorical parity boundaries have exactly the
// values of the group-side boundaries of f(a,b) = s(a) s(b) s(ab)^{-1} under
// the conjugation quasiaction of s.
inline bool section_boundary_dictionary(GroupRef G, GroupRef N, const std::vector<int>& s) {
  auto D = build_fiber_F(N);
  const FiniteGroup& g = *G;
  std::vector<Morphism> fam(tuple_count(g.n, 2));
  Cochain c;
  c.L.G = G;
  c.L.N = N;
  c.L.maps.resize(g.n);
  for (int a = 0; a < g.n; ++a) c.L.maps[a] = conjugation_map(*N, s[a]);
  c.p = 2;
  c.f.resize(fam.size());
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      long long t = a * g.n + b;
      fam[t] = D.vector(s[g.mul(a, b)], N->mul(s[a], s[b]));
      c.f[t] = fam[t].val;
    }
  for (int sign : {+1, -1}) {
    auto cat = cat_parity_boundary(D, D, g, 2, fam, s, s, sign);
    auto grp = parity_boundary(c, sign);
    for (std::size_t t = 0; t < grp.size(); ++t)
      if (cat[t].val != grp[t]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure cells on a host category: naturality + parity cocycle.

// Endo-cells phi_{a,b} on the tensor objects: natural against every pair of
// arrows and a parity cocycle for the host tensor.
inline CheckReport monoidal_structure_2cocycle_check(const FiniteCategory& host,
                                                     const std::vector<int>& vals) {
  if (host.kind != CatKind::fiber_twisted && host.kind != CatKind::fiber_untwisted)
    fail(errc::bad_input, "structure cells live on the fiber-kind hosts");
  const FiniteGroup& g = *host.objects;
  if (static_cast<long long>(vals.size()) != tuple_count(g.n, 2))
    fail(errc::degree_mismatch, "need one cell per object pair");
  std::vector<Morphism> fam(vals.size());
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      int o = host.tensor_obj(a, b);
      fam[a * g.n + b] = {o, o, vals[a * g.n + b]};
    }
  CheckReport r;
  const int v = host.values->n;
  for (int a = 0; a < g.n; ++a)
    for (int a2 = 0; a2 < g.n; ++a2)
      for (int b = 0; b < g.n; ++b)
        for (int b2 = 0; b2 < g.n; ++b2)
          for (int u = 0; u < v; ++u)
            for (int w = 0; w < v; ++w) {
              Morphism x{a, a2, u}, y{b, b2, w};
              auto t = host.tensor(x, y);
              ++r.checks;
              if (host.compose(fam[a2 * g.n + b2], t) != host.compose(t, fam[a * g.n + b]))
                r.record({a, a2, b, b2, u, w});
            }
  std::vector<int> ids(g.n);
  for (int a = 0; a < g.n; ++a) ids[a] = a;
  auto plus = cat_parity_boundary(host, host, g, 2, fam, ids, ids, +1);
  auto minus = cat_parity_boundary(host, host, g, 2, fam, ids, ids, -1);
  for (long long t = 0; t < static_cast<long long>(plus.size()); ++t) {
    ++r.checks;
    if (!(plus[t] == minus[t])) {
      int args[3];
      unpack_tuple(t, g.n, 3, args);
      r.record({args[0], args[1], args[2]});
    }
  }
  return r;
}

// Commutativity cells sigma_{a,b}: a (x) b -> a (x)op b, natural against
// pairs of arrows with the opposite tensor on the target side, and a parity
// cocycle whose outer faces whisker through the opposite host.
inline CheckReport commutativity_constraint_check(const FiniteCategory& host,
                                                  const std::vector<int>& vals) {
  if (host.kind != CatKind::fiber_twisted && host.kind != CatKind::fiber_untwisted)
    fail(errc::bad_input, "commutativity cells live on the fiber-kind hosts");
  auto op = make_opposite(host);
  const FiniteGroup& g = *host.objects;
  if (static_cast<long long>(vals.size()) != tuple_count(g.n, 2))
    fail(errc::degree_mismatch, "need one cell per object pair");
  std::vector<Morphism> fam(vals.size());
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      fam[a * g.n + b] = {host.tensor_obj(a, b), op.tensor_obj(a, b), vals[a * g.n + b]};
  CheckReport r;
  const int v = host.values->n;
  for (int a = 0; a < g.n; ++a)
    for (int a2 = 0; a2 < g.n; ++a2)
      for (int b = 0; b < g.n; ++b)
        for (int b2 = 0; b2 < g.n; ++b2)
          for (int u = 0; u < v; ++u)
            for (int w = 0; w < v; ++w) {
              Morphism x{a, a2, u}, y{b, b2, w};
              ++r.checks;
              if (host.compose(fam[a2 * g.n + b2], host.tensor(x, y)) !=
                  host.compose(op.tensor(x, y), fam[a * g.n + b]))
                r.record({a, a2, b, b2, u, w});
            }
  std::vector<int> ids(g.n);
  for (int a = 0; a < g.n; ++a) ids[a] = a;
  auto plus = cat_parity_boundary(host, op, g, 2, fam, ids, ids, +1);
  auto minus = cat_parity_boundary(host, op, g, 2, fam, ids, ids, -1);
  for (long long t = 0; t < static_cast<long long>(plus.size()); ++t) {
    ++r.checks;
    if (!(plus[t] == minus[t])) {
      int args[3];
      unpack_tuple(t, g.n, 3, args);
      r.record({args[0], args[1], args[2]});
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Arrows between section functors of one extension.

// Two set-sections s_i(g) = (sigma_i(g), g) of an associative extension give
// monoidal functors into the bundle category; the connecting arrows
// gamma_g: s_1(g) -> s_2(g) have a parity boundary computable three ways,
// which must agree, and the boundary square pins the two section defects
// against each other (the weak-equivalence relation).
struct SectionArrowReport {
  bool routes_agree = false;   // direct tensor / whisker composite / group formula
  bool square = false;         // f2 . gamma(ab) = d+ gamma . f1
  bool weak_relation = false;  // the same square through the cochain API
  long long checks = 0;
};

inline SectionArrowReport monoidal_morphism_check(const QuasiExtension& E,
                                                  const std::vector<int>& sigma1,
                                                  const std::vector<int>& sigma2) {
  if (!E.associative) fail(errc::not_associative, "section functors need an associative extension");
  const FiniteGroup& G = E.G();
  const FiniteGroup& N = E.N();
  if (static_cast<int>(sigma1.size()) != G.n || static_cast<int>(sigma2.size()) != G.n)
    fail(errc::degree_mismatch, "sections need one fiber value per base element");
  if (sigma1[0] != 0 || sigma2[0] != 0) fail(errc::not_normalized, "sections must lift the identity");
  auto C = build_bundle_C(E);
  const auto& B = *C.ext;
  auto s1 = [&](int g) { return B.id_of(sigma1[g], g); };
  auto s2 = [&](int g) { return B.id_of(sigma2[g], g); };
  auto gam = [&](int g) { return C.vector(s1(g), s2(g)); };
  auto defect = [&](auto&& s) {
    std::vector<int> f(tuple_count(G.n, 2));
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        f[a * G.n + b] = B.vector_between(s(G.mul(a, b)), B.mul(s(a), s(b)));
    return f;
  };
  auto f1 = defect(s1), f2 = defect(s2);

  SectionArrowReport r;
  r.routes_agree = true;
  r.square = true;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) {
      ++r.checks;
      const int ab = G.mul(a, b);
      auto direct = C.tensor(gam(a), gam(b));
      auto whisker = C.compose(C.tensor(C.identity(s2(a)), gam(b)),
                               C.tensor(gam(a), C.identity(s1(b))));
      // Group formula: L'_a(gamma(b)) . gamma(a) with L' the conjugation
      // action of the second section.
      auto lp = B.conjugation_images(s2(a));
      const int group_val = N.mul(lp[gam(b).val], gam(a).val);
      if (!(direct == whisker) || direct.val != group_val) r.routes_agree = false;
      const int lhs = N.mul(f2[a * G.n + b], gam(ab).val);
      const int rhs = N.mul(direct.val, f1[a * G.n + b]);
      if (lhs != rhs) r.square = false;
    }

  // The same statement through the cochain layer: the section defects are
  // weakly cohomologous via the connecting values.
  Cochain c1, c2;
  c1.L.G = c2.L.G = E.data.L.G;
  c1.L.N = c2.L.N = E.data.L.N;
  c1.L.maps.resize(G.n);
  c2.L.maps.resize(G.n);
  for (int g = 0; g < G.n; ++g) {
    c1.L.maps[g] = B.conjugation_images(s1(g));
    c2.L.maps[g] = B.conjugation_images(s2(g));
  }
  c1.p = c2.p = 2;
  c1.f = f1;
  c2.f = f2;
  std::vector<int> gamma(G.n);
  for (int g = 0; g < G.n; ++g) gamma[g] = gam(g).val;
  r.weak_relation = is_weak_cohomologous(c1, c2, gamma);
  return r;
}

// ---------------------------------------------------------------------------
// Pentagon sweep for the associator of a quasi-extension.

struct PentagonReport {
  long long checks = 0;
  long long violations = 0;
  long long route_mismatches = 0;  // closed formula vs magma table
  std::array<int, 4> first_witness{-1, -1, -1, -1};
  bool pass() const { return violations == 0 && route_mismatches == 0; }
};

// Seeded sweep: the k-th quadruple depends only on (seed, k).  For every
// quadruple the two reassociation paths around the pentagon must bound the
// same defect, with the leading factor twisted by conjugation of the first
// element; each associator value is also cross-checked against the closed
// formula.
inline PentagonReport pentagon_check(const QuasiExtension& E, long long samples,
                                     std::uint64_t seed) {
  PentagonReport r;
  const int sz = E.size();
  const FiniteGroup& N = E.N();
  for (long long k = 0; k < samples; ++k) {
    int e[4];
    for (int i = 0; i < 4; ++i)
      e[i] = static_cast<int>(mix64(seed, 4 * static_cast<std::uint64_t>(k) + i) % sz);
    auto tilde = [&](int x, int y, int z) {
      const int table = associator_tilde(E, x, y, z);
      if (table != associator_tilde_formula(E, x, y, z)) ++r.route_mismatches;
      return table;
    };
    auto ltw = E.conjugation_images(e[0]);
    const int plus = N.mul(N.mul(ltw[tilde(e[1], e[2], e[3])], tilde(e[0], E.mul(e[1], e[2]), e[3])),
                           tilde(e[0], e[1], e[2]));
    const int minus = N.mul(tilde(e[0], e[1], E.mul(e[2], e[3])), tilde(E.mul(e[0], e[1]), e[2], e[3]));
    ++r.checks;
    if (plus != minus) {
      ++r.violations;
      if (r.first_witness[0] < 0) r.first_witness = {e[0], e[1], e[2], e[3]};
    }
  }
  return r;
}

}  // namespace parityc
