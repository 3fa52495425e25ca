#pragma once

// Quasi-extensions: the magma on fiber x base pairs attached to a degree-2
// cochain (f, L),
//   (n1, g1) . (n2, g2) = (n1 . L_{g1}(n2) . f(g1, g2), g1 g2),
// together with right inverses, vertical vectors, the associator defect,
// the canonical-section roundtrip, and the split/section machinery.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "census.hpp"
#include "cochain.hpp"
#include "error.hpp"
#include "group.hpp"
#include "integrability.hpp"

namespace parityc {

enum class FiberMode { holonomy, full };

struct QuasiExtension {
  Cochain data;                 // degree 2; carries G, N, L, f
  FiberMode mode = FiberMode::holonomy;
  std::vector<int> fiber;       // ambient members of the fiber subgroup, sorted
  std::vector<int> fiber_local; // ambient -> local index or -1
  int F = 0, nG = 0;
  std::vector<int> prod;        // (F*nG)^2 magma table over pair ids
  bool associative = true;
  std::array<int, 3> assoc_witness{-1, -1, -1};

  const FiniteGroup& G() const { return data.G(); }
  const FiniteGroup& N() const { return data.N(); }
  int size() const { return F * nG; }

  // Pair ids: local fiber index * |G| + base element; (1,1) is id 0.
  int id_of(int n_ambient, int g) const {
    if (n_ambient < 0 || n_ambient >= N().n || fiber_local[n_ambient] < 0)
      fail(errc::fiber_mismatch, "element is not in the fiber", {n_ambient});
    return fiber_local[n_ambient] * nG + g;
  }
  int npart(int e) const { return fiber[e / nG]; }
  int gpart(int e) const { return e % nG; }
  int mul(int e1, int e2) const { return prod[e1 * size() + e2]; }

  int section(int g) const { return id_of(0, g); }
  int pi(int e) const { return gpart(e); }

  // e . rinv(e) = (1,1); a left inverse is not promised.
  int right_inverse(int e) const {
    const int n = npart(e), g = gpart(e);
    const int ginv = G().invof(g);
    auto linv = invert_images(data.L.at(g));
    const int fpair = data.f[g * nG + ginv];
    return id_of(linv[N().mul(N().invof(n), N().invof(fpair))], ginv);
  }

  // Vertical difference: both ends must sit over the same base element.
  int vector_between(int e1, int e2) const {
    if (gpart(e1) != gpart(e2))
      fail(errc::fiber_mismatch, "vector endpoints lie over different base elements",
           {e1, e2});
    return N().mul(npart(e2), N().invof(npart(e1)));
  }

  // Conjugation by e = (n, g) as an ambient map: C_n . L_g.
  std::vector<int> conjugation_images(int e) const {
    return compose_images(conjugation_map(N(), npart(e)), data.L.at(gpart(e)));
  }
};

// Builds the magma over the requested fiber.  The fiber must contain the
// image of f and be closed under every L_g (the holonomy subgroup is the
// smallest choice); associativity is recorded, not required.
inline QuasiExtension build_quasi_extension(const Cochain& c, FiberMode mode) {
  validate_cochain(c);
  if (c.p != 2) fail(errc::degree_mismatch, "extensions are attached to degree-2 cochains");
  QuasiExtension E;
  E.data = c;
  E.mode = mode;
  if (mode == FiberMode::full) {
    E.fiber.resize(c.N().n);
    for (int x = 0; x < c.N().n; ++x) E.fiber[x] = x;
  } else {
    E.fiber = holonomy_group(c).members;
  }
  E.fiber_local.assign(c.N().n, -1);
  for (std::size_t i = 0; i < E.fiber.size(); ++i) E.fiber_local[E.fiber[i]] = static_cast<int>(i);
  E.F = static_cast<int>(E.fiber.size());
  E.nG = c.G().n;
  for (int v : c.f)
    if (E.fiber_local[v] < 0) fail(errc::fiber_mismatch, "fiber does not contain the image of f", {v});
  for (int g = 0; g < E.nG; ++g)
    for (int m : E.fiber)
      if (E.fiber_local[c.L.apply(g, m)] < 0)
        fail(errc::fiber_mismatch, "fiber is not closed under the quasiaction", {g, m});

  const int sz = E.size();
  E.prod.resize(static_cast<std::size_t>(sz) * sz);
  const FiniteGroup& N = c.N();
  const FiniteGroup& G = c.G();
  for (int e1 = 0; e1 < sz; ++e1) {
    const int n1 = E.npart(e1), g1 = E.gpart(e1);
    for (int e2 = 0; e2 < sz; ++e2) {
      const int n2 = E.npart(e2), g2 = E.gpart(e2);
      const int n = N.mul(N.mul(n1, c.L.apply(g1, n2)), c.f[g1 * E.nG + g2]);
      E.prod[e1 * sz + e2] = E.id_of(n, G.mul(g1, g2));
    }
  }
  for (int a = 0; a < sz && E.associative; ++a)
    for (int b = 0; b < sz && E.associative; ++b)
      for (int cc = 0; cc < sz; ++cc)
        if (E.mul(E.mul(a, b), cc) != E.mul(a, E.mul(b, cc))) {
          E.associative = false;
          E.assoc_witness = {a, b, cc};
          break;
        }
  return E;
}

// The associator defect as a vertical vector, two ways: from the magma table
// and from the closed two-track formula.  They must agree everywhere.
inline int associator_tilde(const QuasiExtension& E, int e1, int e2, int e3) {
  return E.vector_between(E.mul(E.mul(e1, e2), e3), E.mul(e1, E.mul(e2, e3)));
}

inline int associator_tilde_formula(const QuasiExtension& E, int e1, int e2, int e3) {
  const FiniteGroup& N = E.N();
  const FiniteGroup& G = E.G();
  const auto& L = E.data.L;
  const auto& f = E.data.f;
  const int nG = E.nG;
  const int n1 = E.npart(e1), g1 = E.gpart(e1);
  const int n2 = E.npart(e2), g2 = E.gpart(e2);
  const int n3 = E.npart(e3), g3 = E.gpart(e3);
  const int g12 = G.mul(g1, g2), g23 = G.mul(g2, g3);
  int x = N.mul(N.mul(N.mul(N.mul(n1, L.apply(g1, n2)), f[g1 * nG + g2]), L.apply(g12, n3)),
                f[g12 * nG + g3]);
  int y = N.mul(N.mul(N.mul(N.mul(n1, L.apply(g1, n2)), L.apply(g1, L.apply(g2, n3))),
                      L.apply(g1, f[g2 * nG + g3])),
                f[g1 * nG + g23]);
  return N.mul(y, N.invof(x));
}

// ---------------------------------------------------------------------------
// Degree-3 lift: alpha = delta f pulled back to the extension.

struct ThreeCocycleReport {
  Cochain alpha;                    // delta f, degree 3 over G
  bool integrable = false;          // compatibility on the holonomy fiber
  bool alpha_central = false;       // values centralize the holonomy subgroup
  bool pentagon_over_extension = false;  // pulled-back table is a parity cocycle
  bool factors_through_base = false;     // alpha~(e1,e2,e3) = alpha(pi e1, pi e2, pi e3)
  bool alpha_parity_cocycle = false;     // delta_L alpha is trivial over G
  std::array<int, 3> factor_witness{-1, -1, -1};
};

// Pulls the associator of the holonomy-fiber extension back to a degree-3
// table over the extension itself, with the conjugation quasiaction
// L~_{(n,g)} = C_n . L_g, and checks it is always a parity cocycle there.
// When f is integrable and alpha takes central values (relative to the
// fiber), the table factors through the base projection; otherwise the
// first failing triple is reported.
inline ThreeCocycleReport three_cocycle_check(const Cochain& c,
                                              long long budget = kDefaultBudget) {
  if (c.p != 2) fail(errc::degree_mismatch, "the degree-3 lift starts from a 2-cochain");
  ThreeCocycleReport r;
  r.alpha = delta(c);
  auto E = build_quasi_extension(c, FiberMode::holonomy);
  auto hol = holonomy_group(c);
  r.integrable = mc_check(c.f, c.L, hol.members);
  {
    auto cen = centralizer(c.N(), hol.members);
    std::vector<char> in(c.N().n, 0);
    for (int z : cen) in[z] = 1;
    r.alpha_central = true;
    for (int v : r.alpha.f)
      if (!in[v]) { r.alpha_central = false; break; }
  }
  r.alpha_parity_cocycle = is_cocycle(r.alpha);

  const int sz = E.size();
  if (static_cast<long long>(sz) * sz * sz * sz > budget)
    fail(errc::budget_exceeded, "extension too large for the degree-3 sweep");
  // alpha~ as a table over extension triples (table route).
  std::vector<int> at(static_cast<std::size_t>(sz) * sz * sz);
  for (int e1 = 0; e1 < sz; ++e1)
    for (int e2 = 0; e2 < sz; ++e2)
      for (int e3 = 0; e3 < sz; ++e3)
        at[(e1 * sz + e2) * static_cast<std::size_t>(sz) + e3] = associator_tilde(E, e1, e2, e3);
  auto atv = [&](int a, int b, int cc) {
    return at[(a * sz + b) * static_cast<std::size_t>(sz) + cc];
  };
  const FiniteGroup& N = E.N();
  r.pentagon_over_extension = true;
  for (int e1 = 0; e1 < sz && r.pentagon_over_extension; ++e1) {
    auto ltw = E.conjugation_images(e1);
    for (int e2 = 0; e2 < sz && r.pentagon_over_extension; ++e2)
      for (int e3 = 0; e3 < sz; ++e3) {
        bool stop = false;
        for (int e4 = 0; e4 < sz; ++e4) {
          const int plus = N.mul(N.mul(ltw[atv(e2, e3, e4)], atv(e1, E.mul(e2, e3), e4)),
                                 atv(e1, e2, e3));
          const int minus = N.mul(atv(e1, e2, E.mul(e3, e4)), atv(E.mul(e1, e2), e3, e4));
          if (plus != minus) { r.pentagon_over_extension = false; stop = true; break; }
        }
        if (stop) break;
      }
  }
  r.factors_through_base = true;
  const int nG = E.nG;
  for (int e1 = 0; e1 < sz && r.factors_through_base; ++e1)
    for (int e2 = 0; e2 < sz && r.factors_through_base; ++e2)
      for (int e3 = 0; e3 < sz; ++e3) {
        const long long pos =
            (static_cast<long long>(E.gpart(e1)) * nG + E.gpart(e2)) * nG + E.gpart(e3);
        if (atv(e1, e2, e3) != r.alpha.f[pos]) {
          r.factors_through_base = false;
          r.factor_witness = {e1, e2, e3};
          break;
        }
      }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical section roundtrip: rebuild (f, L) from the magma alone.

struct RoundtripReport {
  bool l_recovered = false;  // conjugation by the canonical section, on the fiber
  bool f_recovered = false;  // vectors from s(gh) to s(g)s(h)
  bool associative = false;
  bool exact() const { return l_recovered && f_recovered; }
};

inline RoundtripReport canonical_roundtrip(const Cochain& c, FiberMode mode) {
  auto E = build_quasi_extension(c, mode);
  if (!mc_check(c.f, c.L, E.fiber))
    fail(errc::not_integrable, "cochain is not integrable on the chosen fiber");
  RoundtripReport r;
  r.associative = E.associative;
  r.l_recovered = true;
  for (int g = 0; g < E.nG && r.l_recovered; ++g) {
    const int sg = E.section(g);
    for (int m : E.fiber) {
      // (s(g) . (m,1)) . s(g)* lands back in the fiber over 1 at L_g(m).
      const int lifted = E.mul(E.mul(sg, E.id_of(m, 0)), E.right_inverse(sg));
      if (E.gpart(lifted) != 0 || E.npart(lifted) != c.L.apply(g, m)) {
        r.l_recovered = false;
        break;
      }
    }
  }
  r.f_recovered = true;
  for (int g = 0; g < E.nG && r.f_recovered; ++g)
    for (int h = 0; h < E.nG; ++h) {
      const int gh = E.G().mul(g, h);
      const int v = E.vector_between(E.section(gh), E.mul(E.section(g), E.section(h)));
      if (v != c.f[g * E.nG + h]) { r.f_recovered = false; break; }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Semidirect products and split comparisons.

struct SemidirectResult {
  GroupRef group;                        // validated product group
  std::vector<std::array<int, 2>> pairs; // element -> (fiber, base)
};

inline SemidirectResult semidirect_product(const Quasiaction& L) {
  validate_quasiaction(L);
  if (!is_action(L)) fail(errc::not_an_action, "semidirect products need a genuine action");
  Cochain c = identity_cochain(L, 2);
  auto E = build_quasi_extension(c, FiberMode::full);
  const int sz = E.size();
  std::vector<std::vector<int>> rows(sz, std::vector<int>(sz));
  std::vector<std::string> labels(sz);
  SemidirectResult r;
  for (int e = 0; e < sz; ++e) {
    labels[e] = "(" + L.N->labels[E.npart(e)] + "," + L.G->labels[E.gpart(e)] + ")";
    r.pairs.push_back({E.npart(e), E.gpart(e)});
    for (int e2 = 0; e2 < sz; ++e2) rows[e][e2] = E.mul(e, e2);
  }
  r.group = validate_group(L.N->name + ":" + L.G->name, std::move(rows), std::move(labels));
  return r;
}

// Compares the extension of f = delta gamma against the plain semidirect
// product: the gauged section s'(g) = (gamma(g)^{-1}, g) splits, and
// transporting along it, phi(n, g) = (n gamma(g), g), intertwines the two
// products.
struct SplitIsoReport {
  bool sprime_splits = false;      // parity defect of s' is the identity pair
  bool phi_multiplicative = false;
  bool phi_bijective = false;
  bool lprime_is_action = false;   // C_{gamma(g)}^{-1} . L_g
  bool f_is_cocycle = false;
  long long products_checked = 0;
};

inline SplitIsoReport split_iso_phi(const Cochain& c, const std::vector<int>& gamma) {
  if (c.p != 2) fail(errc::degree_mismatch, "split comparison starts from a 2-cochain");
  const FiniteGroup& G = c.G();
  const FiniteGroup& N = c.N();
  if (static_cast<int>(gamma.size()) != G.n)
    fail(errc::degree_mismatch, "witness must be a 1-table");
  {
    Cochain w;
    w.L = c.L;
    w.p = 1;
    w.f = gamma;
    validate_cochain(w);
    auto d = delta(w);
    if (d.f != c.f) fail(errc::witness_invalid, "f is not the parity defect of the witness");
  }
  auto E = build_quasi_extension(c, FiberMode::full);

  // L'_g = C_{gamma(g)}^{-1} . L_g, the action seen by the gauged section.
  Quasiaction Lp;
  Lp.G = c.L.G;
  Lp.N = c.L.N;
  Lp.maps.resize(G.n);
  for (int g = 0; g < G.n; ++g)
    Lp.maps[g] = compose_images(invert_images(conjugation_map(N, gamma[g])), c.L.maps[g]);

  SplitIsoReport r;
  r.f_is_cocycle = is_cocycle(c);
  r.lprime_is_action = is_action(Lp);

  auto sp = [&](int g) { return E.id_of(N.invof(gamma[g]), g); };
  r.sprime_splits = true;
  for (int a = 0; a < G.n && r.sprime_splits; ++a)
    for (int b = 0; b < G.n; ++b) {
      // d+ s' . (d- s')^{-1} computed inside the magma.
      const int defect = E.mul(E.mul(sp(a), sp(b)), E.right_inverse(sp(G.mul(a, b))));
      if (defect != 0) { r.sprime_splits = false; break; }
    }

  Cochain trivial = identity_cochain(Lp, 2);
  auto Ep = build_quasi_extension(trivial, FiberMode::full);
  // (n, g) = (n gamma(g), 0) . s'(g), so transporting along s' sends (n, g)
  // to the pair with fiber part n gamma(g).
  auto phi = [&](int e) { return Ep.id_of(N.mul(E.npart(e), gamma[E.gpart(e)]), E.gpart(e)); };
  std::vector<char> hit(Ep.size(), 0);
  r.phi_bijective = true;
  for (int e = 0; e < E.size(); ++e) {
    int im = phi(e);
    if (hit[im]) { r.phi_bijective = false; break; }
    hit[im] = 1;
  }
  r.phi_multiplicative = true;
  for (int e1 = 0; e1 < E.size() && r.phi_multiplicative; ++e1)
    for (int e2 = 0; e2 < E.size(); ++e2) {
      ++r.products_checked;
      if (phi(E.mul(e1, e2)) != Ep.mul(phi(e1), phi(e2))) {
        r.phi_multiplicative = false;
        break;
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// Splittings of a genuine group extension E by a normal subgroup.

struct SplittingsReport {
  SubgroupView fiber;
  QuotientView quotient;
  std::vector<std::vector<int>> sections;  // morphic sections, lex order
  std::vector<int> class_of;               // section -> class id
  long long class_count = 0;
  std::vector<int> class_reps;             // lex-least section index per class
  long long h1 = 0;                        // independent count over the quotient action
};

// Enumerates morphic sections of E ->> E/N, classifies them up to fiber
// conjugation, and cross-counts the classes against the degree-1 census for
// the conjugation action of the quotient on the fiber.
inline SplittingsReport classify_splittings(GroupRef E, const std::vector<int>& normal_members,
                                            long long budget = kDefaultBudget) {
  SplittingsReport r;
  r.fiber = materialize_subgroup(E, normal_members);
  r.quotient = quotient_group(*E, r.fiber.members);
  const int q = r.quotient.group->n;

  std::vector<std::vector<int>> coset_members(q);
  for (int x = 0; x < E->n; ++x) coset_members[r.quotient.coset_of[x]].push_back(x);

  long long space = 1;
  for (int i = 1; i < q; ++i) space *= static_cast<long long>(coset_members[i].size());
  if (space > budget)
    fail(errc::budget_exceeded, "section space has " + std::to_string(space) + " members");

  std::vector<int> pick(q, 0), s(q, 0);
  for (long long c = 0; c < space; ++c) {
    for (int i = 1; i < q; ++i) s[i] = coset_members[i][pick[i]];
    bool morphic = true;
    for (int i = 0; i < q && morphic; ++i)
      for (int j = 0; j < q; ++j)
        if (E->mul(s[i], s[j]) != s[r.quotient.group->mul(i, j)]) { morphic = false; break; }
    if (morphic) r.sections.push_back(s);
    int i = q;
    while (i > 1 && ++pick[i - 1] == static_cast<int>(coset_members[i - 1].size())) pick[--i] = 0;
  }
  if (r.sections.empty())
    fail(errc::no_splitting_found, "the extension admits no morphic section");

  // Classes under fiber conjugation s |-> n s n^{-1}.
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < r.sections.size(); ++i) index[r.sections[i]] = static_cast<int>(i);
  detail::UnionFind uf(static_cast<int>(r.sections.size()));
  for (std::size_t i = 0; i < r.sections.size(); ++i)
    for (int n : r.fiber.members) {
      std::vector<int> t(q);
      for (int j = 0; j < q; ++j) t[j] = E->conj(n, r.sections[i][j]);
      uf.unite(static_cast<int>(i), index.at(t));  // conjugates are again sections
    }
  r.class_of.assign(r.sections.size(), -1);
  std::map<int, int> roots;
  for (std::size_t i = 0; i < r.sections.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto [it, fresh] = roots.try_emplace(root, static_cast<int>(roots.size()));
    r.class_of[i] = it->second;
    if (fresh) r.class_reps.push_back(static_cast<int>(i));
  }
  r.class_count = static_cast<long long>(roots.size());

  // Independent count: degree-1 classes for the conjugation action of the
  // quotient on the fiber through the lex-least section.
  Quasiaction L0;
  L0.G = r.quotient.group;
  L0.N = r.fiber.group;
  L0.maps.resize(q);
  const auto& s0 = r.sections.front();
  for (int i = 0; i < q; ++i) {
    std::vector<int> img(r.fiber.group->n);
    for (int m = 0; m < r.fiber.group->n; ++m)
      img[m] = r.fiber.to_local[E->conj(s0[i], r.fiber.members[m])];
    L0.maps[i] = std::move(img);
  }
  validate_quasiaction(L0);
  auto Z = enumerate_cocycles(L0, 1, budget);
  r.h1 = cocycle_classes(L0, 1, Z, budget).count;
  return r;
}

}  // namespace parityc
