#pragma once

// Integrability of a cochain (f, L): the holonomy subgroup generated by the
// image of f (closed under the quasiaction), the compatibility equation
//   L_a(L_b(n)) . f(a,b) = f(a,b) . L_ab(n)
// on that subgroup, and the battery of equivalent formulations for the
// defect of a 1-cochain.

#include <array>
#include <vector>

#include "cochain.hpp"
#include "error.hpp"
#include "group.hpp"

namespace parityc {

struct Holonomy {
  std::vector<int> image;    // distinct values of f, sorted
  std::vector<int> members;  // subgroup generated by the L-closure of the image
};

// Smallest L-invariant subgroup of N containing the image of f: close the
// image under every L_g, then generate.  The result is again L-invariant
// because automorphisms send subgroups to subgroups.
inline Holonomy holonomy_group(const Cochain& c) {
  const FiniteGroup& N = c.N();
  std::vector<char> in(N.n, 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  };
  push(0);
  for (int v : c.f) push(v);
  Holonomy h;
  for (int x = 0; x < N.n; ++x)
    if (in[x]) h.image.push_back(x);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (int g = 0; g < c.G().n; ++g) push(c.L.apply(g, work[i]));
  std::vector<int> seeds;
  for (int x = 0; x < N.n; ++x)
    if (in[x]) seeds.push_back(x);
  h.members = generated_subgroup(N, seeds);
  return h;
}

inline bool is_l_invariant(const Quasiaction& L, const std::vector<int>& members) {
  std::vector<char> in(L.N->n, 0);
  for (int m : members) in[m] = 1;
  for (int g = 0; g < L.G->n; ++g)
    for (int m : members)
      if (!in[L.apply(g, m)]) return false;
  return true;
}

// Compatibility of a degree-2 table with the quasiaction on a subgroup H:
// conjugation by f(a,b) must repair the multiplicativity defect of L there.
inline bool mc_check(const std::vector<int>& f2, const Quasiaction& L,
                     const std::vector<int>& H) {
  const FiniteGroup& G = *L.G;
  const FiniteGroup& N = *L.N;
  if (static_cast<long long>(f2.size()) != tuple_count(G.n, 2))
    fail(errc::degree_mismatch, "compatibility needs a table on G^2");
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) {
      const int fab = f2[a * G.n + b];
      const int ab = G.mul(a, b);
      for (int n : H)
        if (N.mul(L.apply(a, L.apply(b, n)), fab) != N.mul(fab, L.apply(ab, n)))
          return false;
    }
  return true;
}

// A cochain is integrable when its defect table satisfies the compatibility
// equation on its holonomy subgroup; for degree 2 the table is f itself, for
// lower degrees the defect is raised to degree 2 first.  The absolute flag
// demands compatibility on all of N instead.
inline bool is_integrable(const Cochain& c, bool absolute = false) {
  if (c.p > 2) fail(errc::degree_out_of_range, "integrability is defined for degrees 0..2");
  Cochain raised = c;
  while (raised.p < 2) raised = delta(raised);
  std::vector<int> H;
  if (absolute) {
    H.resize(c.N().n);
    for (int x = 0; x < c.N().n; ++x) H[x] = x;
  } else {
    H = holonomy_group(c).members;
  }
  return mc_check(raised.f, c.L, H);
}

// ---------------------------------------------------------------------------
// The defect of a 1-cochain, four ways.

// For a 1-cochain s with defect f = delta_L s, the following are equivalent
// formulations of "s is a crossed morphism up to inner correction", each
// checked on the holonomy subgroup I of s:
//   (1) f is a 2-cocycle (checked globally),
//   (2) the multiplicativity defect of L is conjugation by f:
//         (L_a . L_b . L_ab^{-1})(n) = f(a,b) n f(a,b)^{-1} on I,
//   (3) the same defect equals the composite of conjugations
//         (L_a C_{s(b)} L_a^{-1}) . C_{s(a)} . C_{s(ab)}^{-1} on I,
//   (4) gamma_a = C_{s(a)}^{-1} . L_a is multiplicative on I:
//         gamma_a . gamma_b = gamma_ab there.
struct DdsReport {
  bool defect_is_cocycle = false;
  bool defect_conjugates = false;
  bool conjugation_composite = false;
  bool corrected_is_morphism = false;
  bool agree() const {
    return defect_is_cocycle == defect_conjugates &&
           defect_conjugates == conjugation_composite &&
           conjugation_composite == corrected_is_morphism;
  }
  bool all() const { return defect_is_cocycle && agree(); }
};

inline DdsReport dds_battery(const Cochain& s) {
  if (s.p != 1) fail(errc::degree_mismatch, "battery takes a 1-cochain");
  const FiniteGroup& G = s.G();
  const FiniteGroup& N = s.N();
  const auto& L = s.L;
  Cochain f = delta(s);
  auto I = holonomy_group(s).members;

  DdsReport r;
  r.defect_is_cocycle = is_cocycle(f);

  r.defect_conjugates = true;
  r.conjugation_composite = true;
  r.corrected_is_morphism = true;
  for (int a = 0; a < G.n && (r.defect_conjugates || r.conjugation_composite); ++a)
    for (int b = 0; b < G.n; ++b) {
      const int ab = G.mul(a, b);
      const int fab = f.f[a * G.n + b];
      // Composite of conjugations, as image tables on N.
      auto inner = compose_images(
          compose_images(L.at(a), compose_images(conjugation_map(N, s.f[b]),
                                                 invert_images(L.at(a)))),
          compose_images(conjugation_map(N, s.f[a]),
                         invert_images(conjugation_map(N, s.f[ab]))));
      auto defect = compose_images(compose_images(L.at(a), L.at(b)), invert_images(L.at(ab)));
      for (int n : I) {
        if (defect[n] != N.mul(N.mul(fab, n), N.invof(fab))) r.defect_conjugates = false;
        if (defect[n] != inner[n]) r.conjugation_composite = false;
      }
    }
  for (int a = 0; a < G.n && r.corrected_is_morphism; ++a)
    for (int b = 0; b < G.n && r.corrected_is_morphism; ++b) {
      const int ab = G.mul(a, b);
      auto ga = compose_images(invert_images(conjugation_map(N, s.f[a])), L.at(a));
      auto gb = compose_images(invert_images(conjugation_map(N, s.f[b])), L.at(b));
      auto gab = compose_images(invert_images(conjugation_map(N, s.f[ab])), L.at(ab));
      auto comp = compose_images(ga, gb);
      for (int n : I)
        if (comp[n] != gab[n]) { r.corrected_is_morphism = false; break; }
    }
  return r;
}

}  // namespace parityc
