#pragma once

// Named verification suites.  Every suite is deterministic: randomness only
// enters through (seed, index)-keyed draws, enumeration orders are fixed,
// and the emitted detail contains no timing, host, or shard information, so
// reports are byte-identical across runs and shard counts.

#include <cstdint>
#include <string>
#include <vector>

#include "category.hpp"
#include "census.hpp"
#include "cochain.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "integrability.hpp"
#include "io.hpp"
#include "rng.hpp"

namespace parityc {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long long checks = 0;
  std::vector<std::string> failures;  // bounded witness notes
  ojson detail = ojson::object();
};

namespace detail {

inline void expect(SuiteResult& r, bool ok, const std::string& what) {
  ++r.checks;
  if (!ok) {
    r.pass = false;
    if (r.failures.size() < 8) r.failures.push_back(what);
  }
}

// The small catalog: every builtin group of order at most four.
inline std::vector<GroupRef> small_catalog() {
  std::vector<GroupRef> out;
  for (const char* name : {"trivial", "cyclic:2", "cyclic:3", "cyclic:4", "klein"})
    out.push_back(builtin_group(name));
  return out;
}

// Normalized value tables for degree-p cochains under L: the whole space
// when it has at most 512 members, otherwise the identity table plus 64
// seeded ones.
inline std::vector<std::vector<int>> sample_tables(const Quasiaction& L, int p,
                                                   std::uint64_t seed) {
  const int n = L.G->n, m = L.N->n;
  auto free = free_positions(n, p);
  const long long len = tuple_count(n, p);
  std::vector<std::vector<int>> out;
  const bool exhaustive = free.size() <= 9 && pow_ll(m, static_cast<int>(free.size())) <= 512;
  if (exhaustive) {
    std::vector<int> f(len, 0);
    std::vector<int> v(free.size(), 0);
    for (;;) {
      out.push_back(f);
      std::size_t i = 0;
      while (i < free.size()) {
        if (++v[i] < m) { f[free[i]] = v[i]; break; }
        v[i] = 0;
        f[free[i]] = 0;
        ++i;
      }
      if (i == free.size()) break;
    }
  } else {
    out.emplace_back(len, 0);
    for (int k = 0; k < 64; ++k) {
      std::vector<int> f(len, 0);
      for (std::size_t j = 0; j < free.size(); ++j)
        f[free[j]] = static_cast<int>(
            mix64(seed, (static_cast<std::uint64_t>(k + 1) << 20) | j) % m);
      out.push_back(std::move(f));
    }
  }
  return out;
}

// L_identity everywhere except the nontrivial base element, which inverts
// (an automorphism since the fiber is abelian).
inline Quasiaction inversion_action(GroupRef G2, GroupRef N) {
  Quasiaction L;
  L.G = G2;
  L.N = N;
  L.maps.resize(G2->n);
  for (int g = 0; g < G2->n; ++g) {
    L.maps[g].resize(N->n);
    for (int x = 0; x < N->n; ++x) L.maps[g][x] = g % 2 ? N->invof(x) : x;
  }
  validate_quasiaction(L);
  return L;
}

// Visit every degree-2 cochain space of the small catalog: all (G, N) pairs
// of order at most four, all quasiactions, all 2-cocycles.
template <typename Fn>
void for_each_catalog_cocycle(long long budget, int shards, Fn&& fn) {
  auto cat = small_catalog();
  for (const auto& G : cat)
    for (const auto& N : cat) {
      auto qa = enumerate_quasiactions(G, N, budget);
      for (int li = 0; li < qa.count(); ++li) {
        auto L = qa.get(li);
        for (auto& f : enumerate_cocycles(L, 2, budget, shards)) fn(G, N, L, f);
      }
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// boundary: the generic coface-product boundary equals the explicit rows.

inline SuiteResult run_boundary_suite(std::uint64_t seed) {
  SuiteResult r;
  r.name = "boundary";
  long long cochains = 0, instance = 0;
  auto cat = detail::small_catalog();
  for (const auto& G : cat)
    for (const auto& N : cat) {
      auto qa = enumerate_quasiactions(G, N);
      for (int li = 0; li < qa.count(); ++li) {
        auto L = qa.get(li);
        for (int p = 0; p <= kMaxDegree; ++p) {
          for (auto& f : detail::sample_tables(L, p, mix64(seed, instance))) {
            Cochain c{L, p, f};
            ++cochains;
            for (int sign : {+1, -1})
              detail::expect(r, parity_boundary(c, sign) == parity_boundary_explicit(c, sign),
                             G->name + "/" + N->name + " L#" + std::to_string(li) + " p=" +
                                 std::to_string(p) + " sign=" + std::to_string(sign));
          }
          ++instance;
        }
      }
    }
  r.detail["pairs"] = static_cast<long long>(cat.size() * cat.size());
  r.detail["cochains"] = cochains;
  return r;
}

// ---------------------------------------------------------------------------
// dds: the four derivation-defect conditions agree for every 1-cochain.

inline SuiteResult run_dds_suite() {
  SuiteResult r;
  r.name = "dds";
  long long instances = 0;
  const std::pair<const char*, const char*> pairs[] = {
      {"cyclic:2", "sym:3"}, {"cyclic:2", "cyclic:3"}, {"cyclic:3", "cyclic:3"}};
  for (auto [gn, nn] : pairs) {
    auto G = builtin_group(gn), N = builtin_group(nn);
    auto qa = enumerate_quasiactions(G, N);
    for (int li = 0; li < qa.count(); ++li) {
      auto L = qa.get(li);
      for (auto& f : detail::sample_tables(L, 1, 0)) {
        Cochain s{L, 1, f};
        ++instances;
        detail::expect(r, dds_battery(s).agree(),
                       std::string(gn) + "/" + nn + " L#" + std::to_string(li));
      }
    }
  }
  r.detail["instances"] = instances;
  return r;
}

// ---------------------------------------------------------------------------
// ext: every catalog 2-cocycle yields an associative holonomy extension
// whose canonical section recovers (L, f) exactly.

inline SuiteResult run_ext_suite(long long budget, int shards) {
  SuiteResult r;
  r.name = "ext";
  long long cocycles = 0;
  detail::for_each_catalog_cocycle(budget, shards, [&](const GroupRef& G, const GroupRef& N,
                                                       const Quasiaction& L,
                                                       const std::vector<int>& f) {
    Cochain c{L, 2, f};
    ++cocycles;
    auto rt = canonical_roundtrip(c, FiberMode::holonomy);
    detail::expect(r, rt.associative && rt.exact(), G->name + "/" + N->name + " cocycle");
  });
  r.detail["pairs"] = 25;
  r.detail["cocycles"] = cocycles;
  return r;
}

// ---------------------------------------------------------------------------
// mc-equivalence: trivial associator over the holonomy extension, the
// pointwise compatibility equation, and integrability-on-holonomy are one
// condition; the absolute variants agree on the full fiber.

inline SuiteResult run_mc_suite(long long budget, int shards) {
  SuiteResult r;
  r.name = "mc-equivalence";
  long long cocycles = 0, absolute = 0;
  detail::for_each_catalog_cocycle(budget, shards, [&](const GroupRef& G, const GroupRef& N,
                                                       const Quasiaction& L,
                                                       const std::vector<int>& f) {
    Cochain c{L, 2, f};
    ++cocycles;
    auto E = build_quasi_extension(c, FiberMode::holonomy);
    auto hol = holonomy_group(c);
    bool alpha_trivial = true;
    if (E.size() <= 12) {
      for (int e1 = 0; e1 < E.size() && alpha_trivial; ++e1)
        for (int e2 = 0; e2 < E.size() && alpha_trivial; ++e2)
          for (int e3 = 0; e3 < E.size(); ++e3)
            if (associator_tilde(E, e1, e2, e3) != 0) { alpha_trivial = false; break; }
    } else {
      alpha_trivial = E.associative;  // same scan, already performed
    }
    const bool mc = mc_check(c.f, c.L, hol.members);
    const bool integrable = is_integrable(c);
    detail::expect(r, alpha_trivial == E.associative && E.associative == mc && mc == integrable,
                   G->name + "/" + N->name + " relative");
    auto Ef = build_quasi_extension(c, FiberMode::full);
    const bool abs = is_integrable(c, true);
    if (abs) ++absolute;
    detail::expect(r, Ef.associative == abs, G->name + "/" + N->name + " absolute");
  });
  r.detail["cocycles"] = cocycles;
  r.detail["absolute"] = absolute;
  return r;
}

// ---------------------------------------------------------------------------
// pentagon: both reassociation paths around five elements agree on seeded
// quadruples, with the closed associator formula cross-checked against the
// magma table.

inline SuiteResult run_pentagon_suite(long long samples, std::uint64_t seed) {
  SuiteResult r;
  r.name = "pentagon";
  if (samples < 10000) samples = 10000;
  struct Inst {
    std::string label;
    Cochain c;
  };
  std::vector<Inst> instances;
  auto add_split = [&](const char* gn, const char* nn, bool invert) {
    auto G = builtin_group(gn), N = builtin_group(nn);
    Quasiaction L = invert ? detail::inversion_action(G, N) : trivial_quasiaction(G, N);
    instances.push_back({std::string(gn) + "/" + nn + (invert ? "/inv" : "/triv"),
                         identity_cochain(L, 2)});
  };
  add_split("cyclic:2", "cyclic:3", true);
  add_split("cyclic:2", "cyclic:3", false);
  add_split("cyclic:2", "cyclic:4", true);
  add_split("cyclic:2", "cyclic:2", false);
  add_split("cyclic:3", "cyclic:3", false);
  {
    // A nonsplit cocycle: the doubling class over the inverting action.
    auto G = builtin_group("cyclic:2"), N = builtin_group("cyclic:4");
    Cochain c = identity_cochain(detail::inversion_action(G, N), 2);
    c.f[1 * 2 + 1] = 2;
    instances.push_back({"cyclic:2/cyclic:4/double", c});
  }
  {
    // A non-integrable 2-cochain with nonabelian fiber: the pentagon holds
    // over the magma even though the extension is not associative.
    auto G = builtin_group("cyclic:3"), N = builtin_group("sym:3");
    Cochain c = identity_cochain(trivial_quasiaction(G, N), 2);
    c.f[1 * 3 + 1] = 1;
    c.f[1 * 3 + 2] = 4;
    c.f[2 * 3 + 2] = 2;
    instances.push_back({"cyclic:3/sym:3/witness", c});
  }
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto E = build_quasi_extension(instances[i].c, FiberMode::full);
    auto rep = pentagon_check(E, samples, mix64(seed, i));
    detail::expect(r, rep.pass(), instances[i].label);
    r.checks += rep.checks - 1;
    ojson row;
    row["instance"] = instances[i].label;
    row["order"] = E.size();
    row["associative"] = E.associative;
    row["samples"] = rep.checks;
    rows.push_back(std::move(row));
  }
  r.detail["instances"] = std::move(rows);
  r.detail["samples_per_instance"] = samples;
  return r;
}

// ---------------------------------------------------------------------------
// untwist: the twisted and untwisted tensors are strictly monoidally
// isomorphic, and the twisted tensor is functorial and preserves vectors.

inline SuiteResult run_untwist_suite() {
  SuiteResult r;
  r.name = "untwist";
  ojson rows = ojson::array();
  for (const char* name : {"cyclic:2", "cyclic:3", "cyclic:4", "klein", "sym:3"}) {
    auto G = builtin_group(name);
    auto ut = untwist_check(G);
    detail::expect(r, ut.pass(), std::string(name) + " untwist");
    auto tw = build_fiber_F(G);
    auto ic = interchange_check(tw);
    detail::expect(r, ic.pass(), std::string(name) + " interchange");
    auto vc = vectors_check(tw);
    detail::expect(r, vc.pass(), std::string(name) + " vectors");
    ojson row;
    row["group"] = name;
    row["untwist_checks"] = ut.functorial.checks + ut.monoidal.checks;
    row["interchange_checks"] = ic.checks;
    row["vector_checks"] = vc.checks;
    rows.push_back(std::move(row));
    r.checks += ut.functorial.checks + ut.monoidal.checks + ic.checks + vc.checks;
  }
  r.detail["groups"] = std::move(rows);
  return r;
}

// ---------------------------------------------------------------------------
// chainmap: pushing values through conjugation commutes with both parity
// boundaries for every cochain of degree at most two.

inline SuiteResult run_chainmap_suite() {
  SuiteResult r;
  r.name = "chainmap";
  long long instances = 0;
  for (const char* nn : {"sym:3", "quat:8"}) {
    auto G = builtin_group("cyclic:2"), N = builtin_group(nn);
    auto A = automorphism_group(N);
    auto qa = enumerate_quasiactions(G, N);
    for (int li = 0; li < qa.count(); ++li) {
      auto L = qa.get(li);
      for (int p = 0; p <= 2; ++p)
        for (auto& f : detail::sample_tables(L, p, 0)) {
          Cochain c{L, p, f};
          Cochain pushed = push_conjugation(c, A);
          ++instances;
          for (int sign : {+1, -1}) {
            Cochain bc{c.L, p + 1, parity_boundary(c, sign)};
            detail::expect(r, push_conjugation(bc, A).f == parity_boundary(pushed, sign),
                           std::string("cyclic:2/") + nn + " L#" + std::to_string(li) +
                               " p=" + std::to_string(p) + " sign=" + std::to_string(sign));
          }
        }
    }
  }
  r.detail["instances"] = instances;
  return r;
}

// ---------------------------------------------------------------------------
// exactness: center-valued cochains are exactly the kernel of the push, and
// the image is exactly the inner-automorphism-valued tables.

inline SuiteResult run_exactness_suite() {
  SuiteResult r;
  r.name = "exactness";
  ojson rows = ojson::array();
  const struct {
    const char* fiber;
    long long kernel_p1;
  } cases[] = {{"sym:3", 1}, {"quat:8", 2}};
  for (const auto& cs : cases) {
    auto G = builtin_group("cyclic:2"), N = builtin_group(cs.fiber);
    for (int p : {1, 2}) {
      auto er = exactness_check(G, N, p);
      detail::expect(r, er.kernel_matches_center && er.image_matches_inner,
                     std::string("cyclic:2/") + cs.fiber + " p=" + std::to_string(p));
      if (p == 1)
        detail::expect(r, er.kernel == cs.kernel_p1,
                       std::string(cs.fiber) + " kernel count p=1");
      ojson row;
      row["pair"] = std::string("cyclic:2/") + cs.fiber;
      row["p"] = p;
      row["total"] = er.total;
      row["kernel"] = er.kernel;
      row["center_valued"] = er.center_valued;
      row["image"] = er.image;
      row["inner_valued"] = er.inner_valued;
      rows.push_back(std::move(row));
    }
  }
  r.detail["cases"] = std::move(rows);
  return r;
}

// ---------------------------------------------------------------------------
// split: splitting counts, conjugacy classes, and the degree-1 census.

inline SuiteResult run_split_suite(long long budget) {
  SuiteResult r;
  r.name = "split";
  auto run_case = [&](const char* en, std::vector<int> seeds, const char* key,
                      long long sections, long long classes, long long h1) {
    auto E = builtin_group(en);
    auto sub = generated_subgroup(*E, seeds);
    auto rep = classify_splittings(E, sub, budget);
    detail::expect(r, static_cast<long long>(rep.sections.size()) == sections &&
                          rep.class_count == classes && rep.h1 == h1,
                   std::string(en) + " splitting counts");
    r.detail[key] = ojson::array({static_cast<long long>(rep.sections.size()),
                                  rep.class_count, rep.h1});
  };
  run_case("sym:3", {1}, "s3_over_z3", 3, 1, 1);
  run_case("klein", {1}, "klein_over_z2", 2, 2, 2);
  run_case("dihedral:4", {1}, "d4_over_z4", 4, 2, 2);
  {
    auto E = builtin_group("cyclic:4");
    bool threw = false;
    try {
      classify_splittings(E, generated_subgroup(*E, {2}), budget);
    } catch (const error& e) {
      threw = e.code == errc::no_splitting_found;
    }
    detail::expect(r, threw, "cyclic:4 over its half should not split");
    r.detail["z4_over_z2"] = "no_splitting_found";
  }
  {
    // phi(n, g) = (n gamma(g)^{-1}, g) compares a cobounding cochain with
    // the corrected split extension, multiplicatively, over every product.
    auto G = builtin_group("cyclic:2"), N = builtin_group("cyclic:3");
    auto L = trivial_quasiaction(G, N);
    std::vector<int> gamma = {0, 1};
    Cochain c = delta(Cochain{L, 1, gamma});
    auto iso = split_iso_phi(c, gamma);
    detail::expect(r, iso.sprime_splits && iso.phi_multiplicative && iso.phi_bijective &&
                          iso.lprime_is_action && iso.f_is_cocycle && iso.products_checked == 36,
                   "cyclic:2/cyclic:3 split comparison");
    r.detail["iso_products"] = iso.products_checked;
  }
  return r;
}

// ---------------------------------------------------------------------------
// oracle: multiplicative census counts equal the independent additive
// solver on abelian coefficients.

inline SuiteResult run_oracle_suite(long long budget) {
  SuiteResult r;
  r.name = "oracle";
  ojson rows = ojson::array();
  const struct {
    const char* base;
    const char* fiber;
    bool invert;
  } cases[] = {{"cyclic:2", "cyclic:2", false},
               {"cyclic:3", "cyclic:3", false},
               {"cyclic:2", "cyclic:4", false},
               {"cyclic:2", "cyclic:4", true}};
  for (const auto& cs : cases) {
    auto G = builtin_group(cs.base), N = builtin_group(cs.fiber);
    Quasiaction L =
        cs.invert ? detail::inversion_action(G, N) : trivial_quasiaction(G, N);
    for (int p : {1, 2}) {
      auto Z = enumerate_cocycles(L, p, budget);
      auto cls = cocycle_classes(L, p, Z, budget);
      auto cb = count_coboundaries(L, p, budget);
      auto oracle = abelian_oracle(G, N, L, p, budget);
      const bool ok = static_cast<long long>(Z.size()) == oracle.z &&
                      cls.count == oracle.h && cb.distinct == oracle.b;
      detail::expect(r, ok, std::string(cs.base) + "/" + cs.fiber +
                                (cs.invert ? "/inv" : "/triv") + " p=" + std::to_string(p));
      ojson row;
      row["base"] = cs.base;
      row["fiber"] = cs.fiber;
      row["action"] = cs.invert ? "invert" : "trivial";
      row["p"] = p;
      row["Z"] = static_cast<long long>(Z.size());
      row["B"] = cb.distinct;
      row["H"] = cls.count;
      rows.push_back(std::move(row));
      if (p == 2 && !cs.invert && std::string(cs.base) == "cyclic:2" &&
          std::string(cs.fiber) == "cyclic:2")
        r.detail["H2_z2_z2_trivial"] = cls.count;
      if (p == 2 && std::string(cs.base) == "cyclic:3") r.detail["H2_z3_z3_trivial"] = cls.count;
    }
  }
  r.detail["cases"] = std::move(rows);
  return r;
}

// ---------------------------------------------------------------------------
// monstr: arrows between section functors of split extensions compute the
// same parity boundary three ways, and strictness is exactly morphism-ness.

inline SuiteResult run_monstr_suite() {
  SuiteResult r;
  r.name = "monstr";
  long long section_pairs = 0;
  const struct {
    const char* base;
    const char* fiber;
    bool invert;
  } cases[] = {{"cyclic:2", "cyclic:3", true},
               {"cyclic:2", "cyclic:3", false},
               {"cyclic:2", "cyclic:4", true},
               {"cyclic:2", "cyclic:2", false},
               {"cyclic:3", "cyclic:3", false}};
  for (const auto& cs : cases) {
    auto G = builtin_group(cs.base), N = builtin_group(cs.fiber);
    Quasiaction L =
        cs.invert ? detail::inversion_action(G, N) : trivial_quasiaction(G, N);
    auto E = build_quasi_extension(identity_cochain(L, 2), FiberMode::full);
    auto sections = detail::sample_tables(L, 1, 0);  // exhaustive here
    for (const auto& s1 : sections)
      for (const auto& s2 : sections) {
        ++section_pairs;
        auto rep = monoidal_morphism_check(E, s1, s2);
        detail::expect(r, rep.routes_agree && rep.square && rep.weak_relation,
                       std::string(cs.base) + "/" + cs.fiber + " section pair");
      }
  }
  long long functions = 0;
  for (const char* nn : {"cyclic:3", "cyclic:4"}) {
    auto G = builtin_group("cyclic:2"), N = builtin_group(nn);
    for (auto& s : detail::sample_tables(trivial_quasiaction(G, N), 1, 0)) {
      ++functions;
      auto rep = functor_of_function(G, N, s);
      detail::expect(r, rep.functorial && rep.natural && rep.coherent && rep.strict_iff_morphism,
                     std::string("cyclic:2 -> ") + nn + " function");
    }
  }
  r.detail["section_pairs"] = section_pairs;
  r.detail["functions"] = functions;
  return r;
}

// ---------------------------------------------------------------------------
// tensor: bundle categories satisfy interchange and vector preservation,
// and degenerate bundles reproduce the fiber and base constructions.

inline SuiteResult run_tensor_suite() {
  SuiteResult r;
  r.name = "tensor";
  struct Inst {
    std::string label;
    Cochain c;
  };
  std::vector<Inst> instances;
  {
    auto G = builtin_group("cyclic:2"), N = builtin_group("cyclic:3");
    instances.push_back({"cyclic:2/cyclic:3/inv",
                         identity_cochain(detail::inversion_action(G, N), 2)});
  }
  {
    auto G = builtin_group("cyclic:2"), N = builtin_group("cyclic:4");
    Cochain c = identity_cochain(detail::inversion_action(G, N), 2);
    c.f[1 * 2 + 1] = 2;
    instances.push_back({"cyclic:2/cyclic:4/double", c});
  }
  {
    // The carry cocycle: the total space is the cyclic group of order nine.
    auto G = builtin_group("cyclic:3"), N = builtin_group("cyclic:3");
    Cochain c = identity_cochain(trivial_quasiaction(G, N), 2);
    c.f[1 * 3 + 2] = 1;
    c.f[2 * 3 + 1] = 1;
    c.f[2 * 3 + 2] = 1;
    instances.push_back({"cyclic:3/cyclic:3/carry", c});
  }
  for (auto& inst : instances) {
    auto C = build_bundle_C(build_quasi_extension(inst.c, FiberMode::full));
    auto ic = interchange_check(C);
    detail::expect(r, ic.pass(), inst.label + " interchange");
    auto vc = vectors_check(C);
    detail::expect(r, vc.pass(), inst.label + " vectors");
    r.checks += ic.checks + vc.checks;
  }
  for (const char* gn : {"cyclic:3", "klein", "sym:3"}) {
    auto G = builtin_group(gn);
    // Base reduced to a point: the bundle category is the twisted fiber one.
    auto trivG = builtin_group("trivial");
    Cochain cf = identity_cochain(trivial_quasiaction(trivG, G), 2);
    detail::expect(r,
                   categories_table_equal(build_bundle_C(build_quasi_extension(cf, FiberMode::full)),
                                          build_fiber_F(G)),
                   std::string(gn) + " point-base bundle is the twisted category");
    // Fiber reduced to a point: the bundle category is the base one.
    Cochain cb = identity_cochain(trivial_quasiaction(G, trivG), 2);
    detail::expect(r,
                   categories_table_equal(build_bundle_C(build_quasi_extension(cb, FiberMode::full)),
                                          build_base_B(G)),
                   std::string(gn) + " point-fiber bundle is the base category");
    if (G->abelian)
      detail::expect(r,
                     categories_table_equal(make_opposite(build_untwisted_F(G)),
                                            build_untwisted_F(G)),
                     std::string(gn) + " opposite of abelian untwisted");
  }
  return r;
}

// ---------------------------------------------------------------------------
// categ: the categorical boundary dictionary and the structure-cell checks.

inline SuiteResult run_categ_suite() {
  SuiteResult r;
  r.name = "categ";
  long long dictionary = 0;
  const std::pair<const char*, const char*> pairs[] = {
      {"cyclic:2", "sym:3"}, {"cyclic:4", "cyclic:4"}, {"klein", "klein"}};
  for (auto [gn, nn] : pairs) {
    auto G = builtin_group(gn), N = builtin_group(nn);
    for (auto& s : detail::sample_tables(trivial_quasiaction(G, N), 1, 0)) {
      ++dictionary;
      detail::expect(r, section_boundary_dictionary(G, N, s),
                     std::string(gn) + "->" + nn + " dictionary");
      auto rep = functor_of_function(G, N, s);
      detail::expect(r, rep.functorial && rep.natural && rep.coherent && rep.strict_iff_morphism,
                     std::string(gn) + "->" + nn + " functor");
    }
  }
  for (const char* gn : {"cyclic:2", "cyclic:3", "cyclic:4", "klein", "sym:3"}) {
    auto G = builtin_group(gn);
    std::vector<int> ident(static_cast<std::size_t>(G->n) * G->n, 0);
    for (auto kind : {0, 1}) {
      auto host = kind ? build_fiber_F(G) : build_untwisted_F(G);
      auto ms = monoidal_structure_2cocycle_check(host, ident);
      detail::expect(r, ms.pass(), std::string(gn) + " identity structure cells");
      r.checks += ms.checks;
    }
    auto cc = commutativity_constraint_check(build_untwisted_F(G), ident);
    detail::expect(r, cc.pass(), std::string(gn) + " identity commutativity cells");
    r.checks += cc.checks;
    if (G->abelian) {
      auto cct = commutativity_constraint_check(build_fiber_F(G), ident);
      detail::expect(r, cct.pass(), std::string(gn) + " twisted commutativity cells");
      r.checks += cct.checks;
    }
    if (G->n >= 2) {
      auto bad = ident;
      bad[1 * G->n + 1] = 1 % G->n;
      if (bad[1 * G->n + 1] != 0) {
        auto cc2 = commutativity_constraint_check(build_untwisted_F(G), bad);
        detail::expect(r, !cc2.pass() && !cc2.failures.empty(),
                       std::string(gn) + " perturbed cells must fail");
      }
    }
  }
  r.detail["dictionary_sections"] = dictionary;
  return r;
}

// ---------------------------------------------------------------------------
// Full report and the suite dispatcher.

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "boundary", "dds",   "mc-equivalence", "pentagon", "untwist", "chainmap", "exactness",
      "split",    "oracle", "monstr",        "ext",      "tensor",  "categ"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, long long samples,
                             int shards, long long budget) {
  if (name == "boundary") return run_boundary_suite(seed);
  if (name == "dds") return run_dds_suite();
  if (name == "mc-equivalence") return run_mc_suite(budget, shards);
  if (name == "pentagon") return run_pentagon_suite(samples, seed);
  if (name == "untwist") return run_untwist_suite();
  if (name == "chainmap") return run_chainmap_suite();
  if (name == "exactness") return run_exactness_suite();
  if (name == "split") return run_split_suite(budget);
  if (name == "oracle") return run_oracle_suite(budget);
  if (name == "monstr") return run_monstr_suite();
  if (name == "ext") return run_ext_suite(budget, shards);
  if (name == "tensor") return run_tensor_suite();
  if (name == "categ") return run_categ_suite();
  std::string all;
  for (const auto& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
  fail(errc::bad_input, "unknown suite '" + name + "' (choose from: " + all + ")");
}

inline ojson suite_to_json(const SuiteResult& s) {
  ojson j;
  j["suite"] = s.name;
  j["pass"] = s.pass;
  j["checks"] = s.checks;
  j["failures"] = s.failures;
  j["detail"] = s.detail;
  return j;
}

inline ojson full_report(std::uint64_t seed, long long samples, int shards, long long budget) {
  // Sampled suites never run below the reference sample count, so reports
  // stay comparable across invocations; the field records what actually ran.
  const long long effective = samples < 10000 ? 10000 : samples;
  ojson j;
  j["schema"] = 1;
  j["kind"] = "verify";
  j["seed"] = seed;
  j["samples"] = effective;
  ojson suites = ojson::array();
  bool all = true;
  for (const auto& name : suite_names()) {
    auto s = run_suite(name, seed, effective, shards, budget);
    all = all && s.pass;
    suites.push_back(suite_to_json(s));
  }
  j["suites"] = std::move(suites);
  j["pass"] = all;
  return j;
}

}  // namespace parityc
