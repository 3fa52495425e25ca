#pragma once

// Exhaustive enumeration: quasiactions of G on N, cocycles per quasiaction,
// class decompositions under witnessed moves, holonomy strata, and an
// independent additive oracle for abelian coefficients.  Everything here is
// deterministic: enumerations run in lexicographic order and sharded runs
// merge into the same sorted result regardless of the shard count.

#include <future>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cochain.hpp"
#include "error.hpp"
#include "group.hpp"
#include "integrability.hpp"

namespace parityc {

// ---------------------------------------------------------------------------
// Quasiactions, addressed by automorphism-index tuples.

struct QuasiactionEnum {
  GroupRef G;
  AutomorphismGroup aut;
  std::vector<std::vector<int>> tuples;  // index tuples, lex order, tuple[0] == 0
  std::vector<char> action_flag;

  int count() const { return static_cast<int>(tuples.size()); }

  Quasiaction get(int i) const { return quasiaction_from_indices(G, aut, tuples.at(i)); }

  // L_g . L_h composes as a product in the automorphism group, so a tuple is
  // an action exactly when it is multiplicative there.
  bool check_action(const std::vector<int>& t) const {
    for (int g = 0; g < G->n; ++g)
      for (int h = 0; h < G->n; ++h)
        if (aut.group->mul(t[g], t[h]) != t[G->mul(g, h)]) return false;
    return true;
  }
};

inline QuasiactionEnum enumerate_quasiactions(GroupRef G, GroupRef N,
                                              long long budget = kDefaultBudget) {
  QuasiactionEnum e;
  e.G = G;
  e.aut = automorphism_group(N);
  const int m = e.aut.size();
  const long long total = pow_ll(m, G->n - 1);
  if (total > budget)
    fail(errc::budget_exceeded,
         "quasiaction space has " + std::to_string(total) + " members", {total});
  std::vector<int> t(G->n, 0);
  for (long long c = 0; c < total; ++c) {
    e.tuples.push_back(t);
    e.action_flag.push_back(e.check_action(t) ? 1 : 0);
    int i = G->n;
    while (i > 1 && ++t[i - 1] == m) t[--i] = 0;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Cocycle enumeration: depth-first over the free positions in lex order.

namespace detail {

struct CocycleSearch {
  const Quasiaction* L;
  int p, nG, nN;
  std::vector<long long> free;          // free positions, ascending
  std::vector<int> step_of;             // position -> DFS step or -1
  // Boundary constraints grouped by the last DFS step that fills one of the
  // positions they read; constraints reading only pinned positions sit in
  // group 0 and are checked before the search starts.
  std::vector<std::vector<long long>> by_step;
  std::vector<int> table;
  std::vector<std::vector<int>>* out;
  long long* nodes;
  long long budget;
  int shards, shard_id;

  bool constraint_holds(long long t) const {
    int args[kMaxDegree + 2];
    unpack_tuple(t, nG, p + 1, args);
    return parity_boundary_value(*L, p, table, args, +1) ==
           parity_boundary_value(*L, p, table, args, -1);
  }

  void dfs(int step) {
    if (step == static_cast<int>(free.size())) {
      out->push_back(table);
      return;
    }
    for (int v = 0; v < nN; ++v) {
      if (step == 0 && shards > 1 && v % shards != shard_id) continue;
      if (++*nodes > budget)
        fail(errc::budget_exceeded,
             "cocycle search exceeded " + std::to_string(budget) + " nodes");
      table[free[step]] = v;
      bool ok = true;
      for (long long t : by_step[step + 1])
        if (!constraint_holds(t)) { ok = false; break; }
      if (ok) dfs(step + 1);
    }
    table[free[step]] = 0;
  }
};

inline std::vector<std::vector<int>> cocycle_shard(const Quasiaction& L, int p,
                                                   long long budget, int shards, int shard_id) {
  CocycleSearch s;
  s.L = &L;
  s.p = p;
  s.nG = L.G->n;
  s.nN = L.N->n;
  s.free = free_positions(s.nG, p);
  s.step_of.assign(tuple_count(s.nG, p), -1);
  for (std::size_t i = 0; i < s.free.size(); ++i) s.step_of[s.free[i]] = static_cast<int>(i);
  s.by_step.assign(s.free.size() + 1, {});
  const long long constraints = tuple_count(s.nG, p + 1);
  int args[kMaxDegree + 2];
  for (long long t = 0; t < constraints; ++t) {
    unpack_tuple(t, s.nG, p + 1, args);
    int last = -1;
    for (int i = 0; i <= p + 1; ++i) {
      int st = s.step_of[coface_position(*L.G, p, i, args)];
      last = std::max(last, st);
    }
    s.by_step[last + 1].push_back(t);
  }
  s.table.assign(tuple_count(s.nG, p), 0);
  std::vector<std::vector<int>> out;
  long long nodes = 0;
  s.out = &out;
  s.nodes = &nodes;
  s.budget = budget;
  s.shards = shards;
  s.shard_id = shard_id;
  for (long long t : s.by_step[0])
    if (!s.constraint_holds(t)) return out;  // no normalized solution at all
  if (s.free.empty()) {
    if (shard_id == 0) out.push_back(s.table);
    return out;
  }
  s.dfs(0);
  return out;
}

}  // namespace detail

// All normalized p-cocycles for (f, L), sorted lexicographically.  With
// shards > 1 the work splits on the first free value and runs concurrently;
// the merged result is identical for every shard count.  The budget bounds
// the DFS node count per shard.
inline std::vector<std::vector<int>> enumerate_cocycles(const Quasiaction& L, int p,
                                                        long long budget = kDefaultBudget,
                                                        int shards = 1) {
  if (p < 0 || p > kMaxDegree) fail(errc::degree_out_of_range, "degree must be in 0..3");
  if (shards < 1) fail(errc::bad_input, "shard count must be positive");
  std::vector<std::vector<int>> all;
  if (shards == 1) {
    all = detail::cocycle_shard(L, p, budget, 1, 0);
  } else {
    std::vector<std::future<std::vector<std::vector<int>>>> parts;
    for (int s = 0; s < shards; ++s)
      parts.push_back(std::async(std::launch::async, detail::cocycle_shard, std::cref(L), p,
                                 budget, shards, s));
    for (auto& fut : parts) {
      auto part = fut.get();
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
  }
  return all;
}

// ---------------------------------------------------------------------------
// Classes under witnessed moves  f |-> (d+ w) . f . (d- w)^{-1}.

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace detail

struct ClassDecomposition {
  long long count = 0;
  std::vector<int> class_of;             // cocycle index -> class id (0-based, by first member)
  std::vector<std::vector<int>> reps;    // lexicographically least member per class
};

// Every normalized (p-1)-table acts as a witness; moves landing inside Z are
// identifications.  Union-find takes the equivalence closure, so the result
// is a genuine partition even where single moves are not symmetric.
inline ClassDecomposition cocycle_classes(const Quasiaction& L, int p,
                                          const std::vector<std::vector<int>>& Z,
                                          long long budget = kDefaultBudget) {
  if (p < 1) fail(errc::degree_out_of_range, "classes need witnesses one degree down");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < Z.size(); ++i) index[Z[i]] = static_cast<int>(i);
  detail::UnionFind uf(static_cast<int>(Z.size()));
  auto free = free_positions(L.G->n, p - 1);
  const long long witnesses = pow_ll(L.N->n, static_cast<int>(free.size()));
  long long steps = witnesses * static_cast<long long>(Z.size() + 1);
  if (steps > budget)
    fail(errc::budget_exceeded, "class sweep needs " + std::to_string(steps) + " steps");
  Cochain w;
  w.L = L;
  w.p = p - 1;
  w.f.assign(tuple_count(L.G->n, p - 1), 0);
  std::vector<int> pick(free.size(), 0);
  for (long long c = 0; c < witnesses; ++c) {
    auto plus = parity_boundary(w, +1);
    auto minus = parity_boundary(w, -1);
    const FiniteGroup& N = *L.N;
    for (std::size_t i = 0; i < Z.size(); ++i) {
      std::vector<int> moved(Z[i].size());
      for (std::size_t t = 0; t < moved.size(); ++t)
        moved[t] = N.mul(N.mul(plus[t], Z[i][t]), N.invof(minus[t]));
      auto it = index.find(moved);
      if (it != index.end()) uf.unite(static_cast<int>(i), it->second);
    }
    std::size_t j = free.size();
    while (j > 0 && ++pick[j - 1] == L.N->n) pick[--j] = 0;
    for (std::size_t k = 0; k < free.size(); ++k) w.f[free[k]] = pick[k];
  }
  ClassDecomposition d;
  d.class_of.assign(Z.size(), -1);
  std::map<int, int> root_to_class;
  for (std::size_t i = 0; i < Z.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto [it, fresh] = root_to_class.try_emplace(root, static_cast<int>(root_to_class.size()));
    d.class_of[i] = it->second;
    if (fresh) d.reps.push_back(Z[i]);  // Z sorted => first member is lex-least
  }
  d.count = static_cast<long long>(d.reps.size());
  return d;
}

// Distinct coboundary tables (moves applied to the identity cochain) and how
// many of them are cocycles.  For a genuine action on abelian coefficients
// all of them are.
struct CoboundaryCount {
  long long distinct = 0;
  long long cocycles = 0;
};

inline CoboundaryCount count_coboundaries(const Quasiaction& L, int p,
                                          long long budget = kDefaultBudget) {
  auto free = free_positions(L.G->n, p - 1);
  const long long witnesses = pow_ll(L.N->n, static_cast<int>(free.size()));
  if (witnesses > budget)
    fail(errc::budget_exceeded, "witness space has " + std::to_string(witnesses) + " members");
  Cochain w;
  w.L = L;
  w.p = p - 1;
  w.f.assign(tuple_count(L.G->n, p - 1), 0);
  std::vector<int> pick(free.size(), 0);
  std::set<std::vector<int>> seen;
  CoboundaryCount out;
  const FiniteGroup& N = *L.N;
  for (long long c = 0; c < witnesses; ++c) {
    auto plus = parity_boundary(w, +1);
    auto minus = parity_boundary(w, -1);
    std::vector<int> b(plus.size());
    for (std::size_t t = 0; t < b.size(); ++t) b[t] = N.mul(plus[t], N.invof(minus[t]));
    if (seen.insert(b).second) {
      Cochain probe{L, p, b};
      if (is_cocycle(probe)) ++out.cocycles;
    }
    std::size_t j = free.size();
    while (j > 0 && ++pick[j - 1] == L.N->n) pick[--j] = 0;
    for (std::size_t k = 0; k < free.size(); ++k) w.f[free[k]] = pick[k];
  }
  out.distinct = static_cast<long long>(seen.size());
  return out;
}

// ---------------------------------------------------------------------------
// Holonomy strata.

struct StratumCount {
  std::vector<int> members;  // holonomy subgroup, sorted
  long long count = 0;
  bool irreducible = false;  // holonomy is all of N
};

inline std::vector<StratumCount> stratify_by_holonomy(const Quasiaction& L, int p,
                                                      const std::vector<std::vector<int>>& Z) {
  std::map<std::vector<int>, long long> h;
  for (const auto& f : Z) {
    Cochain c{L, p, f};
    ++h[holonomy_group(c).members];
  }
  std::vector<StratumCount> out;
  for (auto& [members, count] : h)
    out.push_back({members, count, static_cast<int>(members.size()) == L.N->n});
  return out;
}

// ---------------------------------------------------------------------------
// Independent additive oracle (abelian coefficients, genuine actions): the
// classical alternating-sign boundary, written with its own index loops so
// it shares no code with the multiplicative path.

struct AbelianOracleResult {
  long long z = 0, b = 0, h = 0;
};

inline AbelianOracleResult abelian_oracle(GroupRef G, GroupRef N, const Quasiaction& L, int p,
                                          long long budget = kDefaultBudget) {
  if (!N->abelian) fail(errc::not_abelian, "oracle needs abelian coefficients");
  if (!is_action(L)) fail(errc::not_an_action, "oracle needs a genuine action");
  if (p < 1 || p > kMaxDegree) fail(errc::degree_out_of_range, "oracle covers degrees 1..3");
  const int n = G->n;
  const int m = N->n;

  // d f (a_0..a_p) = L_{a_0} f(a_1..a_p) - f(a_0 a_1, a_2, ..) + ... +- f(a_0..a_{p-1})
  auto is_zero_boundary = [&](int deg, const std::vector<int>& f) {
    std::vector<int> args(deg + 1), sub(deg);
    const long long tuples = pow_ll(n, deg + 1);
    for (long long t = 0; t < tuples; ++t) {
      long long rest = t;
      for (int i = deg; i >= 0; --i) { args[i] = static_cast<int>(rest % n); rest /= n; }
      int acc = 0;
      for (int face = 0; face <= deg + 1; ++face) {
        int k = 0;
        if (face == 0)
          for (int i = 1; i <= deg; ++i) sub[k++] = args[i];
        else if (face <= deg)
          for (int i = 0; i <= deg; ++i) {
            if (i == face - 1) { sub[k++] = G->mul(args[i], args[i + 1]); ++i; }
            else sub[k++] = args[i];
          }
        else
          for (int i = 0; i < deg; ++i) sub[k++] = args[i];
        long long pos = 0;
        for (int i = 0; i < deg; ++i) pos = pos * n + sub[i];
        int v = f[pos];
        if (face == 0) v = L.apply(args[0], v);
        acc = N->mul(acc, face % 2 ? N->invof(v) : v);
      }
      if (acc != 0) return false;
    }
    return true;
  };
  auto boundary_of = [&](int deg, const std::vector<int>& f) {
    // Same alternating sum, materialized one degree up.
    std::vector<int> out(pow_ll(n, deg + 1));
    std::vector<int> args(deg + 1), sub(deg);
    for (long long t = 0; t < static_cast<long long>(out.size()); ++t) {
      long long rest = t;
      for (int i = deg; i >= 0; --i) { args[i] = static_cast<int>(rest % n); rest /= n; }
      int acc = 0;
      for (int face = 0; face <= deg + 1; ++face) {
        int k = 0;
        if (face == 0)
          for (int i = 1; i <= deg; ++i) sub[k++] = args[i];
        else if (face <= deg)
          for (int i = 0; i <= deg; ++i) {
            if (i == face - 1) { sub[k++] = G->mul(args[i], args[i + 1]); ++i; }
            else sub[k++] = args[i];
          }
        else
          for (int i = 0; i < deg; ++i) sub[k++] = args[i];
        long long pos = 0;
        for (int i = 0; i < deg; ++i) pos = pos * n + sub[i];
        int v = f[pos];
        if (face == 0) v = L.apply(args[0], v);
        acc = N->mul(acc, face % 2 ? N->invof(v) : v);
      }
      out[t] = acc;
    }
    return out;
  };

  auto each_normalized = [&](int deg, auto&& visit) {
    std::vector<long long> free;
    {
      std::vector<int> args(deg);
      const long long tuples = pow_ll(n, deg);
      for (long long t = 0; t < tuples; ++t) {
        long long rest = t;
        bool ok = true;
        for (int i = deg - 1; i >= 0; --i) { args[i] = static_cast<int>(rest % n); rest /= n; }
        for (int i = 0; i < deg; ++i) ok = ok && args[i] != 0;
        if (ok) free.push_back(t);
      }
    }
    const long long total = pow_ll(m, static_cast<int>(free.size()));
    if (total > budget)
      fail(errc::budget_exceeded, "oracle space has " + std::to_string(total) + " members");
    std::vector<int> f(pow_ll(n, deg), 0);
    std::vector<int> pick(free.size(), 0);
    for (long long c = 0; c < total; ++c) {
      visit(f);
      std::size_t j = free.size();
      while (j > 0 && ++pick[j - 1] == m) pick[--j] = 0;
      for (std::size_t k = 0; k < free.size(); ++k) f[free[k]] = pick[k];
    }
  };

  AbelianOracleResult r;
  each_normalized(p, [&](const std::vector<int>& f) {
    if (is_zero_boundary(p, f)) ++r.z;
  });
  std::set<std::vector<int>> image;
  each_normalized(p - 1, [&](const std::vector<int>& f) { image.insert(boundary_of(p - 1, f)); });
  r.b = static_cast<long long>(image.size());
  if (r.z % r.b != 0)
    fail(errc::bad_input, "additive oracle inconsistency: |B| does not divide |Z|");
  r.h = r.z / r.b;
  return r;
}

// ---------------------------------------------------------------------------
// The census: per-quasiaction cocycle counts, classes, strata.

struct CensusFiber {
  int l_index = 0;
  std::vector<int> l_tuple;
  bool action = false;
  long long cochain_space = 0;  // |N|^(free positions)
  long long z = 0;
  long long coboundaries = 0;
  long long coboundaries_in_z = 0;
  long long classes = -1;  // -1 where witnesses are out of scope (degree 3)
  std::vector<std::vector<int>> reps;
  std::vector<StratumCount> strata;
};

struct CensusReport {
  GroupRef G, N;
  int p = 2;
  std::string scope;  // "all" | "trivial" | "actions" | decimal index
  long long quasiactions = 0;
  long long actions = 0;
  std::vector<CensusFiber> fibers;
  long long z_total = 0;
  long long class_total = 0;
  long long weak_classes = -1;  // only filled on request (degree 2)
};

inline std::vector<int> census_scope_indices(const QuasiactionEnum& qa, const std::string& scope) {
  std::vector<int> out;
  if (scope == "all" || scope == "") {
    out.resize(qa.count());
    std::iota(out.begin(), out.end(), 0);
  } else if (scope == "trivial") {
    out.push_back(0);  // the all-identity tuple is lex-first
  } else if (scope == "actions") {
    for (int i = 0; i < qa.count(); ++i)
      if (qa.action_flag[i]) out.push_back(i);
  } else {
    int idx = -1;
    try {
      std::size_t pos = 0;
      idx = std::stoi(scope, &pos);
      if (pos != scope.size()) idx = -1;
    } catch (...) { idx = -1; }
    if (idx < 0 || idx >= qa.count())
      fail(errc::bad_input, "scope must be all | trivial | actions | a quasiaction index");
    out.push_back(idx);
  }
  return out;
}

// Cross-fiber (weak) classes: the equivalence closure, over all degree-2
// cocycles of every quasiaction, of the witnessed relation
//   d+_{L'}gamma . f = f' . d- gamma   (pointwise, gamma a normalized 1-table).
// The source table, target quasiaction, and witness determine the target
// table, so the walk constructs every candidate directly and keeps those
// that land on a cocycle of the target fiber.
inline long long weak_class_count(GroupRef G, GroupRef N, long long budget = kDefaultBudget,
                                  int shards = 1) {
  auto qa = enumerate_quasiactions(G, N, budget);
  std::vector<Quasiaction> actions;
  std::vector<std::vector<std::vector<int>>> zs(qa.count());
  std::map<std::pair<int, std::vector<int>>, int> node;  // (fiber, cocycle) -> id
  for (int i = 0; i < qa.count(); ++i) {
    auto L = qa.get(i);
    zs[i] = enumerate_cocycles(L, 2, budget, shards);
    for (auto& f : zs[i]) node[{i, f}] = static_cast<int>(node.size());
    actions.push_back(std::move(L));
  }
  detail::UnionFind uf(static_cast<int>(node.size()));
  const int nG = G->n, nN = N->n;
  const long long gamma_total = pow_ll(nN, nG - 1);
  long long steps = 0;
  for (int i = 0; i < qa.count(); ++i) {
    for (const auto& f : zs[i]) {
      const int src = node.at({i, f});
      for (int j = 0; j < qa.count(); ++j) {
        const Quasiaction& Lp = actions[j];
        // Odometer over witnesses; the plus boundary of the witness is taken
        // with the target quasiaction.
        std::vector<int> gamma(nG, 0);
        std::vector<int> f2(f.size());
        for (long long w = 0; w < gamma_total; ++w) {
          if (++steps > budget)
            fail(errc::budget_exceeded,
                 "weak-class walk exceeded " + std::to_string(budget) + " steps");
          for (int a = 0; a < nG; ++a)
            for (int b = 0; b < nG; ++b) {
              const long long t = static_cast<long long>(a) * nG + b;
              const int plus = N->mul(Lp.apply(a, gamma[b]), gamma[a]);
              f2[t] = N->mul(N->mul(plus, f[t]), N->invof(gamma[G->mul(a, b)]));
            }
          auto it = node.find({j, f2});
          if (it != node.end()) uf.unite(src, it->second);
          int k = nG;
          while (k > 1 && ++gamma[k - 1] == nN) gamma[--k] = 0;
        }
      }
    }
  }
  std::set<int> roots;
  for (auto& [key, id] : node) roots.insert(uf.find(id));
  return static_cast<long long>(roots.size());
}

inline CensusReport cocycle_census(GroupRef G, GroupRef N, int p, const std::string& scope,
                                   long long budget = kDefaultBudget, int shards = 1,
                                   bool weak = false) {
  if (p < 0 || p > kMaxDegree) fail(errc::degree_out_of_range, "degree must be in 0..3");
  CensusReport r;
  r.G = G;
  r.N = N;
  r.p = p;
  r.scope = scope.empty() ? "all" : scope;
  auto qa = enumerate_quasiactions(G, N, budget);
  r.quasiactions = qa.count();
  for (int i = 0; i < qa.count(); ++i) r.actions += qa.action_flag[i] ? 1 : 0;
  for (int i : census_scope_indices(qa, r.scope)) {
    CensusFiber fb;
    fb.l_index = i;
    fb.l_tuple = qa.tuples[i];
    fb.action = qa.action_flag[i];
    auto L = qa.get(i);
    fb.cochain_space = pow_ll(N->n, static_cast<int>(free_positions(G->n, p).size()));
    auto Z = enumerate_cocycles(L, p, budget, shards);
    fb.z = static_cast<long long>(Z.size());
    if (p >= 1) {
      auto cb = count_coboundaries(L, p, budget);
      fb.coboundaries = cb.distinct;
      fb.coboundaries_in_z = cb.cocycles;
    }
    if (p >= 1 && p <= 2) {
      auto d = cocycle_classes(L, p, Z, budget);
      fb.classes = d.count;
      fb.reps = std::move(d.reps);
    } else if (p == 0) {
      fb.classes = fb.z;
      fb.reps = Z;
    }
    fb.strata = stratify_by_holonomy(L, p, Z);
    r.z_total += fb.z;
    if (fb.classes >= 0) r.class_total += fb.classes;
    r.fibers.push_back(std::move(fb));
  }
  if (weak && p == 2) r.weak_classes = weak_class_count(G, N, budget, shards);
  return r;
}

}  // namespace parityc
