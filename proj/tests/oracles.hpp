// Test-only reference implementations, kept deliberately naive and
// independent of the library's algorithms so the two can cross-check.
#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "parityc/parityc.hpp"

// Matcher for CHECK_THROWS_MATCHES(expr, parityc::error, errc_is(code)).
class ErrcIs : public Catch::Matchers::MatcherGenericBase {
 public:
  explicit ErrcIs(parityc::errc c) : code_(c) {}
  bool match(const parityc::error& e) const { return e.code == code_; }
  std::string describe() const override {
    return std::string("has error code ") + parityc::errc_name(code_);
  }

 private:
  parityc::errc code_;
};

inline ErrcIs errc_is(parityc::errc c) { return ErrcIs(c); }

namespace testo {

// Count automorphisms by scanning every permutation of the element set.
// Factorial cost, usable for |N| <= 8.
inline long long automorphism_count_by_permutation_scan(const parityc::FiniteGroup& N) {
  std::vector<int> perm(N.n);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    if (perm[0] != 0) continue;  // must fix the identity
    bool ok = true;
    for (int a = 0; a < N.n && ok; ++a)
      for (int b = 0; b < N.n && ok; ++b)
        if (perm[N.mul(a, b)] != N.mul(perm[a], perm[b])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Union-find over all degree-2 cocycles of every quasiaction, joining two
// cocycles whenever some gauge table relates them.  Quadratic in the number
// of cocycles and exhaustive over gauges, unlike the census walk which only
// expands orbits outward from each node.
inline int weak_class_count_by_pairwise_scan(parityc::GroupRef G, parityc::GroupRef N) {
  using namespace parityc;
  QuasiactionEnum qa = enumerate_quasiactions(G, N);
  std::vector<Cochain> nodes;
  for (int li = 0; li < qa.count(); ++li) {
    Quasiaction L = qa.get(li);
    for (const std::vector<int>& f : enumerate_cocycles(L, 2)) nodes.push_back(Cochain{L, 2, f});
  }
  const int n = static_cast<int>(nodes.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };

  // All normalized gauge tables gamma : G -> N with gamma(1) = 1.
  std::vector<std::vector<int>> gammas;
  std::vector<int> g(G->n, 0);
  while (true) {
    gammas.push_back(g);
    int i = 1;
    while (i < G->n && ++g[i] == N->n) g[i++] = 0;
    if (i == G->n) break;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (find(i) == find(j)) continue;
      for (const auto& gamma : gammas) {
        if (is_weak_cohomologous(nodes[i], nodes[j], gamma)) {
          parent[find(i)] = find(j);
          break;
        }
      }
    }
  int classes = 0;
  for (int i = 0; i < n; ++i) classes += (find(i) == i);
  return classes;
}

}  // namespace testo
