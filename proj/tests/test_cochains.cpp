#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "parityc/cochain.hpp"

using namespace parityc;

namespace {

std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

Quasiaction action_with(GroupRef G, GroupRef N, std::vector<std::vector<int>> maps) {
  Quasiaction L;
  L.G = std::move(G);
  L.N = std::move(N);
  L.maps = std::move(maps);
  return L;
}

}  // namespace

TEST_CASE("tuple packing and free positions") {
  int args[4];
  unpack_tuple(27, 4, 3, args);  // 27 = ((1*4)+2)*4+3
  CHECK(args[0] == 1);
  CHECK(args[1] == 2);
  CHECK(args[2] == 3);
  CHECK(pack_tuple(args, 4, 3) == 27);
  for (long long t = 0; t < tuple_count(3, 3); ++t) {
    unpack_tuple(t, 3, 3, args);
    CHECK(pack_tuple(args, 3, 3) == t);
  }
  CHECK(free_positions(2, 0).size() == 1);  // the single empty tuple
  CHECK(free_positions(4, 1).size() == 3);
  CHECK(free_positions(2, 2).size() == 1);
  CHECK(free_positions(3, 2).size() == 4);
  CHECK(free_positions(2, 3).size() == 1);
  // A free position never has an identity argument.
  for (long long t : free_positions(3, 2)) {
    unpack_tuple(t, 3, 2, args);
    CHECK(args[0] != 0);
    CHECK(args[1] != 0);
  }
}

TEST_CASE("quasiaction validation and the action test") {
  GroupRef z3 = builtin_group("cyclic:3");
  Quasiaction triv = trivial_quasiaction(z3, z3);
  CHECK_NOTHROW(validate_quasiaction(triv));
  CHECK(is_action(triv));

  Quasiaction wrong_count = triv;
  wrong_count.maps.pop_back();
  CHECK_THROWS_MATCHES(validate_quasiaction(wrong_count), error, errc_is(errc::degree_mismatch));

  Quasiaction not_auto = triv;
  not_auto.maps[1] = {0, 0, 0};
  CHECK_THROWS_MATCHES(validate_quasiaction(not_auto), error, errc_is(errc::target_mismatch));

  Quasiaction shifted = triv;
  shifted.maps[0] = {0, 2, 1};  // inversion at the identity slot
  CHECK_THROWS_MATCHES(validate_quasiaction(shifted), error, errc_is(errc::not_normalized));

  // L = (id, inv, id) on Z3 is a quasiaction but not an action.
  Quasiaction mixed = action_with(z3, z3, {identity_map(3), {0, 2, 1}, identity_map(3)});
  CHECK_NOTHROW(validate_quasiaction(mixed));
  CHECK_FALSE(is_action(mixed));

  AutomorphismGroup A = automorphism_group(z3);
  CHECK(quasiaction_from_indices(z3, A, {0, 1, 0}).maps == mixed.maps);
  CHECK_THROWS_MATCHES(quasiaction_from_indices(z3, A, {0, 1}), error,
                       errc_is(errc::degree_mismatch));
}

TEST_CASE("cochain validation failure modes") {
  GroupRef z2 = builtin_group("cyclic:2");
  Quasiaction L = trivial_quasiaction(z2, builtin_group("cyclic:3"));

  Cochain bad_degree{L, 4, {}};
  CHECK_THROWS_MATCHES(validate_cochain(bad_degree), error, errc_is(errc::degree_out_of_range));
  Cochain bad_size{L, 2, {0, 0, 0}};
  CHECK_THROWS_MATCHES(validate_cochain(bad_size), error, errc_is(errc::degree_mismatch));
  Cochain bad_value{L, 2, {0, 0, 0, 7}};
  CHECK_THROWS_MATCHES(validate_cochain(bad_value), error, errc_is(errc::target_mismatch));
  Cochain bad_norm{L, 2, {0, 1, 0, 2}};  // value at (e, a) must be the unit
  CHECK_THROWS_MATCHES(validate_cochain(bad_norm), error, errc_is(errc::not_normalized));
  Cochain degree_zero{L, 0, {2}};  // no arguments, so no normalization constraint
  CHECK_NOTHROW(validate_cochain(degree_zero));
  CHECK_NOTHROW(validate_cochain(identity_cochain(L, 3)));
}

TEST_CASE("boundary of a degree-1 table over Z2") {
  GroupRef z2 = builtin_group("cyclic:2");
  Cochain s{trivial_quasiaction(z2, z2), 1, {0, 1}};
  CHECK(parity_boundary(s, +1) == std::vector<int>{0, 1, 1, 0});
  CHECK(parity_boundary(s, -1) == std::vector<int>{0, 1, 1, 0});
  CHECK(is_cocycle(s));
  CHECK(delta(s).f == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("degree-0 boundary applies the quasiaction on the plus side") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef s3 = builtin_group("sym:3");
  Quasiaction L = action_with(z2, s3, {identity_map(6), conjugation_map(*s3, 1)});
  Cochain x{L, 0, {4}};
  // Conjugation by the rotation r sends rs to s.
  CHECK(parity_boundary(x, +1) == std::vector<int>{4, 3});
  CHECK(parity_boundary(x, -1) == std::vector<int>{4, 4});
}

TEST_CASE("degree-2 boundary: order of the noncommuting factors") {
  GroupRef z3 = builtin_group("cyclic:3");
  GroupRef s3 = builtin_group("sym:3");
  Quasiaction L = trivial_quasiaction(z3, s3);
  // f(1,1) = s, f(1,2) = r, rest forced or left at the unit.
  Cochain f{L, 2, {0, 0, 0, 0, 3, 1, 0, 0, 0}};
  auto plus = parity_boundary(f, +1);
  auto minus = parity_boundary(f, -1);
  const long long t111 = (1 * 3 + 1) * 3 + 1;
  // d+ f(1,1,1) = f(1,1) . f(1,2) = s r = r^2 s;  d- f(1,1,1) = f(1,1) . f(2,1) = s.
  CHECK(plus[t111] == 5);
  CHECK(minus[t111] == 3);
  CHECK_FALSE(is_cocycle(f));
  // delta = d+ . (d-)^{-1} pointwise: (r^2 s)(s)^{-1} = r^2.
  CHECK(delta(f).f[t111] == 2);
  // bar-delta multiplies the other way: (s)^{-1}(r^2 s) = s r^2 s = r.
  CHECK(delta(f, true).f[t111] == 1);
}

TEST_CASE("generic coface product equals the explicit rows") {
  GroupRef z3 = builtin_group("cyclic:3");
  GroupRef s3 = builtin_group("sym:3");
  AutomorphismGroup A = automorphism_group(s3);
  Quasiaction twisted = quasiaction_from_indices(z3, A, {0, 2, 4});
  for (const Quasiaction& L : {trivial_quasiaction(z3, s3), twisted}) {
    for (int p = 0; p <= 3; ++p) {
      Cochain c = identity_cochain(L, p);
      auto free = free_positions(z3->n, p);
      for (std::size_t j = 0; j < free.size(); ++j)
        c.f[free[j]] = static_cast<int>((7 * j + p + 1) % 6);
      CAPTURE(p, c.f);
      CHECK(parity_boundary(c, +1) == parity_boundary_explicit(c, +1));
      CHECK(parity_boundary(c, -1) == parity_boundary_explicit(c, -1));
    }
  }
}

TEST_CASE("cofaces of a degree-1 table") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef s3 = builtin_group("sym:3");
  Quasiaction L = action_with(z2, s3, {identity_map(6), conjugation_map(*s3, 3)});
  Cochain s{L, 1, {0, 4}};
  // d0 s(a,b) = L_a(s(b)), d1 s(a,b) = s(ab), d2 s(a,b) = s(a).
  CHECK(coface(s, 0) == std::vector<int>{0, 4, 0, L.apply(1, 4)});
  CHECK(coface(s, 1) == std::vector<int>{0, 4, 4, 0});
  CHECK(coface(s, 2) == std::vector<int>{0, 0, 4, 4});
  CHECK_THROWS_MATCHES(coface(s, 3), error, errc_is(errc::degree_out_of_range));
  CHECK_THROWS_MATCHES(coface(s, -1), error, errc_is(errc::degree_out_of_range));
}

TEST_CASE("cobordism detection") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef z3 = builtin_group("cyclic:3");
  Cochain w{trivial_quasiaction(z2, z3), 1, {0, 1}};
  std::vector<int> minus = {0, 1, 1, 0};  // w(ab)
  std::vector<int> plus = {0, 1, 1, 2};   // w(b) + w(a)
  CHECK(is_cobordant(minus, plus, w));
  CHECK_FALSE(is_cobordant(plus, minus, w));
  CHECK_THROWS_MATCHES(is_cobordant({0, 1}, plus, w), error, errc_is(errc::degree_mismatch));
}

TEST_CASE("cohomologous orderings disagree for a nonabelian fiber") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef s3 = builtin_group("sym:3");
  Cochain w{trivial_quasiaction(z2, s3), 1, {0, 1}};
  std::vector<int> c = {0, 0, 0, 3};
  std::vector<int> moved = cohomologous_move(c, w);
  // plus(1,1) = w(1) w(1) = r^2, minus(1,1) = w(0) = e, so c' = r^2 s = index 5.
  CHECK(moved == std::vector<int>{0, 0, 0, 5});
  CHECK(is_cohomologous(c, moved, w));
  CHECK_FALSE(is_cohomologous(c, moved, w, /*variant_ordering=*/true));
  // The variant bracketing puts the plus boundary on the other side: r s = 4.
  std::vector<int> variant = {0, 0, 0, 4};
  CHECK(is_cohomologous(c, variant, w, /*variant_ordering=*/true));
  CHECK_FALSE(is_cohomologous(c, variant, w));
  // The variant bracketing is exactly the reverse-direction move.
  CHECK(is_cohomologous(moved, c, w, true));
  GroupRef z3 = builtin_group("cyclic:3");
  Cochain wa{trivial_quasiaction(z2, z3), 1, {0, 2}};
  std::vector<int> ca = {0, 0, 0, 1};
  std::vector<int> ma = cohomologous_move(ca, wa);
  CHECK(is_cohomologous(ca, ma, wa));
  CHECK(is_cohomologous(ma, ca, wa, true));
  CHECK_FALSE(is_cohomologous(ca, ma, wa, true));  // the shift here is not 2-torsion
}

TEST_CASE("gauge moves: witness relation and cocycle preservation") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef s3 = builtin_group("sym:3");
  Cochain c{trivial_quasiaction(z2, s3), 2, {0, 0, 0, 3}};
  REQUIRE(is_cocycle(c));
  std::vector<int> gamma = {0, 1};
  Cochain moved = conjugate_by(c, gamma);
  CHECK(moved.L.maps[0] == identity_map(6));
  CHECK(moved.L.maps[1] == conjugation_map(*s3, 1));
  CHECK(moved.f == std::vector<int>{0, 0, 0, 5});
  CHECK(is_weak_cohomologous(c, moved, gamma));
  // This cocycle is not absolute-integrable (s is not central), and indeed
  // the gauge image fails to be closed.
  CHECK_FALSE(is_cocycle(moved));

  // Abelian fiber: the gauge move is a coboundary shift and stays closed.
  GroupRef z4 = builtin_group("cyclic:4");
  Quasiaction inv = action_with(z2, z4, {identity_map(4), {0, 3, 2, 1}});
  Cochain ca{inv, 2, {0, 0, 0, 2}};
  REQUIRE(is_cocycle(ca));
  Cochain mova = conjugate_by(ca, {0, 3});
  CHECK(is_cocycle(mova));
  CHECK(is_weak_cohomologous(ca, mova, {0, 3}));

  CHECK_THROWS_MATCHES(conjugate_by(c, {0}), error, errc_is(errc::degree_mismatch));
  CHECK_THROWS_MATCHES(conjugate_by(c, {1, 0}), error, errc_is(errc::not_normalized));
  Cochain deg1{trivial_quasiaction(z2, s3), 1, {0, 3}};
  CHECK_THROWS_MATCHES(conjugate_by(deg1, gamma), error, errc_is(errc::degree_mismatch));
  CHECK_THROWS_MATCHES(is_weak_cohomologous(deg1, deg1, gamma), error,
                       errc_is(errc::degree_mismatch));
}

TEST_CASE("pushing along conjugation is a chain map") {
  GroupRef z2 = builtin_group("cyclic:2");
  GroupRef s3 = builtin_group("sym:3");
  AutomorphismGroup A = automorphism_group(s3);
  Cochain c{trivial_quasiaction(z2, s3), 1, {0, 3}};
  Cochain pushed = push_conjugation(c, A);
  CHECK(pushed.N().n == 6);  // Aut(S3)
  CHECK(pushed.f[0] == 0);
  CHECK(pushed.f[1] == A.conj_index(3));
  for (int sign : {+1, -1}) {
    Cochain bd{c.L, 2, parity_boundary(c, sign)};
    CHECK(push_conjugation(bd, A).f == parity_boundary(pushed, sign));
  }
  AutomorphismGroup wrong = automorphism_group(builtin_group("cyclic:3"));
  CHECK_THROWS_MATCHES(push_conjugation(c, wrong), error, errc_is(errc::fiber_mismatch));
}

TEST_CASE("center-fiber-inner exactness counts") {
  GroupRef z2 = builtin_group("cyclic:2");
  ExactnessReport s3r = exactness_check(z2, builtin_group("sym:3"), 1);
  CHECK(s3r.total == 6);
  CHECK(s3r.kernel == 1);
  CHECK(s3r.center_valued == 1);
  CHECK(s3r.image == 6);
  CHECK(s3r.inner_valued == 6);
  CHECK(s3r.kernel_matches_center);
  CHECK(s3r.image_matches_inner);

  ExactnessReport q8r = exactness_check(z2, builtin_group("quat:8"), 1);
  CHECK(q8r.total == 8);
  CHECK(q8r.kernel == 2);
  CHECK(q8r.center_valued == 2);
  CHECK(q8r.image == 4);
  CHECK(q8r.inner_valued == 4);
  CHECK(q8r.kernel_matches_center);
  CHECK(q8r.image_matches_inner);

  CHECK_THROWS_MATCHES(exactness_check(z2, builtin_group("sym:3"), 2, 5), error,
                       errc_is(errc::budget_exceeded));
  CHECK_THROWS_MATCHES(exactness_check(z2, builtin_group("sym:3"), 9), error,
                       errc_is(errc::degree_out_of_range));
}
