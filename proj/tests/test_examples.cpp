#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "examples.hpp"

using namespace primhom;

TEST_CASE("torus cover verification at p = 3") {
  auto r = torus_cover_verify(3);
  CHECK(r.ok);
  CHECK(r.matrix_identities);
  // hand count: families are symmetric, 16 vectors each at p = 3
  CHECK(r.family_count[0] == 16);
  CHECK(r.family_count[1] == 16);
  CHECK(r.family_count[2] == 16);
  CHECK(r.qualifying == 48);
}

TEST_CASE("torus cover verification at p = 5") {
  auto r = torus_cover_verify(5);
  CHECK(r.ok);
  // per family: 4*5*5 = 100 candidates minus 4 degenerate ones
  CHECK(r.family_count[0] == 96);
  CHECK(r.family_count[1] == 96);
  CHECK(r.family_count[2] == 96);
  CHECK(r.qualifying == 288);
}

TEST_CASE("torus cover rejects bad p") {
  CHECK_THROWS_AS(torus_cover_verify(4), PHError);
  CHECK_THROWS_AS(torus_cover_verify(9), PHError);
}

TEST_CASE("order-32 example report") {
  auto r = gamma_example_verify();
  CHECK(r.ok);
  CHECK(r.order == 32);
  CHECK(r.rho_is_homomorphism);
  CHECK(r.generator_matrices_order_four);
  CHECK(r.commutator_maps_to_minus_identity);
  CHECK(r.identity_not_primitive_image);
  CHECK(r.no_eigenvalue_one_on_primitive_images);
  CHECK(r.nontrivial_kernel_element);
  CHECK(r.rho_row_excluded_from_irrpr);
  CHECK(r.cw_dim == 33);
  CHECK(r.upper_bound_dim < 33);
}

TEST_CASE("sphere sweep, rank 3, small slice: no failures") {
  auto r = sphere_catalog_search(48, 3);
  CHECK(r.ok);
  CHECK(r.failures.empty());
  CHECK(r.groups > 0);
  CHECK(r.surjections > 0);
}

TEST_CASE("sphere sweep at rank 2 rediscovers the order-24 counterexample") {
  auto r = sphere_catalog_search(24, 2);
  bool found = false;
  for (const auto& f : r.failures)
    if (f.group == "metacyclic(3,8,2)") found = true;
  CHECK(found);
  // and the two-puncture example group also has rank-2 counterexamples
  bool found_ii = false;
  for (const auto& f : r.failures)
    if (f.group == "type_ii(24)") found_ii = true;
  CHECK(found_ii);
}

TEST_CASE("sweep verdicts are invariant under conjugating the tuple") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  int a = g->generators()[0], b = g->generators()[1];
  for (int x : {1, 5, 9}) {
    Hom h1{g, {a, b}};
    Hom h2{g, {g->conj(a, x), g->conj(b, x)}};
    CHECK(has_primitive_in_kernel(h1, false).first == has_primitive_in_kernel(h2, false).first);
  }
}

TEST_CASE("trivial group is vacuously fine at rank 3") {
  auto r = sphere_catalog_search(1, 3);
  CHECK(r.ok);
  CHECK(r.groups == 1);
}
