#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "json_io.hpp"
#include "surface.hpp"

using namespace primhom;

namespace {
bool contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}
}  // namespace

TEST_CASE("built-in preset validates") {
  auto p = torus_two_punctures_preset();
  CHECK(p.rank == 3);
  CHECK(p.autos.size() == 4);
  CHECK_NOTHROW(validate_preset(p));
  // every substitution preserves the peripheral classes individually here
  for (const auto& a : p.autos) {
    Word im0 = substitute(p.peripheral[0], a.subst);
    CHECK(conjugate_in_free_group(im0, p.peripheral[0]));
    Word im1 = substitute(p.peripheral[1], a.subst);
    CHECK(conjugate_in_free_group(im1, p.peripheral[1]));
  }
}

TEST_CASE("preset rejects non-automorphisms and peripheral violations") {
  auto p = torus_two_punctures_preset();
  p.autos[0].inverse[0] = Word({1});  // wrong inverse for a -> cac^-1
  CHECK_THROWS_AS(validate_preset(p), PHError);

  auto q = torus_two_punctures_preset();
  // a -> ab is an automorphism of F3 but maps the puncture class off itself
  q.autos[0] = BasisAuto{{Word({1, 2}), Word({2}), Word({3})},
                         {Word({1, -2}), Word({2}), Word({3})}};
  CHECK_THROWS_AS(validate_preset(q), PHError);
}

TEST_CASE("preset JSON round trip") {
  auto p = torus_two_punctures_preset();
  Json j = preset_to_json(p);
  auto q = preset_from_json(j);
  CHECK(q.rank == p.rank);
  CHECK(q.autos.size() == p.autos.size());
  CHECK(q.seeds.size() == p.seeds.size());
}

TEST_CASE("trivial target: only the identity is an scc image") {
  auto t = FiniteGroup::from_permutations({{0}});
  Hom h{t, {0, 0, 0}};
  auto images = scc_image_set(h, torus_two_punctures_preset(), {});
  CHECK(images == std::vector<int>{0});
}

TEST_CASE("two-puncture example group: scc images avoid the identity, primitives do not") {
  auto g = sphere_type_ii_group();
  CHECK(g->order() == 24);
  Hom h{g, {g->generators()[0], g->generators()[1], g->generators()[2]}};
  REQUIRE(h.surjective());

  auto scc = scc_image_set(h, torus_two_punctures_preset(), {});
  CHECK_FALSE(contains(scc, 0));

  auto prim = primitive_image_set(h, {}).images;
  CHECK(contains(prim, 0));

  // every scc image is a primitive image (the seeds are primitive words)
  for (int x : scc) CHECK(contains(prim, x));

  auto t = character_table(g);
  auto rows = irrscc_rows(h, *t, torus_two_punctures_preset(), {});
  CHECK((int)rows.size() < t->num_rows());
  CHECK(rows[0] == 0);
}

TEST_CASE("scc image sets are conjugation- and inversion-closed") {
  auto g = sphere_type_ii_group();
  Hom h{g, {g->generators()[0], g->generators()[1], g->generators()[2]}};
  auto scc = scc_image_set(h, torus_two_punctures_preset(), {});
  for (int x : scc) {
    CHECK(contains(scc, g->inv(x)));
    for (int c : h.images) CHECK(contains(scc, g->conj(x, c)));
  }
}

TEST_CASE("abelian targets: scc images give the whole character table") {
  for (auto g : {FiniteGroup::abelian({6}), FiniteGroup::abelian({2, 4})}) {
    std::vector<int> im(g->generators().begin(), g->generators().end());
    im.resize(3, 0);
    // make it surjective with nonzero third image where possible
    if (im[2] == 0) im[2] = im[0];
    Hom h{g, im};
    REQUIRE(h.surjective());
    auto t = character_table(g);
    auto rows = irrscc_rows(h, *t, torus_two_punctures_preset(), {});
    CHECK((int)rows.size() == t->num_rows());
    auto prows = irrpr_rows(h, *t, {});
    CHECK(rows == prows);
  }
}

TEST_CASE("preset rank must match the homomorphism") {
  auto z6 = FiniteGroup::abelian({6});
  Hom h{z6, {2, 3}};
  CHECK_THROWS_AS(scc_image_set(h, torus_two_punctures_preset(), {}), PHError);
}
