#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orbit.hpp"

using namespace primhom;

namespace {

bool contains(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

TEST_CASE("Z/6 with images (2,3): kernel primitive despite non-redundancy") {
  auto z6 = FiniteGroup::abelian({6});
  Hom h{z6, {2, 3}};
  CHECK_FALSE(is_redundant(*z6, Tuple{h.images}));
  OrbitOptions o;
  o.track_words = true;
  o.compute_redundant = true;
  auto r = primitive_image_set(h, o);
  CHECK(r.images == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(contains(r.images, 0));
  CHECK(r.component_has_redundant);
  // the printed witness a1 (a2 a1^-1)^-2 evaluates to 0
  Word printed({1, 1, -2, 1, -2});
  CHECK(evaluate(h, printed) == 0);
  auto [found, wit] = has_primitive_in_kernel(h);
  CHECK(found);
  REQUIRE(wit.has_value());
  CHECK(evaluate(h, *wit) == 0);
}

TEST_CASE("trivial target: images = {identity}") {
  auto t = FiniteGroup::from_permutations({{0}});
  Hom h{t, {0, 0}};
  auto r = primitive_image_set(h, {});
  CHECK(r.images == std::vector<int>{0});
}

TEST_CASE("order-24 counterexample: no primitive in the kernel") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  Hom h{g, {g->generators()[0], g->generators()[1]}};
  auto r = primitive_image_set(h, {});
  CHECK_FALSE(contains(r.images, 0));
  CHECK(r.visited <= 576);
  auto [found, wit] = has_primitive_in_kernel(h);
  CHECK_FALSE(found);
  CHECK_FALSE(wit.has_value());
}

TEST_CASE("an identity image makes a generator itself the witness") {
  auto z4 = FiniteGroup::abelian({4});
  Hom h{z4, {1, 0}};
  auto [found, wit] = has_primitive_in_kernel(h);
  CHECK(found);
  REQUIRE(wit.has_value());
  CHECK(evaluate(h, *wit) == 0);
}

TEST_CASE("witnesses evaluate to their images and are BFS-minimal first") {
  auto g = FiniteGroup::metacyclic(3, 4, 2);
  Hom h{g, {g->generators()[0], g->generators()[1]}};
  OrbitOptions o;
  o.track_words = true;
  auto r = primitive_image_set(h, o);
  for (auto& [img, w] : r.witnesses) CHECK(evaluate(h, w) == img);
  // the original generators witness themselves
  for (int i = 0; i < 2; ++i) {
    auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                           [&](auto& p) { return p.first == h.images[i]; });
    REQUIRE(it != r.witnesses.end());
    CHECK(it->second == Word::gen(i + 1));
  }
}

TEST_CASE("image sets are inverse- and conjugation-closed") {
  // asserted internally on every full run; exercise a few targets
  for (auto g : {FiniteGroup::metacyclic(3, 8, 2), FiniteGroup::nilpotent2(2, 4, {{2}}),
                 FiniteGroup::metacyclic_ext(3, 4, 2, 1, 3, 2)}) {
    std::vector<int> images(g->generators().begin(), g->generators().end());
    Hom h{g, images};
    auto r = primitive_image_set(h, {});
    for (int x : r.images) {
      CHECK(contains(r.images, g->inv(x)));
      for (int c : h.images) CHECK(contains(r.images, g->conj(x, c)));
    }
  }
}

TEST_CASE("seed choice within a component does not change the image set") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  int a = g->generators()[0], b = g->generators()[1];
  Hom h1{g, {a, b}};
  // apply the basis change (a1, a2) -> (a1 a2, a2), staying in the component
  Hom h2{g, {g->mult(a, b), b}};
  CHECK(primitive_image_set(h1, {}).images == primitive_image_set(h2, {}).images);
}

TEST_CASE("state budget is enforced") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  Hom h{g, {g->generators()[0], g->generators()[1]}};
  OrbitOptions o;
  o.state_budget = 10;
  CHECK_THROWS_AS(primitive_image_set(h, o), PHError);
}

TEST_CASE("abelian and 2-step nilpotent targets at rank >= 3 have kernel primitives") {
  for (auto g : {FiniteGroup::abelian({4, 4}), FiniteGroup::abelian({12}),
                 FiniteGroup::nilpotent2(2, 2), FiniteGroup::nilpotent2(2, 4, {{2}})}) {
    std::vector<int> images(g->generators().begin(), g->generators().end());
    images.resize(3, images.back());  // rank 3, still surjective
    Hom h{g, images};
    REQUIRE(h.surjective());
    CHECK(has_primitive_in_kernel(h, false).first);
  }
}

TEST_CASE("solvable targets with rank above the generating size") {
  // d(G) = 2 for these; at rank 3 every surjection has a primitive in the kernel
  for (auto g : {FiniteGroup::metacyclic(3, 8, 2), FiniteGroup::metacyclic(5, 4, 2)}) {
    std::vector<int> im{g->generators()[0], g->generators()[1], g->generators()[1]};
    Hom h{g, im};
    REQUIRE(h.surjective());
    CHECK(has_primitive_in_kernel(h, false).first);
  }
}

TEST_CASE("walking the graph: redundancy in the component iff kernel primitive") {
  std::vector<std::pair<GroupPtr, std::vector<int>>> instances;
  auto add = [&](GroupPtr g) {
    std::vector<int> im(g->generators().begin(), g->generators().end());
    instances.push_back({g, im});
  };
  add(FiniteGroup::abelian({6}));
  add(FiniteGroup::metacyclic(3, 8, 2));
  add(FiniteGroup::nilpotent2(2, 4, {{2}}));
  add(FiniteGroup::abelian({2, 2}));
  instances.push_back({FiniteGroup::abelian({6}), {2, 3}});
  instances.push_back({FiniteGroup::abelian({4}), {1, 2}});
  for (auto& [g, im] : instances) {
    Hom h{g, im};
    OrbitOptions o;
    o.compute_redundant = true;
    auto r = primitive_image_set(h, o);
    REQUIRE(r.redundant_computed);
    CHECK(r.component_has_redundant == contains(r.images, 0));
  }
}

TEST_CASE("irrpr: abelian surjections see every irreducible") {
  for (auto g : {FiniteGroup::abelian({6}), FiniteGroup::abelian({4, 2}),
                 FiniteGroup::abelian({9})}) {
    auto t = character_table(g);
    std::vector<int> im(g->generators().begin(), g->generators().end());
    if (im.size() < 2) im.push_back(im.back());
    Hom h{g, im};
    auto rows = irrpr_rows(h, *t, {});
    CHECK((int)rows.size() == t->num_rows());
  }
}

TEST_CASE("irrpr always contains the trivial row") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  auto t = character_table(g);
  Hom h{g, {g->generators()[0], g->generators()[1]}};
  auto rows = irrpr_rows(h, *t, {});
  REQUIRE(!rows.empty());
  CHECK(rows[0] == 0);
  CHECK((int)rows.size() < t->num_rows());  // free sphere action: some row missing
}

TEST_CASE("Burnside basis criterion for p-groups") {
  // (Z/2)^2 with the standard basis: a basis mod Frattini, no kernel primitive
  auto v4 = FiniteGroup::abelian({2, 2});
  Hom h1{v4, {v4->generators()[0], v4->generators()[1]}};
  CHECK(frattini_basis_check(h1));
  CHECK_FALSE(has_primitive_in_kernel(h1, false).first);

  // Z/4 with images (1, 2): dependent mod Frattini, so a kernel primitive exists
  auto z4 = FiniteGroup::abelian({4});
  Hom h2{z4, {1, 2}};
  CHECK_FALSE(frattini_basis_check(h2));
  CHECK(has_primitive_in_kernel(h2, false).first);

  // the order-32 group with its standard surjection
  auto gamma = FiniteGroup::nilpotent2(2, 4, {{2}});
  Hom h3{gamma, {gamma->generators()[0], gamma->generators()[1]}};
  CHECK(frattini_basis_check(h3));
  CHECK_FALSE(has_primitive_in_kernel(h3, false).first);

  CHECK_THROWS_AS(frattini_basis_check(Hom{FiniteGroup::abelian({6}), {1, 1}}), PHError);
}

TEST_CASE("automorphism orbit engine") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  Hom h{g, {g->generators()[0], g->generators()[1]}};

  // with no substitutions only the seeds' direct images appear (closed up)
  std::vector<int> base = automorphism_orbit_images(h, {}, {Word::gen(1)}, {});
  CHECK(contains(base, h.images[0]));
  CHECK_FALSE(contains(base, 0));

  // Nielsen moves as substitutions reproduce the primitive image set
  std::vector<BasisAuto> nielsen = {
      {{Word({2, 1}), Word({2})}, {Word({-2, 1}), Word({2})}},    // a1 -> a2 a1
      {{Word({1, 2}), Word({2})}, {Word({1, -2}), Word({2})}},    // a1 -> a1 a2
      {{Word({-1}), Word({2})}, {Word({-1}), Word({2})}},         // invert a1
      {{Word({2}), Word({1})}, {Word({2}), Word({1})}},           // swap
  };
  auto via_autos = automorphism_orbit_images(h, nielsen, {Word::gen(1)}, {});
  auto direct = primitive_image_set(h, {}).images;
  CHECK(via_autos == direct);

  // a non-automorphism pair is rejected
  std::vector<BasisAuto> bad = {{{Word({1, 1}), Word({2})}, {Word({1}), Word({2})}}};
  CHECK_THROWS_AS(automorphism_orbit_images(h, bad, {Word::gen(1)}, {}), PHError);
}

TEST_CASE("rank-1 homomorphism") {
  auto z6 = FiniteGroup::abelian({6});
  Hom h{z6, {2}};
  auto r = primitive_image_set(h, {});
  // primitives of F_1 are a1 and its inverse
  CHECK(r.images == std::vector<int>{2, 4});
}

TEST_CASE("word utilities") {
  Word w({1, 2, -2, -1, 3});
  CHECK(w == Word({3}));
  Word u({1, 2, 1});
  CHECK((u * u.inverse()).empty());
  CHECK(u.inverse() == Word({-1, -2, -1}));
  CHECK(conjugate_in_free_group(Word({1, 2}), Word({2, 1})));
  CHECK_FALSE(conjugate_in_free_group(Word({1, 2}), Word({1, -2})));
  CHECK(substitute(Word({1, -2}), {Word({2}), Word({1})}) == Word({2, -1}));
  CHECK(Word({1, 1, -2}).str() == "a1^2*a2^-1");
}

TEST_CASE("sweeper verdicts agree with the full search") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  KernelPrimitiveSweeper sweeper(g, 2, 1000000);
  int a = g->generators()[0], b = g->generators()[1];
  CHECK_FALSE(sweeper.verdict({a, b}));
  // (a, b^2) generates the cyclic subgroup of order 12; its component does
  // reach an identity entry
  CHECK(sweeper.verdict({a, g->power(b, 2)}));
  auto z6 = FiniteGroup::abelian({6});
  KernelPrimitiveSweeper s6(z6, 2, 1000000);
  CHECK(s6.verdict({2, 3}));
  Hom h6{z6, {2, 3}};
  CHECK(s6.verdict({2, 3}) == has_primitive_in_kernel(h6, false).first);
}
