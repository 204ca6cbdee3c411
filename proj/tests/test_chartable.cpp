#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartable.hpp"
#include "json_io.hpp"

using namespace primhom;

TEST_CASE("Z/2 table") {
  auto t = character_table(FiniteGroup::abelian({2}));
  REQUIRE(t->num_rows() == 2);
  CHECK(t->rows[0] == std::vector<Cyclo>{Cyclo::one(), Cyclo::one()});
  CHECK(t->rows[1] == std::vector<Cyclo>{Cyclo::one(), Cyclo(Rat(-1))});
}

TEST_CASE("trivial group table") {
  auto t = character_table(FiniteGroup::from_permutations({{0}}));
  CHECK(t->num_rows() == 1);
  CHECK(t->dims[0] == 1);
}

TEST_CASE("S3 degrees and fixed spaces") {
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto t = character_table(s3);
  REQUIRE(t->num_rows() == 3);
  CHECK(t->dims == std::vector<int>{1, 1, 2});

  // sign character at a transposition
  int transposition = -1, three_cycle = -1;
  for (int x = 0; x < 6; ++x) {
    if (s3->element_order(x) == 2) transposition = x;
    if (s3->element_order(x) == 3) three_cycle = x;
  }
  CHECK(dim_fixed_subspace(*t, 0, transposition) == 1);  // trivial rep
  CHECK(dim_fixed_subspace(*t, 1, transposition) == 0);  // (1 + (-1))/2
  // degree-2 character at a 3-cycle: (2 - 1 - 1)/3 = 0; the oracle is the
  // explicit rotation matrix [[0,-1],[1,-1]], whose fixed space is 0 since
  // det(R - I) = (0-1)(-1-1) - (-1)(1) = 3 != 0
  CHECK(dim_fixed_subspace(*t, 2, three_cycle) == 0);
}

TEST_CASE("order-24 metacyclic table: sum of squared degrees") {
  auto t = character_table(FiniteGroup::metacyclic(3, 8, 2));
  long long s = 0;
  for (int d : t->dims) s += (long long)d * d;
  CHECK(s == 24);
}

TEST_CASE("tables are deterministic") {
  auto g = FiniteGroup::metacyclic(3, 4, 2);
  auto a = table_to_json(*character_table(g)).dump();
  auto b = table_to_json(*character_table(FiniteGroup::metacyclic(3, 4, 2))).dump();
  CHECK(a == b);
}

TEST_CASE("dim_fixed_subspace: trivial character is 1 everywhere") {
  auto g = FiniteGroup::metacyclic(3, 4, 2);
  auto t = character_table(g);
  for (int x = 0; x < g->order(); ++x) CHECK(dim_fixed_subspace(*t, 0, x) == 1);
}

TEST_CASE("induced character examples and Frobenius reciprocity") {
  auto z4 = FiniteGroup::abelian({4});
  auto t4 = character_table(z4);

  // g = identity: the regular character
  auto reg = induced_trivial_character(*z4, 0);
  CHECK(reg[0] == Cyclo(Rat(4)));
  for (int c = 1; c < 4; ++c) CHECK(reg[c].is_zero());

  // g = 2 (order 2): values (2, 0, 2, 0) on the classes of 0,1,2,3
  auto ind = induced_trivial_character(*z4, 2);
  CHECK(ind[z4->class_of(0)] == Cyclo(Rat(2)));
  CHECK(ind[z4->class_of(1)].is_zero());
  CHECK(ind[z4->class_of(2)] == Cyclo(Rat(2)));
  CHECK(ind[z4->class_of(3)].is_zero());

  // reciprocity on a nonabelian group, every element and row
  auto g24 = FiniteGroup::metacyclic(3, 8, 2);
  auto t24 = character_table(g24);
  for (int x = 0; x < g24->order(); ++x) {
    auto indx = induced_trivial_character(*g24, x);
    CHECK(class_function_inner(*g24, indx, t24->rows[0]) == Cyclo::one());
    for (int r = 0; r < t24->num_rows(); ++r)
      CHECK(class_function_inner(*g24, indx, t24->rows[r]) ==
            Cyclo(Rat(dim_fixed_subspace(*t24, r, x))));
  }
  (void)t4;
}

TEST_CASE("regular representation fixed dimension identity, exhaustively") {
  for (auto g : {FiniteGroup::abelian({6}), FiniteGroup::metacyclic(3, 8, 2),
                 FiniteGroup::nilpotent2(2, 4, {{2}}),
                 FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}),
                 FiniteGroup::metacyclic_ext(3, 4, 2, 1, 3, 2)}) {
    auto t = character_table(g);
    for (int x = 0; x < g->order(); ++x) {
      long long s = 0;
      for (int r = 0; r < t->num_rows(); ++r)
        s += (long long)dim_fixed_subspace(*t, r, x) * t->dims[r];
      CHECK(s == g->order() / g->element_order(x));
    }
  }
}

TEST_CASE("save/load round trip and validation") {
  auto g = FiniteGroup::metacyclic(5, 4, 2);
  auto t = character_table(g);
  Json j = table_to_json(*t);
  auto t2 = table_from_json(j);
  CHECK(t2->dims == t->dims);
  for (int r = 0; r < t->num_rows(); ++r)
    for (int c = 0; c < t->num_rows(); ++c) CHECK(t2->rows[r][c] == t->rows[r][c]);

  // corrupting a value breaks exact orthogonality
  Json bad = j;
  bad["chars"][1][1] = cyclo_to_json(Cyclo(Rat(7)));
  CHECK_THROWS_AS(table_from_json(bad), PHError);
}

TEST_CASE("hand-written S3 table loads and matches the computed one") {
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  auto computed = character_table(s3);
  Json j;
  j["group"] = group_to_json(*s3);
  // classes listed out of order on purpose: identity, 3-cycles, transpositions
  int c_trans = -1, c_three = -1;
  for (int c = 0; c < 3; ++c) {
    if (s3->element_order(s3->class_rep(c)) == 2) c_trans = c;
    if (s3->element_order(s3->class_rep(c)) == 3) c_three = c;
  }
  j["classes"] = Json::array({Json::array({s3->class_rep(c_three), 2}),
                              Json::array({0, 1}),
                              Json::array({s3->class_rep(c_trans), 3})});
  auto one = cyclo_to_json(Cyclo(Rat(1)));
  auto mone = cyclo_to_json(Cyclo(Rat(-1)));
  auto two = cyclo_to_json(Cyclo(Rat(2)));
  auto zero = cyclo_to_json(Cyclo(Rat(0)));
  // rows in (3-cycle, identity, transposition) column order
  j["chars"] = Json::array({
      Json::array({one, one, one}),
      Json::array({one, one, mone}),
      Json::array({mone, two, zero}),
  });
  auto loaded = table_from_json(j);
  CHECK(loaded->dims == computed->dims);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(loaded->rows[r][c] == computed->rows[r][c]);
}

TEST_CASE("entry conductors divide the exponent") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  auto t = character_table(g);
  for (const auto& row : t->rows)
    for (const auto& v : row) CHECK(g->exponent() % v.conductor() == 0);
}
