#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "group.hpp"

using namespace primhom;

namespace {

// quaternion units 0..7 = {1, -1, i, -i, j, -j, k, -k}
int quat_mul(int a, int b) {
  auto split = [](int x) { return std::pair<int, int>{x / 2, x % 2}; };  // (axis, sign)
  auto [ua, sa] = split(a);
  auto [ub, sb] = split(b);
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  int s = (sa + sb + sign[ua][ub]) % 2;
  return axis[ua][ub] * 2 + s;
}

}  // namespace

TEST_CASE("closure from permutations: S3 and the trivial group") {
  auto s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3->order() == 6);
  CHECK(s3->num_classes() == 3);
  auto triv = FiniteGroup::from_permutations({{0, 1, 2}});
  CHECK(triv->order() == 1);
}

TEST_CASE("closure realizing a^3, b^8, bab^-1 = a^2 has order 24") {
  // concrete model: pairs (i, j) in Z/3 x Z/8 with the twisted product
  using P = std::pair<int, int>;
  std::function<P(const P&, const P&)> mul = [](const P& x, const P& y) {
    static const int pow2[8] = {1, 2, 1, 2, 1, 2, 1, 2};  // 2^j mod 3
    return P{(x.first + pow2[x.second % 8] * y.first) % 3, (x.second + y.second) % 8};
  };
  auto g = FiniteGroup::closure_from_generators<P>({{1, 0}, {0, 1}}, mul, {0, 0});
  CHECK(g->order() == 24);
  int a = g->generators()[0], b = g->generators()[1];
  CHECK(g->power(a, 3) == 0);
  CHECK(g->power(b, 8) == 0);
  CHECK(g->mult(g->mult(b, a), g->inv(b)) == g->power(a, 2));
  // the direct constructor gives an isomorphic table
  auto direct = FiniteGroup::metacyclic(3, 8, 2);
  CHECK(generator_matching_isomorphic(*g, *direct));
}

TEST_CASE("closure bound is enforced") {
  using P = std::pair<int, int>;
  std::function<P(const P&, const P&)> mul = [](const P& x, const P& y) {
    return P{(x.first + y.first) % 100, (x.second + y.second) % 100};
  };
  CHECK_THROWS_AS(
      (FiniteGroup::closure_from_generators<P>({{1, 0}, {0, 1}}, mul, {0, 0}, nullptr, 50)),
      PHError);
}

TEST_CASE("metacyclic constructor") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  CHECK(g->order() == 24);
  int a = g->generators()[0], b = g->generators()[1];
  CHECK(g->element_order(a) == 3);
  CHECK(g->element_order(b) == 8);
  CHECK(g->mult(g->mult(b, a), g->inv(b)) == g->power(a, 2));

  auto cyc = FiniteGroup::metacyclic(1, 7, 1);
  CHECK(cyc->order() == 7);
  CHECK(cyc->is_abelian());

  auto m20 = FiniteGroup::metacyclic(5, 4, 2);
  CHECK(m20->order() == 20);
  int a5 = m20->generators()[0], b4 = m20->generators()[1];
  CHECK(m20->power(a5, 5) == 0);
  CHECK(m20->mult(m20->mult(b4, a5), m20->inv(b4)) == m20->power(a5, 2));

  CHECK_THROWS_AS(FiniteGroup::metacyclic(4, 3, 2), PHError);  // 2^3 != 1 mod 4
  CHECK_THROWS_AS(FiniteGroup::metacyclic(4, 2, 2), PHError);  // gcd(2,4) != 1
}

TEST_CASE("nilpotent2 constructor") {
  // rank 1: cyclic of order m
  auto c5 = FiniteGroup::nilpotent2(1, 5);
  CHECK(c5->order() == 5);
  CHECK(c5->is_abelian());

  // rank 3 mod 2: 2^6 elements
  auto g64 = FiniteGroup::nilpotent2(3, 2);
  CHECK(g64->order() == 64);
  CHECK(g64->p_group_prime() == 2);

  // commutator of the generators is the wedge generator, of order m
  auto h27 = FiniteGroup::nilpotent2(2, 3);
  CHECK(h27->order() == 27);
  int x = h27->generators()[0], y = h27->generators()[1];
  int comm = h27->mult(h27->mult(x, y), h27->mult(h27->inv(x), h27->inv(y)));
  CHECK(comm != 0);
  CHECK(h27->element_order(comm) == 3);

  // the order-32 central quotient: 1 -> Z/2 -> Gamma -> Z/4 x Z/4 -> 1
  auto gamma = FiniteGroup::nilpotent2(2, 4, {{2}});
  CHECK(gamma->order() == 32);
  int ga = gamma->generators()[0], gb = gamma->generators()[1];
  CHECK(gamma->element_order(ga) == 4);
  CHECK(gamma->element_order(gb) == 4);
  int z = gamma->mult(gamma->mult(ga, gb), gamma->mult(gamma->inv(ga), gamma->inv(gb)));
  CHECK(gamma->element_order(z) == 2);  // the central Z/2
  // commutator subgroup = <z> and the quotient is (Z/4)^2: order 32/2 = 16
  auto derived = gamma->subgroup_closure({z});
  CHECK(derived.size() == 2);

  CHECK_THROWS_AS(FiniteGroup::nilpotent2(2, 4, {{1, 2}}), PHError);  // wrong wedge dim
}

TEST_CASE("metacyclic_ext builds the two-puncture example relations, order 24") {
  auto g = FiniteGroup::metacyclic_ext(3, 4, 2, 1, 3, 2);
  CHECK(g->order() == 24);
  int a = g->generators()[0], b = g->generators()[1], c = g->generators()[2];
  CHECK(g->power(a, 3) == 0);
  CHECK(g->power(b, 4) == 0);
  CHECK(g->mult(g->mult(b, a), g->inv(b)) == g->power(a, 2));
  CHECK(g->mult(c, c) == g->mult(b, b));
  CHECK(g->mult(g->mult(c, a), g->inv(c)) == a);
  CHECK(g->mult(g->mult(c, b), g->inv(c)) == g->power(b, 3));
}

TEST_CASE("quaternion group via an abstract multiplication rule") {
  std::function<int(const int&, const int&)> mul = [](const int& a, const int& b) {
    return quat_mul(a, b);
  };
  auto q8 = FiniteGroup::closure_from_generators<int>({2, 4}, mul, 0);
  CHECK(q8->order() == 8);
  CHECK(q8->p_group_prime() == 2);
  // exactly one element of order 2
  int count2 = 0;
  for (int x = 0; x < 8; ++x) count2 += q8->element_order(x) == 2;
  CHECK(count2 == 1);
}

TEST_CASE("redundancy") {
  auto z6 = FiniteGroup::abelian({6});
  CHECK_FALSE(is_redundant(*z6, Tuple{{2, 3}}));
  CHECK(is_redundant(*z6, Tuple{{2, 4}}));  // <4> = {0,2,4} contains 2
  CHECK(is_redundant(*z6, Tuple{{5, 0}}));  // identity entry
  // invariance under permutation
  CHECK(is_redundant(*z6, Tuple{{4, 2}}));
  CHECK_FALSE(is_redundant(*z6, Tuple{{3, 2}}));
}

TEST_CASE("class data invariants across a corpus") {
  std::vector<GroupPtr> corpus = {
      FiniteGroup::abelian({6}),         FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}),
      FiniteGroup::metacyclic(3, 8, 2),  FiniteGroup::nilpotent2(2, 4, {{2}}),
      FiniteGroup::metacyclic(5, 4, 2),  FiniteGroup::metacyclic_ext(3, 4, 2, 1, 3, 2),
      FiniteGroup::abelian({2, 2, 2}),
  };
  for (const auto& g : corpus) {
    long long total = 0;
    for (int c = 0; c < g->num_classes(); ++c) {
      total += g->class_size(c);
      CHECK(g->order() % g->class_size(c) == 0);
      for (int x : g->class_members(c)) CHECK(g->class_of(x) == c);
    }
    CHECK(total == g->order());
    CHECK(g->class_rep(0) == 0);
    // exponent = lcm of element orders and divides |G|
    int e = 1;
    for (int x = 0; x < g->order(); ++x) e = std::lcm(e, g->element_order(x));
    CHECK(e == g->exponent());
  }
}

TEST_CASE("Frattini subgroup of p-groups") {
  for (auto g : {FiniteGroup::abelian({4, 2}), FiniteGroup::nilpotent2(2, 2),
                 FiniteGroup::nilpotent2(2, 4, {{2}}), FiniteGroup::abelian({8}),
                 FiniteGroup::nilpotent2(2, 3)}) {
    int p = *g->p_group_prime();
    auto phi = g->frattini_subgroup_pgroup();
    // normality
    for (int f : phi)
      for (int x = 0; x < g->order(); ++x) {
        int cf = g->conj(f, x);
        CHECK(std::binary_search(phi.begin(), phi.end(), cf));
      }
    // elementary abelian quotient: x^p lies in Phi for every x
    for (int x = 0; x < g->order(); ++x)
      CHECK(std::binary_search(phi.begin(), phi.end(), g->power(x, p)));
  }
  CHECK_THROWS_AS(FiniteGroup::abelian({6})->frattini_subgroup_pgroup(), PHError);
}

TEST_CASE("table validation catches broken tables") {
  // corrupt one entry of Z/3's table: no longer a group
  std::vector<int> flat = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  flat[4] = 0;  // 1*1 = 0 breaks associativity/latin property
  CHECK_THROWS_AS(FiniteGroup::from_table(3, flat, {1}), PHError);
  // identity not at index 0
  std::vector<int> swapped = {1, 0, 0, 1};
  CHECK_THROWS_AS(FiniteGroup::from_table(2, swapped, {1}), PHError);
  // generators must generate
  CHECK_THROWS_AS(FiniteGroup::from_table(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, {}), PHError);
}

TEST_CASE("center and labels") {
  auto g = FiniteGroup::metacyclic(3, 8, 2);
  auto z = g->center();
  // center of the order-24 group is <b^2> of order 4
  CHECK(z.size() == 4);
  CHECK(g->element_by_label("a") == g->generators()[0]);
  CHECK(g->element_by_label("b") == g->generators()[1]);
  CHECK(g->label_of(0) == "e");
  CHECK_FALSE(g->element_by_label("nope").has_value());
}

TEST_CASE("canonical hash distinguishes tables and is stable") {
  auto a = FiniteGroup::abelian({4});
  auto b = FiniteGroup::abelian({2, 2});
  CHECK(a->canonical_hash() != b->canonical_hash());
  CHECK(a->canonical_hash() == FiniteGroup::abelian({4})->canonical_hash());
}
