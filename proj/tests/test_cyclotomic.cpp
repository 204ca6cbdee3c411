#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linalg.hpp"

using namespace primhom;

TEST_CASE("cyclotomic field examples") {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  CHECK(i * i == Cyclo(Rat(-1)));

  Cyclo z3 = Cyclo::root_of_unity(3, 1);
  CHECK((Cyclo::one() + z3 + z3 * z3).is_zero());

  Cyclo z5 = Cyclo::root_of_unity(5, 1);
  Cyclo x = Cyclo::one() - z5;
  CHECK(x.inverse() * x == Cyclo::one());
}

TEST_CASE("division by zero rejected") {
  CHECK_THROWS_AS(Cyclo::zero().inverse(), PHError);
}

TEST_CASE("mixed-conductor arithmetic promotes to the lcm") {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  Cyclo z3 = Cyclo::root_of_unity(3, 1);
  Cyclo z12 = Cyclo::root_of_unity(12, 1);
  CHECK(i * z3 == z12.pow(7));  // zeta_4 zeta_3 = zeta_12^{3+4}
  CHECK((i + z3).conductor() == 12);
  CHECK(z12.pow(12) == Cyclo::one());
}

TEST_CASE("inverses of random nonzero values across conductors <= 24") {
  std::mt19937 rng(7);
  int done = 0;
  for (int trial = 0; done < 1000; ++trial) {
    int n = 1 + (int)(rng() % 24);
    std::vector<Rat> coeffs(euler_phi(n));
    for (auto& c : coeffs) c = Rat((int)(rng() % 7) - 3, 1 + (int)(rng() % 4));
    Cyclo x = Cyclo::from_coeffs(n, coeffs);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyclo::one());
    ++done;
  }
}

TEST_CASE("conjugation is an involutive field automorphism") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + (int)(rng() % 20);
    auto rand_cyclo = [&]() {
      std::vector<Rat> c(euler_phi(n));
      for (auto& v : c) v = Rat((int)(rng() % 9) - 4);
      return Cyclo::from_coeffs(n, c);
    };
    Cyclo a = rand_cyclo(), b = rand_cyclo();
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
  // conj maps zeta to its inverse
  Cyclo z7 = Cyclo::root_of_unity(7, 1);
  CHECK(z7.conj() == Cyclo::root_of_unity(7, 6));
}

TEST_CASE("float shadow agrees with exact arithmetic") {
  Cyclo z = Cyclo::root_of_unity(8, 3);
  Cyclo w = Cyclo::from_coeffs(8, {Rat(1, 2), Rat(-2), Rat(0), Rat(3, 7)});
  auto approx = (z * w + w).to_complex();
  auto direct = z.to_complex() * w.to_complex() + w.to_complex();
  CHECK(std::abs(approx - direct) < 1e-9);
}

TEST_CASE("rank and nullspace examples") {
  CycloMatrix id3(3, 3);
  for (int i = 0; i < 3; ++i) id3.at(i, i) = Cyclo::one();
  auto rn = rank_and_nullspace(id3);
  CHECK(rn.rank == 3);
  CHECK(rn.nullspace.empty());

  CycloMatrix zero(2, 4);
  auto rz = rank_and_nullspace(zero);
  CHECK(rz.rank == 0);
  CHECK(rz.nullspace.size() == 4);

  // [[1, z3], [z3^2, 1]] has rank 1: row 2 = z3^2 * row 1
  Cyclo z3 = Cyclo::root_of_unity(3, 1);
  CycloMatrix m(2, 2);
  m.at(0, 0) = Cyclo::one();
  m.at(0, 1) = z3;
  m.at(1, 0) = z3 * z3;
  m.at(1, 1) = Cyclo::one();
  CHECK(z3 * z3 * z3 == Cyclo::one());
  auto rm = rank_and_nullspace(m);
  CHECK(rm.rank == 1);
  CHECK(rm.nullspace.size() == 1);
  // nullspace vector annihilates both rows
  for (int i = 0; i < 2; ++i) {
    Cyclo s = m.at(i, 0) * rm.nullspace[0][0] + m.at(i, 1) * rm.nullspace[0][1];
    CHECK(s.is_zero());
  }
}

TEST_CASE("cyclotomic rank agrees with a rational elimination oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    CycloMatrix m(rows, cols);
    std::vector<std::vector<Rat>> rat_rows(rows, std::vector<Rat>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        Rat v((int)(rng() % 7) - 3, 1 + (int)(rng() % 3));
        m.at(i, j) = Cyclo(v);
        rat_rows[i][j] = v;
      }
    Echelon<Rat> oracle(cols);
    for (auto& r : rat_rows) oracle.insert(r);
    CHECK(rank_and_nullspace(m).rank == oracle.rank());
  }
}

TEST_CASE("echelon coordinates recover membership") {
  Echelon<Rat> e(4);
  CHECK(e.insert({Rat(1), Rat(0), Rat(2), Rat(0)}));
  CHECK(e.insert({Rat(0), Rat(1), Rat(1), Rat(3)}));
  CHECK_FALSE(e.insert({Rat(2), Rat(3), Rat(7), Rat(9)}));  // dependent
  auto c = e.coordinates({Rat(2), Rat(3), Rat(7), Rat(9)});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(2));
  CHECK((*c)[1] == Rat(3));
  CHECK_FALSE(e.coordinates({Rat(0), Rat(0), Rat(0), Rat(1)}).has_value());
}

TEST_CASE("serialization strings round-trip") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-12") == Rat(-12));
  CHECK(rat_to_string(Rat(-5, 10)) == "-1/2");
  CHECK_THROWS_AS(rat_from_string("x"), PHError);
}
