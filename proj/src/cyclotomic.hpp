#pragma once

#include <complex>
#include <vector>

#include "rational.hpp"

namespace primhom {

int euler_phi(int n);
std::vector<int> divisors(int n);

// Coefficients of the N-th cyclotomic polynomial (monic, integer), low degree first.
const std::vector<Int>& cyclotomic_poly(int n);

// Exact element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1)
// modulo Phi_N.  Arithmetic between different conductors promotes to the lcm.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& r) : n_(1), c_(1, r) {}
  explicit Cyclo(long long v) : n_(1), c_(1, Rat(v)) {}

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rat(1)); }
  // zeta_N^k
  static Cyclo root_of_unity(int n, long long k);
  // from power-basis coefficients at conductor n (length <= phi(n), padded)
  static Cyclo from_coeffs(int n, std::vector<Rat> coeffs);

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rational() const;  // requires is_rational()

  Cyclo promoted(int m) const;  // n_ | m required

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo operator-() const;
  Cyclo inverse() const;
  Cyclo conj() const;  // zeta |-> zeta^-1
  Cyclo pow(long long e) const;

  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  bool operator==(const Cyclo& b) const;
  bool operator!=(const Cyclo& b) const { return !(*this == b); }

  // Deterministic total order (conductor after promotion, then coeffs lex).
  // Used only for canonical sorting, no arithmetic meaning.
  static int compare(const Cyclo& a, const Cyclo& b);

  // Float shadow, for cross-checks in tests only.
  std::complex<double> to_complex() const;

  std::string str() const;

 private:
  int n_;
  std::vector<Rat> c_;  // length phi(n_)
  void reduce_mod_phi(std::vector<Rat>& raw) const;
};

inline Cyclo operator*(const Rat& r, const Cyclo& x) { return Cyclo(r) * x; }

}  // namespace primhom
