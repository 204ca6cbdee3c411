#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace primhom {

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<Int> poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  check(dd >= 0 && den.back() == 1, Err::Internal, "divisor must be monic");
  std::vector<Int> q(std::max(dn - dd + 1, 0), Int(0));
  for (int i = dn; i >= dd; --i) {
    Int f = num[i];
    if (f == 0) continue;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (const auto& v : num) check(v == 0, Err::Internal, "non-exact polynomial division");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;  // x^n - 1
  for (int d : divisors(n)) {
    if (d == n) continue;
    num = poly_div_exact(std::move(num), cyclotomic_poly(d));
  }
  return cache.emplace(n, std::move(num)).first->second;
}

void Cyclo::reduce_mod_phi(std::vector<Rat>& raw) const {
  const auto& phi = cyclotomic_poly(n_);
  int deg = (int)phi.size() - 1;  // = euler_phi(n_)
  for (int i = (int)raw.size() - 1; i >= deg; --i) {
    Rat f = raw[i];
    if (f == 0) continue;
    raw[i] = 0;
    for (int j = 0; j < deg; ++j) raw[i - deg + j] -= f * Rat(phi[j]);
  }
  raw.resize(deg);
}

Cyclo Cyclo::root_of_unity(int n, long long k) {
  check(n >= 1, Err::BadParameters, "conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  Cyclo x;
  x.n_ = n;
  std::vector<Rat> raw((size_t)k + 1, Rat(0));
  raw[(size_t)k] = 1;
  x.reduce_mod_phi(raw);
  x.c_ = std::move(raw);
  return x;
}

Cyclo Cyclo::from_coeffs(int n, std::vector<Rat> coeffs) {
  check(n >= 1, Err::Schema, "conductor must be positive");
  size_t deg = (size_t)euler_phi(n);
  check(coeffs.size() <= deg, Err::Schema, "too many coefficients for conductor");
  coeffs.resize(deg, Rat(0));
  Cyclo x;
  x.n_ = n;
  x.c_ = std::move(coeffs);
  return x;
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::to_rational() const {
  check(is_rational(), Err::InternalNonInteger, "value is not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::promoted(int m) const {
  if (m == n_) return *this;
  check(m % n_ == 0, Err::Internal, "promotion target must be a multiple of conductor");
  int step = m / n_;
  Cyclo x;
  x.n_ = m;
  std::vector<Rat> raw((size_t)(c_.size() - 1) * step + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  x.reduce_mod_phi(raw);
  x.c_ = std::move(raw);
  return x;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  int m = std::lcm(a.n_, b.n_);
  Cyclo x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
  int m = std::lcm(a.n_, b.n_);
  Cyclo x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyclo Cyclo::operator-() const {
  Cyclo x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  int m = std::lcm(a.n_, b.n_);
  Cyclo x = a.promoted(m), y = b.promoted(m);
  std::vector<Rat> raw(x.c_.size() + y.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      raw[i + j] += x.c_[i] * y.c_[j];
    }
  }
  Cyclo z;
  z.n_ = m;
  z.reduce_mod_phi(raw);
  z.c_ = std::move(raw);
  return z;
}

namespace {

// polynomial arithmetic over Q, low degree first, trimmed
void poly_trim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  int db = (int)b.size() - 1;
  while ((int)a.size() - 1 >= db) {
    Rat f = a.back() / b[db];
    int shift = (int)a.size() - 1 - db;
    for (int j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

Cyclo Cyclo::inverse() const {
  check(!is_zero(), Err::DivisionByZero, "division by zero cyclotomic");
  // extended euclid: u*f + v*Phi = 1  (Phi irreducible over Q)
  std::vector<Rat> phi;
  for (const auto& v : cyclotomic_poly(n_)) phi.push_back(Rat(v));
  std::vector<Rat> r0 = phi, r1 = c_;
  poly_trim(r1);
  std::vector<Rat> t0, t1{Rat(1)};
  while (true) {
    check(!r1.empty(), Err::Internal, "gcd hit zero before unit");
    if (r1.size() == 1) break;  // nonzero constant => done
    // quotient of r0 by r1
    std::vector<Rat> q;
    {
      std::vector<Rat> a = r0;
      int db = (int)r1.size() - 1;
      q.assign(std::max((int)a.size() - db, 1), Rat(0));
      while ((int)a.size() - 1 >= db && !a.empty()) {
        Rat f = a.back() / r1[db];
        int shift = (int)a.size() - 1 - db;
        q[shift] = f;
        for (int j = 0; j <= db; ++j) a[shift + j] -= f * r1[j];
        poly_trim(a);
      }
      r0.swap(r1);
      r1 = std::move(a);
    }
    // t = t0 - q*t1
    std::vector<Rat> qt(q.size() + t1.size() - 1, Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
    }
    std::vector<Rat> t = t0;
    t.resize(std::max(t.size(), qt.size()), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) t[i] -= qt[i];
    poly_trim(t);
    t0.swap(t1);
    t1 = std::move(t);
  }
  Rat unit = r1[0];
  for (auto& v : t1) v /= unit;
  t1 = poly_rem(std::move(t1), phi);
  Cyclo x;
  x.n_ = n_;
  t1.resize(c_.size(), Rat(0));
  x.c_ = std::move(t1);
  return x;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
  int m = std::lcm(a.n_, b.n_);
  return a.promoted(m) * b.promoted(m).inverse();
}

Cyclo Cyclo::conj() const {
  Cyclo x;
  x.n_ = n_;
  std::vector<Rat> raw((size_t)n_, Rat(0));
  raw[0] = c_[0];
  for (size_t i = 1; i < c_.size(); ++i) raw[(size_t)(n_ - (int)i)] += c_[i];
  x.reduce_mod_phi(raw);
  x.c_ = std::move(raw);
  return x;
}

Cyclo Cyclo::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo acc = Cyclo::one(), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Cyclo::operator==(const Cyclo& b) const {
  int m = std::lcm(n_, b.n_);
  return promoted(m).c_ == b.promoted(m).c_;
}

int Cyclo::compare(const Cyclo& a, const Cyclo& b) {
  int m = std::lcm(a.n_, b.n_);
  Cyclo x = a.promoted(m), y = b.promoted(m);
  for (size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] < y.c_[i]) return -1;
    if (x.c_[i] > y.c_[i]) return 1;
  }
  return 0;
}

std::complex<double> Cyclo::to_complex() const {
  const double tau = 6.283185307179586476925;
  std::complex<double> z = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    double v = (double)numerator(c_[i]).convert_to<double>() /
               (double)denominator(c_[i]).convert_to<double>();
    z += v * std::exp(std::complex<double>(0, tau * (double)i / n_));
  }
  return z;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << "Cyclo(N=" << n_ << ";";
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << rat_to_string(c_[i]);
  os << ")";
  return os.str();
}

}  // namespace primhom
