#include "chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace primhom {

namespace {

// --- F_p helpers (p < 2^31, products fit in int64) ---

long long pmod(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long long pexp(long long b, long long e, long long p) {
  long long r = 1;
  b = pmod(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long pinv(long long a, long long p) { return pexp(a, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// char poly of an r x r matrix over F_p via Hessenberg reduction
std::vector<long long> charpoly_mod_p(std::vector<std::vector<long long>> h, long long p) {
  int r = (int)h.size();
  for (int col = 0; col + 2 < r + 1 && col < r - 1; ++col) {
    int piv = -1;
    for (int i = col + 1; i < r; ++i)
      if (h[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == -1) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (int i = 0; i < r; ++i) std::swap(h[i][piv], h[i][col + 1]);
    }
    long long inv = pinv(h[col + 1][col], p);
    for (int i = col + 2; i < r; ++i) {
      long long f = h[i][col] * inv % p;
      if (f == 0) continue;
      for (int j = 0; j < r; ++j) h[i][j] = pmod(h[i][j] - f * h[col + 1][j], p);
      for (int j = 0; j < r; ++j) h[j][col + 1] = pmod(h[j][col + 1] + f * h[j][i], p);
    }
  }
  // p_k(x) = det(xI - H_k) over leading k x k blocks of the Hessenberg form
  std::vector<std::vector<long long>> poly(r + 1);
  poly[0] = {1};
  for (int k = 1; k <= r; ++k) {
    // (x - h[k-1][k-1]) * poly[k-1]
    std::vector<long long> t(poly[k - 1].size() + 1, 0);
    for (size_t i = 0; i < poly[k - 1].size(); ++i) {
      t[i + 1] = pmod(t[i + 1] + poly[k - 1][i], p);
      t[i] = pmod(t[i] - h[k - 1][k - 1] * poly[k - 1][i], p);
    }
    long long prod = 1;
    for (int m = k - 1; m >= 1; --m) {
      prod = prod * h[m][m - 1] % p;
      if (prod == 0) break;
      long long coef = pmod(-(h[m - 1][k - 1] * prod), p);
      for (size_t i = 0; i < poly[m - 1].size(); ++i)
        t[i] = pmod(t[i] + coef * poly[m - 1][i], p);
    }
    poly[k] = std::move(t);
  }
  return poly[r];
}

// nullspace basis of a square matrix over F_p
std::vector<std::vector<long long>> nullspace_mod_p(std::vector<std::vector<long long>> a,
                                                    long long p) {
  int r = (int)a.size();
  std::vector<int> pivot_col;
  int pr = 0;
  for (int col = 0; col < r && pr < r; ++col) {
    int sel = -1;
    for (int i = pr; i < r; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(a[sel], a[pr]);
    long long inv = pinv(a[pr][col], p);
    for (int j = col; j < r; ++j) a[pr][j] = a[pr][j] * inv % p;
    for (int i = 0; i < r; ++i) {
      if (i == pr || a[i][col] == 0) continue;
      long long f = a[i][col];
      for (int j = col; j < r; ++j) a[i][j] = pmod(a[i][j] - f * a[pr][j], p);
    }
    pivot_col.push_back(col);
    ++pr;
  }
  std::vector<bool> is_piv(r, false);
  for (int c : pivot_col) is_piv[c] = true;
  std::vector<std::vector<long long>> basis;
  for (int free_col = 0; free_col < r; ++free_col) {
    if (is_piv[free_col]) continue;
    std::vector<long long> v(r, 0);
    v[free_col] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = pmod(-a[i][free_col], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

using Subspace = std::vector<std::vector<long long>>;  // basis vectors, length r

// Split an invariant subspace into the eigenspaces of the class matrix A
// restricted to it.  The class matrices commute and are simultaneously
// diagonalizable over F_p, so restriction is well defined.
std::vector<Subspace> split_subspace(const std::vector<std::vector<long long>>& A,
                                     const Subspace& basis, long long p) {
  int r = (int)A.size(), d = (int)basis.size();
  // images W_j = A * basis_j
  std::vector<std::vector<long long>> W(d, std::vector<long long>(r));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < r; ++i) {
      long long s = 0;
      for (int k = 0; k < r; ++k)
        if (A[i][k] && basis[j][k]) s = (s + A[i][k] * basis[j][k]) % p;
      W[j][i] = s;
    }
  // solve V * M = W column-wise over the pivot rows of V (V[i][j] = basis[j][i])
  std::vector<std::vector<long long>> aug(r, std::vector<long long>(2 * d, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < d; ++j) {
      aug[i][j] = basis[j][i];
      aug[i][d + j] = W[j][i];
    }
  std::vector<int> pivot_row(d, -1);
  int pr = 0;
  for (int col = 0; col < d; ++col) {
    int sel = -1;
    for (int i = pr; i < r; ++i)
      if (aug[i][col] != 0) {
        sel = i;
        break;
      }
    check(sel >= 0, Err::Internal, "subspace basis is degenerate");
    std::swap(aug[sel], aug[pr]);
    long long inv = pinv(aug[pr][col], p);
    for (int j = 0; j < 2 * d; ++j) aug[pr][j] = aug[pr][j] * inv % p;
    for (int i = 0; i < r; ++i) {
      if (i == pr || aug[i][col] == 0) continue;
      long long f = aug[i][col];
      for (int j = 0; j < 2 * d; ++j) aug[i][j] = pmod(aug[i][j] - f * aug[pr][j], p);
    }
    pivot_row[col] = pr;
    ++pr;
  }
  std::vector<std::vector<long long>> M(d, std::vector<long long>(d));
  for (int j = 0; j < d; ++j)
    for (int c = 0; c < d; ++c) M[j][c] = aug[pivot_row[j]][d + c];

  auto poly = charpoly_mod_p(M, p);
  std::vector<Subspace> out;
  int found = 0;
  for (long long lam = 0; lam < p && found < d; ++lam) {
    long long v = 0;
    for (int i = (int)poly.size() - 1; i >= 0; --i) v = (v * lam + poly[i]) % p;
    if (v != 0) continue;
    std::vector<std::vector<long long>> shifted = M;
    for (int i = 0; i < d; ++i) shifted[i][i] = pmod(shifted[i][i] - lam, p);
    auto kern = nullspace_mod_p(std::move(shifted), p);
    if (kern.empty()) continue;
    Subspace sub;
    for (const auto& kv : kern) {
      std::vector<long long> u(r, 0);
      for (int j = 0; j < d; ++j) {
        if (kv[j] == 0) continue;
        for (int i = 0; i < r; ++i) u[i] = (u[i] + kv[j] * basis[j][i]) % p;
      }
      sub.push_back(std::move(u));
    }
    found += (int)sub.size();
    out.push_back(std::move(sub));
  }
  check(found == d, Err::Internal, "class matrix is not diagonalizable over F_p");
  return out;
}

}  // namespace

void validate_table(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  int r = (int)t.rows.size();
  check(r == g.num_classes(), Err::OrthogonalityError, "row count != class count");
  long long sum_sq = 0;
  for (int i = 0; i < r; ++i) sum_sq += (long long)t.dims[i] * t.dims[i];
  check(sum_sq == g.order(), Err::OrthogonalityError, "sum of squared degrees != |G|");
  for (int i = 0; i < r; ++i) {
    check((int)t.rows[i].size() == r, Err::OrthogonalityError, "ragged table");
    for (const auto& v : t.rows[i])
      check(g.exponent() % v.conductor() == 0, Err::OrthogonalityError,
            "entry conductor does not divide exponent");
  }
  // row orthogonality
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Cyclo ip = class_function_inner(g, t.rows[i], t.rows[j]);
      check(ip == (i == j ? Cyclo::one() : Cyclo::zero()), Err::OrthogonalityError,
            "row orthogonality fails");
    }
  // column orthogonality
  for (int c = 0; c < r; ++c)
    for (int c2 = c; c2 < r; ++c2) {
      Cyclo s = Cyclo::zero();
      for (int i = 0; i < r; ++i) s += t.rows[i][c] * t.rows[i][c2].conj();
      Cyclo expect = c == c2 ? Cyclo(Rat(g.order(), g.class_size(c))) : Cyclo::zero();
      check(s == expect, Err::OrthogonalityError, "column orthogonality fails");
    }
  // trivial character first
  for (int c = 0; c < r; ++c)
    check(t.rows[0][c] == Cyclo::one(), Err::OrthogonalityError, "row 0 is not trivial");
}

Cyclo class_function_inner(const FiniteGroup& g, const std::vector<Cyclo>& f,
                           const std::vector<Cyclo>& h) {
  Cyclo s = Cyclo::zero();
  for (int c = 0; c < g.num_classes(); ++c)
    s += Cyclo(Rat(g.class_size(c))) * f[c] * h[c].conj();
  return Cyclo(Rat(1, g.order())) * s;
}

TablePtr character_table(GroupPtr gp) {
  const FiniteGroup& g = *gp;
  int n = g.order();
  int r = g.num_classes();

  auto tab = std::make_shared<CharacterTable>();
  tab->group = gp;
  if (n == 1) {
    tab->rows = {{Cyclo::one()}};
    tab->dims = {1};
    validate_table(*tab);
    return tab;
  }

  int e = g.exponent();
  // p = 1 (mod e), p > 2 sqrt(|G|); such p never divides |G|
  long long p = 0;
  for (long long cand = e + 1;; cand += e) {
    if (cand * cand > 4LL * n && is_prime(cand)) {
      p = cand;
      break;
    }
    check(cand < 1000000, Err::PrimeSearchFailed, "no suitable prime below 10^6");
  }
  // primitive e-th root of unity mod p
  long long zeta = 0;
  for (long long u = 2; u < p; ++u) {
    long long z = pexp(u, (p - 1) / e, p);
    bool primitive = pexp(z, e, p) == 1;
    for (int d : divisors(e))
      if (d < e && pexp(z, d, p) == 1) primitive = false;
    if (primitive) {
      zeta = z;
      break;
    }
  }
  check(zeta != 0, Err::PrimeSearchFailed, "no primitive root found");

  // class multiplication coefficients: A[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<std::vector<std::vector<long long>>> a(
      r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
  for (int k = 0; k < r; ++k) {
    int zk = g.class_rep(k);
    for (int i = 0; i < r; ++i)
      for (int x : g.class_members(i)) ++a[i][g.class_of(g.mult(g.inv(x), zk))][k];
  }

  // simultaneously diagonalize the commuting class matrices by refining
  // eigenspace splittings one class matrix at a time; the joint eigenspaces
  // are one-dimensional and carry the central character values
  std::vector<Subspace> spaces;
  {
    Subspace full;
    for (int i = 0; i < r; ++i) {
      std::vector<long long> e(r, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    bool all_one = std::all_of(spaces.begin(), spaces.end(),
                               [](const Subspace& s) { return s.size() == 1; });
    if (all_one) break;
    std::vector<Subspace> next;
    for (auto& sp : spaces) {
      if (sp.size() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      for (auto& sub : split_subspace(a[i], sp, p)) next.push_back(std::move(sub));
    }
    spaces = std::move(next);
  }
  check((int)spaces.size() == r, Err::Internal, "joint eigenspaces are not one-dimensional");
  std::vector<std::vector<long long>> omega;  // omega[row][class]
  for (const auto& sp : spaces) {
    std::vector<long long> w = sp[0];
    check(w[0] != 0, Err::Internal, "central character vanishes at the identity class");
    long long inv = pinv(w[0], p);
    for (auto& x : w) x = x * inv % p;
    omega.push_back(std::move(w));
  }

  // per-row degree and exact lifted values
  std::vector<int> ord_of_class(r), inv_class(r);
  for (int c = 0; c < r; ++c) {
    ord_of_class[c] = g.element_order(g.class_rep(c));
    inv_class[c] = g.inverse_class(c);
  }
  int sqrt_n = (int)std::sqrt((double)n) + 1;

  std::vector<std::vector<Cyclo>> rows;
  std::vector<int> dims;
  for (const auto& w : omega) {
    long long s = 0;
    for (int k = 0; k < r; ++k)
      s = (s + w[k] * w[inv_class[k]] % p * pinv(g.class_size(k), p)) % p;
    check(s != 0, Err::Internal, "degenerate norm in degree recovery");
    long long t = pmod(n, p) * pinv(s, p) % p;  // = d^2 mod p
    int d = 0;
    for (int cand = 1; cand <= sqrt_n; ++cand)
      if ((long long)cand * cand % p == t) {
        d = cand;
        break;
      }
    check(d > 0, Err::Internal, "degree recovery failed");

    // chi mod p at each class
    std::vector<long long> chi(r);
    for (int k = 0; k < r; ++k) chi[k] = (long long)d * w[k] % p * pinv(g.class_size(k), p) % p;

    std::vector<Cyclo> row(r);
    for (int k = 0; k < r; ++k) {
      int rep = g.class_rep(k), o = ord_of_class[k];
      long long zo = pexp(zeta, e / o, p);  // canonical primitive o-th root mod p
      Cyclo val = Cyclo::zero();
      long long io = pinv(o, p);
      for (int j = 0; j < o; ++j) {
        long long nj = 0;
        for (int sdx = 0; sdx < o; ++sdx) {
          long long term = chi[g.class_of(g.power(rep, sdx))];
          nj = (nj + term * pexp(zo, (long long)(o - j % o) % o * sdx % o, p)) % p;
        }
        nj = nj * io % p;
        check(nj <= (long long)d, Err::Internal, "eigenvalue multiplicity lift out of range");
        if (nj) val += Cyclo(Rat(nj)) * Cyclo::root_of_unity(o, j);
      }
      row[k] = val;
    }
    rows.push_back(std::move(row));
    dims.push_back(d);
  }

  // canonical order: trivial first, then (degree, lexicographic class values)
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  int trivial = -1;
  for (int i = 0; i < r; ++i) {
    bool all_one = true;
    for (int c = 0; c < r && all_one; ++c) all_one = rows[i][c] == Cyclo::one();
    if (all_one) {
      trivial = i;
      break;
    }
  }
  check(trivial >= 0, Err::Internal, "trivial character not found");
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    if (i == trivial || j == trivial) return i == trivial;
    if (dims[i] != dims[j]) return dims[i] < dims[j];
    for (int c = 0; c < r; ++c) {
      int cmp = Cyclo::compare(rows[i][c], rows[j][c]);
      if (cmp) return cmp < 0;
    }
    return false;
  });
  for (int i : idx) {
    tab->rows.push_back(std::move(rows[i]));
    tab->dims.push_back(dims[i]);
  }
  validate_table(*tab);
  return tab;
}

int dim_fixed_subspace(const CharacterTable& t, int row, int g) {
  const FiniteGroup& grp = *t.group;
  int o = grp.element_order(g);
  Cyclo s = Cyclo::zero();
  int x = 0;
  for (int k = 0; k < o; ++k) {
    s += t.rows[row][grp.class_of(x)];
    x = grp.mult(x, g);
  }
  Cyclo v = Cyclo(Rat(1, o)) * s;
  check(v.is_rational(), Err::InternalNonInteger, "fixed-space dimension not rational");
  Rat rv = v.to_rational();
  check(rat_is_integer(rv) && rv >= 0 && rv <= t.dims[row], Err::InternalNonInteger,
        "fixed-space dimension out of range");
  return (int)rat_to_ll(rv);
}

std::vector<Cyclo> induced_trivial_character(const FiniteGroup& g, int elt) {
  int o = g.element_order(elt);
  std::vector<bool> in_h(g.order(), false);
  {
    int x = 0;
    for (int k = 0; k < o; ++k) {
      in_h[x] = true;
      x = g.mult(x, elt);
    }
  }
  std::vector<Cyclo> out(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    int rep = g.class_rep(c);
    long long cnt = 0;
    for (int y = 0; y < g.order(); ++y)
      if (in_h[g.conj(rep, y)]) ++cnt;
    out[c] = Cyclo(Rat(cnt, o));
    check(out[c].to_rational() * 0 == 0 && rat_is_integer(Rat(cnt, o)), Err::InternalNonInteger,
          "induced character value not integral");
  }
  return out;
}

}  // namespace primhom
