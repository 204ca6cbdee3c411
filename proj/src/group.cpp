#include "group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace primhom {

namespace {

long long mod_pow(long long b, long long e, long long m) {
  if (m == 1) return 0;
  long long r = 1;
  b %= m;
  if (b < 0) b += m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::string mono(const char* name, long long e) {
  if (e == 0) return "";
  if (e == 1) return name;
  std::ostringstream os;
  os << name << "^" << e;
  return os.str();
}

std::string join_monos(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out.empty() ? "e" : out;
}

}  // namespace

void FiniteGroup::finalize(bool trusted_law) {
  int n = order_;
  check(n >= 1, Err::BadParameters, "empty group");
  check((int)table_.size() == n * n, Err::BadParameters, "table size mismatch");
  for (auto v : table_) check(v < n, Err::BadParameters, "table entry out of range");

  for (int x = 0; x < n; ++x) {
    check(mult(0, x) == x && mult(x, 0) == x, Err::BadParameters, "index 0 is not an identity");
  }
  inv_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mult(x, y) == 0) {
        check(mult(y, x) == 0, Err::BadParameters, "one-sided inverse");
        inv_[x] = y;
        break;
      }
    }
    check(inv_[x] >= 0, Err::BadParameters, "missing inverse");
  }

  // associativity: exhaustive up to order 200 for untrusted tables (files,
  // closures), sampled above; the parametric constructors produce the law
  // from modular arithmetic and get a lighter spot-check
  int exhaustive_cap = trusted_law ? 64 : 200;
  int samples = trusted_law ? 10000 : 100000;
  if (n <= exhaustive_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          check(mult(mult(a, b), c) == mult(a, mult(b, c)), Err::NotAssociative,
                "associativity fails");
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < samples; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      check(mult(mult(a, b), c) == mult(a, mult(b, c)), Err::NotAssociative,
            "associativity spot-check fails");
    }
  }

  check(!labels_.empty() ? (int)labels_.size() == n : true, Err::BadParameters,
        "labels size mismatch");

  // generators must generate
  {
    std::vector<int> cl = subgroup_closure(gens_);
    check((int)cl.size() == n, Err::BadParameters, "generators do not generate");
  }

  elem_order_.assign(n, 1);
  exponent_ = 1;
  for (int x = 0; x < n; ++x) {
    int o = 1, y = x;
    while (y != 0) {
      y = mult(y, x);
      ++o;
    }
    elem_order_[x] = o;
    exponent_ = std::lcm(exponent_, o);
  }

  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    int c = (int)class_rep_.size();
    std::vector<int> members;
    std::vector<bool> seen(n, false);
    for (int g = 0; g < n; ++g) {
      int y = conj(x, g);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    for (int y : members) class_of_[y] = c;
    class_rep_.push_back(members.front());
    class_members_.push_back(std::move(members));
  }
}

int FiniteGroup::power(int g, long long k) const {
  int o = elem_order_[g];
  k %= o;
  if (k < 0) k += o;
  int acc = 0, base = g;
  while (k) {
    if (k & 1) acc = mult(acc, base);
    base = mult(base, base);
    k >>= 1;
  }
  return acc;
}

std::string FiniteGroup::label_of(int g) const {
  if (!labels_.empty()) return labels_[g];
  return "#" + std::to_string(g);
}

std::optional<int> FiniteGroup::element_by_label(const std::string& s) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == s) return (int)i;
  return std::nullopt;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& seeds) const {
  std::vector<bool> in(order_, false);
  std::vector<int> stack{0}, out{0};
  in[0] = true;
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = stack[head];
    for (int s : seeds) {
      int y = mult(x, s);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::generates(const std::vector<int>& seeds) const {
  std::vector<bool> in(order_, false);
  std::vector<int> stack{0};
  in[0] = true;
  int count = 1;
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = stack[head];
    for (int s : seeds) {
      int y = mult(x, s);
      if (!in[y]) {
        in[y] = true;
        stack.push_back(y);
        if (2 * ++count > order_) return true;  // index < 2 forces the whole group
      }
    }
  }
  return count == order_;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int x = 0; x < order_; ++x) {
    bool central = true;
    for (int g : gens_)
      if (mult(x, g) != mult(g, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

bool FiniteGroup::is_abelian() const {
  for (int g : gens_)
    for (int h : gens_)
      if (mult(g, h) != mult(h, g)) return false;
  return true;
}

std::optional<int> FiniteGroup::p_group_prime() const {
  int n = order_;
  if (n == 1) return std::nullopt;
  int p = 0;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      p = q;
      break;
    }
  if (p == 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

std::vector<int> FiniteGroup::frattini_subgroup_pgroup() const {
  auto p = p_group_prime();
  check(p.has_value(), Err::NotAPGroup, "Frattini computation requires a p-group");
  std::vector<bool> seed_set(order_, false);
  for (int x = 0; x < order_; ++x) seed_set[power(x, *p)] = true;
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      seed_set[mult(mult(x, y), mult(inv_[x], inv_[y]))] = true;  // [x,y] = x y x^-1 y^-1
  std::vector<int> seeds;
  for (int x = 0; x < order_; ++x)
    if (seed_set[x]) seeds.push_back(x);
  return subgroup_closure(seeds);
}

uint64_t FiniteGroup::canonical_hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix((uint64_t)order_);
  for (auto v : table_) mix(v);
  for (auto g : gens_) mix((uint64_t)g);
  return h;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::build(int order, std::vector<int> flat_table,
                                                      std::vector<int> gens,
                                                      std::vector<std::string> labels,
                                                      bool trusted_law) {
  auto g = std::make_shared<FiniteGroup>();
  g->order_ = order;
  check((long long)order * order == (long long)flat_table.size(), Err::BadParameters,
        "table size mismatch");
  g->table_.resize(flat_table.size());
  for (size_t i = 0; i < flat_table.size(); ++i) {
    check(flat_table[i] >= 0 && flat_table[i] < order, Err::BadParameters,
          "table entry out of range");
    g->table_[i] = (uint16_t)flat_table[i];
  }
  g->gens_ = std::move(gens);
  for (int x : g->gens_) check(x >= 0 && x < order, Err::BadParameters, "generator out of range");
  g->labels_ = std::move(labels);
  g->finalize(trusted_law);
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(int order, std::vector<int> flat_table,
                                                           std::vector<int> gens,
                                                           std::vector<std::string> labels) {
  return build(order, std::move(flat_table), std::move(gens), std::move(labels), false);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(
    const std::vector<std::vector<int>>& gens, int order_cap) {
  check(!gens.empty(), Err::BadParameters, "need at least one permutation");
  size_t deg = gens[0].size();
  for (const auto& p : gens) {
    check(p.size() == deg, Err::BadParameters, "permutation degrees differ");
    std::vector<bool> seen(deg, false);
    for (int v : p) {
      check(v >= 0 && v < (int)deg && !seen[v], Err::BadParameters, "not a permutation");
      seen[v] = true;
    }
  }
  using Perm = std::vector<int>;
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::function<Perm(const Perm&, const Perm&)> mul = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];  // (a*b)(i) = a(b(i))
    return c;
  };
  return closure_from_generators<Perm>(gens, mul, id, nullptr, 1000000, order_cap);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::metacyclic(int m, int k, long long r) {
  check(m >= 1 && k >= 1, Err::BadParameters, "moduli must be positive");
  check((long long)m * k <= kDefaultOrderCap, Err::BadParameters, "order exceeds cap");
  r %= m;
  if (r < 0) r += m;
  if (m == 1) r = 0;
  check(m == 1 || std::gcd((int)r, m) == 1, Err::BadParameters, "r must be a unit mod m");
  check(m == 1 || mod_pow(r, k, m) == 1 % m, Err::BadParameters, "r^k != 1 (mod m)");
  std::vector<long long> rpow(k);
  for (int j = 0; j < k; ++j) rpow[j] = mod_pow(r, j, std::max(m, 1));
  int n = m * k;
  std::vector<int> flat((size_t)n * n);
  auto idx = [k](int i, int j) { return i * k + j; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < k; ++j2)
          flat[(size_t)idx(i, j) * n + idx(i2, j2)] =
              idx((int)((i + rpow[j] * i2) % m), (j + j2) % k);
  std::vector<std::string> labels(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) labels[idx(i, j)] = join_monos({mono("a", i), mono("b", j)});
  std::vector<int> gens{idx(1 % m, 0), idx(0, 1 % k)};
  return build(n, std::move(flat), std::move(gens), std::move(labels), true);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::metacyclic_ext(int m, int k, long long r,
                                                               long long conj_a, long long conj_b,
                                                               long long sq) {
  check(m >= 1 && k >= 1, Err::BadParameters, "moduli must be positive");
  check((long long)m * k * 2 <= kDefaultOrderCap, Err::BadParameters, "order exceeds cap");
  auto normm = [](long long v, int mod) {
    v %= mod;
    return v < 0 ? v + mod : v;
  };
  r = normm(r, m);
  conj_a = normm(conj_a, m);
  conj_b = normm(conj_b, k);
  sq = normm(sq, k);
  std::vector<long long> rpow(k);
  for (int j = 0; j < k; ++j) rpow[j] = mod_pow(r, j, m);
  int n = m * k * 2;
  auto idx = [k](int i, int j, int e) { return (i * k + j) * 2 + e; };
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j)
      for (int e = 0; e < 2; ++e)
        for (int i2 = 0; i2 < m; ++i2)
          for (int j2 = 0; j2 < k; ++j2)
            for (int e2 = 0; e2 < 2; ++e2) {
              // a^i b^j c^e * a^i2 b^j2 c^e2 in normal form
              long long ai = e ? conj_a * i2 % m : i2;           // c^e a^i2 c^-e
              long long ii = (i + rpow[j] * ai) % m;             // b^j a^.. b^-j
              long long bj = e ? conj_b * j2 % k : j2;           // c^e b^j2 c^-e
              long long jj = (j + bj) % k;
              int ee = e + e2;
              if (ee == 2) {
                jj = (jj + sq) % k;
                ee = 0;
              }
              flat[(size_t)idx(i, j, e) * n + idx(i2, j2, e2)] = idx((int)ii, (int)jj, ee);
            }
  std::vector<std::string> labels(n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j)
      for (int e = 0; e < 2; ++e)
        labels[idx(i, j, e)] = join_monos({mono("a", i), mono("b", j), mono("c", e)});
  std::vector<int> gens{idx(1 % m, 0, 0), idx(0, 1 % k, 0), idx(0, 0, 1)};
  return build(n, std::move(flat), std::move(gens), std::move(labels), true);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::abelian(const std::vector<int>& moduli) {
  check(!moduli.empty(), Err::BadParameters, "need at least one modulus");
  long long n = 1;
  for (int m : moduli) {
    check(m >= 1, Err::BadParameters, "moduli must be positive");
    n *= m;
    check(n <= kDefaultOrderCap, Err::BadParameters, "order exceeds cap");
  }
  int s = (int)moduli.size();
  auto idx = [&](const std::vector<int>& v) {
    long long x = 0;
    for (int i = 0; i < s; ++i) x = x * moduli[i] + v[i];
    return (int)x;
  };
  std::vector<std::vector<int>> elems((size_t)n, std::vector<int>(s, 0));
  for (long long x = 1; x < n; ++x) {
    elems[x] = elems[x - 1];
    for (int i = s - 1; i >= 0; --i) {
      if (++elems[x][i] < moduli[i]) break;
      elems[x][i] = 0;
    }
  }
  std::vector<int> flat((size_t)n * n);
  std::vector<int> sum(s);
  for (long long x = 0; x < n; ++x)
    for (long long y = 0; y < n; ++y) {
      for (int i = 0; i < s; ++i) sum[i] = (elems[x][i] + elems[y][i]) % moduli[i];
      flat[(size_t)x * n + y] = idx(sum);
    }
  static const char* names[3] = {"a", "b", "c"};
  std::vector<std::string> labels((size_t)n);
  for (long long x = 0; x < n; ++x) {
    std::string l;
    for (int i = 0; i < s; ++i) {
      std::string nm = s <= 3 ? names[i] : ("g" + std::to_string(i + 1));
      std::string mstr = mono(nm.c_str(), elems[x][i]);
      if (!mstr.empty()) {
        if (!l.empty()) l += "*";
        l += mstr;
      }
    }
    labels[x] = l.empty() ? "e" : l;
  }
  std::vector<int> gens;
  for (int i = 0; i < s; ++i) {
    std::vector<int> v(s, 0);
    v[i] = 1 % moduli[i];
    gens.push_back(idx(v));
  }
  return build((int)n, std::move(flat), std::move(gens), std::move(labels), true);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::nilpotent2(
    int rank, int modulus, const std::vector<std::vector<int>>& center_quotient) {
  check(rank >= 1, Err::BadParameters, "rank must be >= 1");
  check(modulus >= 2, Err::BadParameters, "modulus must be >= 2");
  int n = rank, m = modulus;
  int d = n * (n - 1) / 2;  // wedge dimension
  // pair index for i<j
  std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
  {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pidx[i][j] = c++;
  }
  long long wcount = 1;
  for (int i = 0; i < d; ++i) {
    wcount *= m;
    check(wcount <= 2000000, Err::BadParameters, "wedge space too large to enumerate");
  }
  // subgroup H generated by center_quotient rows, inside (Z/m)^d
  auto wrap = [m](long long v) {
    v %= m;
    return (int)(v < 0 ? v + m : v);
  };
  auto widx = [&](const std::vector<int>& w) {
    long long x = 0;
    for (int i = 0; i < d; ++i) x = x * m + w[i];
    return x;
  };
  std::vector<std::vector<int>> hgens;
  for (const auto& row : center_quotient) {
    check((int)row.size() == d, Err::BadParameters,
          "center_quotient vector has wrong dimension (expected " + std::to_string(d) + ")");
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) v[i] = wrap(row[i]);
    hgens.push_back(v);
  }
  std::vector<bool> in_h((size_t)wcount, false);
  {
    std::vector<std::vector<int>> stack{std::vector<int>(d, 0)};
    in_h[0] = true;
    for (size_t head = 0; head < stack.size(); ++head) {
      auto cur = stack[head];
      for (const auto& g : hgens) {
        std::vector<int> nxt(d);
        for (int i = 0; i < d; ++i) nxt[i] = wrap(cur[i] + g[i]);
        long long ix = widx(nxt);
        if (!in_h[ix]) {
          in_h[ix] = true;
          stack.push_back(nxt);
        }
      }
    }
  }
  // cosets of H: canonical representative = member with minimal index
  std::vector<int> coset_of((size_t)wcount, -1);
  std::vector<long long> coset_rep;
  for (long long w = 0; w < wcount; ++w) {
    if (coset_of[w] >= 0) continue;
    int cid = (int)coset_rep.size();
    coset_rep.push_back(w);
    std::vector<int> wv(d);
    {
      long long t = w;
      for (int i = d - 1; i >= 0; --i) {
        wv[i] = (int)(t % m);
        t /= m;
      }
    }
    for (long long h = 0; h < wcount; ++h) {
      if (!in_h[h]) continue;
      std::vector<int> hv(d);
      long long t = h;
      for (int i = d - 1; i >= 0; --i) {
        hv[i] = (int)(t % m);
        t /= m;
      }
      std::vector<int> sum(d);
      for (int i = 0; i < d; ++i) sum[i] = wrap(wv[i] + hv[i]);
      coset_of[widx(sum)] = cid;
    }
  }
  int ncosets = (int)coset_rep.size();

  long long vcount = 1;
  for (int i = 0; i < n; ++i) {
    vcount *= m;
    check(vcount * ncosets <= kDefaultOrderCap, Err::BadParameters, "order exceeds cap");
  }
  long long total = vcount * ncosets;

  auto vvec = [&](long long x) {
    std::vector<int> v(n);
    for (int i = n - 1; i >= 0; --i) {
      v[i] = (int)(x % m);
      x /= m;
    }
    return v;
  };
  auto vix = [&](const std::vector<int>& v) {
    long long x = 0;
    for (int i = 0; i < n; ++i) x = x * m + v[i];
    return x;
  };

  // canonical-form cocycle: moving x_i^{v2_i} left past x_j^{v1_j} (j > i)
  // contributes [x_j, x_i]^{v1_j v2_i} = e_ij^{-v1_j v2_i}
  auto cocycle = [&](const std::vector<int>& v1, const std::vector<int>& v2) {
    std::vector<int> w(d, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) w[pidx[i][j]] = wrap(-(long long)v1[j] * v2[i]);
    return w;
  };

  std::vector<int> flat((size_t)total * total);
  for (long long x = 0; x < total; ++x) {
    auto v1 = vvec(x / ncosets);
    long long w1 = coset_rep[x % ncosets];
    std::vector<int> w1v(d);
    {
      long long t = w1;
      for (int i = d - 1; i >= 0; --i) {
        w1v[i] = (int)(t % m);
        t /= m;
      }
    }
    for (long long y = 0; y < total; ++y) {
      auto v2 = vvec(y / ncosets);
      long long w2 = coset_rep[y % ncosets];
      std::vector<int> sumv(n), sumw(d);
      for (int i = 0; i < n; ++i) sumv[i] = wrap(v1[i] + v2[i]);
      auto cz = cocycle(v1, v2);
      {
        long long t = w2;
        for (int i = d - 1; i >= 0; --i) {
          sumw[i] = (int)(t % m);
          t /= m;
        }
      }
      for (int i = 0; i < d; ++i) sumw[i] = wrap(sumw[i] + w1v[i] + cz[i]);
      flat[(size_t)x * total + y] = (int)(vix(sumv) * ncosets + coset_of[widx(sumw)]);
    }
  }
  static const char* names[3] = {"a", "b", "c"};
  std::vector<std::string> labels((size_t)total);
  for (long long x = 0; x < total; ++x) {
    auto v = vvec(x / ncosets);
    std::string l;
    for (int i = 0; i < n; ++i) {
      std::string nm = n <= 3 ? names[i] : ("g" + std::to_string(i + 1));
      std::string mstr = mono(nm.c_str(), v[i]);
      if (!mstr.empty()) {
        if (!l.empty()) l += "*";
        l += mstr;
      }
    }
    long long w = coset_rep[x % ncosets];
    if (w != 0) {
      if (!l.empty()) l += "*";
      l += "z" + std::to_string(w);
    }
    labels[x] = l.empty() ? "e" : l;
  }
  std::vector<int> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(n, 0);
    v[i] = 1 % m;
    gens.push_back((int)(vix(v) * ncosets));
  }
  return build((int)total, std::move(flat), std::move(gens), std::move(labels), true);
}

bool is_redundant(const FiniteGroup& g, const Tuple& t) {
  int n = (int)t.entries.size();
  for (int i = 0; i < n; ++i) {
    if (t.entries[i] == 0) return true;
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (j != i) others.push_back(t.entries[j]);
    auto sub = g.subgroup_closure(others);
    if (std::binary_search(sub.begin(), sub.end(), t.entries[i])) return true;
  }
  return false;
}

bool generator_matching_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.generators().size() != b.generators().size()) return false;
  int n = a.order();
  std::vector<int> map(n, -1);
  map[0] = 0;
  std::vector<int> stack{0};
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = stack[head];
    for (size_t t = 0; t < a.generators().size(); ++t) {
      int xa = a.mult(x, a.generators()[t]);
      int xb = b.mult(map[x], b.generators()[t]);
      if (map[xa] == -1) {
        map[xa] = xb;
        stack.push_back(xa);
      } else if (map[xa] != xb) {
        return false;
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0 || hit[map[x]]) return false;
    hit[map[x]] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[a.mult(x, y)] != b.mult(map[x], map[y])) return false;
  return true;
}

}  // namespace primhom
