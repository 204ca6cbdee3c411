#include "examples.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace primhom {

namespace {

using Vec5 = std::array<int, 5>;

Vec5 alpha_act(const Vec5& x, int p) {
  auto [r1, r2, s1, s2, d] = x;
  return {(r1 + d) % p, ((r2 - d) % p + p) % p, s2, s1, (p - d) % p};
}

Vec5 beta_act(const Vec5& x, int p) {
  auto [r1, r2, s1, s2, d] = x;
  return {r2, r1, ((s1 - d) % p + p) % p, (s2 + d) % p, (p - d) % p};
}

int rank_mod_p(std::vector<Vec5> rows, int p) {
  int rank = 0;
  for (int col = 0; col < 5; ++col) {
    int sel = -1;
    for (int i = rank; i < (int)rows.size(); ++i)
      if (rows[i][col] % p != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    // normalize pivot to 1
    long long inv = 1;
    for (long long t = 1; t < p; ++t)
      if (rows[rank][col] * t % p == 1) {
        inv = t;
        break;
      }
    for (int j = 0; j < 5; ++j) rows[rank][j] = (int)(rows[rank][j] * inv % p);
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (int j = 0; j < 5; ++j) rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TorusCoverReport torus_cover_verify(int p) {
  check(p >= 3 && p % 2 == 1, Err::BadParameters, "p must be an odd prime");
  for (int d = 2; d * d <= p; ++d) check(p % d != 0, Err::BadParameters, "p must be prime");
  TorusCoverReport rep;
  rep.p = p;

  // (Z/2)^2-action identities on a basis sweep
  rep.matrix_identities = true;
  for (int t = 0; t < 5 && rep.matrix_identities; ++t) {
    Vec5 e{};
    e[t] = 1;
    rep.matrix_identities = alpha_act(alpha_act(e, p), p) == e &&
                            beta_act(beta_act(e, p), p) == e &&
                            alpha_act(beta_act(e, p), p) == beta_act(alpha_act(e, p), p);
  }
  check(rep.matrix_identities, Err::ExhaustiveCheckFailed, "deck matrices fail (Z/2)^2 identities");

  rep.classifier_matches = true;
  rep.exponent_nonzero = true;
  Vec5 x{};
  long long total = 1;
  for (int i = 0; i < 5; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    long long t = code;
    for (int i = 0; i < 5; ++i) {
      x[i] = (int)(t % p);
      t /= p;
    }
    auto [r1, r2, s1, s2, d] = x;
    Vec5 ax = alpha_act(x, p), bx = beta_act(x, p), abx = alpha_act(bx, p);
    int rank = rank_mod_p({x, ax, bx, abx}, p);

    bool row_eq[3] = {ax == x, bx == x, abx == x};
    bool cond[3];
    for (int f = 0; f < 3; ++f) cond[f] = row_eq[f] && rank == 2;

    // the three boxed families
    bool fam[3];
    fam[0] = d == 0 && s1 == s2 && r1 != r2 && (s1 != 0 || r1 != (p - r2) % p);
    fam[1] = d == 0 && r1 == r2 && s1 != s2 && (r1 != 0 || s1 != (p - s2) % p);
    fam[2] = d != 0 && r1 == ((r2 - d) % p + p) % p && s1 == (s2 + d) % p &&
             !((2 * r1 + d) % p == 0 && ((2 * s1 - d) % p + p) % p == 0);
    for (int f = 0; f < 3; ++f) {
      if (fam[f] != cond[f]) {
        rep.classifier_matches = false;
        fail(Err::ExhaustiveCheckFailed,
             "classifier disagrees with the orbit condition at x = (" + std::to_string(r1) + "," +
                 std::to_string(r2) + "," + std::to_string(s1) + "," + std::to_string(s2) + "," +
                 std::to_string(d) + "), family " + std::to_string(f + 1));
      }
      if (fam[f]) ++rep.family_count[f];
    }
    bool qualifies = cond[0] || cond[1] || cond[2];
    if (qualifies) {
      ++rep.qualifying;
      int expo = ((r1 - r2 + s1 - s2 + d) % p + p) % p;
      if (expo == 0) {
        rep.exponent_nonzero = false;
        fail(Err::ExhaustiveCheckFailed,
             "qualifying vector acts as the identity: exponent 0 at (" + std::to_string(r1) + "," +
                 std::to_string(r2) + "," + std::to_string(s1) + "," + std::to_string(s2) + "," +
                 std::to_string(d) + ")");
      }
    }
  }
  rep.ok = rep.matrix_identities && rep.classifier_matches && rep.exponent_nonzero;
  return rep;
}

namespace {

struct Mat2 {
  Cyclo a, b, c, d;
  static Mat2 identity() { return {Cyclo::one(), Cyclo::zero(), Cyclo::zero(), Cyclo::one()}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  Cyclo det_minus_identity() const {
    return (a - Cyclo::one()) * (d - Cyclo::one()) - b * c;
  }
};

}  // namespace

GammaReport gamma_example_verify() {
  GammaReport rep;
  auto gamma = FiniteGroup::nilpotent2(2, 4, {{2}});
  rep.order = gamma->order();
  check(rep.order == 32, Err::ExhaustiveCheckFailed, "Gamma must have order 32");
  int alpha = gamma->generators()[0], beta = gamma->generators()[1];
  Hom h{gamma, {alpha, beta}};
  check(h.surjective(), Err::Internal, "Gamma is not generated by alpha, beta");

  Cyclo i4 = Cyclo::root_of_unity(4, 1);
  Mat2 ma{i4, Cyclo::zero(), Cyclo::zero(), -i4};
  Mat2 mb{Cyclo::zero(), Cyclo::one(), -Cyclo::one(), Cyclo::zero()};

  // assign a matrix to every element along a BFS in the generators, then
  // verify multiplicativity on all pairs
  std::vector<Mat2> rho(gamma->order(), Mat2::identity());
  std::vector<bool> have(gamma->order(), false);
  have[0] = true;
  std::vector<int> stack{0};
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = stack[head];
    for (int t = 0; t < 2; ++t) {
      int y = gamma->mult(x, t == 0 ? alpha : beta);
      if (!have[y]) {
        have[y] = true;
        rho[y] = rho[x] * (t == 0 ? ma : mb);
        stack.push_back(y);
      }
    }
  }
  rep.rho_is_homomorphism = true;
  for (int x = 0; x < gamma->order() && rep.rho_is_homomorphism; ++x)
    for (int y = 0; y < gamma->order(); ++y)
      if (!(rho[gamma->mult(x, y)] == rho[x] * rho[y])) {
        rep.rho_is_homomorphism = false;
        break;
      }
  check(rep.rho_is_homomorphism, Err::ExhaustiveCheckFailed, "rho is not a homomorphism");

  Mat2 ma4 = ma * ma * ma * ma, mb4 = mb * mb * mb * mb;
  rep.generator_matrices_order_four = ma4 == Mat2::identity() && mb4 == Mat2::identity();

  int comm = gamma->mult(gamma->mult(alpha, beta), gamma->mult(gamma->inv(alpha), gamma->inv(beta)));
  Mat2 minus_id{-Cyclo::one(), Cyclo::zero(), Cyclo::zero(), -Cyclo::one()};
  rep.commutator_maps_to_minus_identity = rho[comm] == minus_id;

  OrbitOptions oo;
  OrbitResult orbit = primitive_image_set(h, oo);
  rep.identity_not_primitive_image =
      !std::binary_search(orbit.images.begin(), orbit.images.end(), 0);
  rep.no_eigenvalue_one_on_primitive_images = true;
  for (int g : orbit.images)
    if (rho[g].det_minus_identity().is_zero()) {
      rep.no_eigenvalue_one_on_primitive_images = false;
      break;
    }

  // y = a^2[a,b]: phi(y) nontrivial, rho(phi(y)) = 1
  int y = evaluate(h, Word({1, 1, 1, 2, -1, -2}));
  rep.nontrivial_kernel_element = y != 0 && rho[y] == Mat2::identity();

  // locate the rho row in the character table and bracket the span
  auto table = character_table(gamma);
  std::vector<Cyclo> chi_rho(gamma->num_classes());
  for (int c = 0; c < gamma->num_classes(); ++c) {
    const Mat2& m = rho[gamma->class_rep(c)];
    chi_rho[c] = m.a + m.d;
  }
  check(class_function_inner(*gamma, chi_rho, chi_rho) == Cyclo::one(), Err::Internal,
        "rho is not irreducible");
  int rho_row = -1;
  for (int r = 0; r < table->num_rows(); ++r)
    if (table->rows[r] == chi_rho) rho_row = r;
  check(rho_row >= 0, Err::Internal, "rho character not found in the table");

  SpanOptions so;
  so.check_induced = true;
  SubrepSpan span = primitive_homology_span(h, *table, 8, so);
  rep.cw_dim = span.dim;
  rep.rho_row_excluded_from_irrpr =
      !std::binary_search(span.irrpr.begin(), span.irrpr.end(), rho_row);
  rep.upper_bound_dim = 0;
  for (int r = 0; r < table->num_rows(); ++r)
    rep.upper_bound_dim += (long long)span.upper_mult[r] * table->dims[r];
  rep.upper_below_cw = rep.upper_bound_dim < rep.cw_dim;

  rep.ok = rep.rho_is_homomorphism && rep.generator_matrices_order_four &&
           rep.commutator_maps_to_minus_identity && rep.identity_not_primitive_image &&
           rep.no_eigenvalue_one_on_primitive_images && rep.nontrivial_kernel_element &&
           rep.rho_row_excluded_from_irrpr && rep.upper_below_cw;
  return rep;
}

namespace {

// canonical r for the metacyclic family: minimum of r^u over units u mod k
long long canonical_twist(int m, int k, long long r) {
  long long best = r;
  for (int u = 1; u < k; ++u) {
    if (std::gcd(u, k) != 1) continue;
    long long ru = 1;
    for (int t = 0; t < u; ++t) ru = ru * r % m;
    best = std::min(best, ru);
  }
  return best;
}

}  // namespace

SphereSearchReport sphere_catalog_search(int max_order, int rank, long long state_budget) {
  check(rank == 2 || rank == 3, Err::BadParameters, "rank must be 2 or 3");
  SphereSearchReport rep;
  rep.max_order = max_order;
  rep.rank = rank;

  struct Entry {
    GroupPtr g;
    std::string name;
  };
  std::vector<Entry> catalog;
  std::set<std::tuple<int, int, long long>> seen_params;
  for (int m = 1; m <= max_order; ++m)
    for (int k = 1; (long long)m * k <= max_order; ++k)
      for (long long r = (m == 1 ? 0 : 1); r < std::max(m, 1); ++r) {
        if (m > 1) {
          if (std::gcd((int)r, m) != 1) continue;
          long long rk = 1;
          for (int t = 0; t < k; ++t) rk = rk * r % m;
          if (rk != 1 % m) continue;
          long long cr = canonical_twist(m, k, r);
          if (!seen_params.insert({m, k, cr}).second) continue;
          if (cr != r) continue;
        } else if (r > 0) {
          continue;
        }
        catalog.push_back({FiniteGroup::metacyclic(m, k, r),
                           "metacyclic(" + std::to_string(m) + "," + std::to_string(k) + "," +
                               std::to_string(r) + ")"});
      }
  if (24 <= max_order) catalog.push_back({sphere_type_ii_group(), "type_ii(24)"});
  rep.groups = (long long)catalog.size();

  for (const auto& entry : catalog) {
    const FiniteGroup& g = *entry.g;
    int n = g.order();
    // canonical entries: class representatives, inversion-normalized
    std::vector<int> elems;
    for (int c = 0; c < g.num_classes(); ++c) {
      int r0 = g.class_rep(c);
      if (r0 <= g.class_rep(g.inverse_class(c))) elems.push_back(r0);
    }
    std::sort(elems.begin(), elems.end());
    int ne = (int)elems.size();

    // closure bitsets for singles and canonical pairs; a tuple is redundant
    // iff one entry lies in the closure of the others, in which case the
    // redundancy lemma settles the verdict without a search
    auto closure_bits = [&](std::vector<int> seeds) {
      std::vector<bool> in(n, false);
      std::vector<int> stack{0};
      in[0] = true;
      for (size_t head = 0; head < stack.size(); ++head)
        for (int s : seeds) {
          int y = g.mult(stack[head], s);
          if (!in[y]) {
            in[y] = true;
            stack.push_back(y);
          }
        }
      return in;
    };
    std::vector<std::vector<bool>> single(ne);
    std::vector<bool> single_gen(ne);
    for (int i = 0; i < ne; ++i) {
      single[i] = closure_bits({elems[i]});
      single_gen[i] = (int)std::count(single[i].begin(), single[i].end(), true) == n;
    }
    std::vector<std::vector<std::vector<bool>>> pair;
    std::vector<std::vector<bool>> pair_gen;
    if (rank == 3) {
      pair.assign(ne, {});
      pair_gen.assign(ne, std::vector<bool>(ne, false));
      for (int i = 0; i < ne; ++i) {
        pair[i].resize(ne);
        for (int j = i; j < ne; ++j) {
          pair[i][j] = closure_bits({elems[i], elems[j]});
          pair_gen[i][j] = (int)std::count(pair[i][j].begin(), pair[i][j].end(), true) == n;
        }
      }
    }

    KernelPrimitiveSweeper sweeper(entry.g, rank, state_budget);
    auto bfs_verdict = [&](const std::vector<int>& t) {
      ++rep.components_explored;
      return sweeper.verdict(t);
    };
    auto record_failure = [&](const std::vector<int>& t) {
      SphereSearchFailure f;
      f.group = entry.name;
      f.tuple = t;
      for (int e : t) f.tuple_labels.push_back(g.label_of(e));
      rep.failures.push_back(std::move(f));
    };

    if (rank == 2) {
      for (int i = 0; i < ne; ++i)
        for (int j = i; j < ne; ++j) {
          bool red = single[j][elems[i]] || single[i][elems[j]];
          bool surj;
          if (red)
            surj = (single[j][elems[i]] && single_gen[j]) || (single[i][elems[j]] && single_gen[i]);
          else
            surj = g.generates({elems[i], elems[j]});
          if (!surj) continue;
          ++rep.surjections;
          if (red) continue;  // redundant tuple: primitive in kernel by construction
          if (!bfs_verdict({elems[i], elems[j]})) record_failure({elems[i], elems[j]});
        }
    } else {
      for (int i = 0; i < ne; ++i)
        for (int j = i; j < ne; ++j)
          for (int k2 = j; k2 < ne; ++k2) {
            bool r12 = pair[i][j][elems[k2]];   // t3 in <t1,t2>
            bool r13 = pair[i][k2][elems[j]];
            bool r23 = pair[j][k2][elems[i]];
            bool red = r12 || r13 || r23;
            bool surj;
            if (red)
              surj = (r12 && pair_gen[i][j]) || (r13 && pair_gen[i][k2]) ||
                     (r23 && pair_gen[j][k2]);
            else
              surj = g.generates({elems[i], elems[j], elems[k2]});
            if (!surj) continue;
            ++rep.surjections;
            if (red) continue;
            std::vector<int> t{elems[i], elems[j], elems[k2]};
            if (!bfs_verdict(t)) record_failure(t);
          }
    }
  }
  rep.ok = rank == 3 ? rep.failures.empty() : true;
  return rep;
}

}  // namespace primhom
