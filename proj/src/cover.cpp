#include "cover.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace primhom {

CoverGraph build_cover(const Hom& h, std::optional<int> subgroup_elt) {
  const FiniteGroup& g = *h.group;
  CoverGraph c;
  c.group = h.group;
  c.images = h.images;
  c.rank_n = h.rank();
  c.regular = !subgroup_elt.has_value();

  // right cosets <s>\G; the regular cover is the trivial-subgroup case
  std::vector<int> rep_of(g.order());
  if (c.regular) {
    for (int x = 0; x < g.order(); ++x) rep_of[x] = x;
  } else {
    int s = *subgroup_elt;
    int o = g.element_order(s);
    for (int x = 0; x < g.order(); ++x) {
      int best = x, y = x;
      for (int k = 1; k < o; ++k) {
        y = g.mult(s, y);
        best = std::min(best, y);
      }
      rep_of[x] = best;
    }
  }
  std::vector<int> reps;
  std::map<int, int> coset_id;  // rep -> provisional id
  for (int x = 0; x < g.order(); ++x)
    if (rep_of[x] == x) {
      coset_id[x] = (int)reps.size();
      reps.push_back(x);
    }
  int nv = (int)reps.size();

  // provisional edges on coset ids, then BFS renumbering from the identity coset
  std::vector<std::vector<int>> head0(nv, std::vector<int>(c.rank_n));
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < c.rank_n; ++i) head0[v][i] = coset_id.at(rep_of[g.mult(reps[v], h.images[i])]);

  std::vector<int> newid(nv, -1);
  std::vector<int> order_out;
  auto bfs_from = [&](int startv) {
    std::vector<int> q{startv};
    newid[startv] = (int)order_out.size();
    order_out.push_back(startv);
    for (size_t headp = 0; headp < q.size(); ++headp) {
      int v = q[headp];
      for (int i = 0; i < c.rank_n; ++i) {
        int w = head0[v][i];
        if (newid[w] == -1) {
          newid[w] = (int)order_out.size();
          order_out.push_back(w);
          q.push_back(w);
        }
      }
    }
  };
  bfs_from(coset_id.at(rep_of[0]));
  for (int v = 0; v < nv; ++v)
    if (newid[v] == -1) bfs_from(v);  // disconnected cover (non-surjective phi)

  c.n_vertices = nv;
  c.base = 0;
  c.coset_rep.resize(nv);
  for (int v = 0; v < nv; ++v) c.coset_rep[newid[v]] = reps[v];
  c.vertex_of_elt.resize(g.order());
  for (int x = 0; x < g.order(); ++x) c.vertex_of_elt[x] = newid[coset_id.at(rep_of[x])];
  c.head.assign(nv, std::vector<int>(c.rank_n));
  c.back.assign(nv, std::vector<int>(c.rank_n));
  for (int old_v = 0; old_v < nv; ++old_v)
    for (int i = 0; i < c.rank_n; ++i) c.head[newid[old_v]][i] = newid[head0[old_v][i]];
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < c.rank_n; ++i) c.back[c.head[v][i]][i] = v;
  return c;
}

CycleSpace cycle_space(const CoverGraph& c) {
  CycleSpace cs;
  int nv = c.n_vertices, n = c.rank_n;
  cs.parent_v.assign(nv, -1);
  cs.parent_gen.assign(nv, -1);
  cs.parent_dir.assign(nv, 0);
  cs.cycle_idx.assign(nv, std::vector<int>(n, -2));
  std::vector<bool> seen(nv, false);
  cs.components = 0;
  std::vector<bool> tree_edge(nv * n, false);
  for (int root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    ++cs.components;
    std::vector<int> q{root};
    seen[root] = true;
    for (size_t hp = 0; hp < q.size(); ++hp) {
      int v = q[hp];
      for (int i = 0; i < n; ++i) {
        int w = c.head[v][i];
        if (!seen[w]) {
          seen[w] = true;
          cs.parent_v[w] = v;
          cs.parent_gen[w] = i;
          cs.parent_dir[w] = +1;
          tree_edge[v * n + i] = true;
          q.push_back(w);
        }
        int u = c.back[v][i];
        if (!seen[u]) {
          seen[u] = true;
          cs.parent_v[u] = v;
          cs.parent_gen[u] = i;
          cs.parent_dir[u] = -1;  // tree edge runs u --i--> v
          tree_edge[u * n + i] = true;
          q.push_back(u);
        }
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < n; ++i) {
      if (tree_edge[v * n + i])
        cs.cycle_idx[v][i] = -1;
      else {
        cs.cycle_idx[v][i] = (int)cs.basis_edges.size();
        cs.basis_edges.emplace_back(v, i);
      }
    }
  cs.dim = (int)cs.basis_edges.size();
  check(cs.dim == c.n_edges() - nv + cs.components, Err::Internal, "Euler count mismatch");
  return cs;
}

int elevation_degree(const CoverGraph& c, const Word& w, int start) {
  check(!w.empty(), Err::EmptyWord, "elevation of the empty word");
  auto step = [&](int v) {
    for (int l : w.ls) {
      int i = std::abs(l) - 1;
      v = l > 0 ? c.head[v][i] : c.back[v][i];
    }
    return v;
  };
  int k = 1, v = step(start);
  while (v != start) {
    v = step(v);
    ++k;
    check(k <= c.n_vertices, Err::Internal, "elevation degree exceeds vertex count");
  }
  return k;
}

std::vector<long long> elevation_class(const CoverGraph& c, const CycleSpace& cs, const Word& w,
                                       int start) {
  int k = elevation_degree(c, w, start);
  std::vector<long long> coord(cs.dim, 0);
  int v = start;
  for (int rep = 0; rep < k; ++rep) {
    for (int l : w.ls) {
      int i = std::abs(l) - 1;
      if (l > 0) {
        int ci = cs.cycle_idx[v][i];
        if (ci >= 0) ++coord[ci];
        v = c.head[v][i];
      } else {
        int u = c.back[v][i];
        int ci = cs.cycle_idx[u][i];
        if (ci >= 0) --coord[ci];
        v = u;
      }
    }
  }
  check(v == start, Err::Internal, "elevation path not closed");
  return coord;
}

HomologySpace homology_action(const CoverGraph& c, const Hom& h) {
  const FiniteGroup& g = *h.group;
  check(c.regular, Err::BadParameters, "deck action requires the regular cover");
  check(h.surjective(), Err::BadParameters, "deck action requires a surjective homomorphism");
  HomologySpace hs;
  hs.cover = c;
  hs.cycles = cycle_space(c);
  hs.dim = hs.cycles.dim;
  check(hs.cycles.components == 1, Err::Internal, "regular cover of surjection must be connected");
  check(hs.dim == (h.rank() - 1) * g.order() + 1, Err::ChevalleyWeilViolation,
        "H1 dimension differs from (n-1)|G|+1");

  // edge list of each basis cycle: base -> tail, the edge, head -> base
  std::vector<std::vector<std::array<int, 3>>> cyc_edges(hs.dim);
  auto path_from_base = [&](int v) {
    std::vector<std::array<int, 3>> p;
    while (hs.cycles.parent_v[v] != -1) {
      int pv = hs.cycles.parent_v[v], pg = hs.cycles.parent_gen[v], pd = hs.cycles.parent_dir[v];
      p.push_back({pd > 0 ? pv : v, pg, pd});
      v = pv;
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (int j = 0; j < hs.dim; ++j) {
    auto [v0, i0] = hs.cycles.basis_edges[j];
    auto up = path_from_base(v0);
    auto down = path_from_base(c.head[v0][i0]);
    std::vector<std::array<int, 3>> e = up;
    e.push_back({v0, i0, +1});
    for (auto it = down.rbegin(); it != down.rend(); ++it) e.push_back({(*it)[0], (*it)[1], -(*it)[2]});
    cyc_edges[j] = std::move(e);
  }

  // deck matrices: left translation on vertices (vertices are group elements
  // for the regular cover, numbered via vertex_of_elt)
  hs.deck.assign(g.order(), std::vector<std::vector<long long>>(hs.dim, std::vector<long long>(hs.dim, 0)));
  for (int d = 0; d < g.order(); ++d) {
    auto& m = hs.deck[d];
    for (int j = 0; j < hs.dim; ++j) {
      for (const auto& e : cyc_edges[j]) {
        int v = e[0], gen = e[1], dir = e[2];
        int tv = c.vertex_of_elt[g.mult(d, c.coset_rep[v])];
        int ci = hs.cycles.cycle_idx[tv][gen];
        if (ci >= 0) m[ci][j] += dir;
      }
    }
  }

  // the deck map must be a homomorphism (checked on generator pairs)
  for (int a : h.images)
    for (int b : h.images) {
      int ab = g.mult(a, b);
      for (int i = 0; i < hs.dim; ++i)
        for (int j = 0; j < hs.dim; ++j) {
          long long s = 0;
          for (int k = 0; k < hs.dim; ++k) s += hs.deck[a][i][k] * hs.deck[b][k][j];
          check(s == hs.deck[ab][i][j], Err::Internal, "deck action is not a homomorphism");
        }
    }

  hs.character.resize(g.num_classes());
  for (int cl = 0; cl < g.num_classes(); ++cl) {
    long long tr = 0;
    const auto& m = hs.deck[g.class_rep(cl)];
    for (int i = 0; i < hs.dim; ++i) tr += m[i][i];
    hs.character[cl] = tr;
    long long expect = g.class_rep(cl) == 0 ? hs.dim : 1;
    check(tr == expect, Err::ChevalleyWeilViolation,
          "deck character differs from (n-1)*regular + trivial");
  }
  return hs;
}

QuotientFixedReport quotient_fixed_check(const HomologySpace& hs, const Hom& h, int g) {
  const FiniteGroup& grp = *h.group;
  int dim = hs.dim;
  // dim ker(D_g - I) over Q
  Echelon<Rat> ech(dim);
  const auto& m = hs.deck[g];
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> row(dim);
    for (int j = 0; j < dim; ++j) row[j] = Rat(m[i][j] - (i == j ? 1 : 0));
    ech.insert(std::move(row));
  }
  int fixed = dim - (int)ech.rank();
  CoverGraph q = build_cover(h, g);
  CycleSpace qcs = cycle_space(q);
  QuotientFixedReport rep{fixed, qcs.dim};
  check(rep.fixed_dim == rep.quotient_rank, Err::ExhaustiveCheckFailed,
        "transfer identity fails: fixed dim " + std::to_string(fixed) + " vs quotient rank " +
            std::to_string(qcs.dim));
  (void)grp;
  return rep;
}

namespace {

// character value of the span action: trace of D_h restricted to the row space
Rat span_trace(const Echelon<Rat>& basis, const std::vector<std::vector<long long>>& dh) {
  size_t k = basis.rank(), dim = basis.cols();
  Rat tr = 0;
  for (size_t i = 0; i < k; ++i) {
    std::vector<Rat> img(dim, Rat(0));
    const auto& b = basis.rows()[i];
    for (size_t r = 0; r < dim; ++r) {
      if (b[r] == 0) continue;
      for (size_t c = 0; c < dim; ++c)
        if (dh[c][r] != 0) img[c] += b[r] * Rat(dh[c][r]);
    }
    auto coords = basis.coordinates(std::move(img));
    check(coords.has_value(), Err::Internal, "span is not invariant under the deck action");
    tr += (*coords)[i];
  }
  return tr;
}

}  // namespace

SubrepSpan primitive_homology_span(const Hom& h, const CharacterTable& t, int word_budget,
                                   const SpanOptions& opt) {
  const FiniteGroup& g = *h.group;
  int n = h.rank();
  CoverGraph cov = build_cover(h);
  HomologySpace hs = homology_action(cov, h);
  SubrepSpan out;
  out.dim = hs.dim;
  out.word_budget = word_budget;

  OrbitOptions oo;
  oo.state_budget = opt.state_budget;
  out.irrpr = irrpr_rows(h, t, oo);
  check(!out.irrpr.empty() && out.irrpr[0] == 0, Err::Internal,
        "trivial representation missing from Irrpr");
  int r = t.num_rows();
  out.upper_mult.assign(r, 0);
  for (int i : out.irrpr) out.upper_mult[i] = (n - 1) * t.dims[i];
  out.upper_mult[0] += 1;

  Echelon<Rat> span(hs.dim);
  std::set<std::vector<int>> word_seen;
  std::vector<bool> image_checked(g.order(), false);
  bool full = false;

  visit_nielsen_orbit_words(
      h, word_budget, opt.state_budget,
      [&](const std::vector<Word>& words) {
        const Word& w = words[0];
        if (w.empty()) return true;  // first entry mapped to a trivial word cannot happen: basis
        if (!word_seen.insert(w.ls).second) return true;
        ++out.words_used;
        auto base_vec = elevation_class(cov, hs.cycles, w, cov.base);
        int img = evaluate(h, w);
        // G-orbit of the elevation: deck translates
        Echelon<Rat>* orbit_basis = nullptr;
        Echelon<Rat> orbit(hs.dim);
        bool do_check = opt.check_induced && !image_checked[img] &&
                        out.orbit_checks < opt.max_induced_checks;
        if (do_check) orbit_basis = &orbit;
        for (int d = 0; d < g.order(); ++d) {
          std::vector<Rat> v(hs.dim, Rat(0));
          const auto& m = hs.deck[d];
          for (int c = 0; c < hs.dim; ++c) {
            if (base_vec[c] == 0) continue;
            for (int rr = 0; rr < hs.dim; ++rr)
              if (m[rr][c] != 0) v[rr] += Rat(m[rr][c] * base_vec[c]);
          }
          if (orbit_basis) orbit_basis->insert(v);
          span.insert(std::move(v));
        }
        if (do_check) {
          image_checked[img] = true;
          ++out.orbit_checks;
          // the span of one primitive orbit must be Ind_{<img>}^G C_triv
          auto ind = induced_trivial_character(g, img);
          std::vector<Cyclo> span_char(g.num_classes());
          for (int cl = 0; cl < g.num_classes(); ++cl) {
            Rat tr = span_trace(*orbit_basis, hs.deck[g.class_rep(cl)]);
            span_char[cl] = Cyclo(tr);
          }
          for (int cl = 0; cl < g.num_classes(); ++cl)
            check(span_char[cl] == ind[cl], Err::ExhaustiveCheckFailed,
                  "orbit span character differs from induced trivial character");
          for (int row = 0; row < t.num_rows(); ++row) {
            Cyclo ip = class_function_inner(g, ind, t.rows[row]);
            check(ip == Cyclo(Rat(dim_fixed_subspace(t, row, img))), Err::ExhaustiveCheckFailed,
                  "Frobenius reciprocity fails for induced character");
          }
        }
        if ((int)span.rank() == hs.dim) {
          full = true;
          return false;  // span is everything; stop enumerating
        }
        return true;
      },
      &out.budget_truncated);

  out.rank = (int)span.rank();
  out.lower_mult.assign(r, 0);
  if (full) {
    for (int i = 0; i < r; ++i) out.lower_mult[i] = (n - 1) * t.dims[i];
    out.lower_mult[0] += 1;
    out.budget_truncated = false;
  } else {
    // exact isotypic multiplicities of the span via the cyclotomic projectors
    // P_i = (dim_i/|G|) sum_g conj(chi_i(g)) D_g, applied to the span basis;
    // class sums of deck translates are shared across rows
    size_t k = span.rank();
    std::vector<std::vector<std::vector<Rat>>> class_sum(
        g.num_classes(), std::vector<std::vector<Rat>>(k, std::vector<Rat>(hs.dim, Rat(0))));
    for (int cl = 0; cl < g.num_classes(); ++cl)
      for (int d : g.class_members(cl)) {
        const auto& m = hs.deck[d];
        for (size_t row = 0; row < k; ++row) {
          const auto& b = span.rows()[row];
          auto& acc = class_sum[cl][row];
          for (int c = 0; c < hs.dim; ++c) {
            if (b[c] == 0) continue;
            for (int rr = 0; rr < hs.dim; ++rr)
              if (m[rr][c] != 0) acc[rr] += b[c] * Rat(m[rr][c]);
          }
        }
      }
    long long rank_total = 0;
    for (int i = 0; i < r; ++i) {
      Echelon<Cyclo> proj(hs.dim);
      for (size_t row = 0; row < k; ++row) {
        std::vector<Cyclo> v(hs.dim, Cyclo::zero());
        for (int cl = 0; cl < g.num_classes(); ++cl) {
          Cyclo coef = t.rows[i][cl].conj();
          if (coef.is_zero()) continue;
          for (int c = 0; c < hs.dim; ++c)
            if (class_sum[cl][row][c] != 0) v[c] += Cyclo(class_sum[cl][row][c]) * coef;
        }
        proj.insert(std::move(v));  // overall scalar dim_i/|G| does not change rank
      }
      check(proj.rank() % t.dims[i] == 0, Err::Internal,
            "isotypic rank not divisible by degree");
      out.lower_mult[i] = (int)(proj.rank() / t.dims[i]);
      rank_total += (long long)proj.rank();
    }
    check(rank_total == out.rank, Err::Internal, "isotypic ranks do not sum to span rank");
  }
  for (int i = 0; i < r; ++i)
    check(out.lower_mult[i] <= out.upper_mult[i], Err::ExhaustiveCheckFailed,
          "span multiplicity exceeds the restriction bound");
  out.determined = out.lower_mult == out.upper_mult;
  return out;
}

}  // namespace primhom
