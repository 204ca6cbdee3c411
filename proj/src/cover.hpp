#pragma once

#include <optional>

#include "chartable.hpp"
#include "linalg.hpp"
#include "orbit.hpp"
#include "word.hpp"

namespace primhom {

// Cover of the rank-n rose determined by phi.  Vertices are right cosets
// <g>\G (all of G for the regular cover), renumbered by BFS from the coset of
// the identity; the edge (v, i) runs v -> v * phi(a_i).
struct CoverGraph {
  GroupPtr group;
  std::vector<int> images;      // phi on the free generators
  int rank_n = 0;
  bool regular = true;
  int n_vertices = 0;
  int base = 0;
  std::vector<int> coset_rep;               // vertex -> minimal coset member
  std::vector<int> vertex_of_elt;           // element -> vertex
  std::vector<std::vector<int>> head;       // head[v][i]
  std::vector<std::vector<int>> back;       // unique u with head[u][i] == v
  int n_edges() const { return n_vertices * rank_n; }
};

CoverGraph build_cover(const Hom& h, std::optional<int> subgroup_elt = std::nullopt);

// spanning tree (BFS from base, (vertex, generator) tie-break) and the cycle
// basis given by the non-tree edges
struct CycleSpace {
  int dim = 0;
  int components = 1;
  std::vector<int> parent_v, parent_gen, parent_dir;   // tree edge into v
  std::vector<std::vector<int>> cycle_idx;             // [v][i]: basis index or -1
  std::vector<std::pair<int, int>> basis_edges;        // index -> (v, i)
};

CycleSpace cycle_space(const CoverGraph& c);

// coordinates of the elevation of w at `start`: trace w^k for the smallest k
// closing the path, count signed crossings of non-tree edges
std::vector<long long> elevation_class(const CoverGraph& c, const CycleSpace& cs, const Word& w,
                                       int start);
// smallest k such that w^k closes up at start
int elevation_degree(const CoverGraph& c, const Word& w, int start);

struct HomologySpace {
  CoverGraph cover;
  CycleSpace cycles;
  int dim = 0;
  // deck[g] is the matrix of left translation by g on the cycle basis,
  // columns = images of basis vectors
  std::vector<std::vector<std::vector<long long>>> deck;
  std::vector<long long> character;  // exact trace per conjugacy class
};

// builds the deck action on H1 of the regular cover and verifies the
// character equals (n-1)*regular + trivial exactly
HomologySpace homology_action(const CoverGraph& c, const Hom& h);

struct QuotientFixedReport {
  int fixed_dim;       // dim H1(Y)^<g>, exact nullspace computation
  int quotient_rank;   // rank H1(Y/<g>) by Euler count
};

QuotientFixedReport quotient_fixed_check(const HomologySpace& hs, const Hom& h, int g);

struct SpanOptions {
  long long state_budget = 100000000;
  bool check_induced = true;
  int max_induced_checks = 1 << 30;
};

struct SubrepSpan {
  int dim = 0;                  // ambient H1 dimension
  int rank = 0;                 // accumulated span rank
  std::vector<int> lower_mult;  // per character row
  std::vector<int> upper_mult;
  std::vector<int> irrpr;
  bool determined = false;
  bool budget_truncated = false;
  int word_budget = 0;
  long long words_used = 0;
  long long orbit_checks = 0;   // induced-character verifications performed
};

// Accumulates the G-orbits of elevation classes of the first-entry words of
// all tuples reached within word_budget Nielsen moves; brackets the isotypic
// multiplicities of the span between the accumulated lower bound and the
// Irrpr-restriction upper bound.
SubrepSpan primitive_homology_span(const Hom& h, const CharacterTable& t, int word_budget,
                                   const SpanOptions& opt = {});

}  // namespace primhom
