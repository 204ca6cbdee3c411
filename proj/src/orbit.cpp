#include "orbit.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace primhom {

namespace {

enum MoveKind : uint8_t { kLeftMul, kLeftMulInv, kRightMul, kRightMulInv, kInvert, kSwap };

struct Move {
  MoveKind kind;
  uint8_t i, j;
};

std::vector<Move> build_moves(int n) {
  std::vector<Move> mv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      mv.push_back({kLeftMul, (uint8_t)i, (uint8_t)j});
      mv.push_back({kLeftMulInv, (uint8_t)i, (uint8_t)j});
      mv.push_back({kRightMul, (uint8_t)i, (uint8_t)j});
      mv.push_back({kRightMulInv, (uint8_t)i, (uint8_t)j});
    }
  for (int i = 0; i < n; ++i) mv.push_back({kInvert, (uint8_t)i, 0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) mv.push_back({kSwap, (uint8_t)i, (uint8_t)j});
  return mv;
}

void apply_move(const FiniteGroup& g, const Move& m, std::vector<int>& t) {
  switch (m.kind) {
    case kLeftMul: t[m.i] = g.mult(t[m.j], t[m.i]); break;
    case kLeftMulInv: t[m.i] = g.mult(g.inv(t[m.j]), t[m.i]); break;
    case kRightMul: t[m.i] = g.mult(t[m.i], t[m.j]); break;
    case kRightMulInv: t[m.i] = g.mult(t[m.i], g.inv(t[m.j])); break;
    case kInvert: t[m.i] = g.inv(t[m.i]); break;
    case kSwap: std::swap(t[m.i], t[m.j]); break;
  }
}

void apply_move_words(const Move& m, std::vector<Word>& w) {
  switch (m.kind) {
    case kLeftMul: w[m.i] = w[m.j] * w[m.i]; break;
    case kLeftMulInv: w[m.i] = w[m.j].inverse() * w[m.i]; break;
    case kRightMul: w[m.i] = w[m.i] * w[m.j]; break;
    case kRightMulInv: w[m.i] = w[m.i] * w[m.j].inverse(); break;
    case kInvert: w[m.i] = w[m.i].inverse(); break;
    case kSwap: std::swap(w[m.i], w[m.j]); break;
  }
}

// dense bitmap for small state spaces, hash set otherwise
class VisitedSet {
 public:
  VisitedSet(long long space) {
    if (space > 0 && space <= (1LL << 28)) dense_.assign((size_t)space, false);
  }
  bool insert(uint64_t s) {
    if (!dense_.empty()) {
      if (dense_[(size_t)s]) return false;
      dense_[(size_t)s] = true;
      return true;
    }
    return sparse_.insert(s).second;
  }
  bool contains(uint64_t s) const {
    if (!dense_.empty()) return dense_[(size_t)s];
    return sparse_.count(s) > 0;
  }

 private:
  std::vector<bool> dense_;
  std::unordered_set<uint64_t> sparse_;
};

uint64_t encode(const std::vector<int>& t, int order) {
  uint64_t s = 0;
  for (int i = (int)t.size() - 1; i >= 0; --i) s = s * order + t[i];
  return s;
}

std::vector<int> decode(uint64_t s, int order, int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) {
    t[i] = (int)(s % order);
    s /= order;
  }
  return t;
}

long long state_space_size(int order, int n) {
  long long s = 1;
  for (int i = 0; i < n; ++i) {
    if (s > (4LL << 60) / order) return -1;  // too big to index densely
    s *= order;
  }
  return s;
}

void assert_image_closure(const Hom& h, const std::vector<int>& images) {
  const FiniteGroup& g = *h.group;
  std::vector<bool> in(g.order(), false);
  for (int x : images) in[x] = true;
  for (int x : images) {
    check(in[g.inv(x)], Err::Internal, "primitive image set not closed under inversion");
    for (int c : h.images)
      check(in[g.conj(x, c)], Err::Internal, "primitive image set not closed under conjugation");
  }
}

}  // namespace

OrbitResult primitive_image_set(const Hom& h, const OrbitOptions& opt) {
  const FiniteGroup& g = *h.group;
  int n = h.rank();
  check(n >= 1, Err::BadParameters, "rank must be >= 1");
  const auto moves = build_moves(n);
  long long space = state_space_size(g.order(), n);
  check(space > 0, Err::StateBudgetExceeded, "state space too large to index");
  VisitedSet visited(space);

  OrbitResult res;
  std::vector<bool> image_set(g.order(), false);

  // order of visit + parent links (only kept when words are tracked)
  std::vector<uint64_t> order_list;
  std::vector<uint32_t> parent;
  std::vector<uint16_t> via_move;
  std::unordered_map<uint64_t, uint32_t> visit_index;
  // (image, visit order, position) for BFS-first witnesses
  std::vector<std::array<int64_t, 2>> first_seen(g.order(), {-1, -1});

  std::deque<uint64_t> queue;
  uint64_t start = encode(h.images, g.order());
  visited.insert(start);
  queue.push_back(start);

  auto note_tuple = [&](uint64_t code, const std::vector<int>& t, uint32_t idx) {
    for (int pos = 0; pos < n; ++pos) {
      int x = t[pos];
      if (!image_set[x]) {
        image_set[x] = true;
        first_seen[x] = {(int64_t)idx, pos};
      }
    }
    if (opt.compute_redundant && !res.component_has_redundant) {
      Tuple tt{t};
      if (is_redundant(g, tt)) res.component_has_redundant = true;
    }
    (void)code;
  };

  uint32_t next_index = 0;
  bool stop = false;
  while (!queue.empty() && !stop) {
    uint64_t code = queue.front();
    queue.pop_front();
    std::vector<int> t = decode(code, g.order(), n);
    uint32_t idx = next_index++;
    if (opt.track_words) {
      order_list.push_back(code);
      visit_index.emplace(code, idx);
    }
    ++res.visited;
    check(res.visited <= opt.state_budget, Err::StateBudgetExceeded,
          "state budget exceeded at " + std::to_string(res.visited));
    note_tuple(code, t, idx);
    if (opt.early_exit_on_identity && image_set[0]) {
      res.early_exited = true;
      break;
    }
    for (size_t mi = 0; mi < moves.size(); ++mi) {
      std::vector<int> s = t;
      apply_move(g, moves[mi], s);
      uint64_t sc = encode(s, g.order());
      if (visited.insert(sc)) {
        queue.push_back(sc);
        if (opt.track_words) {
          parent.push_back(idx);
          via_move.push_back((uint16_t)mi);
          // parent/via are indexed by visit order; enqueue order == visit order
          // for BFS with a FIFO queue, recorded when dequeued below
        }
        // verdict mode: an identity entry anywhere in the component settles it
        if (opt.early_exit_on_identity &&
            std::find(s.begin(), s.end(), 0) != s.end()) {
          image_set[0] = true;
          res.early_exited = true;
          stop = true;
          break;
        }
      }
    }
  }

  // parent/via were pushed at enqueue time; align them to visit order.
  // With a FIFO queue enqueue order equals visit order (root shifted by one).
  res.redundant_computed = opt.compute_redundant && !res.early_exited;
  for (int x = 0; x < g.order(); ++x)
    if (image_set[x]) res.images.push_back(x);

  if (opt.track_words) {
    // rebuild words for the BFS-first witness of each image
    std::vector<Word> basis;
    for (int i = 1; i <= n; ++i) basis.push_back(Word::gen(i));
    auto words_at = [&](uint32_t idx) {
      std::vector<uint8_t> path;
      uint32_t cur = idx;
      while (cur != 0) {
        path.push_back(via_move[cur - 1]);
        cur = parent[cur - 1];
      }
      std::vector<Word> w = basis;
      for (auto it = path.rbegin(); it != path.rend(); ++it)
        apply_move_words(moves[*it], w);
      return w;
    };
    for (int x : res.images) {
      auto [idx, pos] = first_seen[x];
      auto w = words_at((uint32_t)idx);
      Word witness = w[(size_t)pos];
      check(evaluate(h, witness) == x, Err::Internal, "witness word fails evaluation");
      res.witnesses.emplace_back(x, std::move(witness));
    }
  }

  if (!res.early_exited) assert_image_closure(h, res.images);
  return res;
}

std::pair<bool, std::optional<Word>> has_primitive_in_kernel(const Hom& h, bool want_witness,
                                                             long long state_budget) {
  OrbitOptions opt;
  opt.state_budget = state_budget;
  opt.track_words = want_witness;
  opt.early_exit_on_identity = !want_witness;
  OrbitResult r = primitive_image_set(h, opt);
  bool found = std::binary_search(r.images.begin(), r.images.end(), 0);
  if (!found || !want_witness) return {found, std::nullopt};
  for (auto& [img, w] : r.witnesses)
    if (img == 0) {
      check(evaluate(h, w) == 0, Err::Internal, "kernel witness fails evaluation");
      return {true, w};
    }
  fail(Err::Internal, "identity image without witness");
}

std::vector<int> irrpr_rows(const Hom& h, const CharacterTable& t, const OrbitOptions& opt) {
  check(t.group.get() == h.group.get() || generator_matching_isomorphic(*t.group, *h.group),
        Err::BadParameters, "table does not belong to the homomorphism's group");
  OrbitOptions o = opt;
  o.early_exit_on_identity = false;
  OrbitResult r = primitive_image_set(h, o);
  std::vector<int> rows;
  for (int i = 0; i < t.num_rows(); ++i) {
    for (int g : r.images)
      if (dim_fixed_subspace(t, i, g) > 0) {
        rows.push_back(i);
        break;
      }
  }
  return rows;
}

bool frattini_basis_check(const Hom& h) {
  const FiniteGroup& g = *h.group;
  auto p = g.p_group_prime();
  check(p.has_value() || g.order() == 1, Err::NotAPGroup, "target is not a p-group");
  if (g.order() == 1) return h.rank() == 0;
  auto phi = g.frattini_subgroup_pgroup();
  // right cosets xPhi (Phi is normal); canonical representative = min element
  std::vector<int> rep_of(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int best = g.order();
    for (int f : phi) best = std::min(best, g.mult(x, f));
    rep_of[x] = best;
  }
  std::vector<int> reps;
  std::unordered_map<int, int> rep_idx;
  for (int x = 0; x < g.order(); ++x)
    if (rep_of[x] == x) {
      rep_idx[x] = (int)reps.size();
      reps.push_back(x);
    }
  long long q = (long long)reps.size();
  // quotient must be p^rank for a basis
  long long expect = 1;
  for (int i = 0; i < h.rank(); ++i) expect *= *p;
  if (q != expect) return false;
  // images must generate the quotient
  std::vector<bool> seen(reps.size(), false);
  std::vector<int> stack{rep_idx.at(0)};
  seen[rep_idx.at(0)] = true;
  size_t count = 1;
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = reps[stack[head]];
    for (int im : h.images) {
      int y = rep_of[g.mult(x, im)];
      int yi = rep_idx.at(y);
      if (!seen[yi]) {
        seen[yi] = true;
        stack.push_back(yi);
        ++count;
      }
    }
  }
  return count == reps.size();
}

std::vector<int> automorphism_orbit_images(const Hom& h, const std::vector<BasisAuto>& autos,
                                           const std::vector<Word>& seeds,
                                           const OrbitOptions& opt) {
  const FiniteGroup& g = *h.group;
  int n = h.rank();
  for (const auto& a : autos) {
    check((int)a.subst.size() == n, Err::Schema, "substitution rank mismatch");
    check(verify_automorphism_pair(a), Err::NotAnAutomorphism,
          "substitution pair does not invert to the identity");
  }
  // each auto contributes two moves: the substitution and its inverse
  std::vector<const std::vector<Word>*> moves;
  for (const auto& a : autos) {
    moves.push_back(&a.subst);
    moves.push_back(&a.inverse);
  }

  long long space = state_space_size(g.order(), n);
  check(space > 0, Err::StateBudgetExceeded, "state space too large to index");
  VisitedSet visited(space);
  std::deque<uint64_t> queue;
  uint64_t start = encode(h.images, g.order());
  visited.insert(start);
  queue.push_back(start);

  std::vector<bool> image_set(g.order(), false);
  long long nvisited = 0;
  while (!queue.empty()) {
    uint64_t code = queue.front();
    queue.pop_front();
    std::vector<int> t = decode(code, g.order(), n);
    ++nvisited;
    check(nvisited <= opt.state_budget, Err::StateBudgetExceeded, "state budget exceeded");
    for (const Word& s : seeds) image_set[evaluate(g, t, s)] = true;
    for (const auto* subst : moves) {
      std::vector<int> nt(n);
      for (int i = 0; i < n; ++i) nt[i] = evaluate(g, t, (*subst)[i]);
      uint64_t sc = encode(nt, g.order());
      if (visited.insert(sc)) queue.push_back(sc);
    }
  }

  // close under inversion and conjugation by the image subgroup
  std::vector<int> stack;
  for (int x = 0; x < g.order(); ++x)
    if (image_set[x]) stack.push_back(x);
  for (size_t head = 0; head < stack.size(); ++head) {
    int x = stack[head];
    int ix = g.inv(x);
    if (!image_set[ix]) {
      image_set[ix] = true;
      stack.push_back(ix);
    }
    for (int c : h.images) {
      int y = g.conj(x, c);
      if (!image_set[y]) {
        image_set[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (image_set[x]) out.push_back(x);
  return out;
}

void visit_nielsen_orbit_words(const Hom& h, int word_budget, long long state_budget,
                               const std::function<bool(const std::vector<Word>&)>& cb,
                               bool* truncated) {
  const FiniteGroup& g = *h.group;
  int n = h.rank();
  const auto moves = build_moves(n);
  long long space = state_space_size(g.order(), n);
  check(space > 0, Err::StateBudgetExceeded, "state space too large to index");
  VisitedSet visited(space);

  struct Node {
    uint64_t code;
    int depth;
    std::vector<Word> words;
  };
  std::deque<Node> queue;
  std::vector<Word> basis;
  for (int i = 1; i <= n; ++i) basis.push_back(Word::gen(i));
  uint64_t start = encode(h.images, g.order());
  visited.insert(start);
  queue.push_back({start, 0, basis});
  if (truncated) *truncated = false;
  long long nvisited = 0;
  while (!queue.empty()) {
    Node nd = std::move(queue.front());
    queue.pop_front();
    ++nvisited;
    check(nvisited <= state_budget, Err::StateBudgetExceeded, "state budget exceeded");
    if (!cb(nd.words)) return;
    if (nd.depth >= word_budget) {
      // check whether anything unexplored remains beyond the budget
      if (truncated) {
        std::vector<int> t = decode(nd.code, g.order(), n);
        for (const auto& m : moves) {
          std::vector<int> s = t;
          apply_move(g, m, s);
          if (!visited.contains(encode(s, g.order()))) {
            *truncated = true;
            break;
          }
        }
      }
      continue;
    }
    std::vector<int> t = decode(nd.code, g.order(), n);
    for (size_t mi = 0; mi < moves.size(); ++mi) {
      std::vector<int> s = t;
      apply_move(g, moves[mi], s);
      uint64_t sc = encode(s, g.order());
      if (visited.insert(sc)) {
        std::vector<Word> w = nd.words;
        apply_move_words(moves[mi], w);
        queue.push_back({sc, nd.depth + 1, std::move(w)});
      }
    }
  }
}



struct KernelPrimitiveSweeper::Impl {
  GroupPtr group;
  int rank;
  long long space = 0;
  long long budget;
  long long explored_total = 0;
  int run_id = 0;
  std::vector<Move> moves;
  std::vector<int> stamp;         // -1 never seen, else id of the exploring run
  std::vector<bool> verdict_bit;  // valid where stamp != -1
  std::vector<long long> queue, explored;
};

KernelPrimitiveSweeper::KernelPrimitiveSweeper(GroupPtr g, int rank, long long state_budget)
    : impl_(new Impl) {
  impl_->group = std::move(g);
  impl_->rank = rank;
  impl_->budget = state_budget;
  impl_->moves = build_moves(rank);
  long long space = 1;
  for (int i = 0; i < rank; ++i) {
    space *= impl_->group->order();
    check(space <= (1LL << 31), Err::StateBudgetExceeded, "sweep state space too large");
  }
  impl_->space = space;
  impl_->stamp.assign((size_t)space, -1);
  impl_->verdict_bit.assign((size_t)space, false);
}

KernelPrimitiveSweeper::~KernelPrimitiveSweeper() = default;

long long KernelPrimitiveSweeper::states_explored() const { return impl_->explored_total; }

bool KernelPrimitiveSweeper::verdict(const std::vector<int>& tuple) {
  Impl& im = *impl_;
  const FiniteGroup& g = *im.group;
  int n = im.rank;
  auto enc = [&](const std::vector<int>& t) {
    long long s = 0;
    for (int i = n - 1; i >= 0; --i) s = s * g.order() + t[i];
    return s;
  };
  long long seed = enc(tuple);
  if (im.stamp[seed] != -1) return im.verdict_bit[seed];
  if (std::find(tuple.begin(), tuple.end(), 0) != tuple.end()) {
    im.stamp[seed] = im.run_id++;
    im.verdict_bit[seed] = true;
    return true;
  }
  int run = im.run_id++;
  im.queue.clear();
  im.explored.clear();
  im.queue.push_back(seed);
  im.stamp[seed] = run;
  im.explored.push_back(seed);
  bool verdict = false, settled = false;
  for (size_t head = 0; head < im.queue.size() && !settled; ++head) {
    std::vector<int> t(n);
    {
      long long s = im.queue[head];
      for (int i = 0; i < n; ++i) {
        t[i] = (int)(s % g.order());
        s /= g.order();
      }
    }
    ++im.explored_total;
    check(im.explored_total <= im.budget, Err::StateBudgetExceeded, "sweep budget exceeded");
    for (const Move& m : im.moves) {
      std::vector<int> c = t;
      apply_move(g, m, c);
      long long cc = enc(c);
      int st = im.stamp[cc];
      if (st == run) continue;
      if (st != -1) {  // contact with territory of an earlier run: same component
        verdict = im.verdict_bit[cc];
        settled = true;
        break;
      }
      if (std::find(c.begin(), c.end(), 0) != c.end()) {
        verdict = true;
        settled = true;
        im.stamp[cc] = run;
        im.explored.push_back(cc);
        break;
      }
      im.stamp[cc] = run;
      im.explored.push_back(cc);
      im.queue.push_back(cc);
    }
  }
  for (long long s : im.explored) im.verdict_bit[s] = verdict;
  return verdict;
}

}  // namespace primhom
