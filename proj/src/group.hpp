#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace primhom {

// A finite group materialized as a multiplication table over element
// indices 0..order-1, identity at index 0.  Immutable after construction.
class FiniteGroup {
 public:
  static constexpr int kDefaultOrderCap = 5000;

  int order() const { return order_; }
  int mult(int a, int b) const { return table_[(size_t)a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mult(mult(x, g), inv(x)); }  // x g x^-1
  int power(int g, long long k) const;
  int element_order(int g) const { return elem_order_[g]; }
  int exponent() const { return exponent_; }

  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& labels() const { return labels_; }  // may be empty
  std::string label_of(int g) const;
  std::optional<int> element_by_label(const std::string& s) const;

  // conjugacy data (canonical: classes sorted by minimal member, identity first)
  int num_classes() const { return (int)class_rep_.size(); }
  int class_of(int g) const { return class_of_[g]; }
  int class_rep(int c) const { return class_rep_[c]; }
  int class_size(int c) const { return (int)class_members_[c].size(); }
  const std::vector<int>& class_members(int c) const { return class_members_[c]; }
  int inverse_class(int c) const { return class_of_[inv_[class_rep_[c]]]; }

  std::vector<int> subgroup_closure(const std::vector<int>& seeds) const;  // sorted
  // true iff the seeds generate the whole group (early exit on |..| > order/2)
  bool generates(const std::vector<int>& seeds) const;
  std::vector<int> center() const;
  bool is_abelian() const;
  std::optional<int> p_group_prime() const;  // p if order is a power of p > 1
  std::vector<int> frattini_subgroup_pgroup() const;

  uint64_t canonical_hash() const;

  // --- constructors ---
  // From explicit table; validates all invariants.
  static std::shared_ptr<const FiniteGroup> from_table(int order, std::vector<int> flat_table,
                                                       std::vector<int> gens,
                                                       std::vector<std::string> labels = {});

  // BFS closure of abstract seed elements under a multiplication callback.
  // Elements are discovered breadth-first from the identity; numbering is the
  // discovery order.  T must be totally ordered (used for the index map only).
  template <class T>
  static std::shared_ptr<const FiniteGroup> closure_from_generators(
      const std::vector<T>& seeds, const std::function<T(const T&, const T&)>& mul,
      const T& identity, const std::function<std::string(const T&)>& labeler = nullptr,
      size_t bound = 1000000, int order_cap = kDefaultOrderCap);

  static std::shared_ptr<const FiniteGroup> from_permutations(
      const std::vector<std::vector<int>>& gens, int order_cap = kDefaultOrderCap);

  // order m*k, elements (i,j) in Z/m x Z/k numbered i*k+j,
  // (i,j)(i',j') = (i + r^j i', j + j'), a=(1,0), b=(0,1).
  static std::shared_ptr<const FiniteGroup> metacyclic(int m, int k, long long r);

  // metacyclic with an extra order-2-image generator c:
  // c a c^-1 = a^conj_a, c b c^-1 = b^conj_b, c^2 = b^sq.
  static std::shared_ptr<const FiniteGroup> metacyclic_ext(int m, int k, long long r,
                                                           long long conj_a, long long conj_b,
                                                           long long sq);

  // direct product of cyclic groups
  static std::shared_ptr<const FiniteGroup> abelian(const std::vector<int>& moduli);

  // Free 2-step nilpotent group of the given rank mod m, with an optional
  // further quotient of the center: elements (v, w), v in (Z/m)^n, w a coset
  // of <center_quotient> in the wedge square, canonical-form multiplication
  // (so [x_i, x_j] = e_ij exactly and the standard generators generate).
  static std::shared_ptr<const FiniteGroup> nilpotent2(
      int rank, int modulus, const std::vector<std::vector<int>>& center_quotient = {});

 private:
  int order_ = 1;
  std::vector<uint16_t> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> labels_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  std::vector<int> class_of_, class_rep_;
  std::vector<std::vector<int>> class_members_;

  void finalize(bool trusted_law);  // validates axioms, fills caches
  static std::shared_ptr<const FiniteGroup> build(int order, std::vector<int> flat_table,
                                                  std::vector<int> gens,
                                                  std::vector<std::string> labels,
                                                  bool trusted_law);
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Homomorphism F_n -> G given by generator images.
struct Hom {
  GroupPtr group;
  std::vector<int> images;
  int rank() const { return (int)images.size(); }
  bool surjective() const { return group->generates(images); }
};

struct Tuple {
  std::vector<int> entries;
};

bool is_redundant(const FiniteGroup& g, const Tuple& t);

// generator-respecting isomorphism check (maps gens of a to gens of b in
// order, extends multiplicatively); used by tests and loaders
bool generator_matching_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

template <class T>
std::shared_ptr<const FiniteGroup> FiniteGroup::closure_from_generators(
    const std::vector<T>& seeds, const std::function<T(const T&, const T&)>& mul,
    const T& identity, const std::function<std::string(const T&)>& labeler, size_t bound,
    int order_cap) {
  std::vector<T> elems{identity};
  std::map<T, int> index{{identity, 0}};
  for (size_t head = 0; head < elems.size(); ++head) {
    T cur = elems[head];  // copy: elems may reallocate
    for (const auto& s : seeds) {
      T nxt = mul(cur, s);
      if (index.emplace(nxt, (int)elems.size()).second) {
        elems.push_back(nxt);
        check(elems.size() <= bound, Err::ClosureBoundExceeded,
              "closure exceeded bound " + std::to_string(bound));
      }
    }
  }
  int n = (int)elems.size();
  check(n <= order_cap, Err::ClosureBoundExceeded,
        "group order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(mul(elems[i], elems[j]));
      check(it != index.end(), Err::ClosureBoundExceeded, "product escaped closure");
      flat[(size_t)i * n + j] = it->second;
    }
  std::vector<int> gens;
  for (const auto& s : seeds) gens.push_back(index.at(s));
  std::vector<std::string> labels;
  if (labeler) {
    labels.reserve(n);
    for (const auto& e : elems) labels.push_back(labeler(e));
  }
  return from_table(n, std::move(flat), std::move(gens), std::move(labels));
}

}  // namespace primhom
