#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace primhom {

// Freely reduced word in F_n.  Letters are nonzero ints: +i is the i-th
// generator (1-based), -i its inverse.
struct Word {
  std::vector<int> ls;

  Word() = default;
  explicit Word(std::vector<int> letters) : ls(std::move(letters)) { reduce(); }
  static Word gen(int i, int sign = 1) { return Word({sign > 0 ? i : -i}); }

  void reduce();
  bool empty() const { return ls.empty(); }
  size_t length() const { return ls.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word& b) const { return ls == b.ls; }

  Word cyclically_reduced() const;
  std::string str() const;  // e.g. "a1*a2^-1"
};

// images of word under generator substitution (word per generator, 1-based)
Word substitute(const Word& w, const std::vector<Word>& images);

int evaluate(const FiniteGroup& g, const std::vector<int>& images, const Word& w);
inline int evaluate(const Hom& h, const Word& w) { return evaluate(*h.group, h.images, w); }

// conjugacy test in the free group (cyclic words)
bool conjugate_in_free_group(const Word& a, const Word& b);

// basis substitution with a verified inverse
struct BasisAuto {
  std::vector<Word> subst;    // image of each generator
  std::vector<Word> inverse;
};

// checks subst(inverse(x_i)) and inverse(subst(x_i)) both reduce to x_i
bool verify_automorphism_pair(const BasisAuto& a);

}  // namespace primhom
