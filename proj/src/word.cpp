#include "word.hpp"

#include <algorithm>
#include <sstream>

namespace primhom {

void Word::reduce() {
  std::vector<int> out;
  out.reserve(ls.size());
  for (int l : ls) {
    if (l == 0) continue;
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  ls = std::move(out);
}

Word Word::inverse() const {
  Word w;
  w.ls.reserve(ls.size());
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.ls.push_back(-*it);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.ls = a.ls;
  w.ls.insert(w.ls.end(), b.ls.begin(), b.ls.end());
  w.reduce();
  return w;
}

Word Word::cyclically_reduced() const {
  Word w = *this;
  while (w.ls.size() >= 2 && w.ls.front() == -w.ls.back()) {
    w.ls.erase(w.ls.begin());
    w.ls.pop_back();
  }
  return w;
}

std::string Word::str() const {
  if (ls.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < ls.size(); ++i) {
    // run-length collapse for readability
    size_t j = i;
    while (j + 1 < ls.size() && ls[j + 1] == ls[i]) ++j;
    int e = (int)(j - i + 1) * (ls[i] > 0 ? 1 : -1);
    if (i) os << "*";
    os << "a" << std::abs(ls[i]);
    if (e != 1) os << "^" << e;
    i = j;
  }
  return os.str();
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  std::vector<int> out;
  for (int l : w.ls) {
    int idx = std::abs(l) - 1;
    check(idx >= 0 && idx < (int)images.size(), Err::Schema, "letter out of rank");
    const Word& im = images[idx];
    if (l > 0) {
      out.insert(out.end(), im.ls.begin(), im.ls.end());
    } else {
      for (auto it = im.ls.rbegin(); it != im.ls.rend(); ++it) out.push_back(-*it);
    }
  }
  return Word(std::move(out));
}

int evaluate(const FiniteGroup& g, const std::vector<int>& images, const Word& w) {
  int acc = 0;
  for (int l : w.ls) {
    int idx = std::abs(l) - 1;
    check(idx >= 0 && idx < (int)images.size(), Err::Schema, "letter out of rank");
    int e = images[idx];
    acc = g.mult(acc, l > 0 ? e : g.inv(e));
  }
  return acc;
}

bool conjugate_in_free_group(const Word& a, const Word& b) {
  Word x = a.cyclically_reduced(), y = b.cyclically_reduced();
  if (x.ls.size() != y.ls.size()) return false;
  size_t n = x.ls.size();
  if (n == 0) return true;
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = x.ls[(s + i) % n] == y.ls[i];
    if (ok) return true;
  }
  return false;
}

bool verify_automorphism_pair(const BasisAuto& a) {
  size_t n = a.subst.size();
  if (a.inverse.size() != n) return false;
  for (size_t i = 0; i < n; ++i) {
    Word xi = Word::gen((int)i + 1);
    if (!(substitute(substitute(xi, a.inverse), a.subst) == xi)) return false;
    if (!(substitute(substitute(xi, a.subst), a.inverse) == xi)) return false;
  }
  return true;
}

}  // namespace primhom
