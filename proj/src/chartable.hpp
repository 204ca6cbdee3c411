#pragma once

#include <memory>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace primhom {

// Exact character table.  Rows are indexed by irreducible, columns by the
// group's canonical conjugacy-class order.  Row 0 is the trivial character;
// the rest are sorted by degree, then lexicographically on class values.
struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<Cyclo>> rows;  // rows[i][class]
  std::vector<int> dims;                 // value at identity class

  int num_rows() const { return (int)rows.size(); }
  const Cyclo& value(int row, int cls) const { return rows[row][cls]; }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Burnside/Dixon class-algebra computation over a finite field, lifted to
// exact cyclotomic values; the result is verified against both orthogonality
// relations before being returned.
TablePtr character_table(GroupPtr g);

// dim Fix(<g>) acting in the row-th irreducible: (1/ord g) * sum chi(g^k);
// always a nonnegative rational integer.
int dim_fixed_subspace(const CharacterTable& t, int row, int g);

// character of Ind_{<g>}^G C_triv (values are rational integers per class)
std::vector<Cyclo> induced_trivial_character(const FiniteGroup& g, int elt);

// exact inner product of two class functions: (1/|G|) sum size_c f(c) conj(h(c))
Cyclo class_function_inner(const FiniteGroup& g, const std::vector<Cyclo>& f,
                           const std::vector<Cyclo>& h);

// throws Err::OrthogonalityError if the rows fail either orthogonality relation
void validate_table(const CharacterTable& t);

}  // namespace primhom
