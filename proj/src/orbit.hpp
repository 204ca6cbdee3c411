#pragma once

#include <functional>
#include <optional>

#include "chartable.hpp"
#include "word.hpp"

namespace primhom {

struct OrbitOptions {
  long long state_budget = 100000000;
  bool track_words = false;
  bool compute_redundant = false;
  bool early_exit_on_identity = false;  // verdict-only mode; image set then partial
};

struct OrbitResult {
  std::vector<int> images;                      // sorted element indices
  std::vector<std::pair<int, Word>> witnesses;  // (image, primitive word), BFS-first
  long long visited = 0;
  bool component_has_redundant = false;
  bool redundant_computed = false;
  bool early_exited = false;
};

// BFS over G^n under the extended Nielsen moves (left/right multiplications,
// inversion, transposition) starting from the generator images; images are
// all entries of all visited tuples.
OrbitResult primitive_image_set(const Hom& h, const OrbitOptions& opt = {});

std::pair<bool, std::optional<Word>> has_primitive_in_kernel(
    const Hom& h, bool want_witness = true, long long state_budget = 100000000);

// rows of the table whose irreducible has a nonzero vector fixed by the
// image of some primitive element
std::vector<int> irrpr_rows(const Hom& h, const CharacterTable& t, const OrbitOptions& opt = {});

// p-groups: images form a basis of G/Phi(G) iff no primitive is in the kernel
bool frattini_basis_check(const Hom& h);

// BFS over the tuple orbit under arbitrary verified basis substitutions,
// collecting the images of the seed words at every visited tuple; the result
// is closed under inversion and conjugation by the subgroup the images generate.
std::vector<int> automorphism_orbit_images(const Hom& h, const std::vector<BasisAuto>& autos,
                                           const std::vector<Word>& seeds,
                                           const OrbitOptions& opt = {});

// Enumerates tuples (with their parallel basis words) by BFS depth <= word_budget.
// Callback gets each newly visited tuple's words; return false to stop early.
// Sets *truncated if the frontier was still growing at the budget.
void visit_nielsen_orbit_words(const Hom& h, int word_budget, long long state_budget,
                               const std::function<bool(const std::vector<Word>&)>& cb,
                               bool* truncated);

// Verdict-only reachability ("does the extended Nielsen component contain a
// tuple with an identity entry?") with scratch shared across many seed tuples
// of the same group: territory explored for one seed settles later seeds in
// the same component on first contact.
class KernelPrimitiveSweeper {
 public:
  KernelPrimitiveSweeper(GroupPtr g, int rank, long long state_budget);
  ~KernelPrimitiveSweeper();
  bool verdict(const std::vector<int>& tuple);
  long long states_explored() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace primhom
