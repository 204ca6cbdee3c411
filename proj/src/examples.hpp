#pragma once

#include <array>

#include "cover.hpp"
#include "surface.hpp"

namespace primhom {

// Exhaustive verification of the iterated torus homology cover: the mod-p
// deck matrices of the (Z/2)^2 action on (Z/p)^5, the three-family
// classification of vectors that are components of preimages of
// nonseparating simple closed curves, and the nonvanishing of the character
// exponent r1-r2+s1-s2+d on all qualifying vectors.
struct TorusCoverReport {
  int p = 0;
  bool matrix_identities = false;  // alpha^2 = beta^2 = 1, alpha beta = beta alpha
  long long family_count[3] = {0, 0, 0};
  long long qualifying = 0;
  bool classifier_matches = false;
  bool exponent_nonzero = false;
  bool ok = false;
};

TorusCoverReport torus_cover_verify(int p);

// The 2-step nilpotent order-32 example: a two-dimensional representation
// without eigenvalue 1 on any primitive image, yet trivial on a nontrivial
// element of the group.
struct GammaReport {
  int order = 0;
  bool rho_is_homomorphism = false;
  bool generator_matrices_order_four = false;
  bool commutator_maps_to_minus_identity = false;
  bool identity_not_primitive_image = false;
  bool no_eigenvalue_one_on_primitive_images = false;
  bool nontrivial_kernel_element = false;  // phi(a^2[a,b]) != e, rho of it = I
  bool rho_row_excluded_from_irrpr = false;
  int cw_dim = 0;
  long long upper_bound_dim = 0;
  bool upper_below_cw = false;
  bool ok = false;
};

GammaReport gamma_example_verify();

// Sweep of the split metacyclic family (plus the two-puncture example group):
// for each group of order <= max_order and every canonical surjection,
// decide primitive-in-kernel.
struct SphereSearchFailure {
  std::string group;       // "metacyclic(m,k,r)" or "type_ii(24)"
  std::vector<int> tuple;  // canonical seed tuple witnessing the failure
  std::vector<std::string> tuple_labels;
};

struct SphereSearchReport {
  int max_order = 0;
  int rank = 0;
  long long groups = 0;
  long long surjections = 0;           // canonical surjections covered
  long long components_explored = 0;   // BFS runs actually performed
  std::vector<SphereSearchFailure> failures;
  bool ok = false;  // rank 3: no failures
};

SphereSearchReport sphere_catalog_search(int max_order, int rank,
                                         long long state_budget = 100000000);

}  // namespace primhom
