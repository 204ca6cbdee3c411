#include "surface.hpp"

#include <algorithm>

#include "chartable.hpp"

namespace primhom {

SurfacePreset torus_two_punctures_preset() {
  // Letters: 1 = a (puncture loop), 2 = b, 3 = c.  Derived from the square
  // torus model with the punctures at (.3,.4) and (.7,.8):
  //   v1: vertical curve left of both punctures    a->cac^-1, b->cb
  //   v2: vertical curve between the punctures     b->acb
  //   h1: horizontal curve below both punctures    a->b^-1ab, c->b^-1c
  //   h2: horizontal curve between the punctures   c->b^-1ac
  // Each fixes the peripheral classes a and a^-1[b,c] up to conjugation.
  auto W = [](std::vector<int> v) { return Word(std::move(v)); };
  SurfacePreset p;
  p.rank = 3;
  p.autos = {
      {{W({3, 1, -3}), W({3, 2}), W({3})}, {W({-3, 1, 3}), W({-3, 2}), W({3})}},
      {{W({1}), W({1, 3, 2}), W({3})}, {W({1}), W({-3, -1, 2}), W({3})}},
      {{W({-2, 1, 2}), W({2}), W({-2, 3})}, {W({2, 1, -2}), W({2}), W({2, 3})}},
      {{W({1}), W({2}), W({-2, 1, 3})}, {W({1}), W({2}), W({-1, 2, 3})}},
  };
  p.seeds = {W({2}), W({3})};
  p.peripheral = {W({1}), W({-1, 2, 3, -2, -3})};
  return p;
}

void validate_preset(const SurfacePreset& p) {
  check(p.rank >= 1, Err::Schema, "preset rank must be positive");
  for (const auto& a : p.autos) {
    check((int)a.subst.size() == p.rank && (int)a.inverse.size() == p.rank, Err::Schema,
          "substitution rank mismatch");
    check(verify_automorphism_pair(a), Err::NotAnAutomorphism,
          "preset substitution does not invert to the identity");
  }
  // every substitution must permute the peripheral classes up to inversion
  for (const auto& a : p.autos) {
    std::vector<bool> used(p.peripheral.size(), false);
    for (const auto& per : p.peripheral) {
      Word img = substitute(per, a.subst);
      bool matched = false;
      for (size_t i = 0; i < p.peripheral.size() && !matched; ++i) {
        if (used[i]) continue;
        if (conjugate_in_free_group(img, p.peripheral[i]) ||
            conjugate_in_free_group(img, p.peripheral[i].inverse())) {
          used[i] = true;
          matched = true;
        }
      }
      check(matched, Err::ExhaustiveCheckFailed,
            "substitution does not preserve the peripheral structure");
    }
  }
}

std::vector<int> scc_image_set(const Hom& h, const SurfacePreset& p, const OrbitOptions& opt) {
  check(h.rank() == p.rank, Err::BadParameters, "homomorphism rank differs from preset rank");
  validate_preset(p);
  return automorphism_orbit_images(h, p.autos, p.seeds, opt);
}

std::vector<int> irrscc_rows(const Hom& h, const CharacterTable& t, const SurfacePreset& p,
                             const OrbitOptions& opt) {
  auto images = scc_image_set(h, p, opt);
  std::vector<int> rows;
  for (int i = 0; i < t.num_rows(); ++i)
    for (int g : images)
      if (dim_fixed_subspace(t, i, g) > 0) {
        rows.push_back(i);
        break;
      }
  return rows;
}

GroupPtr sphere_type_ii_group() {
  auto g = FiniteGroup::metacyclic_ext(3, 4, 2, 1, 3, 2);
  // the printed relations, verified on the built table
  int a = g->generators()[0], b = g->generators()[1], c = g->generators()[2];
  check(g->power(a, 3) == 0 && g->power(b, 4) == 0, Err::Internal, "order relations fail");
  check(g->mult(g->mult(b, a), g->inv(b)) == g->power(a, 2), Err::Internal, "bab^-1 != a^2");
  check(g->mult(c, c) == g->mult(b, b), Err::Internal, "c^2 != b^2");
  check(g->mult(g->mult(c, a), g->inv(c)) == a, Err::Internal, "cac^-1 != a");
  check(g->mult(g->mult(c, b), g->inv(c)) == g->power(b, 3), Err::Internal, "cbc^-1 != b^3");
  return g;
}

}  // namespace primhom
