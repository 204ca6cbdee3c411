#pragma once

#include "orbit.hpp"

namespace primhom {

// Mapping-class action preset for a punctured surface with free fundamental
// group: verified basis substitutions, seed words representing nonseparating
// simple closed curves, and the peripheral (puncture) words every
// substitution must preserve up to conjugacy and inversion.
struct SurfacePreset {
  int rank = 0;
  std::vector<BasisAuto> autos;
  std::vector<Word> seeds;
  std::vector<Word> peripheral;
};

// Built-in preset for the torus with two punctures: basis a, b, c with a a
// puncture loop and b, c generating first homology; the four Dehn-twist
// substitutions (two slope curves and the two curves separating the
// punctures) generate the pure mapping class group.
SurfacePreset torus_two_punctures_preset();

// throws Err::NotAnAutomorphism / Err::ExhaustiveCheckFailed on a bad preset
void validate_preset(const SurfacePreset& p);

std::vector<int> scc_image_set(const Hom& h, const SurfacePreset& p,
                               const OrbitOptions& opt = {});

std::vector<int> irrscc_rows(const Hom& h, const CharacterTable& t, const SurfacePreset& p,
                             const OrbitOptions& opt = {});

// the group of the worked two-puncture example, built from its printed
// relations (a^3, b^4, bab^-1=a^2, c^2=b^2, cac^-1=a, cbc^-1=b^3)
GroupPtr sphere_type_ii_group();

}  // namespace primhom
