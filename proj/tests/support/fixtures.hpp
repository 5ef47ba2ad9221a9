#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gallery.hpp"
#include "gpack/gpack.hpp"

namespace fixtures {

using gpack::GroupAction;
using gpack::Permutation;
using gpack::PermutationGroup;

inline PermutationGroup group(int degree, const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(Permutation::from_cycles(c, degree));
  return PermutationGroup(degree, std::move(gens));
}

inline PermutationGroup dihedral(int n) {
  std::string rotation = "(";
  for (int i = 0; i < n; ++i) rotation += std::to_string(i) + (i + 1 < n ? " " : ")");
  std::string reflection;
  for (int i = 1; i < n - i; ++i) reflection += "(" + std::to_string(i) + " " + std::to_string(n - i) + ")";
  return group(n, {rotation, reflection.empty() ? "()" : reflection});
}

struct SchemeFixture {
  std::string name;
  std::function<gpack::SchurianScheme()> build;
  bool heavy = false;  // large enough that exhaustive subset scans are trimmed
};

// Transitive actions covering commutative and noncommutative schemes,
// regular, 2-transitive, class-scheme and imprimitive cases.
inline std::vector<SchemeFixture> scheme_fixtures() {
  using namespace gpack;
  namespace gal = gpack::gallery;
  return {
      {"S3 natural", [] { return scheme_from_action(GroupAction(gal::symmetric_group(3))); }},
      {"S4 natural", [] { return scheme_from_action(GroupAction(gal::symmetric_group(4))); }},
      {"D5 natural", [] { return scheme_from_action(GroupAction(dihedral(5))); }},
      {"D6 natural", [] { return scheme_from_action(GroupAction(dihedral(6))); }},
      {"Z4 regular", [] { return scheme_from_action(regular_action(gal::cyclic_group(4))); }},
      {"Z5 regular", [] { return scheme_from_action(regular_action(gal::cyclic_group(5))); }},
      {"Z7 regular", [] { return scheme_from_action(regular_action(gal::cyclic_group(7))); }},
      {"S3 regular", [] { return scheme_from_action(regular_action(gal::symmetric_group(3))); }},
      {"Q8 regular", [] { return scheme_from_action(GroupAction(gal::quaternion_group(), ActionLabel::regular)); }},
      {"S3 classes", [] { return conjugacy_class_scheme(gal::symmetric_group(3)); }},
      {"Q8 classes", [] { return conjugacy_class_scheme(gal::quaternion_group()); }},
      {"S4 pairs", [] { return scheme_from_action(induced_pair_action(GroupAction(gal::symmetric_group(4)))); }},
      {"AGL lines", [] { return scheme_from_action(gal::agl_lines()); }},
      {"SL2(8) pairs", [] { return scheme_from_action(induced_pair_action(gal::sl2_f8_projective_line())); }},
      {"Heisenberg p=3", [] { return scheme_from_action(gpack::heis::heisenberg_permutation_action(3)); }},
      {"M11 pairs", [] { return scheme_from_action(induced_pair_action(gal::m11_on_12())); }, true},
      {"Hoggar", [] { return scheme_from_action(gal::hoggar_action()); }, true},
  };
}

}  // namespace fixtures
