#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gpack/frames.hpp"
#include "gpack/permgroup.hpp"

namespace gpack {

// Complete digraph with a colour on every ordered pair, including loops.
struct ColoredDigraph {
  int n = 0;
  std::vector<int> color;  // row-major n x n

  int at(int i, int j) const { return color[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

// Colours Gram entries by value. Exact colours are used when present;
// otherwise values within tol share a colour, and values closer than 10 tol
// that are not within tol raise NumericError.
ColoredDigraph color_gram(const GramMatrix& gram, double tol);
// Colours two Grams with one shared palette so that colours are comparable.
std::pair<ColoredDigraph, ColoredDigraph> color_gram_pair(const GramMatrix& a, const GramMatrix& b, double tol);

PermutationGroup automorphism_group(const ColoredDigraph& graph, std::uint64_t node_cap = kDefaultNodeCap);
// Some sigma with b.at(sigma(i), sigma(j)) == a.at(i, j) for all i, j.
std::optional<Permutation> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b,
                                            std::uint64_t node_cap = kDefaultNodeCap);

PermutationGroup gram_symmetry_group(const GramMatrix& gram, double tol = 1e-9,
                                     std::uint64_t node_cap = kDefaultNodeCap);
bool is_homogeneous(const GramMatrix& gram, double tol = 1e-9, std::uint64_t node_cap = kDefaultNodeCap);
bool regular_subgroup_check(const GroupAction& action, std::span<const Permutation> subgroup_generators);

}  // namespace gpack
