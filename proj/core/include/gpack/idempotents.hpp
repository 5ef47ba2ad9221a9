#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gpack/frames.hpp"
#include "gpack/linalg.hpp"
#include "gpack/scheme.hpp"

namespace gpack {

// Primitive central idempotents E_j = sum_i coefficients(j, i) A_i of the
// adjacency algebra, sorted by (rank, rounded coefficients).
struct IsotypicDecomposition {
  int point_count = 0;
  std::vector<CMatrix> projections;
  std::vector<int> ranks;
  CMatrix coefficients;  // rows: projections, columns: orbitals
  // Irreducible degree and its multiplicity in the permutation module;
  // absent when the value is not recognisably an integer.
  std::vector<std::optional<int>> degrees;
  std::vector<std::optional<int>> multiplicities;
  int trivial_index = 0;

  int size() const { return static_cast<int>(projections.size()); }
};

inline constexpr double kDefaultClusterTol = 1e-8;

IsotypicDecomposition central_primitive_idempotents(const SchurianScheme& scheme, std::uint64_t seed = 1,
                                                    double tol = kDefaultClusterTol);

// coefficients(j, i) / coefficients(j, 0), one value per orbital.
std::vector<Complex> spherical_function_values(const IsotypicDecomposition& dec, int j);

// Sum of the selected projections.
GramMatrix projection_from_subset(const IsotypicDecomposition& dec, std::span<const int> subset);

bool multiplicity_free(const IsotypicDecomposition& dec);

}  // namespace gpack
