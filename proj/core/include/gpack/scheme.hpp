#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpack/exact.hpp"
#include "gpack/linalg.hpp"
#include "gpack/permgroup.hpp"

namespace gpack {

// Orbital partition of X x X for a transitive action. Orbital 0 is the
// diagonal; the others are sorted by (valency, least column in row 0).
class SchurianScheme {
 public:
  struct Term {
    int k;
    std::int64_t value;
  };

  // Builds a scheme from a labelling of X x X. Labels are renumbered into
  // canonical order; the partition is checked to be an association scheme.
  SchurianScheme(int point_count, std::vector<int> labels);

  int point_count() const { return n_; }
  int orbital_count() const { return static_cast<int>(valencies_.size()); }
  int diagonal_index() const { return 0; }
  int label(int x, int y) const { return labels_[static_cast<std::size_t>(x) * n_ + y]; }
  std::span<const int> labels() const { return labels_; }
  std::span<const int> valencies() const { return valencies_; }
  int transpose(int i) const { return transpose_[static_cast<std::size_t>(i)]; }
  std::span<const int> transpose_pairing() const { return transpose_; }

  // Columns y with (x, y) in orbital i, ascending.
  std::vector<int> row(int i, int x) const;
  // A point y with (0, y) in orbital i.
  int representative(int i) const { return reps_[static_cast<std::size_t>(i)]; }

  // Nonzero intersection numbers p_ij^k: A_i A_j = sum_k p_ij^k A_k.
  std::span<const Term> product(int i, int j) const {
    return products_[static_cast<std::size_t>(i) * valencies_.size() + j];
  }

  // Dense 0/1 adjacency matrix of orbital i.
  RMatrix adjacency(int i) const;
  // Dense matrix sum_i coefficients[i] A_i.
  CMatrix expand(std::span<const Complex> coefficients) const;

 private:
  int n_;
  std::vector<int> labels_;
  std::vector<int> valencies_;
  std::vector<int> transpose_;
  std::vector<int> reps_;
  std::vector<std::vector<Term>> products_;
};

SchurianScheme scheme_from_action(const GroupAction& action);
bool is_commutative(const SchurianScheme& scheme);
SchurianScheme conjugacy_class_scheme(const PermutationGroup& group,
                                      std::int64_t element_limit = kDefaultElementLimit);

// True iff m is constant on every orbital (1e-9 absolute for floats).
bool stable_matrix_check(const SchurianScheme& scheme, const CMatrix& m, double tol = 1e-9);
bool stable_matrix_check(const SchurianScheme& scheme, const RationalMatrix& m);

}  // namespace gpack
