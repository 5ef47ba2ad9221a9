#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gpack/frames.hpp"
#include "gpack/linalg.hpp"
#include "gpack/permgroup.hpp"

// Concrete groups and matrices used by the examples, tests and benchmarks.
namespace gpack::gallery {

PermutationGroup symmetric_group(int n);
PermutationGroup cyclic_group(int n);
// Left regular representation of the quaternion group, points
// 1, -1, i, -i, j, -j, k, -k.
PermutationGroup quaternion_group();

// AGL(3, 2) acting on the 28 two-point subsets of F_2^3 (the affine lines).
GroupAction agl_lines();
// SL(2, 8) on the 9 points of the projective line; index 8 is infinity.
GroupAction sl2_f8_projective_line();
// M11 acting 3-transitively on 12 points.
GroupAction m11_on_12();

// The 2x2 matrices T (swap) and M (sign) and their three-fold tensor
// products generating the enlarged three-qubit Pauli group K.
CMatrix pauli_t();
CMatrix pauli_m();
std::vector<CMatrix> pauli_k_generators();
// All 256 elements i^k T^t1 M^m1 (x) T^t2 M^m2 (x) T^t3 M^m3, with k the
// slowest index and m3 the fastest.
std::vector<CMatrix> pauli_k_elements();
// Index of a matrix in pauli_k_elements(), or -1.
int pauli_k_index(const CMatrix& m);
CMatrix hoggar_u();
CMatrix hoggar_v();
CVector hoggar_fiducial();
// K x| <U, V> acting on K: K by left multiplication, U and V by conjugation.
GroupAction hoggar_action();

std::filesystem::path data_dir();
GramMatrix load_figure(int number);

// Named fixtures written by `gpack gallery`.
std::vector<std::pair<std::string, GroupAction>> named_actions();

}  // namespace gpack::gallery
