#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gpack/linalg.hpp"

namespace gpack {

enum class Exactness { floating, rational, root_of_unity };
enum class Field { real, complex };

// Hermitian matrix of inner products <phi_x, phi_y> = phi_x^* phi_y.
// Grams built from exact data may carry exact_colors: an n*n row-major
// labelling with equal labels exactly on equal entries.
class GramMatrix {
 public:
  explicit GramMatrix(CMatrix entries, Exactness exactness = Exactness::floating,
                      std::vector<int> exact_colors = {});

  int n() const { return static_cast<int>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(int i, int j) const { return entries_(i, j); }
  Exactness exactness() const { return exactness_; }
  std::span<const int> exact_colors() const { return exact_colors_; }
  bool is_real(double tol = 1e-9) const;

 private:
  CMatrix entries_;
  Exactness exactness_;
  std::vector<int> exact_colors_;
};

// (M + M^*) / 2, for products that are Hermitian up to rounding.
CMatrix hermitian_part(const CMatrix& m);

struct FrameVectors {
  int d = 0;
  int n = 0;
  CMatrix synthesis;  // d x n; columns are the frame vectors
};

struct SecondaryBounds {
  std::optional<double> orthoplex;
  std::optional<double> levenstein;
};

struct PackingReport {
  int n = 0;
  int d = 0;
  Field field = Field::complex;
  double coherence = 0;
  double welch = 0;
  bool welch_met = false;
  bool orthoplex_applicable = false;
  bool orthoplex_met = false;
  bool levenstein_applicable = false;
  bool levenstein_met = false;
  bool is_etf = false;
  bool is_tight = false;
  std::vector<double> distinct_offdiag_moduli;
};

struct Reduction {
  GramMatrix gram;
  std::vector<int> class_map;        // class_map[x] = representative of x's class
  std::vector<int> representatives;  // ascending
  bool equal_class_sizes = true;
};

struct DifferenceSetResult {
  bool is_difference_set = false;
  std::optional<std::int64_t> lambda;
};

struct OrbitFrame {
  GramMatrix gram;
  std::vector<CMatrix> elements;  // group elements in discovery order
  CMatrix vectors;                // distinct orbit vectors as columns
};

FrameVectors vectors_from_gram(const GramMatrix& gram, double tol = 1e-9);
// Numerical rank: eigenvalues above tol times the spectral radius.
int numerical_rank(const GramMatrix& gram, double tol = 1e-9);

double coherence(const GramMatrix& gram);
double welch_bound(int n, int d);
SecondaryBounds secondary_bounds(int n, int d, Field field);
bool is_etf(const GramMatrix& gram, double tol = 1e-8);
bool is_tight(const GramMatrix& gram, double tol = 1e-8);
// Normalised off-diagonal moduli, merged when closer than gap.
std::vector<double> distinct_offdiag_moduli(const GramMatrix& gram, double gap = 1e-7);
PackingReport packing_report(const GramMatrix& gram, double tol = 1e-8);

Reduction projective_reduce(const GramMatrix& gram, double tol = 1e-7);
GramMatrix naimark_complement(const GramMatrix& gram, double tol = 1e-8);

// Gram of the characters in `subset` restricted to the abelian group with the
// given cyclic factors; elements and characters are tuples indexed
// lexicographically.
GramMatrix harmonic_gram(std::span<const int> moduli, std::span<const std::vector<int>> subset);
DifferenceSetResult difference_set_check(std::span<const int> moduli, std::span<const std::vector<int>> subset);

OrbitFrame matrix_group_orbit_gram(std::span<const CMatrix> generators, const CVector& v,
                                   std::int64_t order_cap, double tol = 1e-9);

}  // namespace gpack
