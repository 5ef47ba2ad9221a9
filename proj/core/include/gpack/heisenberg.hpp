#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gpack/exact.hpp"
#include "gpack/frames.hpp"
#include "gpack/permgroup.hpp"

namespace gpack::heis {

// Finite abelian group of odd order, given by its cyclic factors. Roots of
// unity are exponents modulo the exponent N of the group.
class AbelianGroupSpec {
 public:
  explicit AbelianGroupSpec(std::vector<int> moduli);
  // "3" or "3,9"
  static AbelianGroupSpec parse(std::string_view text);

  const std::vector<int>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  // Inverse of 2 modulo the exponent.
  int half() const { return half_; }

  std::vector<int> element(int index) const;
  int index(std::span<const int> a) const;

  std::vector<int> add(std::span<const int> a, std::span<const int> b) const;
  std::vector<int> negate(std::span<const int> a) const;
  std::vector<int> scale(std::span<const int> a, long long s) const;

  // Exponent of <a, alpha> = exp(2 pi i sum a_i alpha_i / m_i).
  int pairing(std::span<const int> a, std::span<const int> alpha) const;

 private:
  std::vector<int> moduli_;
  int order_ = 1;
  int exponent_ = 1;
  int half_ = 1;
};

// Element u = (a, alpha) of K = A x dual(A).
struct KElement {
  std::vector<int> a;
  std::vector<int> alpha;
  friend bool operator==(const KElement&, const KElement&) = default;
};

struct HeisenbergElement {
  std::vector<int> a;
  std::vector<int> alpha;
  int z = 0;  // exponent of the central root of unity
  KElement k() const { return {a, alpha}; }
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

// gamma(z) = z^g with gcd(g, N) = 1.
struct GammaTwist {
  int g = 1;
};

enum class Parity { even, odd };

// Elements of K in lexicographic order of (a, alpha).
std::vector<KElement> k_elements(const AbelianGroupSpec& spec);

// Exponent of [u, v] = <b, alpha> / <a, beta> for u = (a, alpha), v = (b, beta).
int symplectic_form(const AbelianGroupSpec& spec, const KElement& u, const KElement& v);

HeisenbergElement heisenberg_identity(const AbelianGroupSpec& spec);
HeisenbergElement heisenberg_multiply(const AbelianGroupSpec& spec, const HeisenbergElement& x,
                                      const HeisenbergElement& y);
HeisenbergElement heisenberg_inverse(const AbelianGroupSpec& spec, const HeisenbergElement& x);

// Monomial |A| x |A| matrix: row b has the single entry zeta^phase[b] in
// column column[b].
struct MonomialMatrix {
  int modulus = 1;  // root-of-unity order N
  std::vector<int> column;
  std::vector<int> phase;

  CMatrix dense() const;
  friend MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
  // Trace as an element of Q(zeta_N).
  Cyclotomic trace() const;
};

MonomialMatrix schrodinger_matrix(const AbelianGroupSpec& spec, GammaTwist gamma, const HeisenbergElement& h);

// Projections onto even and odd functions on A.
std::pair<RationalMatrix, RationalMatrix> parity_projectors(const AbelianGroupSpec& spec);

// Gram matrix whose entries are coefficient * zeta_N^exponent.
struct ExactRootGram {
  int n = 0;
  int modulus = 1;
  std::vector<Rational> coefficient;  // row-major
  std::vector<int> exponent;          // row-major, in [0, modulus)

  Cyclotomic entry(int i, int j) const;
  GramMatrix to_gram() const;
};

// Closed form over K in lexicographic order: diagonal (|A| + 1)/2 or
// (|A| - 1)/2, off-diagonal +-1/2 gamma([u, v]^(1/2)).
ExactRootGram heis_etf_gram(const AbelianGroupSpec& spec, GammaTwist gamma, Parity parity);
// Hilbert-Schmidt Gram of pi(u) P over u in K, in Q(zeta_N).
std::vector<Cyclotomic> heis_etf_gram_direct(const AbelianGroupSpec& spec, GammaTwist gamma, Parity parity);
inline constexpr int kDirectOrderCap = 49;

// Exact certificate: constant diagonal, constant off-diagonal modulus and
// G^2 = c G with rational c, checked in Z[zeta_N].
bool is_etf_exact(const ExactRootGram& gram);

// Action of H x| SL(2, p) on the p^3 elements of H, for A = Z_p.
GroupAction heisenberg_permutation_action(int p);
bool sp_membership(int p, const std::array<std::array<int, 2>, 2>& m);

void validate_gamma(const AbelianGroupSpec& spec, GammaTwist gamma);

}  // namespace gpack::heis
