#pragma once

#include <cstdint>
#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);
double to_double(const Rational& value);

// Dense row-major matrix of rationals.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  Rational& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  static RationalMatrix identity(int n);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;
  Rational trace() const;
  int rank() const;
};

// Basis of the right nullspace of an integer matrix, by exact elimination.
std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, int cols);

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
std::vector<BigInt> cyclotomic_polynomial(int n);

// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), stored as its remainder
// modulo the N-th cyclotomic polynomial, so equality is exact equality of
// field elements.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order);
  // coefficient * zeta^exponent
  Cyclotomic(int order, const Rational& coefficient, long long exponent);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Builds the canonical form of sum_k terms[k] zeta^k for a length-N vector.
  static Cyclotomic from_group_ring(int order, std::vector<Rational> terms);

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace gpack
