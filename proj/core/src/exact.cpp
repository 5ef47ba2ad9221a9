#include "gpack/exact.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "gpack/error.hpp"

namespace gpack {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw InputError("shape mismatch in rational product");
  RationalMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw InputError("shape mismatch in rational sum");
  RationalMatrix c = a;
  for (std::size_t k = 0; k < c.data.size(); ++k) c.data[k] += b.data[k];
  return c;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows, cols); ++i) t += (*this)(i, i);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<Rational>>& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][static_cast<std::size_t>(col)] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][static_cast<std::size_t>(col)];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][static_cast<std::size_t>(col)] == 0) continue;
      Rational f = m[r][static_cast<std::size_t>(col)];
      for (int c = col; c < cols; ++c) m[r][static_cast<std::size_t>(c)] -= f * m[row][static_cast<std::size_t>(c)];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) m[static_cast<std::size_t>(i)].assign(data.begin() + i * cols, data.begin() + (i + 1) * cols);
  return static_cast<int>(row_reduce(m, cols).size());
}

std::vector<std::vector<Rational>> nullspace(const std::vector<std::vector<Rational>>& rows, int cols) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw InputError("ragged matrix in nullspace");
    bool zero = true;
    for (const auto& x : r) zero = zero && x == 0;
    if (!zero) m.push_back(r);
  }
  auto pivots = row_reduce(m, cols);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<BigInt>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto divisor = cyclotomic_polynomial(d);
    std::size_t dd = divisor.size() - 1;
    std::vector<BigInt> quotient(poly.size() - dd);
    for (std::size_t k = poly.size(); k-- > dd;) {
      BigInt q = poly[k];  // divisor is monic
      quotient[k - dd] = q;
      if (q == 0) continue;
      for (std::size_t t = 0; t <= dd; ++t) poly[k - dd + t] -= q * divisor[t];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, poly);
  return poly;
}

namespace {

std::vector<Rational> reduce_mod_cyclotomic(int order, std::vector<Rational> terms) {
  auto phi = cyclotomic_polynomial(order);
  std::size_t deg = phi.size() - 1;
  for (std::size_t k = terms.size(); k-- > deg;) {
    Rational q = terms[k];
    if (q == 0) continue;
    for (std::size_t t = 0; t <= deg; ++t) terms[k - deg + t] -= q * Rational(phi[t]);
  }
  terms.resize(deg);
  return terms;
}

}  // namespace

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw InputError("cyclotomic order must be positive");
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(int order, const Rational& coefficient, long long exponent) : order_(order) {
  if (order < 1) throw InputError("cyclotomic order must be positive");
  std::vector<Rational> terms(static_cast<std::size_t>(order));
  long long k = ((exponent % order) + order) % order;
  terms[static_cast<std::size_t>(k)] = coefficient;
  coeffs_ = reduce_mod_cyclotomic(order, std::move(terms));
}

Cyclotomic Cyclotomic::from_group_ring(int order, std::vector<Rational> terms) {
  if (static_cast<int>(terms.size()) != order) throw InputError("group ring vector has wrong length");
  Cyclotomic c(order);
  c.coeffs_ = reduce_mod_cyclotomic(order, std::move(terms));
  return c;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double angle = 2 * std::numbers::pi * static_cast<double>(k) / order_;
    sum += to_double(coeffs_[k]) * std::polar(1.0, angle);
  }
  return sum;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (order_ != other.order_) throw InputError("cyclotomic order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) throw InputError("cyclotomic order mismatch");
  std::vector<Rational> terms(static_cast<std::size_t>(a.order_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      terms[(i + j) % static_cast<std::size_t>(a.order_)] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic::from_group_ring(a.order_, std::move(terms));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

}  // namespace gpack
