#include "gpack/idempotents.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "gpack/error.hpp"

namespace gpack {

namespace {

using Coeffs = CVector;

// Arithmetic in the adjacency algebra, in the basis of orbital matrices.
class Algebra {
 public:
  explicit Algebra(const SchurianScheme& s) : scheme_(s), c_(s.orbital_count()), weight_(c_) {
    for (int k = 0; k < c_; ++k) weight_(k) = std::sqrt(static_cast<double>(s.point_count()) * s.valencies()[static_cast<std::size_t>(k)]);
  }

  int dim() const { return c_; }

  Coeffs identity() const {
    Coeffs e = Coeffs::Zero(c_);
    e(0) = 1;
    return e;
  }

  Coeffs multiply(const Coeffs& a, const Coeffs& b) const {
    Coeffs out = Coeffs::Zero(c_);
    for (int i = 0; i < c_; ++i) {
      if (a(i) == Complex(0)) continue;
      for (int j = 0; j < c_; ++j) {
        if (b(j) == Complex(0)) continue;
        Complex ab = a(i) * b(j);
        for (const auto& t : scheme_.product(i, j)) out(t.k) += ab * static_cast<double>(t.value);
      }
    }
    return out;
  }

  // Matrix of y -> x y in the orbital basis: L(k, j) = sum_i x_i p_ij^k.
  CMatrix left(const Coeffs& x) const {
    CMatrix l = CMatrix::Zero(c_, c_);
    for (int i = 0; i < c_; ++i) {
      if (x(i) == Complex(0)) continue;
      for (int j = 0; j < c_; ++j)
        for (const auto& t : scheme_.product(i, j)) l(t.k, j) += x(i) * static_cast<double>(t.value);
    }
    return l;
  }

  // Coordinates in the basis A_k / |A_k|, orthonormal for tr(S T^*).
  Coeffs to_unit(const Coeffs& e) const { return e.cwiseProduct(weight_.cast<Complex>()); }
  Coeffs from_unit(const Coeffs& u) const { return u.cwiseQuotient(weight_.cast<Complex>()); }
  double norm(const Coeffs& e) const { return to_unit(e).norm(); }
  Complex inner(const Coeffs& a, const Coeffs& b) const { return to_unit(b).dot(to_unit(a)); }

  Coeffs adjoint(const Coeffs& e) const {
    Coeffs out(c_);
    for (int i = 0; i < c_; ++i) out(i) = std::conj(e(scheme_.transpose(i)));
    return out;
  }

  // Spectral pieces of `target` under left multiplication by the
  // self-adjoint element x: target times each spectral projector of x.
  std::vector<Coeffs> split(const Coeffs& target, const Coeffs& x, double tol) const {
    CMatrix l = left(x);
    CMatrix m(c_, c_);
    for (int k = 0; k < c_; ++k)
      for (int j = 0; j < c_; ++j) m(k, j) = l(k, j) * weight_(k) / weight_(j);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(hermitian_part(m));
    const auto& w = eig.eigenvalues();
    const double rho = std::max(w.cwiseAbs().maxCoeff(), 1e-300);
    const Coeffs t = to_unit(target);
    std::vector<Coeffs> pieces;
    int start = 0;
    for (int k = 1; k <= c_; ++k) {
      if (k < c_ && w(k) - w(k - 1) <= tol * rho) continue;
      const auto u = eig.eigenvectors().middleCols(start, k - start);
      Coeffs piece = u * (u.adjoint() * t);
      if (piece.norm() > 0.5) pieces.push_back(from_unit(piece));
      start = k;
    }
    return pieces;
  }

 private:
  const SchurianScheme& scheme_;
  int c_;
  RVector weight_;
};

// Self-adjoint elements spanning the center of the adjacency algebra.
std::vector<Coeffs> hermitian_center_basis(const SchurianScheme& scheme) {
  const int c = scheme.orbital_count();
  std::vector<std::vector<Rational>> center;
  if (is_commutative(scheme)) {
    for (int i = 0; i < c; ++i) {
      std::vector<Rational> e(static_cast<std::size_t>(c));
      e[static_cast<std::size_t>(i)] = 1;
      center.push_back(std::move(e));
    }
  } else {
    // x central iff sum_i x_i (p_ij^k - p_ji^k) = 0 for every j, k.
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j < c; ++j) {
      std::vector<std::vector<Rational>> block(static_cast<std::size_t>(c), std::vector<Rational>(static_cast<std::size_t>(c)));
      for (int i = 0; i < c; ++i) {
        for (const auto& t : scheme.product(i, j)) block[static_cast<std::size_t>(t.k)][static_cast<std::size_t>(i)] += t.value;
        for (const auto& t : scheme.product(j, i)) block[static_cast<std::size_t>(t.k)][static_cast<std::size_t>(i)] -= t.value;
      }
      for (auto& r : block) rows.push_back(std::move(r));
    }
    center = nullspace(rows, c);
  }

  std::vector<Coeffs> basis;
  for (const auto& z : center) {
    Coeffs re(c), im(c);
    for (int i = 0; i < c; ++i) {
      double zi = to_double(z[static_cast<std::size_t>(i)]);
      double zs = to_double(z[static_cast<std::size_t>(scheme.transpose(i))]);
      re(i) = (zi + zs) / 2;
      im(i) = Complex(0, (zi - zs) / 2);
    }
    if (re.norm() > 0) basis.push_back(re / re.norm());
    if (im.norm() > 0) basis.push_back(im / im.norm());
  }
  return basis;
}

struct Attempt {
  std::vector<Coeffs> pieces;
  std::string failure;
};

Attempt decompose(const Algebra& alg, const std::vector<Coeffs>& basis, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(-1.0, 1.0);
  Coeffs x = Coeffs::Zero(alg.dim());
  for (const auto& h : basis) x += coin(rng) * h;

  Attempt out;
  out.pieces = alg.split(alg.identity(), x, tol);
  const double prim_tol = 1e-7;
  bool changed = true;
  for (int round = 0; changed && round < 64; ++round) {
    changed = false;
    std::vector<Coeffs> next;
    for (const auto& e : out.pieces) {
      std::vector<Coeffs> parts{e};
      for (const auto& h : basis) {
        std::vector<Coeffs> refined;
        for (const auto& p : parts) {
          Coeffs y = alg.multiply(h, p);
          Complex lambda = alg.inner(y, p) / alg.inner(p, p);
          if (alg.norm(y - lambda * p) <= prim_tol * std::max(1.0, alg.norm(y))) {
            refined.push_back(p);
            continue;
          }
          auto sub = alg.split(p, y, tol);
          if (sub.size() < 2) {
            refined.push_back(p);
            continue;
          }
          changed = true;
          for (auto& s : sub) refined.push_back(std::move(s));
        }
        parts = std::move(refined);
      }
      for (auto& p : parts) next.push_back(std::move(p));
    }
    out.pieces = std::move(next);
  }

  // Polish: Hermitian coefficients, then two idempotent Newton steps.
  for (auto& e : out.pieces) {
    e = (e + alg.adjoint(e)) / 2.0;
    for (int k = 0; k < 2; ++k) {
      Coeffs e2 = alg.multiply(e, e);
      e = 3.0 * e2 - 2.0 * alg.multiply(e2, e);
      e = (e + alg.adjoint(e)) / 2.0;
    }
  }

  std::ostringstream why;
  Coeffs total = Coeffs::Zero(alg.dim());
  for (std::size_t a = 0; a < out.pieces.size(); ++a) {
    const auto& e = out.pieces[a];
    total += e;
    double idem = (alg.multiply(e, e) - e).cwiseAbs().maxCoeff();
    if (idem > 1e-8) why << "piece " << a << " idempotent residual " << idem << "; ";
    for (const auto& h : basis) {
      Coeffs y = alg.multiply(h, e);
      Complex lambda = alg.inner(y, e) / alg.inner(e, e);
      if (alg.norm(y - lambda * e) > prim_tol * std::max(1.0, alg.norm(y))) {
        why << "piece " << a << " not primitive; ";
        break;
      }
    }
    for (std::size_t b = 0; b < a; ++b) {
      double cross = alg.multiply(e, out.pieces[b]).cwiseAbs().maxCoeff();
      if (cross > 1e-8) why << "pieces " << b << "," << a << " not orthogonal; ";
    }
  }
  double completeness = (total - alg.identity()).cwiseAbs().maxCoeff();
  if (completeness > 1e-8) why << "sum differs from identity by " << completeness << "; ";
  out.failure = why.str();
  return out;
}

std::vector<long long> fingerprint(const Coeffs& e) {
  std::vector<long long> f;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    f.push_back(std::llround(e(i).real() * 1e6));
    f.push_back(std::llround(e(i).imag() * 1e6));
  }
  return f;
}

std::optional<int> near_integer(double v) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-6) return std::nullopt;
  return static_cast<int>(r);
}

}  // namespace

IsotypicDecomposition central_primitive_idempotents(const SchurianScheme& scheme, std::uint64_t seed, double tol) {
  if (!(tol > 0)) throw InputError("clustering tolerance must be positive");
  Algebra alg(scheme);
  const auto basis = hermitian_center_basis(scheme);
  Attempt result;
  std::string diagnostics;
  for (int attempt = 0; attempt < 4; ++attempt) {
    result = decompose(alg, basis, seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt), tol);
    if (result.failure.empty()) break;
    diagnostics += "attempt " + std::to_string(attempt) + ": " + result.failure + "\n";
  }
  if (!result.failure.empty()) throw NumericError("idempotent refinement did not converge\n" + diagnostics);

  const int n = scheme.point_count();
  struct Entry {
    int rank;
    std::vector<long long> key;
    Coeffs coeffs;
  };
  std::vector<Entry> entries;
  for (auto& e : result.pieces) {
    double trace = n * e(0).real();
    auto rank = near_integer(trace);
    if (!rank || *rank < 1) throw NumericError("idempotent trace " + std::to_string(trace) + " is not a positive integer");
    entries.push_back({*rank, fingerprint(e), std::move(e)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return std::tie(a.rank, a.key) < std::tie(b.rank, b.key); });

  IsotypicDecomposition dec;
  dec.point_count = n;
  dec.coefficients.resize(static_cast<Eigen::Index>(entries.size()), scheme.orbital_count());
  dec.trivial_index = -1;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const auto& e = entries[j].coeffs;
    dec.coefficients.row(static_cast<Eigen::Index>(j)) = e.transpose();
    dec.ranks.push_back(entries[j].rank);
    std::vector<Complex> cs(e.data(), e.data() + e.size());
    dec.projections.push_back(scheme.expand(cs));

    // dim(E A) = n_j^2 where n_j is the multiplicity of the constituent.
    double block_dim = alg.left(e).trace().real();
    auto mult = near_integer(std::sqrt(std::max(0.0, block_dim)));
    if (mult && std::abs(static_cast<double>(*mult) * *mult - block_dim) > 1e-6) mult.reset();
    std::optional<int> degree;
    if (mult && *mult > 0 && entries[j].rank % *mult == 0) degree = entries[j].rank / *mult;
    else mult.reset();
    dec.multiplicities.push_back(mult);
    dec.degrees.push_back(degree);

    bool trivial = true;
    for (Eigen::Index i = 0; i < e.size(); ++i) trivial = trivial && std::abs(e(i) - 1.0 / n) < 1e-9;
    if (trivial) dec.trivial_index = static_cast<int>(j);
  }
  if (dec.trivial_index < 0) throw NumericError("no projection equals J/|X|");
  return dec;
}

std::vector<Complex> spherical_function_values(const IsotypicDecomposition& dec, int j) {
  if (j < 0 || j >= dec.size()) throw InputError("projection index out of range");
  std::vector<Complex> values;
  const Complex c0 = dec.coefficients(j, 0);
  for (Eigen::Index i = 0; i < dec.coefficients.cols(); ++i) values.push_back(dec.coefficients(j, i) / c0);
  return values;
}

GramMatrix projection_from_subset(const IsotypicDecomposition& dec, std::span<const int> subset) {
  CMatrix sum = CMatrix::Zero(dec.point_count, dec.point_count);
  std::vector<char> used(static_cast<std::size_t>(dec.size()), 0);
  for (int j : subset) {
    if (j < 0 || j >= dec.size()) throw InputError("projection index " + std::to_string(j) + " out of range");
    if (used[static_cast<std::size_t>(j)]) throw InputError("projection index listed twice");
    used[static_cast<std::size_t>(j)] = 1;
    sum += dec.projections[static_cast<std::size_t>(j)];
  }
  return GramMatrix(std::move(sum));
}

bool multiplicity_free(const IsotypicDecomposition& dec) {
  return std::all_of(dec.multiplicities.begin(), dec.multiplicities.end(),
                     [](const std::optional<int>& m) { return m && *m == 1; });
}

}  // namespace gpack
