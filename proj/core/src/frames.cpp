#include "gpack/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gpack/error.hpp"

namespace gpack {

GramMatrix::GramMatrix(CMatrix entries, Exactness exactness, std::vector<int> exact_colors)
    : entries_(std::move(entries)), exactness_(exactness), exact_colors_(std::move(exact_colors)) {
  if (entries_.rows() != entries_.cols()) throw InputError("Gram matrix must be square");
  const double scale = std::max(1.0, max_abs(entries_));
  if (max_abs(entries_ - entries_.adjoint()) > 1e-12 * scale) throw InputError("Gram matrix is not Hermitian");
  if (!exact_colors_.empty() && exact_colors_.size() != static_cast<std::size_t>(entries_.size()))
    throw InputError("exact colour table has wrong size");
}

bool GramMatrix::is_real(double tol) const {
  return entries_.size() == 0 || entries_.imag().cwiseAbs().maxCoeff() <= tol * std::max(1.0, max_abs(entries_));
}

CMatrix hermitian_part(const CMatrix& m) { return (m + m.adjoint()) / 2.0; }

namespace {

double scale_of(const GramMatrix& g) { return std::max(1e-300, max_abs(g.entries())); }

}  // namespace

int numerical_rank(const GramMatrix& gram, double tol) {
  if (gram.n() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram.entries(), Eigen::EigenvaluesOnly);
  const auto& w = eig.eigenvalues();
  double rho = w.cwiseAbs().maxCoeff();
  int d = 0;
  for (Eigen::Index k = 0; k < w.size(); ++k)
    if (w(k) > tol * rho) ++d;
  return d;
}

FrameVectors vectors_from_gram(const GramMatrix& gram, double tol) {
  const int n = gram.n();
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(gram.entries());
  const auto& w = eig.eigenvalues();
  const double rho = w.cwiseAbs().maxCoeff();
  if (w(0) < -tol * rho) throw NotPsdError("Gram matrix has eigenvalue " + std::to_string(w(0)));
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = w.size(); k-- > 0;)
    if (w(k) > tol * rho) keep.push_back(k);
  FrameVectors fv;
  fv.d = static_cast<int>(keep.size());
  fv.n = n;
  fv.synthesis.resize(fv.d, n);
  for (std::size_t r = 0; r < keep.size(); ++r)
    fv.synthesis.row(static_cast<Eigen::Index>(r)) = std::sqrt(w(keep[r])) * eig.eigenvectors().col(keep[r]).adjoint();
  double residual = max_abs(CMatrix(fv.synthesis.adjoint() * fv.synthesis - gram.entries()));
  if (residual > std::max(1e-9, 2 * tol) * std::max(1.0, rho))
    throw NumericError("Gram reconstruction residual " + std::to_string(residual));
  return fv;
}

double coherence(const GramMatrix& gram) {
  const int n = gram.n();
  for (int i = 0; i < n; ++i)
    if (!(gram(i, i).real() > 0)) throw InputError("coherence needs a strictly positive diagonal");
  double mu = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      mu = std::max(mu, std::abs(gram(i, j)) / std::sqrt(gram(i, i).real() * gram(j, j).real()));
  return mu;
}

double welch_bound(int n, int d) {
  if (n < 2) throw InputError("Welch bound needs at least two vectors");
  if (d < 1 || d > n) throw InputError("Welch bound needs 1 <= d <= n");
  return std::sqrt(static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1)));
}

SecondaryBounds secondary_bounds(int n, int d, Field field) {
  welch_bound(n, d);
  SecondaryBounds b;
  const double nn = n, dd = d;
  if (field == Field::complex) {
    if (nn > dd * dd) {
      b.orthoplex = 1 / std::sqrt(dd);
      b.levenstein = std::sqrt((2 * nn - dd * dd - dd) / ((nn - dd) * (dd + 1)));
    }
  } else if (nn > dd * (dd + 1) / 2) {
    b.orthoplex = 1 / std::sqrt(dd);
    b.levenstein = std::sqrt((3 * nn - dd * dd - 2 * dd) / ((nn - dd) * (dd + 2)));
  }
  return b;
}

namespace {

bool constant_diagonal(const GramMatrix& gram, double tol) {
  const double d0 = gram(0, 0).real();
  if (!(d0 > 0)) return false;
  for (int i = 0; i < gram.n(); ++i)
    if (std::abs(gram(i, i) - d0) > tol * d0) return false;
  return true;
}

}  // namespace

bool is_tight(const GramMatrix& gram, double tol) {
  const CMatrix& g = gram.entries();
  const double tr = g.trace().real();
  if (!(tr > 0)) return false;
  const double c = g.squaredNorm() / tr;
  return max_abs(CMatrix(g * g - c * g)) <= tol * c * scale_of(gram);
}

bool is_etf(const GramMatrix& gram, double tol) {
  const int n = gram.n();
  if (n == 0 || !constant_diagonal(gram, tol)) return false;
  if (!is_tight(gram, tol)) return false;
  const double d0 = gram(0, 0).real();
  double lo = INFINITY, hi = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double m = std::abs(gram(i, j));
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  return n == 1 || hi - lo <= tol * d0;
}

std::vector<double> distinct_offdiag_moduli(const GramMatrix& gram, double gap) {
  const int n = gram.n();
  std::vector<double> values;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      values.push_back(std::abs(gram(i, j)) / std::sqrt(gram(i, i).real() * gram(j, j).real()));
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values)
    if (out.empty() || v - out.back() > gap) out.push_back(v);
  return out;
}

PackingReport packing_report(const GramMatrix& gram, double tol) {
  PackingReport r;
  r.n = gram.n();
  r.d = numerical_rank(gram);
  r.field = gram.is_real(tol) ? Field::real : Field::complex;
  r.coherence = coherence(gram);
  r.is_etf = is_etf(gram, tol);
  r.is_tight = is_tight(gram, tol);
  r.distinct_offdiag_moduli = distinct_offdiag_moduli(gram);
  if (r.n >= 2 && r.d >= 1) {
    r.welch = welch_bound(r.n, r.d);
    r.welch_met = std::abs(r.coherence - r.welch) <= tol;
    auto sb = secondary_bounds(r.n, r.d, r.field);
    r.orthoplex_applicable = sb.orthoplex.has_value();
    r.orthoplex_met = sb.orthoplex && std::abs(r.coherence - *sb.orthoplex) <= tol;
    r.levenstein_applicable = sb.levenstein.has_value();
    r.levenstein_met = sb.levenstein && std::abs(r.coherence - *sb.levenstein) <= tol;
  }
  return r;
}

Reduction projective_reduce(const GramMatrix& gram, double tol) {
  const int n = gram.n();
  if (n == 0) return {gram, {}, {}, true};
  if (!constant_diagonal(gram, tol)) throw InputError("projective reduction needs a constant diagonal");
  const double d0 = gram(0, 0).real();
  const CMatrix& g = gram.entries();

  std::vector<int> class_map(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  std::vector<int> sizes;
  for (int i = 0; i < n; ++i) {
    if (class_map[static_cast<std::size_t>(i)] >= 0) continue;
    class_map[static_cast<std::size_t>(i)] = i;
    reps.push_back(i);
    sizes.push_back(1);
    Eigen::Index pivot = 0;
    g.col(i).cwiseAbs().maxCoeff(&pivot);
    for (int j = i + 1; j < n; ++j) {
      if (class_map[static_cast<std::size_t>(j)] >= 0) continue;
      if (std::abs(std::abs(g(i, j)) - d0) > tol * d0) continue;
      Complex lambda = g(pivot, j) / g(pivot, i);
      if (std::abs(std::abs(lambda) - 1) > tol) continue;
      if (max_abs(CVector(g.col(j) - lambda * g.col(i))) > tol * d0) continue;
      class_map[static_cast<std::size_t>(j)] = i;
      ++sizes.back();
    }
  }

  const auto m = static_cast<Eigen::Index>(reps.size());
  CMatrix sub(m, m);
  std::vector<int> colors;
  auto exact = gram.exact_colors();
  if (!exact.empty()) colors.resize(static_cast<std::size_t>(m * m));
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      sub(a, b) = g(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]);
      if (!exact.empty())
        colors[static_cast<std::size_t>(a * m + b)] =
            exact[static_cast<std::size_t>(reps[static_cast<std::size_t>(a)]) * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(reps[static_cast<std::size_t>(b)])];
    }
  bool equal = std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes.front(); });
  return {GramMatrix(hermitian_part(sub), gram.exactness(), std::move(colors)), std::move(class_map), std::move(reps),
          equal};
}

GramMatrix naimark_complement(const GramMatrix& gram, double tol) {
  const CMatrix& g = gram.entries();
  if (max_abs(CMatrix(g * g - g)) > tol) throw InputError("Naimark complement needs a projection");
  return GramMatrix(CMatrix(CMatrix::Identity(gram.n(), gram.n()) - g));
}

namespace {

struct AbelianIndex {
  std::vector<int> moduli;
  int order = 1;

  explicit AbelianIndex(std::span<const int> m) : moduli(m.begin(), m.end()) {
    if (moduli.empty()) throw InputError("abelian group needs at least one cyclic factor");
    for (int q : moduli) {
      if (q < 1) throw InputError("cyclic factor orders must be positive");
      order *= q;
    }
  }
  std::vector<int> tuple(int index) const {
    std::vector<int> t(moduli.size());
    for (std::size_t k = moduli.size(); k-- > 0;) {
      t[k] = index % moduli[k];
      index /= moduli[k];
    }
    return t;
  }
  int index(std::span<const int> t) const {
    int idx = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k) idx = idx * moduli[k] + t[k];
    return idx;
  }
  void validate(std::span<const std::vector<int>> subset) const {
    if (subset.empty()) throw InputError("character subset must be nonempty");
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (const auto& alpha : subset) {
      if (alpha.size() != moduli.size()) throw InputError("character tuple has wrong length");
      for (std::size_t k = 0; k < moduli.size(); ++k)
        if (alpha[k] < 0 || alpha[k] >= moduli[k]) throw InputError("character coordinate out of range");
      auto& s = seen[static_cast<std::size_t>(index(alpha))];
      if (s) throw InputError("character listed twice");
      s = 1;
    }
  }
  // Phase of alpha(g) as a fraction of a full turn.
  double turn(std::span<const int> alpha, std::span<const int> g) const {
    double t = 0;
    for (std::size_t k = 0; k < moduli.size(); ++k)
      t += static_cast<double>((static_cast<long long>(alpha[k]) * g[k]) % moduli[k]) / moduli[k];
    return t;
  }
};

}  // namespace

GramMatrix harmonic_gram(std::span<const int> moduli, std::span<const std::vector<int>> subset) {
  AbelianIndex group(moduli);
  group.validate(subset);
  const int n = group.order;
  // Rows of the character table restricted to the subset.
  CMatrix table(static_cast<Eigen::Index>(subset.size()), n);
  for (int g = 0; g < n; ++g) {
    auto t = group.tuple(g);
    for (std::size_t a = 0; a < subset.size(); ++a)
      table(static_cast<Eigen::Index>(a), g) = std::polar(1.0, 2 * std::numbers::pi * group.turn(subset[a], t));
  }
  // (G_D)_{g,h} = (1/|G|) sum_alpha alpha(h) conj(alpha(g)).
  CMatrix gram = table.adjoint() * table / static_cast<double>(n);
  return GramMatrix(hermitian_part(gram));
}

DifferenceSetResult difference_set_check(std::span<const int> moduli, std::span<const std::vector<int>> subset) {
  AbelianIndex group(moduli);
  group.validate(subset);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(group.order), 0);
  std::vector<int> diff(group.moduli.size());
  for (const auto& a : subset)
    for (const auto& b : subset) {
      for (std::size_t k = 0; k < diff.size(); ++k)
        diff[k] = ((a[k] - b[k]) % group.moduli[k] + group.moduli[k]) % group.moduli[k];
      ++counts[static_cast<std::size_t>(group.index(diff))];
    }
  if (group.order == 1) return {true, std::nullopt};
  for (std::size_t g = 2; g < counts.size(); ++g)
    if (counts[g] != counts[1]) return {false, std::nullopt};
  return {true, counts[1]};
}

OrbitFrame matrix_group_orbit_gram(std::span<const CMatrix> generators, const CVector& v, std::int64_t order_cap,
                                   double tol) {
  const auto dim = v.size();
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) throw InputError("generator shape does not match vector");
    if (max_abs(CMatrix(g * g.adjoint() - CMatrix::Identity(dim, dim))) > tol)
      throw InputError("generator is not unitary");
  }
  std::vector<CMatrix> elements{CMatrix::Identity(dim, dim)};
  auto known = [&](const CMatrix& h) {
    for (const auto& e : elements)
      if (max_abs(CMatrix(e - h)) < tol) return true;
    return false;
  };
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& g : generators) {
      CMatrix h = g * elements[k];
      if (known(h)) continue;
      if (static_cast<std::int64_t>(elements.size()) >= order_cap)
        throw ResourceError("matrix group closure exceeds " + std::to_string(order_cap) + " elements");
      if (max_abs(CMatrix(h * h.adjoint() - CMatrix::Identity(dim, dim))) > 10 * tol)
        throw NumericError("product of generators drifted from unitarity");
      elements.push_back(std::move(h));
    }

  std::vector<CVector> orbit;
  for (const auto& e : elements) {
    CVector w = e * v;
    bool seen = false;
    for (const auto& u : orbit) seen = seen || max_abs(CVector(u - w)) < tol;
    if (!seen) orbit.push_back(std::move(w));
  }
  CMatrix vectors(dim, static_cast<Eigen::Index>(orbit.size()));
  for (std::size_t k = 0; k < orbit.size(); ++k) vectors.col(static_cast<Eigen::Index>(k)) = orbit[k];
  GramMatrix gram(hermitian_part(vectors.adjoint() * vectors));
  return {std::move(gram), std::move(elements), std::move(vectors)};
}

}  // namespace gpack
