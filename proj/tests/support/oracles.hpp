#pragma once

// Brute-force reference computations. Each one is deliberately naive and
// shares no code with the library beyond the Permutation carrier.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "gpack/linalg.hpp"
#include "gpack/permutation.hpp"

namespace oracle {

using Images = std::vector<int>;
using gpack::CMatrix;
using gpack::Complex;

inline Images compose(const Images& p, const Images& q) {
  Images r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

inline Images inverse(const Images& p) {
  Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

inline std::vector<Images> images_of(std::span<const gpack::Permutation> gens) {
  std::vector<Images> out;
  for (const auto& g : gens) out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

// Every element of the group, by closing the generator set under products.
inline std::set<Images> closure(std::span<const gpack::Permutation> gens, int degree) {
  Images id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  auto g = images_of(gens);
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& s : g) {
        Images y = compose(s, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<int> orbit(std::span<const gpack::Permutation> gens, int degree, int point) {
  std::set<int> out;
  for (const auto& g : closure(gens, degree)) out.insert(g[static_cast<std::size_t>(point)]);
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Component id of every pair (x, y), row-major, under the generated group.
inline std::vector<int> pair_orbits(std::span<const gpack::Permutation> gens, int n) {
  UnionFind uf(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& g : gens)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) uf.unite(x * n + y, g(x) * n + g(y));
  std::vector<int> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 0; k < n * n; ++k) out[static_cast<std::size_t>(k)] = uf.find(k);
  return out;
}

inline int distinct_count(const std::vector<int>& labels) {
  return static_cast<int>(std::set<int>(labels.begin(), labels.end()).size());
}

// Dense integer matrices, for exact products of adjacency matrices.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix int_product(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline IntMatrix indicator(const std::vector<int>& labels, int n, int label) {
  IntMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (labels[static_cast<std::size_t>(x * n + y)] == label) m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
  return m;
}

// Conjugacy class sizes, sorted.
inline std::vector<int> class_sizes(const std::set<Images>& group) {
  std::set<Images> done;
  std::vector<int> sizes;
  for (const auto& g : group) {
    if (done.count(g)) continue;
    std::set<Images> cls;
    for (const auto& h : group) cls.insert(compose(compose(h, g), inverse(h)));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(static_cast<int>(cls.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Number of 2x2 matrices over Z_p with determinant 1.
inline int sl2_count(int p) {
  int count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) ++count;
  return count;
}

// Number of permutations sigma with color(sigma i, sigma j) == color(i, j).
inline std::int64_t automorphism_count(const std::vector<int>& color, int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::int64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        ok = color[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)] * n + sigma[static_cast<std::size_t>(j)])] ==
             color[static_cast<std::size_t>(i * n + j)];
    if (ok) ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

inline Complex root_of_unity(long long k, long long n) {
  double t = 2 * std::numbers::pi * static_cast<double>(((k % n) + n) % n) / static_cast<double>(n);
  return {std::cos(t), std::sin(t)};
}

// Rank-one DFT projection of Z_n for character k: entries w^{k(x - y)} / n.
inline CMatrix dft_idempotent(int n, int k) {
  CMatrix e(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) e(x, y) = root_of_unity(static_cast<long long>(k) * (x - y), n) / static_cast<double>(n);
  return e;
}

// Number of ordered pairs (a, b) in D x D with a - b = g, for every g in Z_n.
inline std::vector<int> difference_counts(int n, const std::vector<int>& subset) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (int a : subset)
    for (int b : subset) ++counts[static_cast<std::size_t>(((a - b) % n + n) % n)];
  return counts;
}

inline bool is_difference_set(int n, const std::vector<int>& subset) {
  auto counts = difference_counts(n, subset);
  return std::all_of(counts.begin() + 1, counts.end(), [&](int c) { return c == counts[1]; });
}

inline std::vector<int> quadratic_residues(int p) {
  std::set<int> r;
  for (int x = 1; x < p; ++x) r.insert(x * x % p);
  return {r.begin(), r.end()};
}

inline double welch(int n, int d) { return std::sqrt(static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1))); }

// Frame {W(u) P : u in Z_p x Z_p} in Hilbert-Schmidt space, where
// W(a, b) f(x) = exp(2 pi i b x / p) f(x - a) and P projects onto even or
// odd functions. Returns the Gram matrix tr((W(u) P)^* W(v) P).
inline CMatrix weyl_parity_gram(int p, bool even) {
  auto weyl = [p](int a, int b) {
    CMatrix w = CMatrix::Zero(p, p);
    for (int x = 0; x < p; ++x) w(x, ((x - a) % p + p) % p) = root_of_unity(static_cast<long long>(b) * x, p);
    return w;
  };
  CMatrix parity = CMatrix::Zero(p, p);
  for (int x = 0; x < p; ++x) {
    parity(x, x) += 0.5;
    parity(x, (p - x) % p) += even ? 0.5 : -0.5;
  }
  std::vector<CMatrix> frame;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) frame.push_back(weyl(a, b) * parity);
  int n = p * p;
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = (frame[static_cast<std::size_t>(i)].adjoint() * frame[static_cast<std::size_t>(j)]).trace();
  return g;
}

// True when the two Grams have equal moduli and equal triple products
// g_ij g_jk g_ki on the sampled index triples, up to one global conjugation.
// Such Grams describe the same frame up to per-vector phases and a
// conjugation of the ambient space.
inline bool same_projective_frame(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows()) return false;
  int n = static_cast<int>(a.rows());
  if (((a.cwiseAbs() - b.cwiseAbs()).cwiseAbs().maxCoeff()) > tol) return false;
  bool direct = true;
  bool conjugate = true;
  int step = std::max(1, n / 12);
  for (int i = 0; i < n; i += step)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; k += step) {
        Complex ta = a(i, j) * a(j, k) * a(k, i);
        Complex tb = b(i, j) * b(j, k) * b(k, i);
        direct = direct && std::abs(ta - tb) < tol;
        conjugate = conjugate && std::abs(ta - std::conj(tb)) < tol;
      }
  return direct || conjugate;
}

}  // namespace oracle
