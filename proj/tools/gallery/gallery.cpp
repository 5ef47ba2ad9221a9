#include "gallery.hpp"

#include <map>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "gpack/error.hpp"
#include "gpack/heisenberg.hpp"
#include "gpack/json_io.hpp"

namespace gpack::gallery {

PermutationGroup symmetric_group(int n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    gens.emplace_back(std::move(cycle));
    gens.push_back(Permutation::from_cycles("(0 1)", n));
  }
  return PermutationGroup(n, std::move(gens));
}

PermutationGroup cyclic_group(int n) {
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return PermutationGroup(n, {Permutation(std::move(cycle))});
}

PermutationGroup quaternion_group() {
  // Unit quaternions as (sign, unit) with unit 0..3 = 1, i, j, k.
  static const int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto index = [](int s, int u) { return 2 * u + (s < 0 ? 1 : 0); };
  auto left = [&](int u) {
    std::vector<int> images(8);
    for (int v = 0; v < 4; ++v)
      for (int s : {1, -1}) images[static_cast<std::size_t>(index(s, v))] = index(s * sign[u][v], table[u][v]);
    return Permutation(std::move(images));
  };
  return PermutationGroup(8, {left(1), left(2)});
}

GroupAction agl_lines() {
  // Points of F_2^3 are ints 0..7; a linear map is given by the images of
  // the basis vectors 1, 2, 4.
  auto linear = [](int e1, int e2, int e4) {
    std::vector<int> images(8);
    for (int v = 0; v < 8; ++v) images[static_cast<std::size_t>(v)] = ((v & 1) ? e1 : 0) ^ ((v & 2) ? e2 : 0) ^ ((v & 4) ? e4 : 0);
    return images;
  };
  std::vector<int> translate(8);
  for (int v = 0; v < 8; ++v) translate[static_cast<std::size_t>(v)] = v ^ 1;
  const std::vector<std::vector<int>> point_maps = {translate, linear(2, 4, 1), linear(3, 2, 4)};

  std::vector<std::pair<int, int>> lines;
  std::map<std::pair<int, int>, int> index;
  std::vector<std::string> names;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      index[{a, b}] = static_cast<int>(lines.size());
      lines.emplace_back(a, b);
      names.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
    }
  std::vector<Permutation> gens;
  for (const auto& s : point_maps) {
    std::vector<int> images;
    for (auto [a, b] : lines) {
      int x = s[static_cast<std::size_t>(a)], y = s[static_cast<std::size_t>(b)];
      images.push_back(index.at({std::min(x, y), std::max(x, y)}));
    }
    gens.emplace_back(std::move(images));
  }
  return GroupAction(PermutationGroup(28, std::move(gens)), ActionLabel::explicit_points, std::move(names));
}

namespace {

// F_8 = F_2[x] / (x^3 + x + 1), elements as bit masks.
int f8_mul(int a, int b) {
  int r = 0;
  for (int k = 0; k < 3; ++k)
    if (b & (1 << k)) r ^= a << k;
  for (int k = 4; k >= 3; --k)
    if (r & (1 << k)) r ^= 0b1011 << (k - 3);
  return r;
}

int f8_inv(int a) {
  for (int b = 1; b < 8; ++b)
    if (f8_mul(a, b) == 1) return b;
  throw InputError("zero has no inverse in F_8");
}

}  // namespace

GroupAction sl2_f8_projective_line() {
  constexpr int inf = 8;
  // Mobius map of [[a, b], [c, d]] on the point x (or infinity).
  auto mobius = [&](int a, int b, int c, int d) {
    std::vector<int> images(9);
    for (int x = 0; x <= inf; ++x) {
      int num, den;
      if (x == inf) {
        num = a;
        den = c;
      } else {
        num = f8_mul(a, x) ^ b;
        den = f8_mul(c, x) ^ d;
      }
      images[static_cast<std::size_t>(x)] = den == 0 ? inf : f8_mul(num, f8_inv(den));
    }
    return Permutation(std::move(images));
  };
  const int g = 2;
  std::vector<Permutation> gens = {mobius(1, 1, 0, 1), mobius(g, 0, 0, f8_inv(g)), mobius(0, 1, 1, 0)};
  std::vector<std::string> names;
  for (int x = 0; x < inf; ++x) names.push_back(std::to_string(x));
  names.push_back("inf");
  return GroupAction(PermutationGroup(9, std::move(gens)), ActionLabel::natural, std::move(names));
}

GroupAction m11_on_12() {
  std::vector<Permutation> gens = {Permutation({6, 7, 11, 8, 2, 4, 10, 3, 5, 0, 9, 1}),
                                   Permutation({8, 7, 1, 6, 2, 4, 5, 9, 10, 0, 3, 11})};
  return GroupAction(PermutationGroup(12, std::move(gens)));
}

CMatrix pauli_t() {
  CMatrix t(2, 2);
  t << 0, 1, 1, 0;
  return t;
}

CMatrix pauli_m() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

namespace {

CMatrix kron3(const CMatrix& a, const CMatrix& b, const CMatrix& c) {
  CMatrix ab = Eigen::kroneckerProduct(a, b).eval();
  return Eigen::kroneckerProduct(ab, c).eval();
}

// Entries of K are 0, +-1, +-i; rounding gives an exact lookup key.
std::vector<int> gaussian_key(const CMatrix& m) {
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index k = 0; k < m.size(); ++k) {
    key.push_back(static_cast<int>(std::lround(m.data()[k].real())));
    key.push_back(static_cast<int>(std::lround(m.data()[k].imag())));
  }
  return key;
}

}  // namespace

std::vector<CMatrix> pauli_k_generators() {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  const CMatrix t = pauli_t(), m = pauli_m();
  return {Complex(0, 1) * CMatrix::Identity(8, 8), kron3(t, i2, i2), kron3(m, i2, i2), kron3(i2, t, i2),
          kron3(i2, m, i2), kron3(i2, i2, t), kron3(i2, i2, m)};
}

std::vector<CMatrix> pauli_k_elements() {
  const CMatrix i2 = CMatrix::Identity(2, 2);
  const CMatrix t = pauli_t(), m = pauli_m();
  auto factor = [&](int tt, int mm) { return CMatrix((tt ? t : i2) * (mm ? m : i2)); };
  std::vector<CMatrix> out;
  Complex phase = 1;
  for (int k = 0; k < 4; ++k, phase *= Complex(0, 1))
    for (int bits = 0; bits < 64; ++bits) {
      int t1 = (bits >> 5) & 1, m1 = (bits >> 4) & 1, t2 = (bits >> 3) & 1;
      int m2 = (bits >> 2) & 1, t3 = (bits >> 1) & 1, m3 = bits & 1;
      out.push_back(phase * kron3(factor(t1, m1), factor(t2, m2), factor(t3, m3)));
    }
  return out;
}

int pauli_k_index(const CMatrix& m) {
  static const auto lookup = [] {
    std::map<std::vector<int>, int> table;
    auto elements = pauli_k_elements();
    for (std::size_t k = 0; k < elements.size(); ++k) table.emplace(gaussian_key(elements[k]), static_cast<int>(k));
    return table;
  }();
  if (m.rows() != 8 || m.cols() != 8) return -1;
  auto key = gaussian_key(m);
  auto it = lookup.find(key);
  if (it == lookup.end()) return -1;
  CMatrix exact(8, 8);
  for (Eigen::Index k = 0; k < 64; ++k) exact.data()[k] = Complex(key[static_cast<std::size_t>(2 * k)], key[static_cast<std::size_t>(2 * k + 1)]);
  return max_abs(CMatrix(exact - m)) < 1e-9 ? it->second : -1;
}

CMatrix hoggar_u() {
  const Complex i(0, 1);
  CMatrix u(8, 8);
  u << 0, 0, -1, 0, i, 0, 0, 0,
       0, 0, -i, 0, 1, 0, 0, 0,
       0, 0, 0, i, 0, 1, 0, 0,
       0, 0, 0, 1, 0, i, 0, 0,
       -1, 0, 0, 0, 0, 0, i, 0,
       i, 0, 0, 0, 0, 0, -1, 0,
       0, i, 0, 0, 0, 0, 0, 1,
       0, -1, 0, 0, 0, 0, 0, -i;
  return std::polar(1.0, std::numbers::pi / 4) / std::sqrt(2.0) * u;
}

CMatrix hoggar_v() {
  const Complex i(0, 1);
  CMatrix v(8, 8);
  v << 0, 0, 0, 0, i, -1, 0, 0,
       0, 0, 0, 0, -i, -1, 0, 0,
       i, 1, 0, 0, 0, 0, 0, 0,
       -i, 1, 0, 0, 0, 0, 0, 0,
       0, 0, i, -1, 0, 0, 0, 0,
       0, 0, -i, -1, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 0, i, 1,
       0, 0, 0, 0, 0, 0, -i, 1;
  return std::polar(1.0, std::numbers::pi / 4) / std::sqrt(2.0) * v;
}

CVector hoggar_fiducial() {
  const Complex i(0, 1);
  CVector v(8);
  v << 1.0 + i, 0, -1, 1, -i, -1, 0, 0;
  return v / std::sqrt(6.0);
}

GroupAction hoggar_action() {
  const auto elements = pauli_k_elements();
  auto permutation_of = [&](auto&& map) {
    std::vector<int> images;
    for (const auto& x : elements) {
      int idx = pauli_k_index(map(x));
      if (idx < 0) throw NumericError("Hoggar generator does not preserve K");
      images.push_back(idx);
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& g : pauli_k_generators())
    gens.push_back(permutation_of([&](const CMatrix& x) { return CMatrix(g * x); }));
  for (const auto& h : {hoggar_u(), hoggar_v()})
    gens.push_back(permutation_of([&](const CMatrix& x) { return CMatrix(h * x * h.adjoint()); }));
  return GroupAction(PermutationGroup(256, std::move(gens)), ActionLabel::explicit_points);
}

std::filesystem::path data_dir() {
#ifdef GPACK_DATA_DIR
  return GPACK_DATA_DIR;
#else
  return "data";
#endif
}

GramMatrix load_figure(int number) {
  return gram_from_json(read_json_file(data_dir() / "figures" / ("figure" + std::to_string(number) + ".json")));
}

std::vector<std::pair<std::string, GroupAction>> named_actions() {
  std::vector<std::pair<std::string, GroupAction>> out;
  out.emplace_back("s3", GroupAction(symmetric_group(3)));
  out.emplace_back("z7", GroupAction(cyclic_group(7)));
  out.emplace_back("q8_regular", GroupAction(quaternion_group(), ActionLabel::regular));
  out.emplace_back("agl_lines", agl_lines());
  out.emplace_back("sl2_f8", sl2_f8_projective_line());
  out.emplace_back("m11", m11_on_12());
  out.emplace_back("heisenberg_p3", heis::heisenberg_permutation_action(3));
  out.emplace_back("hoggar", hoggar_action());
  return out;
}

}  // namespace gpack::gallery
