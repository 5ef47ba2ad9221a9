#include "gpack/heisenberg.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

#include "gpack/error.hpp"

namespace gpack::heis {

namespace {

int mod(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

}  // namespace

AbelianGroupSpec::AbelianGroupSpec(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("abelian group needs at least one cyclic factor");
  for (int m : moduli_) {
    if (m < 3 || m % 2 == 0) throw InputError("cyclic factor orders must be odd and at least 3, got " + std::to_string(m));
    order_ *= m;
    exponent_ = std::lcm(exponent_, m);
  }
  half_ = (exponent_ + 1) / 2;
}

AbelianGroupSpec AbelianGroupSpec::parse(std::string_view text) {
  std::vector<int> moduli;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("cannot parse moduli '" + std::string(text) + "'");
    }
    while (used < token.size() && token[used] == ' ') ++used;
    if (used != token.size()) throw InputError("cannot parse moduli '" + std::string(text) + "'");
    moduli.push_back(value);
    pos = comma + 1;
  }
  return AbelianGroupSpec(std::move(moduli));
}

std::vector<int> AbelianGroupSpec::element(int index) const {
  if (index < 0 || index >= order_) throw InputError("group element index out of range");
  std::vector<int> a(moduli_.size());
  for (std::size_t k = moduli_.size(); k-- > 0;) {
    a[k] = index % moduli_[k];
    index /= moduli_[k];
  }
  return a;
}

int AbelianGroupSpec::index(std::span<const int> a) const {
  int idx = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k) idx = idx * moduli_[k] + mod(a[k], moduli_[k]);
  return idx;
}

std::vector<int> AbelianGroupSpec::add(std::span<const int> a, std::span<const int> b) const {
  std::vector<int> out(moduli_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mod(static_cast<long long>(a[k]) + b[k], moduli_[k]);
  return out;
}

std::vector<int> AbelianGroupSpec::negate(std::span<const int> a) const { return scale(a, -1); }

std::vector<int> AbelianGroupSpec::scale(std::span<const int> a, long long s) const {
  std::vector<int> out(moduli_.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mod(a[k] * (s % moduli_[k]), moduli_[k]);
  return out;
}

int AbelianGroupSpec::pairing(std::span<const int> a, std::span<const int> alpha) const {
  long long e = 0;
  for (std::size_t k = 0; k < moduli_.size(); ++k)
    e += static_cast<long long>(mod(static_cast<long long>(a[k]) * alpha[k], moduli_[k])) * (exponent_ / moduli_[k]);
  return mod(e, exponent_);
}

std::vector<KElement> k_elements(const AbelianGroupSpec& spec) {
  std::vector<KElement> out;
  out.reserve(static_cast<std::size_t>(spec.order()) * static_cast<std::size_t>(spec.order()));
  for (int a = 0; a < spec.order(); ++a)
    for (int alpha = 0; alpha < spec.order(); ++alpha) out.push_back({spec.element(a), spec.element(alpha)});
  return out;
}

int symplectic_form(const AbelianGroupSpec& spec, const KElement& u, const KElement& v) {
  return mod(static_cast<long long>(spec.pairing(v.a, u.alpha)) - spec.pairing(u.a, v.alpha), spec.exponent());
}

HeisenbergElement heisenberg_identity(const AbelianGroupSpec& spec) {
  std::vector<int> zero(static_cast<std::size_t>(spec.rank()), 0);
  return {zero, zero, 0};
}

HeisenbergElement heisenberg_multiply(const AbelianGroupSpec& spec, const HeisenbergElement& x,
                                      const HeisenbergElement& y) {
  const int n = spec.exponent();
  long long twist = static_cast<long long>(spec.half()) * symplectic_form(spec, x.k(), y.k());
  return {spec.add(x.a, y.a), spec.add(x.alpha, y.alpha), mod(static_cast<long long>(x.z) + y.z + twist, n)};
}

HeisenbergElement heisenberg_inverse(const AbelianGroupSpec& spec, const HeisenbergElement& x) {
  return {spec.negate(x.a), spec.negate(x.alpha), mod(-static_cast<long long>(x.z), spec.exponent())};
}

CMatrix MonomialMatrix::dense() const {
  const auto n = static_cast<Eigen::Index>(column.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index b = 0; b < n; ++b)
    m(b, column[static_cast<std::size_t>(b)]) =
        std::polar(1.0, 2 * std::numbers::pi * phase[static_cast<std::size_t>(b)] / modulus);
  return m;
}

MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y) {
  if (x.modulus != y.modulus || x.column.size() != y.column.size()) throw InputError("monomial shape mismatch");
  MonomialMatrix out{x.modulus, std::vector<int>(x.column.size()), std::vector<int>(x.column.size())};
  for (std::size_t b = 0; b < x.column.size(); ++b) {
    auto c = static_cast<std::size_t>(x.column[b]);
    out.column[b] = y.column[c];
    out.phase[b] = (x.phase[b] + y.phase[c]) % x.modulus;
  }
  return out;
}

Cyclotomic MonomialMatrix::trace() const {
  std::vector<Rational> terms(static_cast<std::size_t>(modulus));
  for (std::size_t b = 0; b < column.size(); ++b)
    if (column[b] == static_cast<int>(b)) terms[static_cast<std::size_t>(phase[b])] += 1;
  return Cyclotomic::from_group_ring(modulus, std::move(terms));
}

void validate_gamma(const AbelianGroupSpec& spec, GammaTwist gamma) {
  if (std::gcd(mod(gamma.g, spec.exponent()), spec.exponent()) != 1)
    throw InputError("gamma exponent " + std::to_string(gamma.g) + " is not a unit modulo " +
                     std::to_string(spec.exponent()));
}

MonomialMatrix schrodinger_matrix(const AbelianGroupSpec& spec, GammaTwist gamma, const HeisenbergElement& h) {
  validate_gamma(spec, gamma);
  const int n = spec.order();
  const int big_n = spec.exponent();
  const int g = mod(gamma.g, big_n);
  MonomialMatrix m{big_n, std::vector<int>(static_cast<std::size_t>(n)), std::vector<int>(static_cast<std::size_t>(n))};
  const auto half_a = spec.scale(h.a, spec.half());
  const auto minus_a = spec.negate(h.a);
  const auto minus_half_a = spec.negate(half_a);
  // [pi(a, alpha, z) f](b) = gamma(z <b - a/2, alpha>) f(b - a)
  for (int b = 0; b < n; ++b) {
    auto bb = spec.element(b);
    m.column[static_cast<std::size_t>(b)] = spec.index(spec.add(bb, minus_a));
    long long e = static_cast<long long>(h.z) + spec.pairing(spec.add(bb, minus_half_a), h.alpha);
    m.phase[static_cast<std::size_t>(b)] = mod(e * g, big_n);
  }
  return m;
}

std::pair<RationalMatrix, RationalMatrix> parity_projectors(const AbelianGroupSpec& spec) {
  const int n = spec.order();
  RationalMatrix even(n, n), odd(n, n);
  const Rational half(1, 2);
  for (int a = 0; a < n; ++a) {
    int minus = spec.index(spec.negate(spec.element(a)));
    even(a, a) += half;
    even(a, minus) += half;
    odd(a, a) += half;
    odd(a, minus) -= half;
  }
  return {std::move(even), std::move(odd)};
}

Cyclotomic ExactRootGram::entry(int i, int j) const {
  auto k = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
  return Cyclotomic(modulus, coefficient[k], exponent[k]);
}

GramMatrix ExactRootGram::to_gram() const {
  CMatrix m(n, n);
  std::vector<int> colors(coefficient.size());
  std::vector<std::pair<Rational, int>> palette;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto k = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
      m(i, j) = to_double(coefficient[k]) * std::polar(1.0, 2 * std::numbers::pi * exponent[k] / modulus);
      // N is odd, so (coefficient, exponent) pairs with nonzero coefficient
      // are distinct field elements.
      std::pair<Rational, int> key{coefficient[k], coefficient[k] == 0 ? 0 : exponent[k]};
      auto it = std::find(palette.begin(), palette.end(), key);
      if (it == palette.end()) {
        palette.push_back(key);
        it = palette.end() - 1;
      }
      colors[k] = static_cast<int>(it - palette.begin());
    }
  return GramMatrix(hermitian_part(m), Exactness::root_of_unity, std::move(colors));
}

ExactRootGram heis_etf_gram(const AbelianGroupSpec& spec, GammaTwist gamma, Parity parity) {
  validate_gamma(spec, gamma);
  const auto ks = k_elements(spec);
  const int n = static_cast<int>(ks.size());
  const int big_n = spec.exponent();
  const int g = mod(gamma.g, big_n);
  const Rational diag(parity == Parity::even ? spec.order() + 1 : spec.order() - 1, 2);
  const Rational off(parity == Parity::even ? 1 : -1, 2);
  ExactRootGram out{n, big_n, std::vector<Rational>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
                    std::vector<int>(static_cast<std::size_t>(n) * static_cast<std::size_t>(n))};
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      auto k = static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
      if (u == v) {
        out.coefficient[k] = diag;
        continue;
      }
      out.coefficient[k] = off;
      long long e = static_cast<long long>(spec.half()) * symplectic_form(spec, ks[static_cast<std::size_t>(u)], ks[static_cast<std::size_t>(v)]);
      out.exponent[k] = mod(e % big_n * g, big_n);
    }
  return out;
}

std::vector<Cyclotomic> heis_etf_gram_direct(const AbelianGroupSpec& spec, GammaTwist gamma, Parity parity) {
  if (spec.order() > kDirectOrderCap)
    throw ResourceError("direct Gram computation is capped at |A| <= " + std::to_string(kDirectOrderCap));
  validate_gamma(spec, gamma);
  const auto ks = k_elements(spec);
  const int big_n = spec.exponent();
  const int order = spec.order();
  std::vector<MonomialMatrix> pis;
  for (const auto& u : ks) pis.push_back(schrodinger_matrix(spec, gamma, {u.a, u.alpha, 0}));
  std::vector<int> minus(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) minus[static_cast<std::size_t>(a)] = spec.index(spec.negate(spec.element(a)));
  // 2 P[c][d]: 1 at (c, c) and +-1 at (c, -c); 2 on the diagonal at c = 0.
  const int sign = parity == Parity::even ? 1 : -1;
  auto twice_p = [&](int c, int d) {
    int v = 0;
    if (c == d) v += 1;
    if (d == minus[static_cast<std::size_t>(c)]) v += sign;
    return v;
  };

  std::vector<Cyclotomic> out;
  out.reserve(ks.size() * ks.size());
  std::vector<long long> ring(static_cast<std::size_t>(big_n));
  for (const auto& pu : pis)
    for (const auto& pv : pis) {
      std::fill(ring.begin(), ring.end(), 0);
      // tr(pi(u) P pi(v)^*) = sum_b zeta^(p_u(b) - p_v(b)) P[c_u(b)][c_v(b)]
      for (int b = 0; b < order; ++b) {
        auto bi = static_cast<std::size_t>(b);
        int w = twice_p(pu.column[bi], pv.column[bi]);
        if (w != 0) ring[static_cast<std::size_t>(mod(static_cast<long long>(pu.phase[bi]) - pv.phase[bi], big_n))] += w;
      }
      std::vector<Rational> terms(ring.size());
      for (std::size_t k = 0; k < ring.size(); ++k) terms[k] = Rational(ring[k], 2);
      out.push_back(Cyclotomic::from_group_ring(big_n, std::move(terms)));
    }
  return out;
}

bool is_etf_exact(const ExactRootGram& gram) {
  const int n = gram.n;
  const int big_n = gram.modulus;
  auto at = [&](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  if (n == 0) return false;
  const Rational d0 = gram.coefficient[0];
  if (d0 <= 0) return false;
  Rational modulus = -1;
  Rational trace_sq = 0;
  BigInt scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& c = gram.coefficient[at(i, j)];
      // Hermitian: G_ji = conj(G_ij)
      if (gram.coefficient[at(j, i)] != c) return false;
      if (c != 0 && mod(static_cast<long long>(gram.exponent[at(i, j)]) + gram.exponent[at(j, i)], big_n) != 0) return false;
      if (i == j) {
        if (c != d0 || gram.exponent[at(i, i)] != 0) return false;
      } else {
        Rational m = abs(c);
        if (modulus < 0) modulus = m;
        if (m != modulus) return false;
      }
      trace_sq += c * c;
      scale = boost::multiprecision::lcm(scale, denominator(c));
    }
  // G^2 = c G with c = tr(G^2) / tr(G), checked on the integer matrix scale * G.
  const Rational c = trace_sq / (d0 * n);
  auto phi = cyclotomic_polynomial(big_n);
  const std::size_t deg = phi.size() - 1;
  std::vector<long long> s(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < s.size(); ++k) {
    Rational v = gram.coefficient[k] * Rational(scale);
    s[k] = numerator(v).convert_to<long long>();
  }
  auto reduce = [&](std::vector<Rational> terms) {
    for (std::size_t k = terms.size(); k-- > deg;) {
      Rational q = terms[k];
      if (q == 0) continue;
      for (std::size_t t = 0; t <= deg; ++t) terms[k - deg + t] -= q * Rational(phi[t]);
    }
    terms.resize(deg);
    return terms;
  };
  std::vector<long long> ring(static_cast<std::size_t>(big_n));
  const Rational factor = c * Rational(scale);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::fill(ring.begin(), ring.end(), 0);
      for (int j = 0; j < n; ++j) {
        long long a = s[at(i, j)], b = s[at(j, k)];
        if (a == 0 || b == 0) continue;
        ring[static_cast<std::size_t>((gram.exponent[at(i, j)] + gram.exponent[at(j, k)]) % big_n)] += a * b;
      }
      std::vector<Rational> lhs(ring.begin(), ring.end());
      std::vector<Rational> rhs(static_cast<std::size_t>(big_n));
      rhs[static_cast<std::size_t>(gram.exponent[at(i, k)])] = factor * s[at(i, k)];
      if (reduce(std::move(lhs)) != reduce(std::move(rhs))) return false;
    }
  return true;
}

GroupAction heisenberg_permutation_action(int p) {
  if (p != 3 && p != 5 && p != 7) throw InputError("heisenberg action supports p in {3, 5, 7}");
  AbelianGroupSpec spec({p});
  const int n = p * p * p;
  auto point = [&](int idx) {
    return HeisenbergElement{{idx / (p * p)}, {(idx / p) % p}, idx % p};
  };
  auto index = [&](const HeisenbergElement& h) { return (h.a[0] * p + h.alpha[0]) * p + h.z; };

  std::vector<Permutation> gens;
  const HeisenbergElement translations[] = {{{1}, {0}, 0}, {{0}, {1}, 0}, {{0}, {0}, 1}};
  for (const auto& t : translations) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) images[static_cast<std::size_t>(x)] = index(heisenberg_multiply(spec, t, point(x)));
    gens.emplace_back(std::move(images));
  }
  // SL(2, p) on K = Z_p^2 acting on column vectors (a, alpha).
  const std::array<std::array<int, 2>, 2> sl2[] = {{{{1, 1}, {0, 1}}}, {{{0, p - 1}, {1, 0}}}};
  for (const auto& m : sl2) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      auto h = point(x);
      HeisenbergElement image{{mod(m[0][0] * h.a[0] + m[0][1] * h.alpha[0], p)},
                              {mod(m[1][0] * h.a[0] + m[1][1] * h.alpha[0], p)},
                              h.z};
      images[static_cast<std::size_t>(x)] = index(image);
    }
    gens.emplace_back(std::move(images));
  }
  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) {
    auto h = point(x);
    names.push_back("(" + std::to_string(h.a[0]) + "," + std::to_string(h.alpha[0]) + "," + std::to_string(h.z) + ")");
  }
  return GroupAction(PermutationGroup(n, std::move(gens)), ActionLabel::explicit_points, std::move(names));
}

bool sp_membership(int p, const std::array<std::array<int, 2>, 2>& m) {
  if (p < 3 || p % 2 == 0) throw InputError("sp_membership needs an odd prime");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InputError("sp_membership needs an odd prime");
  const long long det = static_cast<long long>(m[0][0]) * m[1][1] - static_cast<long long>(m[0][1]) * m[1][0];
  if (mod(det, p) == 0) throw InputError("matrix is singular modulo p");
  AbelianGroupSpec spec({p});
  const KElement e1{{1}, {0}}, e2{{0}, {1}};
  const KElement me1{{mod(m[0][0], p)}, {mod(m[1][0], p)}};
  const KElement me2{{mod(m[0][1], p)}, {mod(m[1][1], p)}};
  return symplectic_form(spec, me1, me2) == symplectic_form(spec, e1, e2);
}

}  // namespace gpack::heis
