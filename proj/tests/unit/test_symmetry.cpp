#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpack;

namespace {

CMatrix ones(int n) { return CMatrix::Ones(n, n); }
CMatrix eye(int n) { return CMatrix::Identity(n, n); }

std::int64_t order_of(const PermutationGroup& g) { return static_cast<std::int64_t>(group_order(g)); }

void check_sound(const GramMatrix& gram, const PermutationGroup& g, double tol) {
  for (const auto& s : g.generators()) {
    double worst = 0;
    for (int i = 0; i < gram.n(); ++i)
      for (int j = 0; j < gram.n(); ++j) worst = std::max(worst, std::abs(gram(s(i), s(j)) - gram(i, j)));
    CHECK(worst < 10 * tol);
  }
}

}  // namespace

TEST_CASE("symmetric examples") {
  for (int n = 1; n <= 7; ++n) {
    auto identity_colours = color_gram(GramMatrix(eye(n)), 1e-9);
    CHECK(order_of(gram_symmetry_group(GramMatrix(eye(n)))) == oracle::automorphism_count(identity_colours.color, n));
  }
  CHECK(order_of(gram_symmetry_group(GramMatrix(eye(6) - ones(6) / 6.0))) == 720);
  CHECK(is_homogeneous(GramMatrix(ones(5) / 5.0)));
  CMatrix padded = eye(3);
  padded(1, 1) = 2;
  CHECK_FALSE(is_homogeneous(GramMatrix(padded)));
}

TEST_CASE("symmetry group of the shipped 7x28 Gram contains AGL") {
  GramMatrix fig = gallery::load_figure(2);
  auto g = gram_symmetry_group(fig);
  check_sound(fig, g, 1e-9);
  CHECK(is_homogeneous(fig));
  auto o = orbit(g, 0);
  CHECK(o.size() == 28);
  CHECK(group_order(g) >= 1344);
  CHECK(group_order(g) % 1344 == 0);
}

TEST_CASE("automorphism counts match brute force") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + trial % 6;
    int colours = 2 + trial % 3;
    ColoredDigraph g{n, std::vector<int>(static_cast<std::size_t>(n * n))};
    std::uniform_int_distribution<int> pick(0, colours - 1);
    // odd trials colour symmetrically, even trials shift the colour of the transposed pair
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int c = i == j ? colours : pick(rng);
        g.color[static_cast<std::size_t>(i * n + j)] = c;
        g.color[static_cast<std::size_t>(j * n + i)] = trial % 2 ? c : (c + 1) % (colours + 1);
      }
    auto group = automorphism_group(g);
    CAPTURE(trial);
    CHECK(order_of(group) == oracle::automorphism_count(g.color, n));
    for (const auto& s : group.generators())
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(g.at(s(i), s(j)) == g.at(i, j));
  }
}

TEST_CASE("isomorphisms") {
  ColoredDigraph a{4, std::vector<int>(16, 0)};
  for (int i = 0; i < 4; ++i) a.color[static_cast<std::size_t>(i * 4 + (i + 1) % 4)] = 1;
  auto sigma = Permutation::from_cycles("(0 2 1 3)", 4);
  ColoredDigraph b{4, std::vector<int>(16, 0)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b.color[static_cast<std::size_t>(sigma(i) * 4 + sigma(j))] = a.at(i, j);
  auto found = find_isomorphism(a, b);
  REQUIRE(found);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b.at((*found)(i), (*found)(j)) == a.at(i, j));
  ColoredDigraph c{4, std::vector<int>(16, 0)};
  c.color[1] = c.color[4] = 1;
  CHECK_FALSE(find_isomorphism(a, c));
}

TEST_CASE("colour clustering") {
  CMatrix m = eye(3);
  m(0, 1) = m(1, 0) = 0.5;
  m(0, 2) = m(2, 0) = 0.5 + 1e-12;
  m(1, 2) = m(2, 1) = 0.2;
  auto g = color_gram(GramMatrix(m), 1e-9);
  CHECK(g.at(0, 1) == g.at(0, 2));
  CHECK(g.at(0, 1) != g.at(1, 2));
  m(0, 2) = m(2, 0) = 0.5 + 5e-9;
  CHECK_THROWS_AS(color_gram(GramMatrix(m), 1e-9), NumericError);
}

TEST_CASE("node budget") {
  CHECK_THROWS_AS(gram_symmetry_group(GramMatrix(eye(12)), 1e-9, 3), ResourceError);
}

TEST_CASE("regular subgroups") {
  auto s3 = fixtures::group(3, {"(0 1 2)", "(0 1)"});
  auto reg = regular_action(s3);
  CHECK(regular_subgroup_check(reg, reg.group.generators()));
  GroupAction natural(s3);
  const Permutation rotation[] = {Permutation::from_cycles("(0 1 2)", 3)};
  CHECK(regular_subgroup_check(natural, rotation));
  const Permutation swap[] = {Permutation::from_cycles("(0 1)", 3)};
  CHECK_FALSE(regular_subgroup_check(natural, swap));
  CHECK_FALSE(regular_subgroup_check(natural, s3.generators()));
  const Permutation wrong[] = {Permutation::from_cycles("(0 1)", 4)};
  CHECK_THROWS_AS(regular_subgroup_check(natural, wrong), InputError);
  // the translations of F_2^3 act regularly on the eight affine points
  auto agl_points = fixtures::group(8, {"(0 1)(2 3)(4 5)(6 7)", "(0 2)(1 3)(4 6)(5 7)", "(0 4)(1 5)(2 6)(3 7)"});
  CHECK(regular_subgroup_check(GroupAction(agl_points), agl_points.generators()));
}
