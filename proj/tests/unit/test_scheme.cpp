#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpack;
using fixtures::group;

namespace {

std::vector<int> sorted(std::span<const int> v) {
  std::vector<int> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("two-transitive actions give two orbitals") {
  auto s = scheme_from_action(GroupAction(group(3, {"(0 1 2)", "(0 1)"})));
  CHECK(s.orbital_count() == 2);
  CHECK(sorted(s.valencies()) == std::vector<int>{1, 2});
  for (const auto& action : {gallery::m11_on_12(), gallery::sl2_f8_projective_line(), GroupAction(gallery::symmetric_group(6))})
    CHECK(scheme_from_action(action).orbital_count() == 2);
}

TEST_CASE("Z4 regular orbitals are circulant permutation matrices") {
  auto s = scheme_from_action(regular_action(gallery::cyclic_group(4)));
  REQUIRE(s.orbital_count() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(s.valencies()[static_cast<std::size_t>(i)] == 1);
    RMatrix a = s.adjacency(i);
    int shift = s.representative(i);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(a(x, y) == ((y - x + 4) % 4 == shift ? 1.0 : 0.0));
  }
}

TEST_CASE("orbital count matches brute-force pair orbits") {
  std::vector<GroupAction> actions = {induced_pair_action(gallery::sl2_f8_projective_line()), gallery::agl_lines(),
                                      regular_action(gallery::symmetric_group(3)), GroupAction(fixtures::dihedral(6)),
                                      heis::heisenberg_permutation_action(3)};
  for (const auto& action : actions) {
    auto s = scheme_from_action(action);
    auto labels = oracle::pair_orbits(action.group.generators(), action.point_count);
    CHECK(s.orbital_count() == oracle::distinct_count(labels));
    int n = action.point_count;
    // same partition: equal oracle labels iff equal scheme labels
    std::map<int, int> to_scheme;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [it, fresh] = to_scheme.emplace(labels[static_cast<std::size_t>(x * n + y)], s.label(x, y));
        CHECK(it->second == s.label(x, y));
      }
  }
  // stabilizer orbits on the 72 pairs
  auto pairs = induced_pair_action(gallery::sl2_f8_projective_line());
  auto stab = point_stabilizer(pairs.group, 0);
  std::set<int> seen;
  int count = 0;
  for (int x = 0; x < 72; ++x)
    if (!seen.count(x)) {
      ++count;
      for (int y : orbit(stab, x)) seen.insert(y);
    }
  CHECK(scheme_from_action(pairs).orbital_count() == count);
}

TEST_CASE("commutativity") {
  CHECK_FALSE(is_commutative(scheme_from_action(regular_action(gallery::symmetric_group(3)))));
  CHECK(is_commutative(conjugacy_class_scheme(gallery::symmetric_group(3))));
  for (int n : {3, 4, 5, 7, 9}) CHECK(is_commutative(scheme_from_action(regular_action(gallery::cyclic_group(n)))));
  CHECK_FALSE(is_commutative(scheme_from_action(GroupAction(gallery::quaternion_group()))));
  CHECK(is_commutative(scheme_from_action(gallery::agl_lines())));
}

TEST_CASE("conjugacy class schemes") {
  auto z3 = conjugacy_class_scheme(gallery::cyclic_group(3));
  auto z3_regular = scheme_from_action(regular_action(gallery::cyclic_group(3)));
  CHECK(z3.orbital_count() == 3);
  CHECK(std::vector<int>(z3.labels().begin(), z3.labels().end()) ==
        std::vector<int>(z3_regular.labels().begin(), z3_regular.labels().end()));
  auto s3 = conjugacy_class_scheme(gallery::symmetric_group(3));
  CHECK(s3.orbital_count() == 3);
  CHECK(sorted(s3.valencies()) ==
        oracle::class_sizes(oracle::closure(gallery::symmetric_group(3).generators(), 3)));
  auto q8 = conjugacy_class_scheme(gallery::quaternion_group());
  CHECK(q8.orbital_count() == 5);
  CHECK(sorted(q8.valencies()) == oracle::class_sizes(oracle::closure(gallery::quaternion_group().generators(), 8)));
  auto s4 = conjugacy_class_scheme(gallery::symmetric_group(4));
  CHECK(sorted(s4.valencies()) == oracle::class_sizes(oracle::closure(gallery::symmetric_group(4).generators(), 4)));
  CHECK_THROWS_AS(conjugacy_class_scheme(gallery::symmetric_group(7), 1000), ResourceError);
}

TEST_CASE("stable matrices") {
  auto s = scheme_from_action(gallery::agl_lines());
  int n = s.point_count();
  CHECK(stable_matrix_check(s, CMatrix(CMatrix::Ones(n, n))));
  CHECK(stable_matrix_check(s, CMatrix(CMatrix::Identity(n, n))));
  CMatrix d = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = i + 1;
  CHECK_FALSE(stable_matrix_check(s, d));
  CHECK_THROWS_AS(stable_matrix_check(s, CMatrix(CMatrix::Identity(3, 3))), InputError);
  RationalMatrix r = RationalMatrix::identity(n);
  CHECK(stable_matrix_check(s, r));
  r(0, 0) = Rational(1, 2);
  CHECK_FALSE(stable_matrix_check(s, r));
}

TEST_CASE("non-transitive input is rejected") {
  CHECK_THROWS_AS(scheme_from_action(GroupAction(group(3, {"(0 1)"}))), InputError);
}

TEST_CASE("scheme axioms on every fixture") {
  for (const auto& f : fixtures::scheme_fixtures()) {
    CAPTURE(f.name);
    auto s = f.build();
    int n = s.point_count();
    int c = s.orbital_count();
    std::vector<int> labels(s.labels().begin(), s.labels().end());
    // partition with the diagonal as orbital 0
    for (int x = 0; x < n; ++x) CHECK(s.label(x, x) == 0);
    int valency_sum = 0;
    for (int i = 0; i < c; ++i) valency_sum += s.valencies()[static_cast<std::size_t>(i)];
    CHECK(valency_sum == n);
    // transpose pairing is an involution matching transposed orbitals
    for (int i = 0; i < c; ++i) {
      CHECK(s.transpose(s.transpose(i)) == i);
      int y = s.representative(i);
      CHECK(s.label(y, 0) == s.transpose(i));
    }
    // constant row and column sums
    for (int i = 0; i < c; ++i) {
      std::vector<int> rows(static_cast<std::size_t>(n), 0), cols(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (s.label(x, y) == i) ++rows[static_cast<std::size_t>(x)], ++cols[static_cast<std::size_t>(y)];
      for (int x = 0; x < n; ++x) {
        CHECK(rows[static_cast<std::size_t>(x)] == s.valencies()[static_cast<std::size_t>(i)]);
        CHECK(cols[static_cast<std::size_t>(x)] == s.valencies()[static_cast<std::size_t>(i)]);
      }
    }
    if (n > 80) continue;
    // algebra closure: dense integer products reproduce the stored intersection numbers
    std::vector<oracle::IntMatrix> adj;
    for (int i = 0; i < c; ++i) adj.push_back(oracle::indicator(labels, n, i));
    bool commutes = true;
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) {
        auto prod = oracle::int_product(adj[static_cast<std::size_t>(i)], adj[static_cast<std::size_t>(j)]);
        std::vector<std::int64_t> coeff(static_cast<std::size_t>(c), 0);
        for (const auto& t : s.product(i, j)) coeff[static_cast<std::size_t>(t.k)] = t.value;
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            CHECK(prod[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == coeff[static_cast<std::size_t>(s.label(x, y))]);
        if (i < j)
          commutes = commutes && prod == oracle::int_product(adj[static_cast<std::size_t>(j)], adj[static_cast<std::size_t>(i)]);
      }
    CHECK(is_commutative(s) == commutes);
  }
}
