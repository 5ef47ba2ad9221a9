#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpack;

namespace {

// Element index -> exponent k with element = generator^k, read off the image of 0.
std::vector<int> cyclic_exponents(int n) {
  std::vector<int> out;
  for (const auto& e : enumerate_elements(gallery::cyclic_group(n))) out.push_back(e(0));
  return out;
}

CMatrix dense(const IsotypicDecomposition& dec, int j) { return dec.projections[static_cast<std::size_t>(j)]; }

}  // namespace

TEST_CASE("S3 natural: J/3 and its complement") {
  auto dec = central_primitive_idempotents(scheme_from_action(GroupAction(gallery::symmetric_group(3))));
  REQUIRE(dec.size() == 2);
  CHECK(dec.ranks == std::vector<int>{1, 2});
  CMatrix j = CMatrix::Ones(3, 3) / 3.0;
  CHECK(max_abs(CMatrix(dense(dec, 0) - j)) < 1e-12);
  CHECK(max_abs(CMatrix(dense(dec, 1) - (CMatrix::Identity(3, 3) - j))) < 1e-12);
  CHECK(dec.trivial_index == 0);
  CHECK(multiplicity_free(dec));
}

TEST_CASE("Z_n regular: projections are the DFT idempotents") {
  for (int n : {3, 4, 5, 7}) {
    auto dec = central_primitive_idempotents(scheme_from_action(regular_action(gallery::cyclic_group(n))));
    REQUIRE(dec.size() == n);
    auto exps = cyclic_exponents(n);
    std::vector<bool> matched(static_cast<std::size_t>(n), false);
    for (int k = 0; k < n; ++k) {
      CMatrix oracle_e = oracle::dft_idempotent(n, k);
      CMatrix relabelled(n, n);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) relabelled(x, y) = oracle_e(exps[static_cast<std::size_t>(x)], exps[static_cast<std::size_t>(y)]);
      int hits = 0;
      for (int j = 0; j < n; ++j)
        if (max_abs(CMatrix(dense(dec, j) - relabelled)) < 1e-10) {
          ++hits;
          matched[static_cast<std::size_t>(j)] = true;
        }
      CHECK(hits == 1);
    }
    CHECK(std::all_of(matched.begin(), matched.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("Z3 spherical values are inverse characters") {
  auto dec = central_primitive_idempotents(scheme_from_action(regular_action(gallery::cyclic_group(3))));
  Complex w = oracle::root_of_unity(1, 3);
  for (int j = 0; j < 3; ++j) {
    auto values = spherical_function_values(dec, j);
    CHECK(std::abs(values[0] - 1.0) < 1e-12);
    if (j == dec.trivial_index) {
      for (auto v : values) CHECK(std::abs(v - 1.0) < 1e-12);
      continue;
    }
    // values on orbitals {1, g, g^2} form {1, w^-k, w^-2k} for some k != 0
    std::multiset<long> got, want1, want2;
    for (auto v : values) got.insert(std::lround(std::arg(v) * 1000));
    for (int e = 0; e < 3; ++e) {
      want1.insert(std::lround(std::arg(std::pow(w, -e)) * 1000));
      want2.insert(std::lround(std::arg(std::pow(w, e)) * 1000));
    }
    CHECK((got == want1 || got == want2));
  }
}

TEST_CASE("AGL lines: rank-7 projection with entries 1/4 and +-1/12") {
  auto dec = central_primitive_idempotents(scheme_from_action(gallery::agl_lines()));
  CHECK(multiplicity_free(dec));
  CHECK(dec.ranks == std::vector<int>{1, 6, 7, 14});
  int j7 = 2;
  CMatrix e = dense(dec, j7);
  for (int x = 0; x < 28; ++x)
    for (int y = 0; y < 28; ++y) {
      if (x == y)
        CHECK(std::abs(e(x, y) - 0.25) < 1e-12);
      else
        CHECK(std::abs(std::abs(e(x, y)) - 1.0 / 12) < 1e-12);
    }
}

TEST_CASE("projection_from_subset") {
  auto dec = central_primitive_idempotents(scheme_from_action(gallery::agl_lines()));
  std::vector<int> all(static_cast<std::size_t>(dec.size()));
  std::iota(all.begin(), all.end(), 0);
  CHECK(max_abs(CMatrix(projection_from_subset(dec, all).entries() - CMatrix::Identity(28, 28))) < 1e-10);
  const int trivial[] = {dec.trivial_index};
  CHECK(max_abs(CMatrix(projection_from_subset(dec, trivial).entries() - CMatrix::Ones(28, 28) / 28.0)) < 1e-12);
  const int pair[] = {1, 2};
  auto g = projection_from_subset(dec, pair);
  CHECK(numerical_rank(g) == 13);
  const int rest[] = {0, 3};
  CHECK(max_abs(CMatrix(projection_from_subset(dec, rest).entries() - naimark_complement(g).entries())) < 1e-10);
  const int bad[] = {4};
  CHECK_THROWS_AS(projection_from_subset(dec, bad), InputError);
  const int twice[] = {1, 1};
  CHECK_THROWS_AS(projection_from_subset(dec, twice), InputError);
}

TEST_CASE("multiplicity freeness") {
  auto s3_regular = central_primitive_idempotents(scheme_from_action(regular_action(gallery::symmetric_group(3))));
  CHECK_FALSE(multiplicity_free(s3_regular));
  CHECK(s3_regular.size() == 3);
  // regular representation: each irreducible appears with multiplicity equal to its degree
  for (int j = 0; j < s3_regular.size(); ++j) {
    REQUIRE(s3_regular.degrees[static_cast<std::size_t>(j)].has_value());
    REQUIRE(s3_regular.multiplicities[static_cast<std::size_t>(j)].has_value());
    CHECK(*s3_regular.degrees[static_cast<std::size_t>(j)] == *s3_regular.multiplicities[static_cast<std::size_t>(j)]);
    CHECK(s3_regular.ranks[static_cast<std::size_t>(j)] ==
          *s3_regular.degrees[static_cast<std::size_t>(j)] * *s3_regular.multiplicities[static_cast<std::size_t>(j)]);
  }
  CHECK(multiplicity_free(central_primitive_idempotents(scheme_from_action(GroupAction(gallery::symmetric_group(3))))));
}

TEST_CASE("SL(2,8) on pairs: constituent ranks") {
  auto dec = central_primitive_idempotents(scheme_from_action(induced_pair_action(gallery::sl2_f8_projective_line())));
  CHECK(dec.ranks == std::vector<int>{1, 7, 7, 7, 7, 9, 9, 9, 16});
  CHECK_FALSE(multiplicity_free(dec));
}

TEST_CASE("invalid tolerance") {
  auto s = scheme_from_action(GroupAction(gallery::symmetric_group(3)));
  CHECK_THROWS_AS(central_primitive_idempotents(s, 1, 0.0), InputError);
}
