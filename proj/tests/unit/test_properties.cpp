#include <doctest.h>

#include "properties.hpp"

namespace {

void report(const properties::Violations& v) {
  for (const auto& line : v) FAIL_CHECK(line);
  CHECK(v.empty());
}

}  // namespace

TEST_CASE("idempotent axioms and subset properties on every fixture scheme") {
  for (const auto& f : fixtures::scheme_fixtures()) {
    SUBCASE(f.name.c_str()) {
      auto scheme = f.build();
      auto dec = gpack::central_primitive_idempotents(scheme);
      report(properties::idempotent_axioms(f.name, scheme, dec));
      report(properties::seed_independence(f.name, scheme, dec));
      properties::SubsetBudget budget;
      if (f.heavy) budget.max_subset_size = 2;
      report(properties::subset_properties(f.name, dec, budget));
    }
  }
}

TEST_CASE("harmonic frames of Z_n are ETFs exactly for difference sets") {
  report(properties::harmonic_difference_sets(8));
}
