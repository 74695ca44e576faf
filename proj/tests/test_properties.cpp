#include <doctest.h>

#include "qci/properties.hpp"

using namespace qci;

TEST_CASE("property suites on a few seeds") {
  for (std::uint64_t seed : {2u, 3u, 4u}) {
    const auto rep = run_property_suite(seed, 40);
    CHECK(rep.instances == 40);
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.failures == 0, c.module << ": " << c.name << ", " << c.first_failure);
    CHECK(rep.ok());
  }
}

TEST_CASE("property suites are reproducible") {
  const auto a = run_property_suite(9, 10), b = run_property_suite(9, 10);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].runs == b.checks[i].runs);
  }
}

TEST_CASE("property suites at another prime") {
  CHECK(run_property_suite(1, 30, 32003).ok());
}
