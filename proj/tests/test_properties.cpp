#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

namespace {

void expect(const props::Result& r) {
  INFO(r.summary());
  MESSAGE(r.summary());
  CHECK(r.failures == 0);
  CHECK(r.cases >= 200);
}

}  // namespace

TEST_CASE("resultant divisibility") {
  expect(props::resultant_divisibility(1));
  expect(props::resultant_divisibility(2));
}

TEST_CASE("two forms lower bound") {
  expect(props::two_forms_lower_bound(1));
  expect(props::two_forms_lower_bound(2));
}

TEST_CASE("vanishing pair image") {
  expect(props::vanishing_image(1));
  expect(props::vanishing_image(2));
}

TEST_CASE("power basis coefficients up to 3d") { expect(props::power_basis_coefficients(1)); }

TEST_CASE("Liouville, archimedean") { expect(props::liouville_archimedean(200)); }

TEST_CASE("Liouville, p-adic") { expect(props::liouville_padic(props::padic_samples(), 50)); }

TEST_CASE("Lewis-Mahler on Thue solutions") { expect(props::lewis_mahler_on_solutions()); }

TEST_CASE("discriminant scaling") {
  expect(props::discriminant_scaling(1));
  expect(props::discriminant_scaling(2));
}
