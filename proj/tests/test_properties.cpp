#include "property_checks.hpp"

#include <doctest.h>

namespace {

void check(const props::Result& r, std::size_t minimum = 200) {
  INFO(r.name);
  for (const auto& f : r.failures) INFO(f);
  CHECK(r.instances >= minimum);
  CHECK_MESSAGE(r.passed(), r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
}

}  // namespace

TEST_CASE("adjunction equalities and extremal solutions") { check(props::adjunction()); }
TEST_CASE("diamond and box are idempotent") { check(props::closure_idempotence()); }
TEST_CASE("approximations compose along functors") { check(props::composition()); }
TEST_CASE("upper keeps joins and copowers, lower keeps meets and powers") { check(props::preservation()); }
TEST_CASE("mu sits between its lifted approximations") { check(props::lift_bounds()); }
TEST_CASE("updates only widen the boundary") { check(props::update_monotonicity()); }
TEST_CASE("order characterization of reducibility matches the definition") {
  check(props::reducibility_characterization());
}
TEST_CASE("change of base commutes with the matching approximation") { check(props::change_of_base()); }
TEST_CASE("builtin algebras satisfy the residuated lattice laws") { check(props::lattice_laws(), 10000); }
TEST_CASE("quotient homs recover the equivalence relation") { check(props::quotient_homs()); }
TEST_CASE("yoneda embedding is full on grades") { check(props::yoneda_fullness()); }
TEST_CASE("flat decisions: non-extreme upper grades equal lower grades") { check(props::flat_decisions()); }
TEST_CASE("missing and wildcard sentinels") { check(props::sentinels()); }
TEST_CASE("crisp engine agrees with classical rough sets") { check(props::textbook_agreement(200, 50, 99)); }
