#include "kbc/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kbc;

TEST_CASE("verification suite is clean at small sizes") {
  auto results = run_verify_suite(4, 6, 2, Params(2, 3));
  REQUIRE(results.size() == 8);
  const char* names[] = {"generator-tables", "scc-closure",    "reachability",
                         "oracle-agreement", "length-4-count", "representation",
                         "kernel-witness",   "algebraic-invariants"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].name, results[i].notes);
    CHECK(results[i].name == names[i]);
    CHECK(results[i].cases > 0);
    CHECK(results[i].violations == 0);
  }
  CHECK(results[0].cases == 8);
}

TEST_CASE("bounded parameter checks are flagged") {
  CheckResult r = check_representation(2, 2, Params(mpq_class(2, 3), 5));
  CHECK(r.violations == 0);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0] == "parameter check is bounded, not exact");
}
