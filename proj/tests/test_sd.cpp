#include <array>

#include "doctest.h"
#include "latkit/catalog.hpp"
#include "latkit/sd.hpp"

using latkit::FiniteLattice;

TEST_CASE("direct scan verdicts on the named examples") {
  CHECK(latkit::is_semidistributive(latkit::pentagon()));
  CHECK(latkit::is_semidistributive(latkit::hexagon()));
  CHECK(latkit::is_semidistributive(latkit::chain_lattice(6)));
  CHECK(latkit::is_semidistributive(latkit::boolean_lattice(3)));
  CHECK(latkit::is_semidistributive(latkit::l9()));
  CHECK(latkit::is_semidistributive(latkit::l10()));

  const latkit::SdReport m3 = latkit::check_sd_direct(latkit::diamond());
  CHECK(!m3.meet_sd);
  CHECK(!m3.join_sd);
  REQUIRE(m3.witness.has_value());
  // First witness in scan order: x∧y = 0 = x∧z but x∧(y∨z) = x∧1 = x.
  CHECK(m3.witness->side == "meet");
  CHECK(m3.witness->triple == std::array<std::string, 3>{"x", "y", "z"});
}

TEST_CASE("distributivity implies semidistributivity and has witnesses otherwise") {
  CHECK(latkit::is_distributive(latkit::boolean_lattice(3)));
  CHECK(latkit::is_distributive(latkit::chain_lattice(5)));
  CHECK(!latkit::is_distributive(latkit::pentagon()));
  CHECK(!latkit::is_distributive(latkit::diamond()));
  CHECK(latkit::distributivity_witness(latkit::diamond()).has_value());
  CHECK(!latkit::distributivity_witness(latkit::chain_lattice(4)).has_value());
}

TEST_CASE("ideal-criterion witnesses on the pentagon and the diamond") {
  SUBCASE("pentagon: both criteria hold") {
    CHECK(latkit::check_meet_sd_ideals(latkit::pentagon()).holds);
    CHECK(latkit::check_join_sd_filters(latkit::pentagon()).holds);
  }
  SUBCASE("diamond: the meet criterion fails with the (0,x) set {0,y,z}") {
    const auto report = latkit::check_meet_sd_ideals(latkit::diamond());
    CHECK(!report.holds);
    REQUIRE(!report.witnesses.empty());
    const auto& w = report.witnesses.front();
    CHECK(w.u == "0");
    CHECK(w.v == "x");
    CHECK(w.set == std::vector<std::string>{"0", "y", "z"});
    CHECK(w.failure_kind == "join-escape");
    REQUIRE(w.failure.has_value());
    CHECK(w.failure->first == "y");
    CHECK(w.failure->second == "z");
  }
  SUBCASE("diamond: the dual criterion fails as well") {
    CHECK(!latkit::check_join_sd_filters(latkit::diamond()).holds);
  }
}

TEST_CASE("criterion agrees with the direct scan on every lattice through size 7") {
  long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const FiniteLattice& lat : latkit::enumerate_lattices(n)) {
      const latkit::SdReport direct = latkit::check_sd_direct(lat);
      CHECK(latkit::check_meet_sd_ideals(lat).holds == direct.meet_sd);
      CHECK(latkit::check_join_sd_filters(lat).holds == direct.join_sd);
      ++checked;
    }
  }
  CHECK(checked == 1 + 1 + 1 + 2 + 5 + 15 + 53);
}

TEST_CASE("semidistributivity is self-dual on the corpus") {
  for (const FiniteLattice& lat : latkit::lattice_corpus(6)) {
    CHECK(latkit::is_semidistributive(lat) == latkit::is_semidistributive(lat.dual()));
    CHECK(latkit::is_meet_semidistributive(lat) == latkit::is_join_semidistributive(lat.dual()));
  }
}
