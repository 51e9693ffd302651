#include <algorithm>
#include <vector>

#include "doctest.h"
#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "support/oracles.hpp"

using latkit::Congruence;
using latkit::FiniteLattice;

TEST_CASE("congruence canonical form and basic operations") {
  const Congruence c({2, 2, 0, 1, 0});  // canonicalizes to first-occurrence ids
  CHECK(c.ids() == std::vector<int>{0, 0, 1, 2, 1});
  CHECK(c.block_count() == 3);
  CHECK(c.same(0, 1));
  CHECK(!c.same(0, 2));
  CHECK(c.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 4}, {3}});

  CHECK(Congruence::identity(3).block_count() == 3);
  CHECK(Congruence::total(3).block_count() == 1);
  CHECK(Congruence::from_blocks(4, {{0, 2}, {1}, {3}}) == Congruence({0, 1, 0, 2}));

  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}}), latkit::LatticeError);
  CHECK_THROWS_AS(Congruence::from_blocks(3, {{0, 1}, {1, 2}}), latkit::LatticeError);

  SUBCASE("refinement and partition meet") {
    const Congruence fine({0, 0, 1, 2, 3});
    const Congruence coarse({0, 0, 0, 1, 1});
    CHECK(latkit::refines(fine, coarse));
    CHECK(!latkit::refines(coarse, fine));
    CHECK(latkit::refines(Congruence::identity(5), coarse));
    CHECK(latkit::refines(coarse, Congruence::total(5)));
    CHECK(latkit::partition_meet(coarse, Congruence({0, 1, 1, 2, 2})) ==
          Congruence({0, 1, 1, 2, 2}));
    CHECK(latkit::partition_meet(coarse, Congruence({0, 0, 1, 1, 2})) ==
          Congruence({0, 0, 1, 2, 3}));
  }
}

TEST_CASE("the five congruences of the pentagon, against the partition-filter oracle") {
  const FiniteLattice n5 = latkit::pentagon();
  const latkit::ConLattice con = latkit::all_congruences(n5);
  REQUIRE(con.size() == 5);

  std::vector<std::string> formatted;
  for (const auto& c : con.congruences) formatted.push_back(latkit::format_congruence(n5, c));
  CHECK(formatted == std::vector<std::string>{"{0,a,b,c,1}", "{0,a,b|c,1}", "{0,c|a,b,1}",
                                              "{0|a,b|c|1}", "{0|a|b|c|1}"});

  // Independent path: filter all 52 partitions of a 5-element set.
  const auto oracle = oracles::congruences_by_filter(n5);
  CHECK(oracles::all_partitions(5).size() == 52);
  std::vector<Congruence> computed = con.congruences;
  std::sort(computed.begin(), computed.end());
  CHECK(computed == oracle);

  SUBCASE("carrier shape: a four-element boolean part over a new zero") {
    REQUIRE(con.delta_index >= 0);
    REQUIRE(con.nabla_index >= 0);
    CHECK(con.congruences[con.delta_index] == Congruence::identity(5));
    CHECK(con.congruences[con.nabla_index] == Congruence::total(5));
    CHECK(latkit::is_isomorphic(con.carrier, latkit::add_zero(latkit::boolean_lattice(2)))
              .has_value());
    CHECK(latkit::identify(con.carrier) == std::string("(B_2)₊"));
  }

  SUBCASE("atoms and principal congruences") {
    const auto at = latkit::atoms(con);
    REQUIRE(at.size() == 1);
    CHECK(at[0] == latkit::principal_congruence(n5, "a", "b"));
    CHECK(latkit::format_congruence(n5, at[0]) == "{0|a,b|c|1}");

    CHECK(latkit::principal_congruence(n5, "0", "a") ==
          Congruence::from_blocks(5, {{0, 1, 2}, {3, 4}}));
    CHECK(latkit::principal_congruence(n5, "0", "c") ==
          latkit::principal_congruence(n5, "b", "1"));
  }

  SUBCASE("quotients collapse to the expected shapes") {
    const Congruence ab = latkit::principal_congruence(n5, "a", "b");
    CHECK(latkit::is_isomorphic(latkit::quotient(n5, ab), latkit::boolean_lattice(2))
              .has_value());
    const Congruence big = latkit::principal_congruence(n5, "0", "a");
    CHECK(latkit::is_isomorphic(latkit::quotient(n5, big), latkit::chain_lattice(2))
              .has_value());
    CHECK(latkit::quotient(n5, Congruence::total(5)).size() == 1);
    CHECK(latkit::quotient(n5, Congruence::identity(5)).size() == 5);
  }
}

TEST_CASE("all_congruences matches the partition-filter oracle on mixed shapes") {
  std::vector<FiniteLattice> pool = latkit::lattice_corpus(6);
  pool.push_back(latkit::chain_lattice(7));
  pool.push_back(latkit::boolean_lattice(3));
  for (const FiniteLattice& lat : pool) {
    CAPTURE(lat.name());
    const auto oracle = oracles::congruences_by_filter(lat);
    std::vector<Congruence> computed = latkit::all_congruences(lat).congruences;
    std::sort(computed.begin(), computed.end());
    CHECK(computed == oracle);
  }
}

TEST_CASE("substitution property and closure") {
  const FiniteLattice n5 = latkit::pentagon();
  CHECK(latkit::is_congruence(n5, Congruence::from_blocks(5, {{0}, {1, 2}, {3}, {4}})));
  // {0,a} alone is not closed: collapsing 0,a forces c ~ 1 and then b ~ 0.
  CHECK(!latkit::is_congruence(n5, Congruence::from_blocks(5, {{0, 1}, {2}, {3}, {4}})));
  CHECK(latkit::congruence_closure(n5, {{0, 1}}) ==
        Congruence::from_blocks(5, {{0, 1, 2}, {3, 4}}));
  CHECK(latkit::congruence_closure(n5, {}) == Congruence::identity(5));

  const Congruence join = latkit::congruence_join(
      n5, latkit::principal_congruence(n5, "a", "b"), latkit::principal_congruence(n5, "a", "b"));
  CHECK(join == latkit::principal_congruence(n5, "a", "b"));
}

TEST_CASE("simplicity of the named examples") {
  CHECK(latkit::is_simple(latkit::diamond()));
  CHECK(latkit::is_simple(latkit::chain_lattice(2)));
  CHECK(!latkit::is_simple(latkit::pentagon()));
  CHECK(!latkit::is_simple(latkit::chain_lattice(3)));
  CHECK(!latkit::is_simple(latkit::chain_lattice(1)));  // degenerate, not simple
  CHECK(!latkit::is_simple(latkit::boolean_lattice(2)));
}

TEST_CASE("congruence lattices of chains are boolean") {
  for (int k = 2; k <= 6; ++k) {
    const latkit::ConLattice con = latkit::all_congruences(latkit::chain_lattice(k));
    CHECK(con.size() == (1 << (k - 1)));
    CHECK(latkit::is_isomorphic(con.carrier, latkit::boolean_lattice(k - 1)).has_value());
  }
}

TEST_CASE("congruence lattice of the diamond and the hexagon") {
  CHECK(latkit::all_congruences(latkit::diamond()).size() == 2);
  const latkit::ConLattice n6 = latkit::all_congruences(latkit::hexagon());
  CHECK(n6.size() == 7);
  // Two independent cover collapses, their join, two one-sided collapses,
  // and the bounds; checked against the oracle as well.
  const auto oracle = oracles::congruences_by_filter(latkit::hexagon());
  CHECK(oracle.size() == 7);
}
