#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// --- fixed builders ---------------------------------------------------------

// The k-element chain 0 < a < b < ... < 1 (k = 1 gives the singleton "0").
FiniteLattice chain_lattice(int k);

// The boolean lattice with k atoms (2^k elements). Elements are named "0",
// the atom letters p, q, r, ..., concatenations of atom letters, and "1".
FiniteLattice boolean_lattice(int k);

// The pentagon: 0 < a < b < 1 and 0 < c < 1.
FiniteLattice pentagon();

// The diamond: 0 < x, y, z < 1.
FiniteLattice diamond();

// The hexagon: 0 < a < b < 1 and 0 < c < d < 1.
FiniteLattice hexagon();

// Nine-element lattice: a pentagon-with-doubled-flank o<a<b<i, o<z<i inside
// bounds 0 < {o..i} < 1, plus a side chain 0 < c < d < 1.
FiniteLattice l9();

// Ten-element variant of l9 whose short flank is one step longer
// (o < u < v < i instead of o < z < i).
FiniteLattice l10();

// --- combinators -------------------------------------------------------------

// A copy of lat with a new top adjoined above the old one. The new element is
// named "1*" (with further "*" appended until the name is fresh).
FiniteLattice add_unit(const FiniteLattice& lat);

// Dually, a new bottom named "0*" below the old bottom.
FiniteLattice add_zero(const FiniteLattice& lat);

// The ordinal sum: every element of lower sits below every element of upper,
// with the top of lower covered by the bottom of upper (no coalescing).
// Colliding names from upper are prefixed with "b." until fresh.
FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper);

// --- name-based registry ------------------------------------------------------

// Catalog names accepted by catalog_build: the fixed names plus the patterns
// "chain:<k>" and "boolean:<k>".
std::vector<std::string> catalog_names();

// Build a catalog lattice by name; fails with ParseError on unknown names.
FiniteLattice catalog_build(const std::string& name);

// --- structure recognition ----------------------------------------------------

// Recognize booleans and iterated one-point extensions of them:
//   "B_k"            boolean with k atoms
//   "B_k⁺"           a new top adjoined ("(...)⁺" when nested)
//   "(B_k)₊"         a new bottom adjoined
// with " (n-chain)" appended when the lattice is also a chain. Returns
// std::nullopt when the shape is not of this form.
std::optional<std::string> identify(const FiniteLattice& lat);

// --- exhaustive enumeration ----------------------------------------------------

// Number of isomorphism classes of n-element lattices.
long count_lattices(int n);

// One representative per isomorphism class of n-element lattices, in a fixed
// deterministic order, named "L<n>.<index>" with elements "0", "a", "b", ..., "1".
std::vector<FiniteLattice> enumerate_lattices(int n);

// Named examples plus every isomorphism class of size 2..max_size; the pool
// the verification harness draws instances from.
std::vector<FiniteLattice> lattice_corpus(int max_size);

// --- census ---------------------------------------------------------------------

enum class CensusPredicate { All, Semidistributive, Distributive, Simple, SdSimple };

// Accepted names: "all", "sd", "distributive", "simple", "sd-simple".
CensusPredicate census_predicate_from(const std::string& name);
const char* census_predicate_name(CensusPredicate p);

struct CensusConClass {
  std::string label;  // identify() result, or "size-<k> #<j>" for unrecognized shapes
  int con_size = 0;
  int count = 0;
};

struct CensusRow {
  int n = 0;
  long lattice_count = 0;
  long matching = 0;
  std::vector<CensusConClass> con_classes;  // sorted by (con_size, label)
};

struct CensusReport {
  CensusPredicate predicate = CensusPredicate::All;
  int max_size = 0;
  std::vector<CensusRow> rows;
};

// For each size 1..max_size, count the lattices matching the predicate and
// tabulate their congruence lattices up to isomorphism.
CensusReport run_census(int max_size, CensusPredicate predicate);

}  // namespace latkit
