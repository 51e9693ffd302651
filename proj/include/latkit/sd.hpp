#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

struct SdWitness {
  std::string side;  // "meet" or "join"
  std::array<std::string, 3> triple;  // (x, y, z) violating the identity
};

struct SdReport {
  bool meet_sd = true;
  bool join_sd = true;
  std::optional<SdWitness> witness;  // first violation in scan order
  bool semidistributive() const { return meet_sd && join_sd; }
};

// Direct definitional scan: meet side fails iff some x, y, z satisfy
// x∧y = x∧z but x∧y != x∧(y∨z); join side dually.  The scan iterates x in
// element order, then unordered pairs {y, z} in index order, so the witness
// is deterministic.
SdReport check_sd_direct(const FiniteLattice& lat);

bool is_meet_semidistributive(const FiniteLattice& lat);
bool is_join_semidistributive(const FiniteLattice& lat);
bool is_semidistributive(const FiniteLattice& lat);

// First triple with x∧(y∨z) != (x∧y)∨(x∧z), if any.
std::optional<std::array<std::string, 3>> distributivity_witness(const FiniteLattice& lat);
bool is_distributive(const FiniteLattice& lat);

struct IdealWitness {
  std::string u, v;                     // the defining pair, u < v
  std::vector<std::string> set;         // {x : v∧x = u} (dual: {x : v∨x = u})
  std::string failure_kind;             // "join-escape", "meet-escape", "down-escape", "up-escape"
  std::optional<std::pair<std::string, std::string>> failure;
};

struct IdealCriterionReport {
  bool holds = true;
  std::vector<IdealWitness> witnesses;  // empty when the criterion holds
};

// Ideal criterion for the meet side: for every pair u < v the set
// I(u,v) = {x : v∧x = u} lies in the filter of u and must be downward closed
// there and closed under binary joins; this holds for every pair exactly when
// the direct meet-side scan passes.
IdealCriterionReport check_meet_sd_ideals(const FiniteLattice& lat);

// Order dual: for every pair u > v the set F(u,v) = {x : v∨x = u} must be
// upward closed within the ideal of u and closed under binary meets.
IdealCriterionReport check_join_sd_filters(const FiniteLattice& lat);

}  // namespace latkit
