#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/lattice.hpp"

namespace latkit {

// A partition of {0..n-1} in canonical form: block ids are assigned by first
// occurrence, so two equal partitions have identical id vectors.
class Congruence {
 public:
  explicit Congruence(std::vector<int> block_of);
  static Congruence identity(int n);
  static Congruence total(int n);
  static Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(ids_.size()); }
  int block_count() const { return blocks_; }
  int block_id(int i) const { return ids_[i]; }
  bool same(int i, int j) const { return ids_[i] == ids_[j]; }
  const std::vector<int>& ids() const { return ids_; }
  // Blocks sorted by least element, each block sorted.
  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Congruence& other) const { return ids_ == other.ids_; }
  bool operator!=(const Congruence& other) const { return ids_ != other.ids_; }
  bool operator<(const Congruence& other) const { return ids_ < other.ids_; }

 private:
  std::vector<int> ids_;
  int blocks_ = 0;
};

// a refines b: every block of a is contained in a block of b.
bool refines(const Congruence& a, const Congruence& b);

// Common refinement (the meet in the congruence lattice; no re-closing needed).
Congruence partition_meet(const Congruence& a, const Congruence& b);

// Substitution property: x ~ y implies x∧z ~ y∧z and x∨z ~ y∨z for all z.
bool is_congruence(const FiniteLattice& lat, const Congruence& c);

// Smallest congruence containing all seed pairs, by worklist closure under
// the substitution property.
Congruence congruence_closure(const FiniteLattice& lat,
                              const std::vector<std::pair<int, int>>& seeds);

Congruence principal_congruence(const FiniteLattice& lat, int x, int y);
Congruence principal_congruence(const FiniteLattice& lat, const std::string& x,
                                const std::string& y);

// Join in the congruence lattice: closure of the union (the equivalence join
// of two congruences is already a congruence, but it is re-closed to guard
// the invariant).
Congruence congruence_join(const FiniteLattice& lat, const Congruence& a, const Congruence& b);

// Blocks rendered as {x,y|z|w}: blocks in least-element order, members in
// element order.
std::string format_congruence(const FiniteLattice& lat, const Congruence& c);

struct ConLattice {
  FiniteLattice carrier;               // congruences ordered by refinement
  std::vector<Congruence> congruences; // same order as carrier elements
  int delta_index = -1;                // identity congruence
  int nabla_index = -1;                // total congruence
  int size() const { return static_cast<int>(congruences.size()); }
  std::optional<int> find(const Congruence& c) const;
};

// The full congruence lattice: join-closure of the principal congruences of
// all cover pairs together with the identity.  The carrier is validated and
// checked distributive (a classical sanity fact; violation means a bug).
ConLattice all_congruences(const FiniteLattice& lat, int max_congruences = 1 << 17);

// Lattice on the blocks of c; block X <= block Y iff some x in X, y in Y have
// x <= y.
FiniteLattice quotient(const FiniteLattice& lat, const Congruence& c);

// Exactly two congruences.  The one-element lattice is degenerate, not simple.
bool is_simple(const FiniteLattice& lat);
bool is_simple(const ConLattice& con);

// Congruences covering the identity in the refinement order.
std::vector<Congruence> atoms(const ConLattice& con);

}  // namespace latkit
