#pragma once

#include <string>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

// Result of doubling: each chosen element u of the origin is replaced by the
// two-element interval u.0 < u.1; everything else keeps its order.
struct DoubledLattice {
  FiniteLattice origin;
  FiniteLattice result;
  std::vector<std::string> doubled_elements;  // in origin element order
  // u -> (lower copy, upper copy)
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> doubled;

  bool is_doubled(const std::string& u) const;
  const std::string& lower_copy(const std::string& u) const;  // NotDoubled otherwise
  const std::string& upper_copy(const std::string& u) const;
  // The embedding of non-doubled origin elements (they map to themselves);
  // NotDoubled when called on a doubled element.
  const std::string& image(const std::string& x) const;
};

DoubledLattice double_element(const FiniteLattice& lat, const std::string& u);

// Doubles every element of the antichain simultaneously.  The construction is
// checked post-hoc: each pair u.0 < u.1 is a cover with u.0 meet-irreducible
// and u.1 join-irreducible, and every meet/join of the result matches the
// value predicted from the origin tables.
DoubledLattice double_antichain(const FiniteLattice& lat, const std::vector<std::string>& u_set);

// The congruence whose only nontrivial block is {u.0, u.1}; verified to equal
// the principal congruence of that pair.
Congruence mu(const DoubledLattice& dbl, const std::string& u);

// Union of the mu blocks over v_set (the blocks are disjoint two-element
// sets, so the union is already an equivalence); verified to be a congruence.
Congruence mu_v(const DoubledLattice& dbl, const std::vector<std::string>& v_set);

struct BooleanEmbeddingReport {
  std::vector<std::string> antichain;  // the doubled elements examined
  int subset_count = 0;                // 2^|antichain|
  bool injective = false;
  bool order_embedding = false;        // V subset of W iff mu[V] refines mu[W]
  bool sublattice = false;             // image closed under congruence meet/join
  bool boolean_isomorphic = false;     // image lattice isomorphic to boolean(|antichain|)
  bool embedding_ok = false;           // all four above
  int con_size = 0;
  int image_size = 0;
  bool con_equals_image_plus_top = false;  // Con(result) == image plus the total congruence
  std::vector<std::string> extra_congruences;  // congruences outside image + total
};

// Examines V -> mu[V] over all subsets V of u_set inside Con(result).
BooleanEmbeddingReport check_boolean_embedding(const DoubledLattice& dbl,
                                               const std::vector<std::string>& u_set);
BooleanEmbeddingReport check_boolean_embedding(const DoubledLattice& dbl);

}  // namespace latkit
