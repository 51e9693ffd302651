#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/lattice.hpp"
#include "latkit/sd.hpp"

namespace latkit {

// A cover pair a ≺ b, both away from the bounds and both doubly irreducible,
// together with the unique lower cover of a and the unique upper cover of b.
struct IsolatedInterval {
  std::string a;
  std::string b;
  std::string a_star;  // unique lower cover of a
  std::string b_star;  // unique upper cover of b
};

// All isolated intervals of lat as (lower, upper) cover pairs, in cover order.
std::vector<IsolatedInterval> find_isolated_intervals(const FiniteLattice& lat);

// The isolated interval (a, b), or NotIsolated explaining which requirement
// fails.
IsolatedInterval isolated_interval(const FiniteLattice& lat, const std::string& a,
                                   const std::string& b);

// The lattice left after removing a and b (their double irreducibility makes
// the remainder closed under meet and join; this is re-verified). For the
// 2-element lattice the remainder is empty, signalled by std::nullopt.
std::optional<FiniteLattice> delete_interval(const FiniteLattice& lat,
                                             const IsolatedInterval& iv);

// The three-part split of the remainder: P below the interval, Q above it,
// R everything else.
struct Pqr {
  std::vector<std::string> p;  // ↓(lower cover of a)
  std::vector<std::string> q;  // ↑(upper cover of b)
  std::vector<std::string> r;  // the rest
};

// Fails with TooSmall when the remainder is empty.
Pqr partition_pqr(const FiniteLattice& lat, const IsolatedInterval& iv);

// The result of replacing the interval [a, b] by a whole lattice F: the glued
// lattice K lives on (L − {a, b}) ⊎ F, ordered by the original order on each
// part plus x < f exactly when x ≤ a, and f < y exactly when b ≤ y.
struct GlueContext {
  FiniteLattice origin;
  IsolatedInterval interval;
  FiniteLattice filler;   // F as supplied
  FiniteLattice deleted;  // L − {a, b}
  Pqr pqr;
  FiniteLattice k;
  // Element maps into K. Deleted-lattice elements keep their names; filler
  // elements may be renamed (prefixed) to avoid collisions.
  std::vector<std::pair<std::string, std::string>> origin_map;
  std::vector<std::pair<std::string, std::string>> filler_map;
};

GlueContext glue(const FiniteLattice& origin, const IsolatedInterval& iv,
                 const FiniteLattice& filler);

// Semidistributivity of the glued lattice, alongside where any failure can
// come from: the witness scan counts how many filler elements each violating
// triple uses (a semidistributive origin forces at least two).
struct GlueSdReport {
  SdReport k;
  bool origin_sd = false;
  bool filler_sd = false;
  long violating_triples = 0;
  int min_filler_elements_in_witness = -1;  // -1 when K has no violations
};

GlueSdReport check_glue_sd(const GlueContext& ctx);

// The transfer of a congruence of the origin to the glued lattice: when the
// interval is collapsed, F is substituted into its block; otherwise blocks
// are intersected with the remainder and F splits into singletons. The result
// need not satisfy the substitution property on K, so it carries a flag.
struct TransferResult {
  Congruence image;
  bool valid = false;
};

TransferResult transfer_congruence(const GlueContext& ctx, const Congruence& alpha);

// True when some congruence of the origin separates a from b while one of
// their blocks has extra elements: those extra elements have no counterpart
// after gluing, so the transfer map cannot be an isomorphism.
bool has_separating_leak(const FiniteLattice& origin, const IsolatedInterval& iv);

// Exhaustive instance check of the congruence-transfer isomorphism.
struct GlueIsoReport {
  bool filler_simple = false;
  bool transfers_valid = false;
  bool injective = false;
  bool surjective = false;
  bool order_preserving = false;
  bool order_reflecting = false;
  bool isomorphism = false;
  bool leak_expected = false;
  int con_origin_size = 0;
  int con_k_size = 0;
  int image_size = 0;
  std::vector<std::string> notes;
};

GlueIsoReport verify_con_isomorphism(const GlueContext& ctx);

}  // namespace latkit
