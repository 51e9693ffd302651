#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latkit {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  NotALattice,
  NotAnAntichain,
  NotDoubled,
  NotACongruence,
  NotIsolated,
  NameCollision,
  TooSmall,
  SizeLimit,
  ParseError,
  InvariantViolation,
};

const char* error_kind_name(ErrorKind kind);

class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// A finite bounded lattice over named elements.  Immutable once built: the
// order relation, the cover relation (normalized to the transitive reduction)
// and the full meet/join tables are precomputed at construction.
class FiniteLattice {
 public:
  using NamedCover = std::pair<std::string, std::string>;  // (lower, upper)

  // An empty placeholder (size 0); every usable instance comes from validate
  // or from_leq, which reject the empty element set.
  FiniteLattice() = default;

  // Builds from a cover (or any acyclic) relation given by name pairs.
  static FiniteLattice validate(std::string name, std::vector<std::string> elements,
                                const std::vector<NamedCover>& covers);
  // Builds from an arbitrary relation given by index pairs (i <= j).
  static FiniteLattice from_leq(std::string name, std::vector<std::string> elements,
                                const std::vector<std::pair<int, int>>& leq_pairs);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  FiniteLattice renamed(std::string new_name) const;

  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int i) const { return elements_[i]; }
  int index_of(const std::string& id) const;  // throws UnknownElement
  std::optional<int> find(const std::string& id) const;

  bool leq(int i, int j) const {
    return (up_[static_cast<size_t>(i) * words_ + (static_cast<unsigned>(j) >> 6)] >> (j & 63)) & 1u;
  }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool comparable(int i, int j) const { return leq(i, j) || leq(j, i); }
  int meet(int i, int j) const { return meet_[static_cast<size_t>(i) * n_ + j]; }
  int join(int i, int j) const { return join_[static_cast<size_t>(i) * n_ + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  // Cover pairs (lower, upper) sorted by (lower, upper) element index.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  const std::vector<int>& lower_covers(int i) const { return lower_covers_[i]; }
  const std::vector<int>& upper_covers(int i) const { return upper_covers_[i]; }
  std::vector<int> downset(int i) const;
  std::vector<int> upset(int i) const;
  std::vector<NamedCover> named_covers() const;

  FiniteLattice dual() const;

 private:
  // closure: reflexive-transitive, antisymmetric bit rows (row i = upset of i).
  static FiniteLattice build(std::string name, std::vector<std::string> elements,
                             std::vector<uint64_t> closure, int words);

  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> up_;    // row i: bits j with i <= j
  std::vector<uint64_t> down_;  // row i: bits j with j <= i
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = -1;
  int top_ = -1;
};

struct ElementClassification {
  std::string element;
  std::vector<std::string> lower_covers;
  std::vector<std::string> upper_covers;
  bool join_irreducible = false;   // exactly one lower cover (so never the bottom)
  bool meet_irreducible = false;   // exactly one upper cover (so never the top)
  bool doubly_irreducible = false;
};

ElementClassification classify(const FiniteLattice& lat, const std::string& x);

std::vector<std::string> principal_ideal(const FiniteLattice& lat, const std::string& x);
std::vector<std::string> principal_filter(const FiniteLattice& lat, const std::string& x);

// All k-element antichains in deterministic (element-index lexicographic) order.
// k = 0 yields the single empty antichain.
std::vector<std::vector<std::string>> antichains(const FiniteLattice& lat, int k);

// The restriction of the order to the given elements (indices into lat, kept
// in the given order). Fails with NotALattice when the induced order is not
// a lattice.
FiniteLattice induced(const FiniteLattice& lat, const std::vector<int>& keep,
                      const std::string& name);

// A bijection preserving the order both ways, as (a-element, b-element) pairs
// in a's element order; std::nullopt when the lattices are not isomorphic.
// Deterministic for fixed inputs.
std::optional<std::vector<std::pair<std::string, std::string>>> is_isomorphic(
    const FiniteLattice& a, const FiniteLattice& b);

}  // namespace latkit
