#include "latkit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <set>

#include "latkit/congruence.hpp"
#include "latkit/sd.hpp"

namespace latkit {

namespace {

constexpr const char* kAtomLetters = "pqrstuvwxyz";

FiniteLattice from_named_covers(const std::string& name, std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> covers) {
  return FiniteLattice::validate(name, std::move(elements), std::move(covers));
}

}  // namespace

FiniteLattice chain_lattice(int k) {
  if (k < 1) fail(ErrorKind::TooSmall, "chain needs at least one element");
  if (k > 28) fail(ErrorKind::SizeLimit, "chain limited to 28 elements");
  std::vector<std::string> elements;
  elements.push_back("0");
  for (int i = 0; i < k - 2; ++i) elements.push_back(std::string(1, static_cast<char>('a' + i)));
  if (k >= 2) elements.push_back("1");
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i + 1 < k; ++i) leq_pairs.emplace_back(i, i + 1);
  return FiniteLattice::from_leq("chain" + std::to_string(k), std::move(elements), leq_pairs);
}

FiniteLattice boolean_lattice(int k) {
  if (k < 0) fail(ErrorKind::TooSmall, "boolean lattice needs a nonnegative atom count");
  if (k > 10) fail(ErrorKind::SizeLimit, "boolean lattice limited to 10 atoms");
  const int n = 1 << k;
  std::vector<std::string> elements;
  elements.reserve(n);
  for (int mask = 0; mask < n; ++mask) {
    if (mask == 0) {
      elements.push_back("0");
    } else if (mask == n - 1) {
      elements.push_back("1");
    } else {
      std::string name;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) name += kAtomLetters[b];
      elements.push_back(name);
    }
  }
  std::vector<std::pair<int, int>> leq_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && (a & ~b) == 0) leq_pairs.emplace_back(a, b);
  return FiniteLattice::from_leq("B" + std::to_string(k), std::move(elements), leq_pairs);
}

FiniteLattice pentagon() {
  return from_named_covers("N5", {"0", "a", "b", "c", "1"},
                           {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

FiniteLattice diamond() {
  return from_named_covers("M3", {"0", "x", "y", "z", "1"},
                           {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
}

FiniteLattice hexagon() {
  return from_named_covers(
      "N6", {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"}, {"d", "1"}});
}

FiniteLattice l9() {
  return from_named_covers("L9", {"0", "o", "a", "b", "z", "i", "c", "d", "1"},
                           {{"0", "o"},
                            {"o", "a"},
                            {"a", "b"},
                            {"b", "i"},
                            {"o", "z"},
                            {"z", "i"},
                            {"i", "1"},
                            {"0", "c"},
                            {"c", "d"},
                            {"d", "1"}});
}

FiniteLattice l10() {
  return from_named_covers("L10", {"0", "o", "a", "b", "u", "v", "i", "c", "d", "1"},
                           {{"0", "o"},
                            {"o", "a"},
                            {"a", "b"},
                            {"b", "i"},
                            {"o", "u"},
                            {"u", "v"},
                            {"v", "i"},
                            {"i", "1"},
                            {"0", "c"},
                            {"c", "d"},
                            {"d", "1"}});
}

FiniteLattice add_unit(const FiniteLattice& lat) {
  std::string fresh = "1*";
  while (lat.find(fresh)) fresh += "*";
  std::vector<std::string> elements(lat.elements());
  elements.push_back(fresh);
  const int n = lat.size();
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < n; ++i) {
    leq_pairs.emplace_back(i, n);
    for (int j = 0; j < n; ++j)
      if (i != j && lat.leq(i, j)) leq_pairs.emplace_back(i, j);
  }
  return FiniteLattice::from_leq(lat.name() + "⁺", std::move(elements), leq_pairs);
}

FiniteLattice add_zero(const FiniteLattice& lat) {
  std::string fresh = "0*";
  while (lat.find(fresh)) fresh += "*";
  std::vector<std::string> elements;
  elements.push_back(fresh);
  for (const auto& e : lat.elements()) elements.push_back(e);
  const int n = lat.size();
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < n; ++i) {
    leq_pairs.emplace_back(0, i + 1);
    for (int j = 0; j < n; ++j)
      if (i != j && lat.leq(i, j)) leq_pairs.emplace_back(i + 1, j + 1);
  }
  return FiniteLattice::from_leq(lat.name() + "₊", std::move(elements), leq_pairs);
}

FiniteLattice ordinal_sum(const FiniteLattice& lower, const FiniteLattice& upper) {
  std::vector<std::string> elements(lower.elements());
  std::set<std::string> used(elements.begin(), elements.end());
  for (const auto& e : upper.elements()) {
    std::string name = e;
    while (used.count(name)) name = "b." + name;
    used.insert(name);
    elements.push_back(name);
  }
  const int nl = lower.size();
  const int nu = upper.size();
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j)
      if (i != j && lower.leq(i, j)) leq_pairs.emplace_back(i, j);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      if (i != j && upper.leq(i, j)) leq_pairs.emplace_back(nl + i, nl + j);
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nu; ++j) leq_pairs.emplace_back(i, nl + j);
  return FiniteLattice::from_leq(lower.name() + "+" + upper.name(), std::move(elements),
                                 leq_pairs);
}

std::vector<std::string> catalog_names() {
  return {"n5", "m3", "n6", "l9", "l10", "chain:<k>", "boolean:<k>"};
}

FiniteLattice catalog_build(const std::string& name) {
  if (name == "n5") return pentagon();
  if (name == "m3") return diamond();
  if (name == "n6") return hexagon();
  if (name == "l9") return l9();
  if (name == "l10") return l10();
  auto parse_size = [&](const std::string& text) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(text, &pos);
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "bad size in catalog name '" + name + "'");
    }
    if (pos != text.size()) fail(ErrorKind::ParseError, "bad size in catalog name '" + name + "'");
    return value;
  };
  if (name.rfind("chain:", 0) == 0) return chain_lattice(parse_size(name.substr(6)));
  if (name.rfind("boolean:", 0) == 0) return boolean_lattice(parse_size(name.substr(8)));
  fail(ErrorKind::ParseError, "unknown catalog name '" + name + "'");
}

namespace {

bool plain_boolean_token(const std::string& s) {
  if (s.size() < 3 || s[0] != 'B' || s[1] != '_') return false;
  for (size_t i = 2; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::optional<int> boolean_rank(const FiniteLattice& lat) {
  const int n = lat.size();
  const auto atoms = lat.upper_covers(lat.bottom());
  const int k = static_cast<int>(atoms.size());
  if (k > 20 || n != (1 << k)) return std::nullopt;
  std::vector<uint32_t> mask(n, 0);
  std::set<uint32_t> seen;
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < k; ++a)
      if (lat.leq(atoms[a], x)) mask[x] |= 1u << a;
    if (!seen.insert(mask[x]).second) return std::nullopt;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lat.leq(x, y) != ((mask[x] & ~mask[y]) == 0)) return std::nullopt;
  return k;
}

std::optional<std::string> structure_name(const FiniteLattice& lat) {
  if (auto k = boolean_rank(lat)) return "B_" + std::to_string(*k);
  const int n = lat.size();
  if (n < 2) return std::nullopt;
  if (lat.lower_covers(lat.top()).size() == 1) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != lat.top()) keep.push_back(i);
    if (auto inner = structure_name(induced(lat, keep, "inner")))
      return (plain_boolean_token(*inner) ? *inner : "(" + *inner + ")") + "⁺";
  }
  if (lat.upper_covers(lat.bottom()).size() == 1) {
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i != lat.bottom()) keep.push_back(i);
    if (auto inner = structure_name(induced(lat, keep, "inner")))
      return "(" + *inner + ")₊";
  }
  return std::nullopt;
}

bool is_chain(const FiniteLattice& lat) {
  for (int i = 0; i < lat.size(); ++i)
    for (int j = i + 1; j < lat.size(); ++j)
      if (!lat.comparable(i, j)) return false;
  return true;
}

}  // namespace

std::optional<std::string> identify(const FiniteLattice& lat) {
  auto name = structure_name(lat);
  if (name && is_chain(lat)) *name += " (" + std::to_string(lat.size()) + "-chain)";
  return name;
}

// Enumeration works on the inner poset left after removing the bounds: an
// order is a lattice exactly when every pair of inner elements has at most
// one minimal common upper bound and at most one maximal common lower bound
// there. Such posets are grown one new maximal element at a time (any
// downward-closed subset may serve as its strict downset), pruning duplicates
// with a canonical form minimized over all relabelings.
namespace {

constexpr int kMaxEnumerate = 9;

bool unique_bounds(const std::vector<char>& less, int m) {
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      int minimal_ubs = 0;
      int maximal_lbs = 0;
      for (int u = 0; u < m; ++u) {
        const bool ub = (u == x || less[x * m + u]) && (u == y || less[y * m + u]);
        if (ub) {
          bool minimal = true;
          for (int v = 0; v < m && minimal; ++v) {
            if (v == u || !less[v * m + u]) continue;
            if ((v == x || less[x * m + v]) && (v == y || less[y * m + v])) minimal = false;
          }
          if (minimal && ++minimal_ubs > 1) return false;
        }
        const bool lb = (u == x || less[u * m + x]) && (u == y || less[u * m + y]);
        if (lb) {
          bool maximal = true;
          for (int v = 0; v < m && maximal; ++v) {
            if (v == u || !less[u * m + v]) continue;
            if ((v == x || less[v * m + x]) && (v == y || less[v * m + y])) maximal = false;
          }
          if (maximal && ++maximal_lbs > 1) return false;
        }
      }
    }
  return true;
}

uint64_t canonical_form(const std::vector<char>& less, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t packed = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (less[perm[i] * m + perm[j]]) packed |= 1ull << (i * m + j);
    best = std::min(best, packed);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<char> unpack(uint64_t packed, int m) {
  std::vector<char> less(static_cast<size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (packed >> (i * m + j) & 1) less[i * m + j] = 1;
  return less;
}

std::vector<std::vector<uint64_t>> poset_levels(int target_m) {
  std::vector<std::vector<uint64_t>> levels(target_m + 1);
  levels[0] = {0};
  for (int m = 1; m <= target_m; ++m) {
    const int pm = m - 1;
    std::set<uint64_t> out;
    for (uint64_t packed : levels[pm]) {
      const std::vector<char> base = unpack(packed, pm);
      std::vector<uint32_t> strict_down(pm, 0);
      for (int j = 0; j < pm; ++j)
        for (int i = 0; i < pm; ++i)
          if (base[i * pm + j]) strict_down[j] |= 1u << i;
      for (uint32_t mask = 0; mask < (1u << pm); ++mask) {
        bool closed = true;
        for (int x = 0; x < pm && closed; ++x)
          if ((mask >> x & 1) && (strict_down[x] & ~mask)) closed = false;
        if (!closed) continue;
        std::vector<char> less(static_cast<size_t>(m) * m, 0);
        for (int i = 0; i < pm; ++i)
          for (int j = 0; j < pm; ++j) less[i * m + j] = base[i * pm + j];
        for (int x = 0; x < pm; ++x)
          if (mask >> x & 1) less[x * m + (m - 1)] = 1;
        if (!unique_bounds(less, m)) continue;
        out.insert(canonical_form(less, m));
      }
    }
    levels[m].assign(out.begin(), out.end());
  }
  return levels;
}

}  // namespace

long count_lattices(int n) {
  if (n < 1) fail(ErrorKind::TooSmall, "lattices need at least one element");
  if (n > kMaxEnumerate) fail(ErrorKind::SizeLimit, "enumeration limited to 9 elements");
  if (n == 1) return 1;
  return static_cast<long>(poset_levels(n - 2)[n - 2].size());
}

std::vector<FiniteLattice> enumerate_lattices(int n) {
  if (n < 1) fail(ErrorKind::TooSmall, "lattices need at least one element");
  if (n > kMaxEnumerate) fail(ErrorKind::SizeLimit, "enumeration limited to 9 elements");
  std::vector<FiniteLattice> out;
  if (n == 1) {
    out.push_back(FiniteLattice::validate("L1.1", {"0"}, {}));
    return out;
  }
  const int m = n - 2;
  const auto level = poset_levels(m)[m];
  for (size_t idx = 0; idx < level.size(); ++idx) {
    const std::vector<char> less = unpack(level[idx], m);
    std::vector<std::string> elements;
    elements.push_back("0");
    for (int i = 0; i < m; ++i) elements.push_back(std::string(1, static_cast<char>('a' + i)));
    elements.push_back("1");
    std::vector<std::pair<int, int>> leq_pairs;
    for (int t = 1; t <= m + 1; ++t) leq_pairs.emplace_back(0, t);
    for (int s = 1; s <= m; ++s) leq_pairs.emplace_back(s, m + 1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (less[i * m + j]) leq_pairs.emplace_back(i + 1, j + 1);
    out.push_back(FiniteLattice::from_leq(
        "L" + std::to_string(n) + "." + std::to_string(idx + 1), std::move(elements), leq_pairs));
  }
  return out;
}

std::vector<FiniteLattice> lattice_corpus(int max_size) {
  std::vector<FiniteLattice> out = {pentagon(), diamond(), hexagon(), l9(), l10()};
  for (int n = 2; n <= max_size; ++n)
    for (auto& lat : enumerate_lattices(n)) out.push_back(std::move(lat));
  return out;
}

CensusPredicate census_predicate_from(const std::string& name) {
  if (name == "all") return CensusPredicate::All;
  if (name == "sd") return CensusPredicate::Semidistributive;
  if (name == "distributive") return CensusPredicate::Distributive;
  if (name == "simple") return CensusPredicate::Simple;
  if (name == "sd-simple") return CensusPredicate::SdSimple;
  fail(ErrorKind::ParseError, "unknown census predicate '" + name + "'");
}

const char* census_predicate_name(CensusPredicate p) {
  switch (p) {
    case CensusPredicate::All:
      return "all";
    case CensusPredicate::Semidistributive:
      return "sd";
    case CensusPredicate::Distributive:
      return "distributive";
    case CensusPredicate::Simple:
      return "simple";
    case CensusPredicate::SdSimple:
      return "sd-simple";
  }
  return "all";
}

CensusReport run_census(int max_size, CensusPredicate predicate) {
  if (max_size < 1) fail(ErrorKind::TooSmall, "census needs a positive size bound");
  if (max_size > 8) fail(ErrorKind::SizeLimit, "census limited to 8 elements");
  CensusReport report;
  report.predicate = predicate;
  report.max_size = max_size;
  for (int n = 1; n <= max_size; ++n) {
    CensusRow row;
    row.n = n;
    auto lats = enumerate_lattices(n);
    row.lattice_count = static_cast<long>(lats.size());
    struct ConClass {
      std::string label;
      std::optional<FiniteLattice> rep;  // kept only for unrecognized shapes
      int con_size = 0;
      int count = 0;
    };
    std::vector<ConClass> classes;
    int anonymous = 0;
    for (const auto& lat : lats) {
      std::optional<ConLattice> con;
      bool match = false;
      switch (predicate) {
        case CensusPredicate::All:
          match = true;
          break;
        case CensusPredicate::Semidistributive:
          match = is_semidistributive(lat);
          break;
        case CensusPredicate::Distributive:
          match = is_distributive(lat);
          break;
        case CensusPredicate::Simple:
          con = all_congruences(lat);
          match = is_simple(*con);
          break;
        case CensusPredicate::SdSimple:
          if (is_semidistributive(lat)) {
            con = all_congruences(lat);
            match = is_simple(*con);
          }
          break;
      }
      if (!match) continue;
      ++row.matching;
      if (!con) con = all_congruences(lat);
      auto label = identify(con->carrier);
      bool placed = false;
      for (auto& cls : classes) {
        if (label) {
          if (cls.label == *label) {
            ++cls.count;
            placed = true;
            break;
          }
        } else if (cls.rep && cls.con_size == con->size() &&
                   is_isomorphic(con->carrier, *cls.rep)) {
          ++cls.count;
          placed = true;
          break;
        }
      }
      if (!placed) {
        ConClass cls;
        cls.con_size = con->size();
        cls.count = 1;
        if (label) {
          cls.label = *label;
        } else {
          cls.label = "size-" + std::to_string(con->size()) + " #" + std::to_string(++anonymous);
          cls.rep = con->carrier;
        }
        classes.push_back(std::move(cls));
      }
    }
    std::sort(classes.begin(), classes.end(), [](const ConClass& a, const ConClass& b) {
      return std::tie(a.con_size, a.label) < std::tie(b.con_size, b.label);
    });
    for (const auto& cls : classes)
      row.con_classes.push_back({cls.label, cls.con_size, cls.count});
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace latkit
