#include "latkit/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace latkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotAnAntichain: return "NotAnAntichain";
    case ErrorKind::NotDoubled: return "NotDoubled";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

LatticeError::LatticeError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw LatticeError(kind, message); }

namespace {

inline bool bit(const std::vector<uint64_t>& rows, int words, int i, int j) {
  return (rows[static_cast<size_t>(i) * words + (static_cast<unsigned>(j) >> 6)] >> (j & 63)) & 1u;
}

inline void set_bit(std::vector<uint64_t>& rows, int words, int i, int j) {
  rows[static_cast<size_t>(i) * words + (static_cast<unsigned>(j) >> 6)] |= uint64_t(1) << (j & 63);
}

// In-place reflexive-transitive closure of the relation held in rows.
void close_relation(std::vector<uint64_t>& rows, int n, int words) {
  for (int i = 0; i < n; ++i) set_bit(rows, words, i, i);
  for (int k = 0; k < n; ++k) {
    const uint64_t* rk = rows.data() + static_cast<size_t>(k) * words;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      if (bit(rows, words, i, k)) {
        uint64_t* ri = rows.data() + static_cast<size_t>(i) * words;
        for (int w = 0; w < words; ++w) ri[w] |= rk[w];
      }
    }
  }
}

int highest_bit(const uint64_t* row, int words) {
  for (int w = words - 1; w >= 0; --w)
    if (row[w]) return w * 64 + 63 - std::countl_zero(row[w]);
  return -1;
}

int lowest_bit(const uint64_t* row, int words) {
  for (int w = 0; w < words; ++w)
    if (row[w]) return w * 64 + std::countr_zero(row[w]);
  return -1;
}

}  // namespace

FiniteLattice FiniteLattice::build(std::string name, std::vector<std::string> elements,
                                   std::vector<uint64_t> closure, int words) {
  FiniteLattice lat;
  lat.name_ = std::move(name);
  lat.elements_ = std::move(elements);
  lat.n_ = static_cast<int>(lat.elements_.size());
  lat.words_ = words;
  const int n = lat.n_;

  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = lat.index_.emplace(lat.elements_[i], i);
    if (!fresh) fail(ErrorKind::DuplicateElement, "duplicate element '" + lat.elements_[i] + "'");
  }

  // Antisymmetry: i <= j <= i with i != j means the input had a cycle.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bit(closure, words, i, j) && bit(closure, words, j, i))
        fail(ErrorKind::CycleDetected,
             "elements '" + lat.elements_[i] + "' and '" + lat.elements_[j] +
                 "' are related in both directions");

  lat.up_ = std::move(closure);
  lat.down_.assign(static_cast<size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bit(lat.up_, words, i, j)) set_bit(lat.down_, words, j, i);

  // Topological positions: sort by |downset| (strictly increasing along <),
  // ties by element index, so the order is deterministic.
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(lat.down_[static_cast<size_t>(i) * words + w]);
    rank[i] = c;
  }
  std::vector<int> topo(n);
  std::iota(topo.begin(), topo.end(), 0);
  std::sort(topo.begin(), topo.end(), [&](int x, int y) {
    return rank[x] != rank[y] ? rank[x] < rank[y] : x < y;
  });

  // Order rows in topo bit space: for a set of common lower bounds the highest
  // set bit is the only candidate for its greatest element (dually for joins).
  std::vector<uint64_t> dt(static_cast<size_t>(n) * words, 0);
  std::vector<uint64_t> ut(static_cast<size_t>(n) * words, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (bit(lat.up_, words, topo[q], topo[p])) set_bit(dt, words, p, q);
      if (bit(lat.up_, words, topo[p], topo[q])) set_bit(ut, words, p, q);
    }

  lat.meet_.assign(static_cast<size_t>(n) * n, -1);
  lat.join_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<uint64_t> mask(words);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      const int x = topo[p];
      const int y = topo[q];
      const auto pair_name = [&] {
        return "(" + lat.elements_[std::min(x, y)] + ", " + lat.elements_[std::max(x, y)] + ")";
      };

      const uint64_t* dp = dt.data() + static_cast<size_t>(p) * words;
      const uint64_t* dq = dt.data() + static_cast<size_t>(q) * words;
      for (int w = 0; w < words; ++w) mask[w] = dp[w] & dq[w];
      int h = highest_bit(mask.data(), words);
      if (h < 0) fail(ErrorKind::NotALattice, "meet missing for " + pair_name());
      const uint64_t* dh = dt.data() + static_cast<size_t>(h) * words;
      for (int w = 0; w < words; ++w)
        if (mask[w] & ~dh[w]) fail(ErrorKind::NotALattice, "meet ambiguous for " + pair_name());
      lat.meet_[static_cast<size_t>(x) * n + y] = topo[h];
      lat.meet_[static_cast<size_t>(y) * n + x] = topo[h];

      const uint64_t* up = ut.data() + static_cast<size_t>(p) * words;
      const uint64_t* uq = ut.data() + static_cast<size_t>(q) * words;
      for (int w = 0; w < words; ++w) mask[w] = up[w] & uq[w];
      int l = lowest_bit(mask.data(), words);
      if (l < 0) fail(ErrorKind::NotALattice, "join missing for " + pair_name());
      const uint64_t* ul = ut.data() + static_cast<size_t>(l) * words;
      for (int w = 0; w < words; ++w)
        if (mask[w] & ~ul[w]) fail(ErrorKind::NotALattice, "join ambiguous for " + pair_name());
      lat.join_[static_cast<size_t>(x) * n + y] = topo[l];
      lat.join_[static_cast<size_t>(y) * n + x] = topo[l];
    }
  }
  lat.bottom_ = topo[0];
  lat.top_ = topo[n - 1];

  // Covers = transitive reduction: x < y with exactly x and y in [x, y].
  lat.lower_covers_.assign(n, {});
  lat.upper_covers_.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !bit(lat.up_, words, x, y)) continue;
      int between = 0;
      for (int w = 0; w < words; ++w)
        between += std::popcount(lat.up_[static_cast<size_t>(x) * words + w] &
                                 lat.down_[static_cast<size_t>(y) * words + w]);
      if (between == 2) {
        lat.covers_.emplace_back(x, y);
        lat.lower_covers_[y].push_back(x);
        lat.upper_covers_[x].push_back(y);
      }
    }
  std::sort(lat.covers_.begin(), lat.covers_.end());
  for (int i = 0; i < n; ++i) {
    std::sort(lat.lower_covers_[i].begin(), lat.lower_covers_[i].end());
    std::sort(lat.upper_covers_[i].begin(), lat.upper_covers_[i].end());
  }
  return lat;
}

FiniteLattice FiniteLattice::validate(std::string name, std::vector<std::string> elements,
                                      const std::vector<NamedCover>& covers) {
  if (elements.empty()) fail(ErrorKind::NotALattice, "a lattice needs at least one element");
  const int n = static_cast<int>(elements.size());
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    auto [it, fresh] = index.emplace(elements[i], i);
    if (!fresh) fail(ErrorKind::DuplicateElement, "duplicate element '" + elements[i] + "'");
  }
  const int words = (n + 63) / 64;
  std::vector<uint64_t> rows(static_cast<size_t>(n) * words, 0);
  for (const auto& [lo, hi] : covers) {
    auto li = index.find(lo);
    if (li == index.end()) fail(ErrorKind::UnknownElement, "cover references unknown element '" + lo + "'");
    auto hi_it = index.find(hi);
    if (hi_it == index.end()) fail(ErrorKind::UnknownElement, "cover references unknown element '" + hi + "'");
    if (li->second == hi_it->second)
      fail(ErrorKind::CycleDetected, "cover relates '" + lo + "' to itself");
    set_bit(rows, words, li->second, hi_it->second);
  }
  close_relation(rows, n, words);
  return build(std::move(name), std::move(elements), std::move(rows), words);
}

FiniteLattice FiniteLattice::from_leq(std::string name, std::vector<std::string> elements,
                                      const std::vector<std::pair<int, int>>& leq_pairs) {
  if (elements.empty()) fail(ErrorKind::NotALattice, "a lattice needs at least one element");
  const int n = static_cast<int>(elements.size());
  const int words = (n + 63) / 64;
  std::vector<uint64_t> rows(static_cast<size_t>(n) * words, 0);
  for (const auto& [i, j] : leq_pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail(ErrorKind::UnknownElement, "relation pair index out of range");
    set_bit(rows, words, i, j);
  }
  close_relation(rows, n, words);
  return build(std::move(name), std::move(elements), std::move(rows), words);
}

FiniteLattice FiniteLattice::renamed(std::string new_name) const {
  FiniteLattice copy = *this;
  copy.name_ = std::move(new_name);
  return copy;
}

int FiniteLattice::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    fail(ErrorKind::UnknownElement, "unknown element '" + id + "' in lattice '" + name_ + "'");
  return it->second;
}

std::optional<int> FiniteLattice::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> FiniteLattice::downset(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (leq(j, i)) out.push_back(j);
  return out;
}

std::vector<int> FiniteLattice::upset(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (leq(i, j)) out.push_back(j);
  return out;
}

std::vector<FiniteLattice::NamedCover> FiniteLattice::named_covers() const {
  std::vector<NamedCover> out;
  out.reserve(covers_.size());
  for (const auto& [lo, hi] : covers_) out.emplace_back(elements_[lo], elements_[hi]);
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<uint64_t> transposed(static_cast<size_t>(n_) * words_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (leq(i, j)) set_bit(transposed, words_, j, i);
  return build(name_ + ".dual", elements_, std::move(transposed), words_);
}

ElementClassification classify(const FiniteLattice& lat, const std::string& x) {
  const int i = lat.index_of(x);
  ElementClassification c;
  c.element = x;
  for (int j : lat.lower_covers(i)) c.lower_covers.push_back(lat.element(j));
  for (int j : lat.upper_covers(i)) c.upper_covers.push_back(lat.element(j));
  c.join_irreducible = lat.lower_covers(i).size() == 1;
  c.meet_irreducible = lat.upper_covers(i).size() == 1;
  c.doubly_irreducible = c.join_irreducible && c.meet_irreducible;
  return c;
}

std::vector<std::string> principal_ideal(const FiniteLattice& lat, const std::string& x) {
  std::vector<std::string> out;
  for (int j : lat.downset(lat.index_of(x))) out.push_back(lat.element(j));
  return out;
}

std::vector<std::string> principal_filter(const FiniteLattice& lat, const std::string& x) {
  std::vector<std::string> out;
  for (int j : lat.upset(lat.index_of(x))) out.push_back(lat.element(j));
  return out;
}

std::vector<std::vector<std::string>> antichains(const FiniteLattice& lat, int k) {
  if (k < 0) fail(ErrorKind::SizeLimit, "antichain size must be nonnegative");
  std::vector<std::vector<std::string>> result;
  std::vector<int> chosen;
  const int n = lat.size();
  auto emit = [&] {
    std::vector<std::string> names;
    names.reserve(chosen.size());
    for (int i : chosen) names.push_back(lat.element(i));
    result.push_back(std::move(names));
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      emit();
      return;
    }
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j : chosen)
        if (lat.comparable(i, j)) {
          ok = false;
          break;
        }
      if (ok) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
  return result;
}

FiniteLattice induced(const FiniteLattice& lat, const std::vector<int>& keep,
                      const std::string& name) {
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (int i : keep) names.push_back(lat.element(i));
  std::vector<std::pair<int, int>> leq_pairs;
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = 0; b < keep.size(); ++b)
      if (a != b && lat.leq(keep[a], keep[b]))
        leq_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return FiniteLattice::from_leq(name, std::move(names), leq_pairs);
}

namespace {

// Signature-refinement coloring shared by both lattices; returns per-element
// color ids (equal colors are structurally indistinguishable so far).
std::pair<std::vector<int>, std::vector<int>> refine_colors(const FiniteLattice& a,
                                                            const FiniteLattice& b) {
  const int na = a.size();
  const int nb = b.size();
  std::vector<int> ca(na), cb(nb);
  {
    std::map<std::tuple<size_t, size_t, size_t, size_t>, int> key_to_color;
    auto initial = [&](const FiniteLattice& lat, std::vector<int>& colors) {
      for (int i = 0; i < lat.size(); ++i) {
        auto key = std::make_tuple(lat.lower_covers(i).size(), lat.upper_covers(i).size(),
                                   lat.downset(i).size(), lat.upset(i).size());
        auto [it, fresh] = key_to_color.emplace(key, static_cast<int>(key_to_color.size()));
        colors[i] = it->second;
      }
    };
    initial(a, ca);
    initial(b, cb);
  }
  for (int round = 0; round < na + nb + 1; ++round) {
    std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> key_to_color;
    auto next = [&](const FiniteLattice& lat, const std::vector<int>& colors) {
      std::vector<int> out(lat.size());
      for (int i = 0; i < lat.size(); ++i) {
        std::vector<int> lo, hi;
        for (int j : lat.lower_covers(i)) lo.push_back(colors[j]);
        for (int j : lat.upper_covers(i)) hi.push_back(colors[j]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        auto key = std::make_tuple(colors[i], std::move(lo), std::move(hi));
        auto [it, fresh] = key_to_color.emplace(std::move(key), static_cast<int>(key_to_color.size()));
        out[i] = it->second;
      }
      return out;
    };
    std::vector<int> ra = next(a, ca);
    std::vector<int> rb = next(b, cb);
    bool stable = true;
    {
      std::map<int, int> seen;
      for (int i = 0; i < na && stable; ++i) {
        auto [it, fresh] = seen.emplace(ca[i], ra[i]);
        if (!fresh && it->second != ra[i]) stable = false;
      }
      for (int i = 0; i < nb && stable; ++i) {
        auto [it, fresh] = seen.emplace(cb[i], rb[i]);
        if (!fresh && it->second != rb[i]) stable = false;
      }
    }
    ca = std::move(ra);
    cb = std::move(rb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<std::pair<std::string, std::string>>> is_isomorphic(
    const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  auto [ca, cb] = refine_colors(a, b);

  std::map<int, std::vector<int>> classes_b;
  for (int i = 0; i < n; ++i) classes_b[cb[i]].push_back(i);
  {
    std::map<int, int> count_a;
    for (int c : ca) ++count_a[c];
    std::map<int, int> count_b;
    for (int c : cb) ++count_b[c];
    if (count_a != count_b) return std::nullopt;
  }

  // Assign a-elements in order of ascending candidate-class size.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    size_t sx = classes_b[ca[x]].size();
    size_t sy = classes_b[ca[y]].size();
    return sx != sy ? sx < sy : x < y;
  });

  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int x = order[depth];
    for (int y : classes_b[ca[x]]) {
      if (used[y]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int px = order[d];
        const int py = map_ab[px];
        if (a.leq(x, px) != b.leq(y, py) || a.leq(px, x) != b.leq(py, y)) ok = false;
      }
      if (!ok) continue;
      map_ab[x] = y;
      used[y] = 1;
      if (self(self, depth + 1)) return true;
      used[y] = 0;
      map_ab[x] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(a.element(i), b.element(map_ab[i]));
  return out;
}

}  // namespace latkit
