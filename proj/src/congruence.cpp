#include "latkit/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "latkit/sd.hpp"

namespace latkit {

namespace {

std::vector<int> canonicalize(std::vector<int> ids) {
  int max_id = -1;
  for (int id : ids) {
    if (id < 0) fail(ErrorKind::NotACongruence, "negative block id");
    max_id = std::max(max_id, id);
  }
  std::vector<int> remap(static_cast<size_t>(max_id) + 1, -1);
  int next = 0;
  for (int& id : ids) {
    if (remap[id] < 0) remap[id] = next++;
    id = remap[id];
  }
  return ids;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Congruence::Congruence(std::vector<int> block_of) : ids_(canonicalize(std::move(block_of))) {
  for (int id : ids_) blocks_ = std::max(blocks_, id + 1);
}

Congruence Congruence::identity(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return Congruence(std::move(ids));
}

Congruence Congruence::total(int n) { return Congruence(std::vector<int>(n, 0)); }

Congruence Congruence::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> ids(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) fail(ErrorKind::UnknownElement, "block member index out of range");
      if (ids[x] >= 0) fail(ErrorKind::NotACongruence, "blocks overlap");
      ids[x] = static_cast<int>(b);
    }
  for (int i = 0; i < n; ++i)
    if (ids[i] < 0) fail(ErrorKind::NotACongruence, "blocks do not cover every element");
  return Congruence(std::move(ids));
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (int i = 0; i < size(); ++i) out[ids_[i]].push_back(i);
  return out;  // canonical ids are first-occurrence ordered, so blocks are
               // already sorted by least element and members ascend.
}

bool refines(const Congruence& a, const Congruence& b) {
  std::vector<int> image(a.block_count(), -1);
  for (int i = 0; i < a.size(); ++i) {
    int& target = image[a.block_id(i)];
    if (target < 0)
      target = b.block_id(i);
    else if (target != b.block_id(i))
      return false;
  }
  return true;
}

Congruence partition_meet(const Congruence& a, const Congruence& b) {
  const int n = a.size();
  std::vector<int> ids(n);
  std::vector<std::vector<int>> seen(a.block_count());
  std::vector<std::vector<int>> seen_id(a.block_count());
  int next = 0;
  for (int i = 0; i < n; ++i) {
    auto& keys = seen[a.block_id(i)];
    auto& vals = seen_id[a.block_id(i)];
    int found = -1;
    for (size_t k = 0; k < keys.size(); ++k)
      if (keys[k] == b.block_id(i)) {
        found = vals[k];
        break;
      }
    if (found < 0) {
      found = next++;
      keys.push_back(b.block_id(i));
      vals.push_back(found);
    }
    ids[i] = found;
  }
  return Congruence(std::move(ids));
}

bool is_congruence(const FiniteLattice& lat, const Congruence& c) {
  const int n = lat.size();
  if (c.size() != n) return false;
  for (const auto& block : c.blocks()) {
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j) {
        const int x = block[i];
        const int y = block[j];
        for (int z = 0; z < n; ++z) {
          if (!c.same(lat.meet(x, z), lat.meet(y, z))) return false;
          if (!c.same(lat.join(x, z), lat.join(y, z))) return false;
        }
      }
  }
  return true;
}

Congruence congruence_closure(const FiniteLattice& lat,
                              const std::vector<std::pair<int, int>>& seeds) {
  const int n = lat.size();
  Dsu dsu(n);
  std::deque<std::pair<int, int>> work;
  auto unite = [&](int a, int b) {
    if (dsu.unite(a, b)) work.emplace_back(a, b);
  };
  for (const auto& [x, y] : seeds) unite(x, y);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (int z = 0; z < n; ++z) {
      unite(lat.meet(x, z), lat.meet(y, z));
      unite(lat.join(x, z), lat.join(y, z));
    }
  }
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = dsu.find(i);
  return Congruence(std::move(ids));
}

Congruence principal_congruence(const FiniteLattice& lat, int x, int y) {
  if (x < 0 || x >= lat.size() || y < 0 || y >= lat.size())
    fail(ErrorKind::UnknownElement, "element index out of range");
  return congruence_closure(lat, {{x, y}});
}

Congruence principal_congruence(const FiniteLattice& lat, const std::string& x,
                                const std::string& y) {
  return principal_congruence(lat, lat.index_of(x), lat.index_of(y));
}

Congruence congruence_join(const FiniteLattice& lat, const Congruence& a, const Congruence& b) {
  std::vector<std::pair<int, int>> seeds;
  auto add = [&](const Congruence& c) {
    for (const auto& block : c.blocks())
      for (size_t i = 1; i < block.size(); ++i) seeds.emplace_back(block[0], block[i]);
  };
  add(a);
  add(b);
  return congruence_closure(lat, seeds);
}

std::string format_congruence(const FiniteLattice& lat, const Congruence& c) {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : c.blocks()) {
    if (!first_block) out += "|";
    first_block = false;
    bool first = true;
    for (int x : block) {
      if (!first) out += ",";
      first = false;
      out += lat.element(x);
    }
  }
  return out + "}";
}

std::optional<int> ConLattice::find(const Congruence& c) const {
  for (size_t i = 0; i < congruences.size(); ++i)
    if (congruences[i] == c) return static_cast<int>(i);
  return std::nullopt;
}

ConLattice all_congruences(const FiniteLattice& lat, int max_congruences) {
  const int n = lat.size();
  std::vector<Congruence> list;
  std::set<std::vector<int>> seen;
  auto insert = [&](Congruence c) {
    if (seen.insert(c.ids()).second) {
      list.push_back(std::move(c));
      if (static_cast<int>(list.size()) > max_congruences)
        fail(ErrorKind::SizeLimit, "congruence lattice of '" + lat.name() + "' exceeds " +
                                       std::to_string(max_congruences) + " congruences");
    }
  };
  insert(Congruence::identity(n));
  for (const auto& [x, y] : lat.cover_pairs()) insert(principal_congruence(lat, x, y));
  for (size_t i = 1; i < list.size(); ++i)
    for (size_t j = 0; j < i; ++j) insert(congruence_join(lat, list[i], list[j]));
  std::sort(list.begin(), list.end());

  ConLattice con;
  con.congruences = std::move(list);
  const int m = static_cast<int>(con.congruences.size());

  std::vector<std::string> names;
  names.reserve(m);
  {
    std::set<std::string> used;
    bool unique = true;
    for (const auto& c : con.congruences) {
      std::string label = format_congruence(lat, c);
      if (!used.insert(label).second) unique = false;
      names.push_back(std::move(label));
    }
    if (!unique) {
      names.clear();
      for (int i = 0; i < m; ++i) names.push_back("c" + std::to_string(i));
    }
  }
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && refines(con.congruences[i], con.congruences[j])) leq_pairs.emplace_back(i, j);
  con.carrier = FiniteLattice::from_leq("Con(" + lat.name() + ")", std::move(names), leq_pairs);

  con.delta_index = *con.find(Congruence::identity(n));
  con.nabla_index = *con.find(Congruence::total(n));
  if (!is_distributive(con.carrier))
    fail(ErrorKind::InvariantViolation,
         "congruence lattice of '" + lat.name() + "' is not distributive");
  for (const auto& c : con.congruences)
    if (!is_congruence(lat, c))
      fail(ErrorKind::InvariantViolation,
           "generated partition fails the substitution property on '" + lat.name() + "'");
  return con;
}

FiniteLattice quotient(const FiniteLattice& lat, const Congruence& c) {
  if (c.size() != lat.size() || !is_congruence(lat, c))
    fail(ErrorKind::NotACongruence,
         "partition is not a congruence of '" + lat.name() + "'");
  const auto blocks = c.blocks();
  const int m = static_cast<int>(blocks.size());
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& block : blocks) {
    std::string label;
    for (int x : block) {
      if (!label.empty()) label += ",";
      label += lat.element(x);
    }
    names.push_back(std::move(label));
  }
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      bool below = false;
      for (int x : blocks[i]) {
        for (int y : blocks[j])
          if (lat.leq(x, y)) {
            below = true;
            break;
          }
        if (below) break;
      }
      if (below) leq_pairs.emplace_back(i, j);
    }
  return FiniteLattice::from_leq(lat.name() + "/" + format_congruence(lat, c), std::move(names),
                                 leq_pairs);
}

bool is_simple(const FiniteLattice& lat) { return all_congruences(lat).size() == 2; }

bool is_simple(const ConLattice& con) { return con.size() == 2; }

std::vector<Congruence> atoms(const ConLattice& con) {
  std::vector<Congruence> out;
  const int bottom = con.carrier.bottom();
  for (int i : con.carrier.upper_covers(bottom)) out.push_back(con.congruences[i]);
  return out;
}

}  // namespace latkit
