#include "latkit/doubling.hpp"

#include <algorithm>
#include <set>

#include "latkit/catalog.hpp"

namespace latkit {

namespace {

int find_doubled(const DoubledLattice& dbl, const std::string& u) {
  for (size_t i = 0; i < dbl.doubled.size(); ++i)
    if (dbl.doubled[i].first == u) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool DoubledLattice::is_doubled(const std::string& u) const { return find_doubled(*this, u) >= 0; }

const std::string& DoubledLattice::lower_copy(const std::string& u) const {
  int i = find_doubled(*this, u);
  if (i < 0) fail(ErrorKind::NotDoubled, "element '" + u + "' was not doubled");
  return doubled[i].second.first;
}

const std::string& DoubledLattice::upper_copy(const std::string& u) const {
  int i = find_doubled(*this, u);
  if (i < 0) fail(ErrorKind::NotDoubled, "element '" + u + "' was not doubled");
  return doubled[i].second.second;
}

const std::string& DoubledLattice::image(const std::string& x) const {
  if (find_doubled(*this, x) >= 0)
    fail(ErrorKind::NotDoubled, "element '" + x + "' was doubled; use its copies");
  const int i = origin.index_of(x);
  return origin.elements()[i];  // identical name in the result
}

DoubledLattice double_element(const FiniteLattice& lat, const std::string& u) {
  return double_antichain(lat, {u});
}

DoubledLattice double_antichain(const FiniteLattice& lat, const std::vector<std::string>& u_set) {
  const int n = lat.size();
  std::vector<char> doubled_flag(n, 0);
  for (const auto& u : u_set) {
    const int i = lat.index_of(u);
    if (doubled_flag[i]) fail(ErrorKind::DuplicateElement, "element '" + u + "' listed twice");
    doubled_flag[i] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (doubled_flag[i] && doubled_flag[j] && lat.comparable(i, j))
        fail(ErrorKind::NotAnAntichain, "elements '" + lat.element(i) + "' and '" +
                                            lat.element(j) + "' are comparable");

  // Result carrier: origin order with each doubled u replaced by u.0, u.1.
  std::vector<std::string> names;
  std::vector<int> plain_index(n, -1), lo_index(n, -1), hi_index(n, -1);
  for (int i = 0; i < n; ++i) {
    if (doubled_flag[i]) {
      const std::string lo = lat.element(i) + ".0";
      const std::string hi = lat.element(i) + ".1";
      if (lat.find(lo) || lat.find(hi))
        fail(ErrorKind::NameCollision,
             "copies of '" + lat.element(i) + "' collide with an existing element");
      lo_index[i] = static_cast<int>(names.size());
      names.push_back(lo);
      hi_index[i] = static_cast<int>(names.size());
      names.push_back(hi);
    } else {
      plain_index[i] = static_cast<int>(names.size());
      names.push_back(lat.element(i));
    }
  }

  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < n; ++i) {
    if (doubled_flag[i]) leq_pairs.emplace_back(lo_index[i], hi_index[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      if (!doubled_flag[i] && !doubled_flag[j]) {
        leq_pairs.emplace_back(plain_index[i], plain_index[j]);
      } else if (doubled_flag[i] && !doubled_flag[j]) {
        leq_pairs.emplace_back(lo_index[i], plain_index[j]);
        leq_pairs.emplace_back(hi_index[i], plain_index[j]);
      } else if (!doubled_flag[i] && doubled_flag[j]) {
        leq_pairs.emplace_back(plain_index[i], lo_index[j]);
        leq_pairs.emplace_back(plain_index[i], hi_index[j]);
      }
      // Two distinct doubled elements are incomparable (antichain).
    }
  }

  DoubledLattice dbl;
  dbl.origin = lat;
  std::string result_name = lat.name() + "[";
  for (size_t k = 0; k < u_set.size(); ++k) {
    if (k) result_name += ",";
    result_name += u_set[k];
  }
  result_name += "]";
  dbl.result = FiniteLattice::from_leq(result_name, std::move(names), leq_pairs);
  for (int i = 0; i < n; ++i)
    if (doubled_flag[i]) {
      dbl.doubled_elements.push_back(lat.element(i));
      dbl.doubled.emplace_back(lat.element(i),
                               std::make_pair(dbl.result.element(lo_index[i]),
                                              dbl.result.element(hi_index[i])));
    }

  // Post-hoc verification of the construction.
  const FiniteLattice& res = dbl.result;
  if (res.size() != n + static_cast<int>(dbl.doubled.size()))
    fail(ErrorKind::InvariantViolation, "doubled lattice has the wrong size");
  for (int i = 0; i < n; ++i) {
    if (!doubled_flag[i]) continue;
    const int lo = lo_index[i];
    const int hi = hi_index[i];
    if (res.upper_covers(lo) != std::vector<int>{hi})
      fail(ErrorKind::InvariantViolation,
           "lower copy of '" + lat.element(i) + "' is not meet-irreducible with unique cover");
    if (res.lower_covers(hi) != std::vector<int>{lo})
      fail(ErrorKind::InvariantViolation,
           "upper copy of '" + lat.element(i) + "' is not join-irreducible");
  }

  // Every meet/join of the result must match the value predicted from the
  // origin tables (the copy level only matters when the value lands on a
  // doubled element).
  std::vector<int> origin_of(res.size());
  std::vector<int> level_of(res.size(), -1);  // 0/1 for copies, -1 for plain
  for (int i = 0; i < n; ++i) {
    if (doubled_flag[i]) {
      origin_of[lo_index[i]] = i;
      level_of[lo_index[i]] = 0;
      origin_of[hi_index[i]] = i;
      level_of[hi_index[i]] = 1;
    } else {
      origin_of[plain_index[i]] = i;
    }
  }
  auto expected = [&](int p, int q, bool meet_side) {
    const int op = origin_of[p];
    const int oq = origin_of[q];
    const int m = meet_side ? lat.meet(op, oq) : lat.join(op, oq);
    if (!doubled_flag[m]) return plain_index[m];
    if (op == oq) {  // two copies of the same element
      const int lvl = meet_side ? std::min(level_of[p], level_of[q])
                                : std::max(level_of[p], level_of[q]);
      return lvl == 0 ? lo_index[m] : hi_index[m];
    }
    if (m == op) return p;
    if (m == oq) return q;
    return meet_side ? hi_index[m] : lo_index[m];
  };
  for (int p = 0; p < res.size(); ++p)
    for (int q = p; q < res.size(); ++q) {
      if (res.meet(p, q) != expected(p, q, true) || res.join(p, q) != expected(p, q, false))
        fail(ErrorKind::InvariantViolation,
             "doubling changed a meet or join it must preserve: (" + res.element(p) + ", " +
                 res.element(q) + ")");
    }
  return dbl;
}

Congruence mu(const DoubledLattice& dbl, const std::string& u) {
  const int k = find_doubled(dbl, u);
  if (k < 0) fail(ErrorKind::NotDoubled, "element '" + u + "' was not doubled");
  const FiniteLattice& res = dbl.result;
  const int lo = res.index_of(dbl.doubled[k].second.first);
  const int hi = res.index_of(dbl.doubled[k].second.second);
  std::vector<int> ids(res.size());
  for (int i = 0; i < res.size(); ++i) ids[i] = i;
  ids[hi] = ids[lo];
  Congruence c{std::move(ids)};
  if (c != principal_congruence(res, lo, hi))
    fail(ErrorKind::InvariantViolation,
         "collapsing the copies of '" + u + "' is not the principal congruence of the pair");
  return c;
}

Congruence mu_v(const DoubledLattice& dbl, const std::vector<std::string>& v_set) {
  const FiniteLattice& res = dbl.result;
  std::vector<int> ids(res.size());
  for (int i = 0; i < res.size(); ++i) ids[i] = i;
  std::set<std::string> seen;
  for (const auto& v : v_set) {
    if (!seen.insert(v).second) continue;
    const int k = find_doubled(dbl, v);
    if (k < 0) fail(ErrorKind::NotDoubled, "element '" + v + "' was not doubled");
    const int lo = res.index_of(dbl.doubled[k].second.first);
    const int hi = res.index_of(dbl.doubled[k].second.second);
    ids[hi] = ids[lo];
  }
  Congruence c{std::move(ids)};
  if (!is_congruence(res, c))
    fail(ErrorKind::InvariantViolation, "union of copy-collapsing blocks fails substitution");
  return c;
}

BooleanEmbeddingReport check_boolean_embedding(const DoubledLattice& dbl) {
  return check_boolean_embedding(dbl, dbl.doubled_elements);
}

BooleanEmbeddingReport check_boolean_embedding(const DoubledLattice& dbl,
                                               const std::vector<std::string>& u_set) {
  const int k = static_cast<int>(u_set.size());
  if (k > 10) fail(ErrorKind::SizeLimit, "embedding check limited to 10 doubled elements");
  for (const auto& u : u_set)
    if (find_doubled(dbl, u) < 0) fail(ErrorKind::NotDoubled, "element '" + u + "' was not doubled");

  BooleanEmbeddingReport report;
  report.antichain = u_set;
  const int subsets = 1 << k;
  report.subset_count = subsets;

  std::vector<Congruence> image;
  image.reserve(subsets);
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<std::string> v;
    for (int b = 0; b < k; ++b)
      if (mask & (1 << b)) v.push_back(u_set[b]);
    image.push_back(mu_v(dbl, v));
  }

  std::set<std::vector<int>> keys;
  for (const auto& c : image) keys.insert(c.ids());
  report.injective = static_cast<int>(keys.size()) == subsets;

  report.order_embedding = true;
  for (int a = 0; a < subsets && report.order_embedding; ++a)
    for (int b = 0; b < subsets; ++b) {
      const bool subset = (a & ~b) == 0;
      if (refines(image[a], image[b]) != subset) {
        report.order_embedding = false;
        break;
      }
    }

  report.sublattice = true;
  for (int a = 0; a < subsets && report.sublattice; ++a)
    for (int b = 0; b < subsets; ++b) {
      if (congruence_join(dbl.result, image[a], image[b]) != image[a | b] ||
          partition_meet(image[a], image[b]) != image[a & b]) {
        report.sublattice = false;
        break;
      }
    }

  report.boolean_isomorphic = false;
  if (report.injective) {
    std::vector<std::string> names;
    for (int mask = 0; mask < subsets; ++mask) names.push_back("m" + std::to_string(mask));
    std::vector<std::pair<int, int>> leq_pairs;
    for (int a = 0; a < subsets; ++a)
      for (int b = 0; b < subsets; ++b)
        if (a != b && refines(image[a], image[b])) leq_pairs.emplace_back(a, b);
    FiniteLattice image_lattice =
        FiniteLattice::from_leq("image", std::move(names), leq_pairs);
    report.boolean_isomorphic = is_isomorphic(image_lattice, boolean_lattice(k)).has_value();
  }
  report.embedding_ok = report.injective && report.order_embedding && report.sublattice &&
                        report.boolean_isomorphic;

  ConLattice con = all_congruences(dbl.result);
  report.con_size = con.size();
  report.image_size = static_cast<int>(keys.size());
  report.con_equals_image_plus_top = true;
  const Congruence top = Congruence::total(dbl.result.size());
  for (const auto& c : con.congruences) {
    if (c == top || keys.count(c.ids())) continue;
    report.con_equals_image_plus_top = false;
    report.extra_congruences.push_back(format_congruence(dbl.result, c));
  }
  return report;
}

}  // namespace latkit
