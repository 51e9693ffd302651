#include "latkit/glue.hpp"

#include <algorithm>
#include <set>

namespace latkit {

namespace {

bool doubly_irreducible(const FiniteLattice& lat, int i) {
  return lat.lower_covers(i).size() == 1 && lat.upper_covers(i).size() == 1;
}

// Checks that iv matches the lattice, including its recorded witnesses.
void validate_interval(const FiniteLattice& lat, const IsolatedInterval& iv) {
  const IsolatedInterval fresh = isolated_interval(lat, iv.a, iv.b);
  if (fresh.a_star != iv.a_star || fresh.b_star != iv.b_star)
    fail(ErrorKind::NotIsolated, "interval witnesses do not match the lattice");
}

}  // namespace

std::vector<IsolatedInterval> find_isolated_intervals(const FiniteLattice& lat) {
  std::vector<IsolatedInterval> out;
  for (const auto& [lo, hi] : lat.cover_pairs()) {
    if (lo == lat.bottom() || hi == lat.top()) continue;
    if (!doubly_irreducible(lat, lo) || !doubly_irreducible(lat, hi)) continue;
    out.push_back({lat.element(lo), lat.element(hi), lat.element(lat.lower_covers(lo)[0]),
                   lat.element(lat.upper_covers(hi)[0])});
  }
  return out;
}

IsolatedInterval isolated_interval(const FiniteLattice& lat, const std::string& a,
                                   const std::string& b) {
  const int ia = lat.index_of(a);
  const int ib = lat.index_of(b);
  if (ia == lat.bottom() || ia == lat.top() || ib == lat.bottom() || ib == lat.top())
    fail(ErrorKind::NotIsolated, "interval (" + a + ", " + b + ") touches a bound");
  const auto above_a = lat.upper_covers(ia);
  if (std::find(above_a.begin(), above_a.end(), ib) == above_a.end())
    fail(ErrorKind::NotIsolated, "'" + b + "' does not cover '" + a + "'");
  if (!doubly_irreducible(lat, ia))
    fail(ErrorKind::NotIsolated, "'" + a + "' is not doubly irreducible");
  if (!doubly_irreducible(lat, ib))
    fail(ErrorKind::NotIsolated, "'" + b + "' is not doubly irreducible");
  return {a, b, lat.element(lat.lower_covers(ia)[0]), lat.element(lat.upper_covers(ib)[0])};
}

std::optional<FiniteLattice> delete_interval(const FiniteLattice& lat,
                                             const IsolatedInterval& iv) {
  if (lat.size() == 2) return std::nullopt;  // nothing remains
  validate_interval(lat, iv);
  const int ia = lat.index_of(iv.a);
  const int ib = lat.index_of(iv.b);
  std::vector<int> keep;
  for (int i = 0; i < lat.size(); ++i)
    if (i != ia && i != ib) keep.push_back(i);
  for (int x : keep)
    for (int y : keep) {
      const int m = lat.meet(x, y);
      const int j = lat.join(x, y);
      if (m == ia || m == ib || j == ia || j == ib)
        fail(ErrorKind::InvariantViolation,
             "removing the interval does not leave a meet/join-closed set");
    }
  return induced(lat, keep, lat.name() + "^(" + iv.a + "," + iv.b + ")");
}

Pqr partition_pqr(const FiniteLattice& lat, const IsolatedInterval& iv) {
  if (lat.size() == 2)
    fail(ErrorKind::TooSmall, "nothing remains after deleting the interval; no partition exists");
  validate_interval(lat, iv);
  const int ia = lat.index_of(iv.a);
  const int ib = lat.index_of(iv.b);
  const int ia_star = lat.index_of(iv.a_star);
  const int ib_star = lat.index_of(iv.b_star);
  Pqr pqr;
  for (int i = 0; i < lat.size(); ++i) {
    if (i == ia || i == ib) continue;
    if (lat.leq(i, ia_star))
      pqr.p.push_back(lat.element(i));
    else if (lat.leq(ib_star, i))
      pqr.q.push_back(lat.element(i));
    else
      pqr.r.push_back(lat.element(i));
  }
  return pqr;
}

GlueContext glue(const FiniteLattice& origin, const IsolatedInterval& iv,
                 const FiniteLattice& filler) {
  validate_interval(origin, iv);
  GlueContext ctx;
  ctx.origin = origin;
  ctx.interval = iv;
  ctx.filler = filler;
  ctx.deleted = *delete_interval(origin, iv);
  ctx.pqr = partition_pqr(origin, iv);

  // Rename filler elements that collide with remainder names.
  std::set<std::string> used(ctx.deleted.elements().begin(), ctx.deleted.elements().end());
  std::vector<std::string> filler_names;
  for (const auto& f : filler.elements()) {
    std::string name = f;
    while (used.count(name)) name = "F." + name;
    used.insert(name);
    filler_names.push_back(name);
    ctx.filler_map.emplace_back(f, name);
  }
  for (const auto& e : ctx.deleted.elements()) ctx.origin_map.emplace_back(e, e);

  const int nd = ctx.deleted.size();
  const int nf = filler.size();
  std::vector<std::string> elements(ctx.deleted.elements());
  for (const auto& name : filler_names) elements.push_back(name);

  const int ia = origin.index_of(iv.a);
  const int ib = origin.index_of(iv.b);
  std::vector<std::pair<int, int>> leq_pairs;
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j)
      if (i != j && ctx.deleted.leq(i, j)) leq_pairs.emplace_back(i, j);
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j)
      if (i != j && filler.leq(i, j)) leq_pairs.emplace_back(nd + i, nd + j);
  for (int i = 0; i < nd; ++i) {
    const int oi = origin.index_of(ctx.deleted.element(i));
    if (origin.leq(oi, ia))
      for (int j = 0; j < nf; ++j) leq_pairs.emplace_back(i, nd + j);
    if (origin.leq(ib, oi))
      for (int j = 0; j < nf; ++j) leq_pairs.emplace_back(nd + j, i);
  }
  ctx.k = FiniteLattice::from_leq(
      "glue(" + origin.name() + ";" + iv.a + "," + iv.b + ";" + filler.name() + ")",
      std::move(elements), leq_pairs);

  // Elementwise sanity of the glued order.
  const FiniteLattice& k = ctx.k;
  auto k_index = [&](const std::string& name) { return k.index_of(name); };
  for (const auto& p : ctx.pqr.p)
    for (const auto& name : filler_names)
      if (!k.lt(k_index(p), k_index(name)))
        fail(ErrorKind::InvariantViolation, "glued order lost " + p + " < filler");
  for (const auto& q : ctx.pqr.q)
    for (const auto& name : filler_names)
      if (!k.lt(k_index(name), k_index(q)))
        fail(ErrorKind::InvariantViolation, "glued order lost filler < " + q);
  for (const auto& r : ctx.pqr.r)
    for (const auto& name : filler_names)
      if (k.comparable(k_index(r), k_index(name)))
        fail(ErrorKind::InvariantViolation,
             "glued order relates " + r + " to the filler; it must not");
  return ctx;
}

GlueSdReport check_glue_sd(const GlueContext& ctx) {
  GlueSdReport report;
  report.k = check_sd_direct(ctx.k);
  report.origin_sd = is_semidistributive(ctx.origin);
  report.filler_sd = is_semidistributive(ctx.filler);

  std::vector<char> in_filler(ctx.k.size(), 0);
  for (const auto& [from, to] : ctx.filler_map) in_filler[ctx.k.index_of(to)] = 1;
  const FiniteLattice& k = ctx.k;
  const int n = k.size();
  auto record = [&](int x, int y, int z) {
    ++report.violating_triples;
    const int fillers = in_filler[x] + in_filler[y] + in_filler[z];
    if (report.min_filler_elements_in_witness < 0 ||
        fillers < report.min_filler_elements_in_witness)
      report.min_filler_elements_in_witness = fillers;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        if (k.meet(x, y) == k.meet(x, z) && k.meet(x, k.join(y, z)) != k.meet(x, y))
          record(x, y, z);
        if (k.join(x, y) == k.join(x, z) && k.join(x, k.meet(y, z)) != k.join(x, y))
          record(x, y, z);
      }
  return report;
}

TransferResult transfer_congruence(const GlueContext& ctx, const Congruence& alpha) {
  const FiniteLattice& origin = ctx.origin;
  if (alpha.size() != origin.size())
    fail(ErrorKind::NotACongruence, "partition size does not match the origin lattice");
  if (!is_congruence(origin, alpha))
    fail(ErrorKind::NotACongruence, "partition fails substitution on the origin lattice");
  const int ia = origin.index_of(ctx.interval.a);
  const int ib = origin.index_of(ctx.interval.b);
  const bool collapsed = alpha.same(ia, ib);

  const FiniteLattice& k = ctx.k;
  std::vector<int> ids(k.size(), 0);
  for (const auto& [from, to] : ctx.origin_map)
    ids[k.index_of(to)] = alpha.block_id(origin.index_of(from));
  int fresh = origin.size();
  for (const auto& [from, to] : ctx.filler_map)
    ids[k.index_of(to)] = collapsed ? alpha.block_id(ia) : fresh++;

  TransferResult result{Congruence{std::move(ids)}, false};
  result.valid = is_congruence(k, result.image);
  return result;
}

bool has_separating_leak(const FiniteLattice& origin, const IsolatedInterval& iv) {
  const int ia = origin.index_of(iv.a);
  const int ib = origin.index_of(iv.b);
  for (const auto& alpha : all_congruences(origin).congruences) {
    if (alpha.same(ia, ib)) continue;
    int size_a = 0;
    int size_b = 0;
    for (int i = 0; i < origin.size(); ++i) {
      if (alpha.same(i, ia)) ++size_a;
      if (alpha.same(i, ib)) ++size_b;
    }
    if (size_a > 1 || size_b > 1) return true;
  }
  return false;
}

GlueIsoReport verify_con_isomorphism(const GlueContext& ctx) {
  GlueIsoReport report;
  report.filler_simple = is_simple(all_congruences(ctx.filler));
  if (!report.filler_simple)
    report.notes.push_back("filler is not simple; the transfer map is not expected to work");
  report.leak_expected = has_separating_leak(ctx.origin, ctx.interval);

  const ConLattice con_l = all_congruences(ctx.origin);
  const ConLattice con_k = all_congruences(ctx.k);
  report.con_origin_size = con_l.size();
  report.con_k_size = con_k.size();

  std::vector<TransferResult> transfers;
  transfers.reserve(con_l.size());
  report.transfers_valid = true;
  for (const auto& alpha : con_l.congruences) {
    transfers.push_back(transfer_congruence(ctx, alpha));
    if (!transfers.back().valid && report.transfers_valid) {
      report.transfers_valid = false;
      report.notes.push_back("transfer of " + format_congruence(ctx.origin, alpha) +
                             " fails substitution on the glued lattice");
    }
  }

  std::set<Congruence> image;
  for (const auto& t : transfers) image.insert(t.image);
  report.image_size = static_cast<int>(image.size());
  report.injective = report.image_size == con_l.size();
  if (!report.injective) {
    for (size_t i = 0; i < transfers.size() && report.notes.size() < 8; ++i)
      for (size_t j = i + 1; j < transfers.size(); ++j)
        if (transfers[i].image == transfers[j].image) {
          report.notes.push_back("transfers of " +
                                 format_congruence(ctx.origin, con_l.congruences[i]) + " and " +
                                 format_congruence(ctx.origin, con_l.congruences[j]) +
                                 " coincide");
          j = transfers.size();
          i = transfers.size();
        }
  }

  report.surjective = true;
  for (const auto& kappa : con_k.congruences)
    if (!image.count(kappa)) {
      if (report.surjective)
        report.notes.push_back("no origin congruence maps to " +
                               format_congruence(ctx.k, kappa));
      report.surjective = false;
    }

  report.order_preserving = true;
  report.order_reflecting = true;
  for (size_t i = 0; i < transfers.size(); ++i)
    for (size_t j = 0; j < transfers.size(); ++j) {
      const bool before = refines(con_l.congruences[i], con_l.congruences[j]);
      const bool after = refines(transfers[i].image, transfers[j].image);
      if (before && !after) report.order_preserving = false;
      if (after && !before) report.order_reflecting = false;
    }

  report.isomorphism = report.transfers_valid && report.injective && report.surjective &&
                       report.order_preserving && report.order_reflecting;
  return report;
}

}  // namespace latkit
