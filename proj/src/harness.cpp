#include "latkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/glue.hpp"
#include "latkit/parallel.hpp"
#include "latkit/sd.hpp"

namespace latkit {

namespace {

constexpr const char* kSeparatingLeakRule = "glue/separating-leak";

// Isomorphism-class counts for n-element lattices, n = 1..8.
constexpr long kLatticeCounts[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};

struct InstanceResult {
  bool failed = false;
  FailureRecord failure;
  std::vector<DivergenceRecord> divergences;
};

struct Instance {
  std::string description;
  std::function<void(InstanceResult&)> body;
};

void record_failure(InstanceResult& r, const std::string& instance, const std::string& property,
                    const std::string& witness) {
  if (r.failed) return;
  r.failed = true;
  r.failure = {instance, property, witness};
}

void check_options(const HarnessOptions& opts) {
  if (opts.max_size < 1) fail(ErrorKind::TooSmall, "verification corpus needs a positive size");
  if (opts.max_size > 8) fail(ErrorKind::SizeLimit, "verification corpus limited to 8 elements");
}

VerificationReport run_instances(const std::string& suite, std::vector<Instance> instances) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<InstanceResult> results(instances.size());
  parallel_for(static_cast<int>(instances.size()), [&](int i) {
    try {
      instances[i].body(results[i]);
    } catch (const std::exception& e) {
      record_failure(results[i], instances[i].description, "unexpected error", e.what());
    }
  });
  VerificationReport report;
  report.suite = suite;
  report.instances = static_cast<int>(instances.size());
  for (const auto& r : results) {
    if (r.failed)
      report.failures.push_back(r.failure);
    else
      ++report.passes;
    for (const auto& d : r.divergences) report.expected_divergences.push_back(d);
  }
  report.runtime_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count());
  return report;
}

std::string triple_text(const std::optional<SdWitness>& w) {
  if (!w) return "(none)";
  return w->side + " (" + w->triple[0] + ", " + w->triple[1] + ", " + w->triple[2] + ")";
}

// Same abstract lattice stored under a seeded random element order.
FiniteLattice relabel(const FiniteLattice& lat, uint64_t seed) {
  const int n = lat.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names;
  names.reserve(n);
  for (int k = 0; k < n; ++k) names.push_back(lat.element(perm[k]));
  std::vector<std::pair<int, int>> leq_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && lat.leq(perm[a], perm[b])) leq_pairs.emplace_back(a, b);
  return FiniteLattice::from_leq(lat.name() + ".relabeled", std::move(names), leq_pairs);
}

std::vector<FiniteLattice> corpus_capped(int max_size) {
  std::vector<FiniteLattice> out;
  for (auto& lat : lattice_corpus(max_size))
    if (lat.size() <= max_size) out.push_back(std::move(lat));
  return out;
}

}  // namespace

DivergenceManifest DivergenceManifest::builtin() {
  DivergenceManifest m;
  m.rules.push_back(
      {kSeparatingLeakRule,
       "some congruence of the origin separates the interval endpoints while an endpoint's "
       "block has further elements; those elements lose their partner in the glued lattice, "
       "so the congruence transfer cannot be an isomorphism"});
  return m;
}

DivergenceManifest DivergenceManifest::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read manifest file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid manifest JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1 || !doc.contains("rules") || !doc["rules"].is_array())
    fail(ErrorKind::ParseError, "manifest must be {\"version\": 1, \"rules\": [...]}");
  DivergenceManifest m;
  for (const auto& rule : doc["rules"]) {
    if (!rule.is_object() || !rule.contains("id") || !rule["id"].is_string() ||
        !rule.contains("description") || !rule["description"].is_string())
      fail(ErrorKind::ParseError, "each manifest rule needs string 'id' and 'description'");
    m.rules.push_back({rule["id"].get<std::string>(), rule["description"].get<std::string>()});
  }
  return m;
}

bool DivergenceManifest::allows(const std::string& rule_id) const {
  for (const auto& rule : rules)
    if (rule.id == rule_id) return true;
  return false;
}

VerificationReport run_sd_equivalence(const HarnessOptions& opts) {
  check_options(opts);
  std::vector<Instance> instances;
  auto corpus = lattice_corpus(opts.max_size);
  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const FiniteLattice lat = corpus[idx];
    const std::string desc = "sd-equivalence/" + lat.name();
    const uint64_t seed = opts.seed + idx;
    instances.push_back({desc, [lat, desc, seed](InstanceResult& r) {
      const SdReport direct = check_sd_direct(lat);
      const IdealCriterionReport ideals = check_meet_sd_ideals(lat);
      if (ideals.holds != direct.meet_sd) {
        record_failure(r, desc, "ideal criterion agrees with the direct meet scan",
                       "direct=" + std::string(direct.meet_sd ? "true" : "false") +
                           " criterion=" + (ideals.holds ? "true" : "false"));
        return;
      }
      const IdealCriterionReport filters = check_join_sd_filters(lat);
      if (filters.holds != direct.join_sd) {
        record_failure(r, desc, "filter criterion agrees with the direct join scan",
                       "direct=" + std::string(direct.join_sd ? "true" : "false") +
                           " criterion=" + (filters.holds ? "true" : "false"));
        return;
      }
      const SdReport dual = check_sd_direct(lat.dual());
      if (dual.meet_sd != direct.join_sd || dual.join_sd != direct.meet_sd) {
        record_failure(r, desc, "duality swaps the two halves",
                       "dual witness " + triple_text(dual.witness));
        return;
      }
      if (is_distributive(lat) && !direct.semidistributive()) {
        record_failure(r, desc, "distributive implies semidistributive",
                       triple_text(direct.witness));
        return;
      }
      const FiniteLattice shuffled = relabel(lat, seed);
      if (!is_isomorphic(lat, shuffled)) {
        record_failure(r, desc, "relabeling is an isomorphism", shuffled.name());
        return;
      }
      const SdReport shuffled_report = check_sd_direct(shuffled);
      if (shuffled_report.meet_sd != direct.meet_sd ||
          shuffled_report.join_sd != direct.join_sd)
        record_failure(r, desc, "relabeling preserves the verdicts",
                       triple_text(shuffled_report.witness));
    }});
  }
  return run_instances("sd-equivalence", std::move(instances));
}

namespace {

void check_single_doubling(InstanceResult& r, const std::string& desc, const FiniteLattice& lat,
                           const std::string& u) {
  const DoubledLattice dbl = double_element(lat, u);
  const ElementClassification lo = classify(dbl.result, dbl.lower_copy(u));
  const ElementClassification hi = classify(dbl.result, dbl.upper_copy(u));
  if (!lo.meet_irreducible || lo.upper_covers != std::vector<std::string>{dbl.upper_copy(u)}) {
    record_failure(r, desc, "lower copy is meet-irreducible with the upper copy as sole cover",
                   dbl.lower_copy(u));
    return;
  }
  if (!hi.join_irreducible || hi.lower_covers != std::vector<std::string>{dbl.lower_copy(u)}) {
    record_failure(r, desc, "upper copy is join-irreducible over the lower copy",
                   dbl.upper_copy(u));
    return;
  }
  const Congruence collapse = mu(dbl, u);
  const ConLattice con = all_congruences(dbl.result);
  const auto atom_list = atoms(con);
  if (std::find(atom_list.begin(), atom_list.end(), collapse) == atom_list.end()) {
    record_failure(r, desc, "collapsing the copies is an atom of the congruence lattice",
                   format_congruence(dbl.result, collapse));
    return;
  }
  if (!is_isomorphic(quotient(dbl.result, collapse), lat)) {
    record_failure(r, desc, "quotient by the copy collapse restores the origin", lat.name());
    return;
  }
  if (is_semidistributive(lat) && !is_semidistributive(dbl.result)) {
    record_failure(r, desc, "doubling preserves semidistributivity",
                   triple_text(check_sd_direct(dbl.result).witness));
    return;
  }
  const BooleanEmbeddingReport embed = check_boolean_embedding(dbl);
  if (!embed.embedding_ok)
    record_failure(r, desc, "subset-collapse map embeds the 2-element boolean lattice",
                   std::string(embed.injective ? "" : "not injective; ") +
                       (embed.order_embedding ? "" : "not an order embedding; ") +
                       (embed.sublattice ? "" : "not a sublattice; ") +
                       (embed.boolean_isomorphic ? "" : "image not boolean"));
}

void check_pair_doubling(InstanceResult& r, const std::string& desc, const FiniteLattice& lat,
                         const std::string& u, const std::string& v) {
  const DoubledLattice dbl = double_antichain(lat, {u, v});
  const BooleanEmbeddingReport embed = check_boolean_embedding(dbl);
  if (!embed.embedding_ok) {
    record_failure(r, desc, "subset-collapse map embeds the 4-element boolean lattice",
                   std::string(embed.injective ? "" : "not injective; ") +
                       (embed.order_embedding ? "" : "not an order embedding; ") +
                       (embed.sublattice ? "" : "not a sublattice; ") +
                       (embed.boolean_isomorphic ? "" : "image not boolean"));
    return;
  }
  const DoubledLattice step1 = double_element(lat, u);
  const DoubledLattice step2 = double_element(step1.result, v);
  if (!is_isomorphic(step2.result, dbl.result)) {
    record_failure(r, desc, "doubling an antichain matches iterated doubling", step2.result.name());
    return;
  }
  if (!is_isomorphic(quotient(dbl.result, mu_v(dbl, {u, v})), lat))
    record_failure(r, desc, "quotient by all copy collapses restores the origin", lat.name());
}

}  // namespace

VerificationReport run_doubling(const HarnessOptions& opts) {
  check_options(opts);
  std::vector<Instance> instances;
  for (const FiniteLattice& lat : corpus_capped(opts.max_size)) {
    {
      const std::string desc = "doubling/" + lat.name() + "[]";
      instances.push_back({desc, [lat, desc](InstanceResult& r) {
        const DoubledLattice dbl = double_antichain(lat, {});
        if (!is_isomorphic(dbl.result, lat)) {
          record_failure(r, desc, "doubling nothing changes nothing", dbl.result.name());
          return;
        }
        if (!check_boolean_embedding(dbl).embedding_ok)
          record_failure(r, desc, "empty subset-collapse map embeds the 1-element boolean lattice",
                         "");
      }});
    }
    for (const auto& u : lat.elements()) {
      const std::string desc = "doubling/" + lat.name() + "[" + u + "]";
      instances.push_back({desc, [lat, desc, u](InstanceResult& r) {
        check_single_doubling(r, desc, lat, u);
      }});
    }
    for (const auto& pair : antichains(lat, 2)) {
      const std::string desc = "doubling/" + lat.name() + "[{" + pair[0] + "," + pair[1] + "}]";
      instances.push_back({desc, [lat, desc, pair](InstanceResult& r) {
        check_pair_doubling(r, desc, lat, pair[0], pair[1]);
      }});
    }
  }
  return run_instances("doubling", std::move(instances));
}

namespace {

void check_glue_instance(InstanceResult& r, const std::string& desc, const FiniteLattice& lat,
                         const IsolatedInterval& iv, const FiniteLattice& filler,
                         const DivergenceManifest& manifest) {
  const GlueContext ctx = glue(lat, iv, filler);

  for (int x = 0; x < ctx.deleted.size(); ++x)
    for (int y = 0; y < ctx.deleted.size(); ++y) {
      const int kx = ctx.k.index_of(ctx.deleted.element(x));
      const int ky = ctx.k.index_of(ctx.deleted.element(y));
      if (ctx.k.element(ctx.k.meet(kx, ky)) != ctx.deleted.element(ctx.deleted.meet(x, y)) ||
          ctx.k.element(ctx.k.join(kx, ky)) != ctx.deleted.element(ctx.deleted.join(x, y))) {
        record_failure(r, desc, "the remainder is a sublattice of the glued lattice",
                       "(" + ctx.deleted.element(x) + ", " + ctx.deleted.element(y) + ")");
        return;
      }
    }

  const TransferResult bottom = transfer_congruence(ctx, Congruence::identity(lat.size()));
  if (!bottom.valid || bottom.image != Congruence::identity(ctx.k.size())) {
    record_failure(r, desc, "transfer fixes the identity congruence",
                   format_congruence(ctx.k, bottom.image));
    return;
  }
  const TransferResult top = transfer_congruence(ctx, Congruence::total(lat.size()));
  if (!top.valid || top.image != Congruence::total(ctx.k.size())) {
    record_failure(r, desc, "transfer fixes the all-collapsing congruence",
                   format_congruence(ctx.k, top.image));
    return;
  }

  const ConLattice con_l = all_congruences(lat);
  std::vector<Congruence> images;
  images.reserve(con_l.size());
  for (const auto& alpha : con_l.congruences)
    images.push_back(transfer_congruence(ctx, alpha).image);
  for (int i = 0; i < con_l.size(); ++i)
    for (int j = 0; j < con_l.size(); ++j)
      if (refines(con_l.congruences[i], con_l.congruences[j]) &&
          !refines(images[i], images[j])) {
        record_failure(r, desc, "transfer preserves refinement",
                       format_congruence(lat, con_l.congruences[i]) + " vs " +
                           format_congruence(lat, con_l.congruences[j]));
        return;
      }

  const GlueSdReport sd = check_glue_sd(ctx);
  if (ctx.filler.size() == 2 && sd.k.semidistributive() != sd.origin_sd) {
    record_failure(r, desc, "gluing a 2-chain back in changes nothing",
                   triple_text(sd.k.witness));
    return;
  }
  if (sd.origin_sd && !sd.k.semidistributive() && sd.min_filler_elements_in_witness < 2) {
    record_failure(r, desc,
                   "violations over a semidistributive origin need two filler elements",
                   "min filler elements in a witness: " +
                       std::to_string(sd.min_filler_elements_in_witness));
    return;
  }

  const GlueIsoReport iso = verify_con_isomorphism(ctx);
  if (!iso.isomorphism) {
    const std::string detail = "origin has " + std::to_string(iso.con_origin_size) +
                               " congruences, glued lattice has " +
                               std::to_string(iso.con_k_size) + ", transfer image covers " +
                               std::to_string(iso.image_size);
    if (iso.leak_expected && manifest.allows(kSeparatingLeakRule)) {
      r.divergences.push_back({desc, kSeparatingLeakRule, detail});
    } else {
      record_failure(r, desc, "congruence transfer is an isomorphism",
                     detail + (iso.notes.empty() ? "" : "; " + iso.notes.front()));
    }
  }
}

}  // namespace

VerificationReport run_glue(const HarnessOptions& opts) {
  check_options(opts);
  std::vector<Instance> instances;
  const std::vector<FiniteLattice> fillers = {chain_lattice(2), diamond()};
  for (const FiniteLattice& lat : lattice_corpus(opts.max_size)) {
    for (const IsolatedInterval& iv : find_isolated_intervals(lat)) {
      for (const FiniteLattice& filler : fillers) {
        const std::string desc =
            "glue/" + lat.name() + "(" + iv.a + "," + iv.b + ")<-" + filler.name();
        const DivergenceManifest manifest = opts.manifest;
        instances.push_back({desc, [lat, iv, filler, desc, manifest](InstanceResult& r) {
          check_glue_instance(r, desc, lat, iv, filler, manifest);
        }});
      }
    }
  }
  return run_instances("glue", std::move(instances));
}

VerificationReport run_census(const HarnessOptions& opts) {
  check_options(opts);
  std::vector<Instance> instances;
  for (int n = 1; n <= opts.max_size; ++n) {
    const std::string desc = "census/count/n=" + std::to_string(n);
    instances.push_back({desc, [n, desc](InstanceResult& r) {
      const long got = count_lattices(n);
      if (got != kLatticeCounts[n])
        record_failure(r, desc, "isomorphism-class count matches the reference",
                       std::to_string(got) + " != " + std::to_string(kLatticeCounts[n]));
    }});
  }
  for (int n = 1; n <= opts.max_size; ++n) {
    for (const FiniteLattice& lat : enumerate_lattices(n)) {
      const std::string desc = "census/" + lat.name();
      instances.push_back({desc, [lat, desc](InstanceResult& r) {
        const ConLattice con = all_congruences(lat);  // carrier distributivity checked inside
        if (!is_semidistributive(lat)) return;
        if (con.size() == 3) {
          record_failure(r, desc, "no semidistributive lattice has a 3-chain congruence lattice",
                         format_congruence(lat, con.congruences[1]));
          return;
        }
        if (is_simple(con) && lat.size() != 2)
          record_failure(r, desc, "the only simple semidistributive lattice is the 2-chain",
                         std::to_string(lat.size()) + " elements");
      }});
    }
  }
  for (int k = 2; k <= std::min(opts.max_size, 6); ++k) {
    const std::string desc = "census/chain-con/k=" + std::to_string(k);
    instances.push_back({desc, [k, desc](InstanceResult& r) {
      const ConLattice con = all_congruences(chain_lattice(k));
      if (!is_isomorphic(con.carrier, boolean_lattice(k - 1)))
        record_failure(r, desc, "a k-chain's congruence lattice is boolean with k-1 atoms",
                       std::to_string(con.size()) + " congruences");
    }});
  }
  return run_instances("census", std::move(instances));
}

std::vector<VerificationReport> run_suite(const std::string& name, const HarnessOptions& opts) {
  if (name == "sd-equivalence") return {run_sd_equivalence(opts)};
  if (name == "doubling") return {run_doubling(opts)};
  if (name == "glue") return {run_glue(opts)};
  if (name == "census") return {run_census(opts)};
  if (name == "all")
    return {run_sd_equivalence(opts), run_doubling(opts), run_glue(opts), run_census(opts)};
  fail(ErrorKind::ParseError, "unknown suite '" + name +
                                  "'; expected sd-equivalence, doubling, glue, census, or all");
}

bool suite_ok(const VerificationReport& report) { return report.failures.empty(); }

std::string render_text(const VerificationReport& report) {
  std::string out = "suite " + report.suite + ": " + std::to_string(report.instances) +
                    " instances, " + std::to_string(report.passes) + " passed, " +
                    std::to_string(report.failures.size()) + " failed\n";
  for (const auto& d : report.expected_divergences)
    out += "  expected divergence: " + d.instance + " [" + d.rule + "] " + d.detail + "\n";
  for (const auto& f : report.failures)
    out += "  FAIL: " + f.instance + " :: " + f.property + " :: " + f.witness + "\n";
  return out;
}

std::string render_machine(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["instances"] = report.instances;
  doc["passes"] = report.passes;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures)
    doc["failures"].push_back(
        {{"instance", f.instance}, {"property", f.property}, {"witness", f.witness}});
  doc["expected_divergences"] = nlohmann::ordered_json::array();
  for (const auto& d : report.expected_divergences)
    doc["expected_divergences"].push_back(
        {{"instance", d.instance}, {"rule", d.rule}, {"detail", d.detail}});
  return doc.dump() + "\n";
}

}  // namespace latkit
