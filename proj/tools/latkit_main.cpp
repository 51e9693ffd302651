#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/glue.hpp"
#include "latkit/harness.hpp"
#include "latkit/interchange.hpp"
#include "latkit/sd.hpp"

namespace {

using latkit::ErrorKind;
using latkit::FiniteLattice;
using latkit::LatticeError;
using nlohmann::ordered_json;

int exit_code_for(const LatticeError& e) {
  return e.kind() == ErrorKind::InvariantViolation ? 1 : 2;
}

const char* mark(bool ok) { return ok ? "✓" : "✗"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) latkit::fail(ErrorKind::ParseError, "cannot write to '" + out_path + "'");
  out << text;
}

ordered_json lattice_json(const FiniteLattice& lat) {
  return ordered_json::parse(latkit::to_json(lat));
}

int cmd_check(const std::string& file, const std::string& format, const std::string& out_path) {
  const FiniteLattice lat = latkit::load_lattice_file(file);
  const latkit::SdReport sd = latkit::check_sd_direct(lat);
  const latkit::ConLattice con = latkit::all_congruences(lat);
  const auto intervals = latkit::find_isolated_intervals(lat);
  if (format == "machine") {
    ordered_json doc;
    doc["name"] = lat.name();
    doc["size"] = lat.size();
    doc["lattice"] = true;
    doc["meet_sd"] = sd.meet_sd;
    doc["join_sd"] = sd.join_sd;
    doc["simple"] = con.size() == 2;
    doc["congruences"] = con.size();
    doc["isolated_intervals"] = ordered_json::array();
    for (const auto& iv : intervals) doc["isolated_intervals"].push_back({iv.a, iv.b});
    if (sd.witness) {
      doc["witness"] = {{"side", sd.witness->side},
                        {"triple", {sd.witness->triple[0], sd.witness->triple[1],
                                    sd.witness->triple[2]}}};
    } else {
      doc["witness"] = nullptr;
    }
    emit(doc.dump() + "\n", out_path);
    return 0;
  }
  std::string text = "lattice " + std::string(mark(true)) + ", SD∧ " + mark(sd.meet_sd) +
                     ", SD∨ " + mark(sd.join_sd) + ", simple " + mark(con.size() == 2) +
                     ", isolated intervals: [";
  for (size_t i = 0; i < intervals.size(); ++i) {
    if (i) text += ", ";
    text += "(" + intervals[i].a + "," + intervals[i].b + ")";
  }
  text += "]\n";
  emit(text, out_path);
  return 0;
}

int cmd_con(const std::string& file, const std::string& format, const std::string& out_path) {
  const FiniteLattice lat = latkit::load_lattice_file(file);
  const latkit::ConLattice con = latkit::all_congruences(lat);
  const auto identified = latkit::identify(con.carrier);
  if (format == "machine") {
    ordered_json doc;
    doc["name"] = lat.name();
    doc["count"] = con.size();
    doc["identified"] = identified ? ordered_json(*identified) : ordered_json(nullptr);
    doc["congruences"] = ordered_json::array();
    for (const auto& c : con.congruences)
      doc["congruences"].push_back(latkit::format_congruence(lat, c));
    doc["carrier"] = lattice_json(con.carrier);
    emit(doc.dump() + "\n", out_path);
    return 0;
  }
  std::string text = std::to_string(con.size()) + " congruences";
  if (identified) text += ", Con ≅ " + *identified;
  text += "\n";
  for (const auto& c : con.congruences) text += "  " + latkit::format_congruence(lat, c) + "\n";
  emit(text, out_path);
  return 0;
}

int cmd_double(const std::string& file, const std::vector<std::string>& elements,
               const std::string& format, const std::string& out_path) {
  const FiniteLattice lat = latkit::load_lattice_file(file);
  const latkit::DoubledLattice dbl = latkit::double_antichain(lat, elements);
  const latkit::BooleanEmbeddingReport embed = latkit::check_boolean_embedding(dbl);
  if (format == "machine") {
    ordered_json doc;
    doc["origin"] = lat.name();
    doc["result"] = lattice_json(dbl.result);
    doc["doubled"] = ordered_json::array();
    for (const auto& [u, copies] : dbl.doubled)
      doc["doubled"].push_back({u, copies.first, copies.second});
    doc["embedding"] = {{"subset_count", embed.subset_count},
                        {"injective", embed.injective},
                        {"order_embedding", embed.order_embedding},
                        {"sublattice", embed.sublattice},
                        {"boolean_isomorphic", embed.boolean_isomorphic},
                        {"embedding_ok", embed.embedding_ok},
                        {"con_size", embed.con_size},
                        {"extra_congruences", embed.extra_congruences}};
    emit(doc.dump() + "\n", out_path);
    return 0;
  }
  std::string text = "doubled " + std::to_string(dbl.doubled.size()) + " element(s) of " +
                     lat.name() + ": " + std::to_string(lat.size()) + " -> " +
                     std::to_string(dbl.result.size()) + " elements\n";
  for (const auto& [u, copies] : dbl.doubled)
    text += "  " + u + " -> " + copies.first + ", " + copies.second + "\n";
  text += "boolean embedding of the " + std::to_string(embed.subset_count) +
          " subset collapses: " + mark(embed.embedding_ok) + "\n";
  text += "Con has " + std::to_string(embed.con_size) + " congruences; " +
          std::to_string(embed.extra_congruences.size()) +
          " beyond the subset collapses and the full collapse\n";
  std::cout << text;
  if (!out_path.empty()) {
    emit(latkit::to_json(dbl.result), out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_glue(const std::string& lfile, const std::string& interval, const std::string& ffile,
             const std::string& format, const std::string& out_path) {
  const auto comma = interval.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == interval.size())
    latkit::fail(ErrorKind::ParseError, "--interval expects two names: a,b");
  const std::string a = interval.substr(0, comma);
  const std::string b = interval.substr(comma + 1);
  const FiniteLattice origin = latkit::load_lattice_file(lfile);
  const FiniteLattice filler = latkit::load_lattice_file(ffile);
  const latkit::IsolatedInterval iv = latkit::isolated_interval(origin, a, b);
  const latkit::GlueContext ctx = latkit::glue(origin, iv, filler);
  const latkit::GlueSdReport sd = latkit::check_glue_sd(ctx);
  const latkit::GlueIsoReport iso = latkit::verify_con_isomorphism(ctx);

  auto set_text = [](const std::vector<std::string>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += v[i];
    }
    return s + "}";
  };
  if (format == "machine") {
    ordered_json doc;
    doc["origin"] = origin.name();
    doc["filler"] = filler.name();
    doc["interval"] = {iv.a, iv.b};
    doc["p"] = ctx.pqr.p;
    doc["q"] = ctx.pqr.q;
    doc["r"] = ctx.pqr.r;
    doc["k"] = lattice_json(ctx.k);
    doc["sd"] = {{"k_meet_sd", sd.k.meet_sd},
                 {"k_join_sd", sd.k.join_sd},
                 {"origin_sd", sd.origin_sd},
                 {"filler_sd", sd.filler_sd},
                 {"violating_triples", sd.violating_triples},
                 {"min_filler_elements_in_witness", sd.min_filler_elements_in_witness}};
    doc["transfer"] = {{"filler_simple", iso.filler_simple},
                       {"transfers_valid", iso.transfers_valid},
                       {"injective", iso.injective},
                       {"surjective", iso.surjective},
                       {"order_preserving", iso.order_preserving},
                       {"order_reflecting", iso.order_reflecting},
                       {"isomorphism", iso.isomorphism},
                       {"leak_expected", iso.leak_expected},
                       {"con_origin_size", iso.con_origin_size},
                       {"con_k_size", iso.con_k_size},
                       {"image_size", iso.image_size},
                       {"notes", iso.notes}};
    emit(doc.dump() + "\n", out_path);
    return 0;
  }
  std::string text = "glued " + filler.name() + " into " + origin.name() + " at (" + iv.a + "," +
                     iv.b + "): " + std::to_string(ctx.k.size()) + " elements\n";
  text += "P = " + set_text(ctx.pqr.p) + ", Q = " + set_text(ctx.pqr.q) + ", R = " +
          set_text(ctx.pqr.r) + "\n";
  text += "K semidistributive: " + std::string(mark(sd.k.semidistributive())) + " (origin " +
          mark(sd.origin_sd) + ", filler " + mark(sd.filler_sd) + ")\n";
  if (iso.isomorphism) {
    text += "congruence transfer: isomorphism ✓ (" + std::to_string(iso.con_origin_size) +
            " -> " + std::to_string(iso.con_k_size) + ")\n";
  } else {
    text += "congruence transfer: isomorphism ✗ (origin " +
            std::to_string(iso.con_origin_size) + ", glued " + std::to_string(iso.con_k_size) +
            ", image " + std::to_string(iso.image_size) + ")\n";
    if (iso.leak_expected) text += "expected divergence: a separating congruence leaks\n";
  }
  for (const auto& note : iso.notes) text += "note: " + note + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    emit(latkit::to_json(ctx.k), out_path);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int cmd_catalog(const std::string& name, bool list, const std::string& out_path) {
  if (list) {
    std::string text;
    for (const auto& n : latkit::catalog_names()) text += n + "\n";
    emit(text, out_path);
    return 0;
  }
  emit(latkit::to_json(latkit::catalog_build(name)), out_path);
  return 0;
}

int cmd_census(int max_size, const std::string& predicate, const std::string& format,
               const std::string& out_path) {
  const latkit::CensusReport report =
      latkit::run_census(max_size, latkit::census_predicate_from(predicate));
  if (format == "machine") {
    ordered_json doc;
    doc["predicate"] = latkit::census_predicate_name(report.predicate);
    doc["max_size"] = report.max_size;
    doc["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
      ordered_json classes = ordered_json::array();
      for (const auto& cls : row.con_classes)
        classes.push_back(
            {{"label", cls.label}, {"con_size", cls.con_size}, {"count", cls.count}});
      doc["rows"].push_back({{"n", row.n},
                             {"lattices", row.lattice_count},
                             {"matching", row.matching},
                             {"con_classes", classes}});
    }
    emit(doc.dump() + "\n", out_path);
    return 0;
  }
  std::string text = "census predicate=" + std::string(latkit::census_predicate_name(
                         report.predicate)) +
                     " max-size=" + std::to_string(report.max_size) + "\n";
  for (const auto& row : report.rows) {
    text += "n=" + std::to_string(row.n) + ": " + std::to_string(row.lattice_count) +
            " lattice(s), " + std::to_string(row.matching) + " matching";
    if (!row.con_classes.empty()) {
      text += "; Con classes:";
      for (const auto& cls : row.con_classes)
        text += " " + cls.label + " x" + std::to_string(cls.count) + ",";
      text.pop_back();
    }
    text += "\n";
  }
  emit(text, out_path);
  return 0;
}

int cmd_verify(const std::string& suite, int max_size, uint64_t seed,
               const std::string& manifest_path, const std::string& format,
               const std::string& out_path) {
  latkit::HarnessOptions opts;
  opts.max_size = max_size;
  opts.seed = seed;
  if (!manifest_path.empty()) opts.manifest = latkit::DivergenceManifest::load_file(manifest_path);
  const auto reports = latkit::run_suite(suite, opts);
  std::string text;
  bool ok = true;
  for (const auto& report : reports) {
    text += format == "machine" ? latkit::render_machine(report) : latkit::render_text(report);
    std::cerr << "suite " << report.suite << ": " << report.runtime_ms << " ms\n";
    ok = ok && latkit::suite_ok(report);
  }
  emit(text, out_path);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice toolkit: semidistributivity, congruences, doubling, gluing"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--out", out_path, "write the main output to a file");
  };

  std::string check_file;
  auto* check = app.add_subcommand("check", "validate a lattice file and report its properties");
  check->add_option("file", check_file, "lattice JSON file")->required();
  add_common(check);

  std::string con_file;
  auto* con = app.add_subcommand("con", "list all congruences and name the congruence lattice");
  con->add_option("file", con_file, "lattice JSON file")->required();
  add_common(con);

  std::string double_file;
  std::vector<std::string> double_elements;
  auto* dbl = app.add_subcommand("double", "double an antichain of elements");
  dbl->add_option("file", double_file, "lattice JSON file")->required();
  dbl->add_option("elements", double_elements, "antichain to double")->required();
  add_common(dbl);

  std::string glue_file, glue_interval, glue_with;
  auto* glue = app.add_subcommand("glue", "replace an isolated interval by another lattice");
  glue->add_option("file", glue_file, "origin lattice JSON file")->required();
  glue->add_option("--interval", glue_interval, "interval endpoints a,b")->required();
  glue->add_option("--with", glue_with, "filler lattice JSON file")->required();
  add_common(glue);

  std::string catalog_name;
  bool catalog_list = false;
  auto* catalog = app.add_subcommand("catalog", "print a named lattice as interchange JSON");
  catalog->add_option("name", catalog_name, "catalog name (see --list)");
  catalog->add_flag("--list", catalog_list, "list catalog names");
  add_common(catalog);

  int census_max = 6;
  std::string census_filter = "all";
  auto* census = app.add_subcommand("census", "tabulate congruence lattices of small lattices");
  census->add_option("--max-size", census_max, "largest lattice size (<= 8)");
  census->add_option("--filter", census_filter, "all|sd|distributive|simple|sd-simple");
  add_common(census);

  std::string verify_suite = "all";
  int verify_max = 6;
  uint64_t verify_seed = 1729;
  std::string verify_manifest;
  auto* verify = app.add_subcommand("verify", "run a verification suite over the corpus");
  verify->add_option("suite", verify_suite, "sd-equivalence|doubling|glue|census|all");
  verify->add_option("--max-size", verify_max, "largest corpus lattice size (<= 8)");
  verify->add_option("--seed", verify_seed, "seed for relabeling checks");
  verify->add_option("--manifest", verify_manifest, "expected-divergence manifest JSON");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(check_file, format, out_path);
    if (*con) return cmd_con(con_file, format, out_path);
    if (*dbl) return cmd_double(double_file, double_elements, format, out_path);
    if (*glue) return cmd_glue(glue_file, glue_interval, glue_with, format, out_path);
    if (*catalog) {
      if (!catalog_list && catalog_name.empty())
        latkit::fail(ErrorKind::ParseError, "catalog needs a name or --list");
      return cmd_catalog(catalog_name, catalog_list, out_path);
    }
    if (*census) return cmd_census(census_max, census_filter, format, out_path);
    if (*verify)
      return cmd_verify(verify_suite, verify_max, verify_seed, verify_manifest, format, out_path);
  } catch (const LatticeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
