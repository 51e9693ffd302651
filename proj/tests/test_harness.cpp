#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "latkit/harness.hpp"
#include "latkit/lattice.hpp"

using latkit::HarnessOptions;
using latkit::VerificationReport;

TEST_CASE("the four suites pass on the small corpus") {
  HarnessOptions opts;
  opts.max_size = 5;
  for (const char* suite : {"sd-equivalence", "doubling", "glue", "census"}) {
    CAPTURE(suite);
    const auto reports = latkit::run_suite(suite, opts);
    REQUIRE(reports.size() == 1);
    const VerificationReport& r = reports.front();
    CHECK(r.suite == suite);
    CHECK(r.instances > 0);
    CHECK(r.failures.empty());
    CHECK(r.passes == r.instances);
    CHECK(latkit::suite_ok(r));
  }
}

TEST_CASE("suite 'all' runs the four suites") {
  HarnessOptions opts;
  opts.max_size = 4;
  const auto reports = latkit::run_suite("all", opts);
  CHECK(reports.size() == 4);
  for (const auto& r : reports) CHECK(latkit::suite_ok(r));
  CHECK_THROWS_AS(latkit::run_suite("bogus", opts), latkit::LatticeError);
}

TEST_CASE("options are range-checked") {
  HarnessOptions opts;
  opts.max_size = 0;
  CHECK_THROWS_AS(latkit::run_sd_equivalence(opts), latkit::LatticeError);
  opts.max_size = 9;
  CHECK_THROWS_AS(latkit::run_census(opts), latkit::LatticeError);
}

TEST_CASE("expected divergences are counted as passes and listed") {
  HarnessOptions opts;
  opts.max_size = 6;
  const VerificationReport glue = latkit::run_glue(opts);
  CHECK(latkit::suite_ok(glue));
  CHECK(glue.passes == glue.instances);
  // The corpus contains chains with interior intervals, whose extra
  // congruences leak; with the diamond filler those instances diverge.
  CHECK(!glue.expected_divergences.empty());
  for (const auto& d : glue.expected_divergences) CHECK(d.rule == "glue/separating-leak");
}

TEST_CASE("renders are deterministic and machine output is valid JSON") {
  HarnessOptions opts;
  opts.max_size = 4;
  const VerificationReport a = latkit::run_sd_equivalence(opts);
  const VerificationReport b = latkit::run_sd_equivalence(opts);
  CHECK(latkit::render_text(a) == latkit::render_text(b));
  CHECK(latkit::render_machine(a) == latkit::render_machine(b));

  const std::string line = latkit::render_machine(a);
  CHECK(line.back() == '\n');
  const auto doc = nlohmann::json::parse(line);
  CHECK(doc.at("suite") == "sd-equivalence");
  CHECK(doc.at("instances") == a.instances);
  CHECK(doc.at("passes") == a.passes);
  CHECK(doc.at("failures").is_array());

  const std::string text = latkit::render_text(a);
  CHECK(text.find("sd-equivalence") != std::string::npos);
  CHECK(text.find(" ms") == std::string::npos);  // timing never leaks into renders
}

TEST_CASE("divergence manifests load from disk and gate classification") {
  const latkit::DivergenceManifest builtin = latkit::DivergenceManifest::builtin();
  REQUIRE(!builtin.rules.empty());
  CHECK(builtin.allows("glue/separating-leak"));
  CHECK(!builtin.allows("no-such-rule"));

  const std::string path = "manifest_roundtrip.json";
  {
    std::ofstream out(path);
    out << R"({"version":1,"rules":[{"id":"glue/separating-leak","description":"d"}]})";
  }
  const auto loaded = latkit::DivergenceManifest::load_file(path);
  CHECK(loaded.allows("glue/separating-leak"));
  std::remove(path.c_str());

  {
    std::ofstream out(path);
    out << R"({"version":2,"rules":[]})";
  }
  CHECK_THROWS_AS(latkit::DivergenceManifest::load_file(path), latkit::LatticeError);
  std::remove(path.c_str());

  SUBCASE("an empty manifest turns the chain divergence into a failure") {
    HarnessOptions opts;
    opts.max_size = 6;
    opts.manifest = latkit::DivergenceManifest{};
    const VerificationReport glue = latkit::run_glue(opts);
    CHECK(!latkit::suite_ok(glue));
    CHECK(glue.expected_divergences.empty());
  }
}

TEST_CASE("seeds change the relabeling but not the verdict") {
  HarnessOptions a;
  a.max_size = 4;
  HarnessOptions b;
  b.max_size = 4;
  b.seed = 99991;
  CHECK(latkit::suite_ok(latkit::run_sd_equivalence(a)));
  CHECK(latkit::suite_ok(latkit::run_sd_equivalence(b)));
}
