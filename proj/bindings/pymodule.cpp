#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latkit/catalog.hpp"
#include "latkit/congruence.hpp"
#include "latkit/doubling.hpp"
#include "latkit/glue.hpp"
#include "latkit/harness.hpp"
#include "latkit/interchange.hpp"
#include "latkit/sd.hpp"

namespace py = pybind11;

namespace {

using latkit::FiniteLattice;

py::dict check_dict(const FiniteLattice& lat) {
  const latkit::SdReport sd = latkit::check_sd_direct(lat);
  const latkit::ConLattice con = latkit::all_congruences(lat);
  py::dict out;
  out["name"] = lat.name();
  out["size"] = lat.size();
  out["meet_sd"] = sd.meet_sd;
  out["join_sd"] = sd.join_sd;
  out["semidistributive"] = sd.semidistributive();
  out["distributive"] = latkit::is_distributive(lat);
  out["simple"] = con.size() == 2;
  out["congruences"] = con.size();
  py::list intervals;
  for (const auto& iv : latkit::find_isolated_intervals(lat))
    intervals.append(py::make_tuple(iv.a, iv.b));
  out["isolated_intervals"] = intervals;
  return out;
}

py::dict congruences_dict(const FiniteLattice& lat) {
  const latkit::ConLattice con = latkit::all_congruences(lat);
  py::dict out;
  out["count"] = con.size();
  py::list formatted;
  py::list blocks;
  for (const auto& c : con.congruences) {
    formatted.append(latkit::format_congruence(lat, c));
    py::list one;
    for (const auto& block : c.blocks()) {
      py::list members;
      for (int i : block) members.append(lat.element(i));
      one.append(members);
    }
    blocks.append(one);
  }
  out["formatted"] = formatted;
  out["blocks"] = blocks;
  out["carrier"] = con.carrier;
  const auto name = latkit::identify(con.carrier);
  out["identified"] = name ? py::object(py::str(*name)) : py::object(py::none());
  return out;
}

py::dict double_dict(const FiniteLattice& lat, const std::vector<std::string>& antichain) {
  const latkit::DoubledLattice dbl = latkit::double_antichain(lat, antichain);
  const latkit::BooleanEmbeddingReport rep = latkit::check_boolean_embedding(dbl);
  py::dict out;
  out["result"] = dbl.result;
  py::dict copies;
  for (const auto& [u, pair] : dbl.doubled)
    copies[py::str(u)] = py::make_tuple(pair.first, pair.second);
  out["copies"] = copies;
  out["embedding_ok"] = rep.embedding_ok;
  out["con_size"] = rep.con_size;
  out["image_size"] = rep.image_size;
  out["extra_congruences"] = rep.extra_congruences;
  return out;
}

py::dict glue_dict(const FiniteLattice& origin, const std::string& a, const std::string& b,
                   const FiniteLattice& filler) {
  const latkit::IsolatedInterval iv = latkit::isolated_interval(origin, a, b);
  const latkit::GlueContext ctx = latkit::glue(origin, iv, filler);
  const latkit::GlueSdReport sd = latkit::check_glue_sd(ctx);
  const latkit::GlueIsoReport iso = latkit::verify_con_isomorphism(ctx);
  py::dict out;
  out["k"] = ctx.k;
  out["p"] = ctx.pqr.p;
  out["q"] = ctx.pqr.q;
  out["r"] = ctx.pqr.r;
  out["k_semidistributive"] = sd.k.semidistributive();
  out["origin_sd"] = sd.origin_sd;
  out["filler_sd"] = sd.filler_sd;
  out["isomorphism"] = iso.isomorphism;
  out["leak_expected"] = iso.leak_expected;
  out["con_origin_size"] = iso.con_origin_size;
  out["con_k_size"] = iso.con_k_size;
  out["image_size"] = iso.image_size;
  out["notes"] = iso.notes;
  return out;
}

py::list verify_list(const std::string& suite, int max_size, uint64_t seed) {
  latkit::HarnessOptions opts;
  opts.max_size = max_size;
  opts.seed = seed;
  py::list out;
  for (const auto& report : latkit::run_suite(suite, opts)) {
    py::dict one;
    one["suite"] = report.suite;
    one["instances"] = report.instances;
    one["passes"] = report.passes;
    py::list failures;
    for (const auto& f : report.failures)
      failures.append(py::make_tuple(f.instance, f.property, f.witness));
    one["failures"] = failures;
    py::list divergences;
    for (const auto& d : report.expected_divergences)
      divergences.append(py::make_tuple(d.instance, d.rule, d.detail));
    one["expected_divergences"] = divergences;
    one["ok"] = latkit::suite_ok(report);
    out.append(one);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite lattice computations: semidistributivity, congruences, doubling, gluing";

  py::register_exception<latkit::LatticeError>(m, "LatticeError", PyExc_ValueError);

  py::class_<FiniteLattice>(m, "FiniteLattice")
      .def_property_readonly("name", &FiniteLattice::name)
      .def_property_readonly("size", &FiniteLattice::size)
      .def_property_readonly("elements",
                             [](const FiniteLattice& lat) { return lat.elements(); })
      .def("leq",
           [](const FiniteLattice& lat, const std::string& x, const std::string& y) {
             return lat.leq(lat.index_of(x), lat.index_of(y));
           })
      .def("meet",
           [](const FiniteLattice& lat, const std::string& x, const std::string& y) {
             return lat.element(lat.meet(lat.index_of(x), lat.index_of(y)));
           })
      .def("join",
           [](const FiniteLattice& lat, const std::string& x, const std::string& y) {
             return lat.element(lat.join(lat.index_of(x), lat.index_of(y)));
           })
      .def_property_readonly("bottom",
                             [](const FiniteLattice& lat) { return lat.element(lat.bottom()); })
      .def_property_readonly("top",
                             [](const FiniteLattice& lat) { return lat.element(lat.top()); })
      .def("covers", &FiniteLattice::named_covers)
      .def("dual", &FiniteLattice::dual)
      .def("__repr__", [](const FiniteLattice& lat) {
        return "<FiniteLattice " + lat.name() + " (" + std::to_string(lat.size()) +
               " elements)>";
      });

  m.def("from_json", &latkit::parse_lattice, py::arg("text"),
        "Parse a lattice from its JSON interchange document.");
  m.def("to_json", &latkit::to_json, py::arg("lattice"),
        "Serialize a lattice to its JSON interchange document.");
  m.def("catalog", &latkit::catalog_build, py::arg("name"),
        "Build a catalog lattice: n5, m3, n6, l9, l10, chain:<k>, boolean:<k>.");
  m.def("catalog_names", &latkit::catalog_names);
  m.def("identify", [](const FiniteLattice& lat) -> py::object {
    const auto name = latkit::identify(lat);
    return name ? py::object(py::str(*name)) : py::object(py::none());
  });
  m.def("is_isomorphic", [](const FiniteLattice& a, const FiniteLattice& b) {
    return latkit::is_isomorphic(a, b).has_value();
  });
  m.def("check", &check_dict, py::arg("lattice"),
        "Semidistributivity, simplicity, congruence count, isolated intervals.");
  m.def("congruences", &congruences_dict, py::arg("lattice"),
        "All congruences with their block structure and the carrier lattice.");
  m.def("double", &double_dict, py::arg("lattice"), py::arg("antichain"),
        "Double an antichain and report the boolean embedding of the collapses.");
  m.def("glue", &glue_dict, py::arg("lattice"), py::arg("a"), py::arg("b"), py::arg("filler"),
        "Replace the isolated interval (a, b) by a filler lattice.");
  m.def("count_lattices", &latkit::count_lattices, py::arg("n"),
        "Number of isomorphism classes of n-element lattices.");
  m.def("verify", &verify_list, py::arg("suite") = "all", py::arg("max_size") = 6,
        py::arg("seed") = 1729, "Run a verification suite; returns one report per suite.");
}
