#include "latkit/interchange.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace latkit {

namespace {
using nlohmann::ordered_json;
}

FiniteLattice parse_lattice(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "name" && key != "elements" && key != "covers")
      fail(ErrorKind::ParseError, "unknown key '" + key + "'");
  if (!doc.contains("name") || !doc["name"].is_string())
    fail(ErrorKind::ParseError, "'name' must be a string");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    fail(ErrorKind::ParseError, "'elements' must be an array of strings");
  if (!doc.contains("covers") || !doc["covers"].is_array())
    fail(ErrorKind::ParseError, "'covers' must be an array of [lower, upper] pairs");

  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) fail(ErrorKind::ParseError, "'elements' must contain only strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<FiniteLattice::NamedCover> covers;
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      fail(ErrorKind::ParseError, "each cover must be a [lower, upper] pair of strings");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FiniteLattice::validate(doc["name"].get<std::string>(), std::move(elements), covers);
}

FiniteLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice(buf.str());
}

std::string to_json(const FiniteLattice& lat) {
  ordered_json doc;
  doc["name"] = lat.name();
  doc["elements"] = lat.elements();
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : lat.named_covers())
    covers.push_back(ordered_json::array({lo, hi}));
  doc["covers"] = covers;
  return doc.dump(2) + "\n";
}

void save_lattice_file(const FiniteLattice& lat, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write file '" + path + "'");
  out << to_json(lat);
}

}  // namespace latkit
