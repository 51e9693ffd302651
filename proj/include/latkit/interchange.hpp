#pragma once

#include <string>

#include "latkit/lattice.hpp"

namespace latkit {

// Interchange format: a JSON object with exactly the keys
//   "name"     : string
//   "elements" : array of strings
//   "covers"   : array of [lower, upper] string pairs
// Unknown or missing keys are rejected.
FiniteLattice parse_lattice(const std::string& text);
FiniteLattice load_lattice_file(const std::string& path);

std::string to_json(const FiniteLattice& lat);
void save_lattice_file(const FiniteLattice& lat, const std::string& path);

}  // namespace latkit
